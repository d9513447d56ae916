#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gapcube::verify {

struct SweepBounds {
  int n_max = 40;
  int h_max = 10;
  int oracle_n_max = 16;
};

/// Coordinates of a failing case plus the two values that disagreed.
struct Witness {
  std::optional<int> n;
  std::optional<int> h;
  std::optional<int> k;
  std::optional<int> i;
  std::string expected;
  std::string actual;
};

enum class Status { pass, fail };

struct IdentityReport {
  std::string id;
  std::string description;
  SweepBounds bounds;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  /// The first kMaxWitnesses failures; empty iff the identity passed.
  std::vector<Witness> failures;

  [[nodiscard]] Status status() const { return failures.empty() ? Status::pass : Status::fail; }
};

inline constexpr std::size_t kMaxWitnesses = 25;

/// Identity ids in the fixed report order.
std::vector<std::string_view> identity_ids();

/// Runs every registered identity. Algebraic identities sweep n <= n_max and
/// h <= h_max; identities that enumerate sets stop at oracle_n_max vertices.
/// Throws std::invalid_argument if any bound is negative and CapacityError
/// if oracle_n_max exceeds the enumeration cap.
std::vector<IdentityReport> run_suite(const SweepBounds& bounds);

/// Runs a single identity by id; throws std::invalid_argument for unknown ids.
IdentityReport run_identity(std::string_view id, const SweepBounds& bounds);

bool all_pass(const std::vector<IdentityReport>& reports);

void write_json(std::ostream& os, const std::vector<IdentityReport>& reports);
/// One line per identity: id, status, cases, failures, first witness.
void write_summary(std::ostream& os, const std::vector<IdentityReport>& reports, char sep = '\t');

}  // namespace gapcube::verify
