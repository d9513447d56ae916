#pragma once

#include <optional>
#include <string_view>

// Deliberate-bug switches for exercising the verification suite. Each fault
// perturbs one base case or convention in the counting module; a healthy
// suite must report failures while any fault is active.
namespace gapcube::fault {

enum class Fault {
  none,
  fibonacci_seed,         // F_{h+1} becomes 2 instead of closing the run of 1s
  lucas_seed,             // L_1 becomes h instead of h+1
  binomial_negative_top,  // binom(m, k) for m < 0 < k returns |C(m, k)| instead of 0
};

/// Activates `f` process-wide and drops every memoized sequence so the new
/// rule takes effect immediately.
void inject(Fault f);
Fault active();

std::string_view name(Fault f);
std::optional<Fault> parse(std::string_view text);

/// Injects a fault for the lifetime of the guard.
class Scoped {
 public:
  explicit Scoped(Fault f) : previous_(active()) { inject(f); }
  ~Scoped() { inject(previous_); }
  Scoped(const Scoped&) = delete;
  Scoped& operator=(const Scoped&) = delete;

 private:
  Fault previous_;
};

}  // namespace gapcube::fault
