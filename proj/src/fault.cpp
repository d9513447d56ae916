#include "gapcube/fault.hpp"

#include "memo.hpp"

#include <array>
#include <atomic>
#include <utility>

namespace gapcube::fault {
namespace {

std::atomic<Fault> g_active{Fault::none};

constexpr std::array<std::pair<Fault, std::string_view>, 4> kNames{{
    {Fault::none, "none"},
    {Fault::fibonacci_seed, "fibonacci-seed"},
    {Fault::lucas_seed, "lucas-seed"},
    {Fault::binomial_negative_top, "binomial-negative-top"},
}};

}  // namespace

void inject(Fault f) {
  g_active.store(f);
  detail::clear_memo_caches();
}

Fault active() { return g_active.load(); }

std::string_view name(Fault f) {
  for (const auto& [fault, text] : kNames) {
    if (fault == f) return text;
  }
  return "unknown";
}

std::optional<Fault> parse(std::string_view text) {
  for (const auto& [fault, name] : kNames) {
    if (name == text) return fault;
  }
  return std::nullopt;
}

}  // namespace gapcube::fault
