#include "gapcube/nat.hpp"

#include <limits>
#include <ostream>

namespace gapcube {

Nat Nat::parse(std::string_view digits) {
  if (digits.empty()) throw std::invalid_argument("Nat::parse: empty string");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("Nat::parse: not a decimal digit string: " + std::string(digits));
    }
  }
  return Nat(Int(std::string(digits)));
}

Nat Nat::divide_exact(const Nat& divisor) const {
  if (divisor.is_zero()) throw ConventionError("Nat::divide_exact: division by zero");
  Int quotient;
  Int remainder;
  boost::multiprecision::divide_qr(value_, divisor.value_, quotient, remainder);
  if (!remainder.is_zero()) {
    throw ConventionError("inexact division " + value_.str() + " / " + divisor.value_.str());
  }
  return Nat(std::move(quotient));
}

std::uint64_t Nat::to_u64() const {
  if (value_ > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("Nat::to_u64: value exceeds 64 bits: " + value_.str());
  }
  return value_.convert_to<std::uint64_t>();
}

std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.value(); }

}  // namespace gapcube
