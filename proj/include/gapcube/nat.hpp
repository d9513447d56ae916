#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gapcube {

/// Signed arbitrary-precision integer. Only the extended Lucas sequence
/// produces negative values; everything else is a Nat.
using Int = boost::multiprecision::cpp_int;

/// Raised when an internal counting convention is violated, e.g. an inexact
/// division in the cycle formula or a nonvanishing term past a summation
/// bound. Seeing one means a base case or the binomial rule is broken.
class ConventionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Arbitrary-precision nonnegative integer.
class Nat {
 public:
  Nat() = default;

  template <std::integral T>
  Nat(T v) : value_(v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::signed_integral<T>) {
      if (v < 0) throw std::domain_error("Nat: negative value " + std::to_string(v));
    }
  }

  explicit Nat(Int v) : value_(std::move(v)) {
    if (value_ < 0) throw std::domain_error("Nat: negative value " + value_.str());
  }

  static Nat parse(std::string_view digits);

  Nat& operator+=(const Nat& o) {
    value_ += o.value_;
    return *this;
  }
  Nat& operator*=(const Nat& o) {
    value_ *= o.value_;
    return *this;
  }
  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }

  /// Quotient of an exact division; throws ConventionError on a remainder.
  [[nodiscard]] Nat divide_exact(const Nat& divisor) const;

  friend bool operator==(const Nat& a, const Nat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
  [[nodiscard]] const Int& value() const { return value_; }
  [[nodiscard]] std::string str() const { return value_.str(); }

  /// Narrowing accessor; throws std::overflow_error when the value does not fit.
  [[nodiscard]] std::uint64_t to_u64() const;

 private:
  Int value_;
};

std::ostream& operator<<(std::ostream& os, const Nat& n);

}  // namespace gapcube
