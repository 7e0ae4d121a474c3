#ifndef STURMIAN_BIGNAT_HPP
#define STURMIAN_BIGNAT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sturmian {

/// Arbitrary-precision natural number. Subtraction below zero throws
/// DomainError instead of wrapping.
class BigNat {
 public:
  using Rep = boost::multiprecision::cpp_int;

  BigNat() = default;
  BigNat(std::uint64_t v) : v_(v) {}  // NOLINT: implicit by design of literals

  /// Parses a decimal string of digits; throws ParseError otherwise.
  static BigNat parse(std::string_view text);

  const Rep& rep() const noexcept { return v_; }

  bool is_zero() const { return v_.is_zero(); }

  /// Value as uint64; throws DomainError if it does not fit.
  std::uint64_t to_u64() const;
  bool fits_u64() const;

  std::string to_string() const { return v_.str(); }

  BigNat& operator+=(const BigNat& o) {
    v_ += o.v_;
    return *this;
  }
  BigNat& operator*=(const BigNat& o) {
    v_ *= o.v_;
    return *this;
  }
  BigNat& operator-=(const BigNat& o);

  friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
  friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
  friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
  /// Truncating division; divisor must be non-zero.
  friend BigNat operator/(const BigNat& a, const BigNat& b);
  friend BigNat operator%(const BigNat& a, const BigNat& b);

  friend bool operator==(const BigNat& a, const BigNat& b) {
    return a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigNat& n) {
    return os << n.v_;
  }

 private:
  explicit BigNat(Rep v) : v_(std::move(v)) {}

  Rep v_;
};

BigNat gcd(const BigNat& a, const BigNat& b);

}  // namespace sturmian

#endif  // STURMIAN_BIGNAT_HPP
