#include "sturmian/bignat.hpp"

#include <limits>

#include "sturmian/error.hpp"
#include "sturmian/rational.hpp"

namespace sturmian {

BigNat BigNat::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw ParseError("not a natural number: '" + std::string(text) + "'");
    }
  }
  return BigNat(Rep(std::string(text)));
}

bool BigNat::fits_u64() const {
  return v_ <= Rep(std::numeric_limits<std::uint64_t>::max());
}

std::uint64_t BigNat::to_u64() const {
  if (!fits_u64()) throw DomainError("value " + to_string() + " exceeds 64 bits");
  return v_.convert_to<std::uint64_t>();
}

BigNat& BigNat::operator-=(const BigNat& o) {
  if (v_ < o.v_) {
    throw DomainError("natural subtraction underflow: " + to_string() + " - " +
                      o.to_string());
  }
  v_ -= o.v_;
  return *this;
}

BigNat operator/(const BigNat& a, const BigNat& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return BigNat(BigNat::Rep(a.v_ / b.v_));
}

BigNat operator%(const BigNat& a, const BigNat& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return BigNat(BigNat::Rep(a.v_ % b.v_));
}

BigNat gcd(const BigNat& a, const BigNat& b) {
  BigNat x = a;
  BigNat y = b;
  while (!y.is_zero()) {
    BigNat r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Rational::Rational(const BigNat& num, const BigNat& den) {
  if (den.is_zero()) {
    if (num.is_zero()) throw DomainError("0/0 is not a rational");
    num_ = 1;
    den_ = 0;
    return;
  }
  BigNat g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (is_infinite()) return "inf";
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace sturmian
