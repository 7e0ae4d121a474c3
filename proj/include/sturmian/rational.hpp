#ifndef STURMIAN_RATIONAL_HPP
#define STURMIAN_RATIONAL_HPP

#include <ostream>
#include <string>

#include "sturmian/bignat.hpp"

namespace sturmian {

/// Non-negative irreducible fraction with a distinguished infinite value
/// (denominator 0, numerator 1).
class Rational {
 public:
  /// Reduces num/den. A zero denominator with a non-zero numerator gives
  /// infinity; 0/0 throws DomainError.
  Rational(const BigNat& num, const BigNat& den);

  static Rational infinity() { return Rational(1, 0); }

  const BigNat& num() const { return num_; }
  const BigNat& den() const { return den_; }
  bool is_infinite() const { return den_.is_zero(); }

  /// "p/q", or "inf" for the infinite value.
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  BigNat num_;
  BigNat den_;
};

}  // namespace sturmian

#endif  // STURMIAN_RATIONAL_HPP
