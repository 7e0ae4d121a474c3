#ifndef STURMIAN_ARITHMETIC_HPP
#define STURMIAN_ARITHMETIC_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sturmian/bignat.hpp"
#include "sturmian/rational.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// Block exponents (alpha_0, ..., alpha_n) of v = b^alpha_0 a^alpha_1 b^alpha_2 ...
///
/// Canonical form: the empty list encodes the empty word; alpha_0 may be 0
/// only when another exponent follows (the word starts with a); every other
/// exponent is positive.
class IntegralRepresentation {
 public:
  IntegralRepresentation() = default;
  /// Throws DomainError if `alphas` is not canonical.
  explicit IntegralRepresentation(std::vector<std::uint64_t> alphas);

  /// Parses "[a0,a1,...]" (whitespace tolerated; "[]" is the empty word).
  static IntegralRepresentation parse(std::string_view text);

  const std::vector<std::uint64_t>& alphas() const { return alphas_; }
  bool empty() const { return alphas_.empty(); }
  std::uint64_t total() const;

  std::string to_string() const;

  friend bool operator==(const IntegralRepresentation&,
                         const IntegralRepresentation&) = default;

 private:
  std::vector<std::uint64_t> alphas_;
};

IntegralRepresentation to_integral(const Word& v);
Word from_integral(const IntegralRepresentation& r);

/// Parses "[x,y,...]" into naturals; shared by the list-valued inputs.
std::vector<std::uint64_t> parse_natural_list(std::string_view text);
std::string format_natural_list(std::span<const std::uint64_t> xs);

/// K[] = 1, K[a0] = a0, K[a0..an] = an K[a0..a(n-1)] + K[a0..a(n-2)].
BigNat continuant(std::span<const std::uint64_t> terms);

/// Finite continued fraction [a0; a1, ..., an], a0 >= 0, ai >= 1 for i >= 1.
class ContinuedFraction {
 public:
  /// Throws DomainError on an empty list or a zero partial quotient past a0.
  explicit ContinuedFraction(std::vector<std::uint64_t> terms);

  const std::vector<std::uint64_t>& terms() const { return terms_; }

  std::string to_string() const;

 private:
  std::vector<std::uint64_t> terms_;
};

Rational cf_eval(const ContinuedFraction& cf);

struct ConvergentRow {
  long k;
  BigNat A;
  BigNat B;
  BigNat P;  // A + B
};

/// Rows for k = -1 .. n.
struct ConvergentTable {
  std::vector<ConvergentRow> rows;

  const ConvergentRow& last() const { return rows.back(); }
};

ConvergentTable convergents(const ContinuedFraction& cf);

/// The continued fraction giving the slope of a psi(v) b.
ContinuedFraction slope_cf_of_directive(const Word& v);

/// Arithmetic fast paths: none of these materializes psi(v).
Rational slope_from_directive(const Word& v);
/// |a psi(v) b|.
BigNat christoffel_length_from_directive(const Word& v);
/// |psi(v)| = |a psi(v) b| - 2.
BigNat psi_length_from_directive(const Word& v);
/// Minimal period of psi(v).
BigNat minimal_period_from_directive(const Word& v);
/// |psi(v)|_b.
BigNat bcount_from_directive(const Word& v);

/// Inverse of a modulo m (m >= 1) via the extended Euclidean algorithm;
/// nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m);

}  // namespace sturmian

#endif  // STURMIAN_ARITHMETIC_HPP
