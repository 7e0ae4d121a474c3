#ifndef STURMIAN_FAMILIES_HPP
#define STURMIAN_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sturmian/bignat.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

// ---- Central words ---------------------------------------------------------

/// True iff w = psi(v) for some v.
bool is_central(const Word& w);

/// Coprime periods p <= q with |word| = p + q - 2, p the minimal period, and
/// the directive word of `word`.
struct CentralCertificate {
  Word word;
  std::uint64_t p = 1;
  std::uint64_t q = 1;
  Word directive;
};

/// Throws NotCentral.
CentralCertificate central_certificate(const Word& w);

/// The pair (w1, w2) with w = w1 ab w2 = w2 ba w1.
struct CentralSplit {
  Word w1;
  Word w2;

  friend bool operator==(const CentralSplit&, const CentralSplit&) = default;
};

/// nullopt for powers of a single letter (including the empty word).
/// Throws NotCentral.
std::optional<CentralSplit> central_decompose(const Word& w);

/// Number of central words with directive length n: Euler's totient of n + 2.
BigNat count_central(std::uint64_t n);

/// Euler's totient by trial division.
std::uint64_t euler_phi(std::uint64_t n);

// ---- Standard words --------------------------------------------------------

/// s_{-1} = b, s_0 = a, s_n = s_{n-1}^{c_n} s_{n-2}. `terms[0]` is s_{-1}.
struct StandardSequence {
  std::vector<std::uint64_t> coefficients;
  std::vector<Word> terms;

  /// s_n for n >= -1.
  const Word& term(long n) const { return terms.at(static_cast<std::size_t>(n + 1)); }
};

/// Throws DomainError unless c_1 >= 0 and c_i > 0 for i > 1.
StandardSequence standard_from_coefficients(const std::vector<std::uint64_t>& coeffs);

bool is_standard(const Word& w);

/// w = mu_v(xy) = psi(v) x y.
struct StandardDecomposition {
  Word directive;
  Letter x;
  Letter y;
};

/// Throws NotStandard (also for single letters).
StandardDecomposition standard_decompose(const Word& w);

// ---- Christoffel words -----------------------------------------------------

/// Christoffel word with p letters b and q letters a; gcd(p, q) must be 1.
/// christoffel(0, 1) = a, christoffel(1, 0) = b.
Word christoffel(std::uint64_t p, std::uint64_t q);

bool is_christoffel(const Word& w);

/// whole = w1 w2, both Christoffel, w1 <lex w2, |w1| * |whole|_b = 1 and
/// |w2| * |whole|_a = 1 modulo |whole|.
struct ChristoffelFactorization {
  Word whole;
  Word w1;
  Word w2;
  std::uint64_t p_inv = 0;
  std::uint64_t q_inv = 0;
};

/// Throws NotChristoffel for non-Christoffel words and single letters.
ChristoffelFactorization christoffel_factorize(const Word& w);

}  // namespace sturmian

#endif  // STURMIAN_FAMILIES_HPP
