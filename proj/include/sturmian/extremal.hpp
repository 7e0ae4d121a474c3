#ifndef STURMIAN_EXTREMAL_HPP
#define STURMIAN_EXTREMAL_HPP

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sturmian/bignat.hpp"
#include "sturmian/rational.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// How per-directive statistics of psi(v) are obtained.
enum class Mode {
  materialized,  // build psi(v) and measure it
  arithmetic,    // continuant closed forms on the integral representation
};

std::string to_string(Mode m);

/// Largest orders the enumerating verifiers accept.
struct OracleBounds {
  std::size_t materialized = 14;
  std::size_t arithmetic = 22;
  std::size_t continuant = 22;
  std::size_t central_count = 16;
};

/// |psi(v)|, pi(psi(v)), |psi(v)|_b and the slope of a psi(v) b.
struct DirectiveStats {
  BigNat length;
  BigNat period;
  BigNat bcount;
  Rational slope;

  friend bool operator==(const DirectiveStats&, const DirectiveStats&) = default;
};

DirectiveStats stats_materialized(const Word& v);
DirectiveStats stats_arithmetic(const Word& v);
DirectiveStats stats(const Word& v, Mode mode);

/// Result of one order of an extremal enumeration. `argmax` holds directive
/// words, or bracketed exponent lists for the continuant verifiers; sets
/// iterate in lexicographic order.
struct ExtremalReport {
  std::size_t order = 0;
  BigNat maximum;
  std::set<std::string> argmax;
  BigNat expected_max;
  std::set<std::string> expected_argmax;
  bool passed = false;
};

/// max |psi(v)| over v of length n; expected F_{n+1} - 2 at v^(n), E(v^(n)).
ExtremalReport verify_max_length(std::size_t n, Mode mode,
                                 const OracleBounds& bounds = {});
/// max pi(psi(v)) over v of length n >= 1; expected F_{n-1} at
/// v^(n), E(v^(n)), c(v^(n)), E(c(v^(n))).
ExtremalReport verify_max_period(std::size_t n, Mode mode,
                                 const OracleBounds& bounds = {});
/// max |psi(v)|_b over v in a{a,b}^{n-1}, n >= 1; expected F_{n-1} - 1 at
/// v^(n) and E(d(v^(n))), restricted to words starting with a.
ExtremalReport verify_max_bcount(std::size_t n, Mode mode,
                                 const OracleBounds& bounds = {});

/// Calls `visit` with every list (alpha_0, ..., alpha_m), alpha_0 >= 0,
/// alpha_i >= 1, summing to n, for m = 0 .. n.
template <class Visit>
void for_each_exponent_list(std::size_t n, Visit&& visit);

/// max K[alpha_0 + 1, alpha_1, ..., alpha_m + 1] over exponent lists summing
/// to n (K[alpha_0 + 2] when m = 0); expected F_{n+1}.
ExtremalReport verify_continuant_max(std::size_t n,
                                     const OracleBounds& bounds = {});
/// max K[alpha_0 + 1, alpha_1, ..., alpha_{m-1}] over exponent lists summing
/// to n >= 2; expected F_{n-1} on the four equality families.
ExtremalReport verify_period_continuant_max(std::size_t n,
                                            const OracleBounds& bounds = {});

/// Expected argmax of verify_period_continuant_max, as exponent lists.
std::vector<std::vector<std::uint64_t>> period_continuant_equality_lists(
    std::size_t n);

/// One order of a pass/fail property check with named detail fields.
struct PropertyRow {
  std::size_t order = 0;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> fields;
};

bool all_passed(std::span<const PropertyRow> rows);

/// x F_{n-x} + F_{n-x+1} <= F_{n+1}, equality iff x = 1; one row per n.
std::vector<PropertyRow> fib_lemma_rows(std::size_t n_max);
bool verify_fib_lemma(std::size_t n_max);

/// pi(w)^2 = +-1 mod |w| + 2 for w = psi(v^(n)), 1 <= n <= order_max.
std::vector<PropertyRow> harmonic_rows(std::size_t order_max);
bool verify_harmonic_fibonacci(std::size_t order_max);

/// How central words are grouped when counting them.
enum class CentralIndex {
  order,   // by directive length
  length,  // by word length
};

/// Compares the number of distinct central words in each group n with
/// phi(n + 2). Rows carry both the by-order and by-length counts.
std::vector<PropertyRow> central_count_rows(std::size_t n_max, CentralIndex index,
                                            const OracleBounds& bounds = {});
bool verify_central_count(std::size_t n_max, CentralIndex index = CentralIndex::order,
                          const OracleBounds& bounds = {});

/// Along f = psi((ab)^w), E(f) and g = psi(abb(ab)^w), checks that each
/// order-n palindromic prefix attains the enumerated per-order maxima and
/// that its directive prefix is in the corresponding argmax.
std::vector<PropertyRow> stream_rows(std::size_t order_max,
                                     const OracleBounds& bounds = {});
bool verify_characteristic_extremal_streams(std::size_t order_max,
                                            const OracleBounds& bounds = {});

/// Number of v with |v| <= max_len whose materialized and arithmetic
/// statistics differ.
std::size_t dual_path_mismatches_exhaustive(std::size_t max_len);
/// Same over `samples` uniformly random words with lengths in [min_len, max_len].
std::size_t dual_path_mismatches_random(std::size_t samples, std::size_t min_len,
                                        std::size_t max_len, std::uint64_t seed);

// ---- implementation of the template -----------------------------------------

namespace detail {

template <class Visit>
void compositions(std::vector<std::uint64_t>& buf, std::size_t parts,
                  std::uint64_t remaining, Visit& visit) {
  if (parts == 0) {
    if (remaining == 0) visit(std::span<const std::uint64_t>(buf));
    return;
  }
  // Each of the `parts` entries is at least 1.
  for (std::uint64_t x = 1; x + (parts - 1) <= remaining; ++x) {
    buf.push_back(x);
    compositions(buf, parts - 1, remaining - x, visit);
    buf.pop_back();
  }
}

}  // namespace detail

template <class Visit>
void for_each_exponent_list(std::size_t n, Visit&& visit) {
  std::vector<std::uint64_t> buf;
  buf.reserve(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    for (std::uint64_t a0 = 0; a0 + m <= n; ++a0) {
      if (m == 0 && a0 != n) continue;
      buf.assign(1, a0);
      detail::compositions(buf, m, n - a0, visit);
    }
  }
}

}  // namespace sturmian

#endif  // STURMIAN_EXTREMAL_HPP
