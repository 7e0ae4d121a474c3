#include "sturmian/families.hpp"

#include <numeric>
#include <stdexcept>

#include "sturmian/arithmetic.hpp"
#include "sturmian/error.hpp"
#include "sturmian/palindromization.hpp"

namespace sturmian {

namespace {

bool is_letter_power(const Word& w) {
  const std::size_t bs = count_letter(w, Letter::b);
  return bs == 0 || bs == w.size();
}

const Word kAB = Word::parse("ab");
const Word kBA = Word::parse("ba");

}  // namespace

bool is_central(const Word& w) {
  try {
    directive_word_of(w);
    return true;
  } catch (const NotCentral&) {
    return false;
  }
}

CentralCertificate central_certificate(const Word& w) {
  CentralCertificate cert;
  cert.word = w;
  cert.directive = directive_word_of(w);
  const std::uint64_t pa = p_x(cert.directive, Letter::a).to_u64();
  const std::uint64_t pb = p_x(cert.directive, Letter::b).to_u64();
  cert.p = std::min(pa, pb);
  cert.q = std::max(pa, pb);
  return cert;
}

std::optional<CentralSplit> central_decompose(const Word& w) {
  const CentralCertificate cert = central_certificate(w);
  if (is_letter_power(w)) return std::nullopt;
  for (const auto& [p, q] : {std::pair{cert.p, cert.q}, std::pair{cert.q, cert.p}}) {
    const Word w1 = w.prefix(p - 2);
    const Word w2 = w.suffix(q - 2);
    if (w == w1 + kAB + w2 && w == w2 + kBA + w1) return CentralSplit{w1, w2};
  }
  throw std::logic_error("central word '" + w.str() +
                         "' has no w1 ab w2 = w2 ba w1 split");
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    while (n % d == 0) n /= d;
    result -= result / d;
  }
  if (n > 1) result -= result / n;
  return result;
}

BigNat count_central(std::uint64_t n) { return euler_phi(n + 2); }

StandardSequence standard_from_coefficients(const std::vector<std::uint64_t>& coeffs) {
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) {
      throw DomainError("directive coefficient c_" + std::to_string(i + 1) +
                        " must be positive");
    }
  }
  StandardSequence seq;
  seq.coefficients = coeffs;
  seq.terms = {Word::letter(Letter::b), Word::letter(Letter::a)};
  for (std::uint64_t c : coeffs) {
    const Word& prev = seq.terms[seq.terms.size() - 1];
    const Word& prev2 = seq.terms[seq.terms.size() - 2];
    check_materializable(c * prev.size() + prev2.size());
    Word next;
    for (std::uint64_t k = 0; k < c; ++k) next += prev;
    next += prev2;
    seq.terms.push_back(std::move(next));
  }
  return seq;
}

bool is_standard(const Word& w) {
  if (w.size() == 1) return true;
  if (w.size() < 2) return false;
  const std::size_t n = w.size();
  return w[n - 1] != w[n - 2] && is_central(w.prefix(n - 2));
}

StandardDecomposition standard_decompose(const Word& w) {
  if (w.size() < 2 || !is_standard(w)) {
    throw NotStandard("'" + w.str() + "' is not a standard word of length >= 2");
  }
  const std::size_t n = w.size();
  return {directive_word_of(w.prefix(n - 2)), w[n - 2], w[n - 1]};
}

Word christoffel(std::uint64_t p, std::uint64_t q) {
  if (std::gcd(p, q) != 1) {
    throw DomainError("christoffel(" + std::to_string(p) + ", " +
                      std::to_string(q) + ") needs coprime arguments");
  }
  if (p == 0) return Word::letter(Letter::a);
  if (q == 0) return Word::letter(Letter::b);
  const std::uint64_t n = p + q;
  check_materializable(n);
  Word w;
  w.reserve(n);
  std::uint64_t prev = 0;  // (i - 1) p mod n
  for (std::uint64_t i = 1; i <= n; ++i) {
    const std::uint64_t cur = (prev + p) % n;
    w += cur > prev ? Letter::a : Letter::b;
    prev = cur;
  }
  return w;
}

bool is_christoffel(const Word& w) {
  if (w.size() == 1) return true;
  if (w.size() < 2) return false;
  return w.front() == Letter::a && w.back() == Letter::b &&
         is_central(w.factor(1, w.size() - 2));
}

ChristoffelFactorization christoffel_factorize(const Word& w) {
  if (w.size() < 2 || !is_christoffel(w)) {
    throw NotChristoffel("'" + w.str() + "' is not a proper Christoffel word");
  }
  const std::size_t n = w.size();
  std::size_t cut = 1;
  while (cut < n && !is_lyndon(w.suffix(n - cut))) ++cut;

  ChristoffelFactorization f;
  f.whole = w;
  f.w1 = w.prefix(cut);
  f.w2 = w.suffix(n - cut);
  f.p_inv = mod_inverse(count_letter(w, Letter::b), n).value();
  f.q_inv = mod_inverse(count_letter(w, Letter::a), n).value();

  if (!is_christoffel(f.w1) || !is_christoffel(f.w2) || !(f.w1 < f.w2) ||
      f.w1.size() != f.p_inv || f.w2.size() != f.q_inv) {
    throw std::logic_error("Lyndon factorization of '" + w.str() +
                           "' disagrees with the modular-inverse lengths");
  }
  return f;
}

}  // namespace sturmian
