#include "sturmian/arithmetic.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sturmian/error.hpp"

namespace sturmian {

IntegralRepresentation::IntegralRepresentation(std::vector<std::uint64_t> alphas)
    : alphas_(std::move(alphas)) {
  for (std::size_t i = 1; i < alphas_.size(); ++i) {
    if (alphas_[i] == 0) {
      throw DomainError("integral representation " + to_string() +
                        " has a zero exponent past alpha_0");
    }
  }
  if (alphas_.size() == 1 && alphas_[0] == 0) {
    throw DomainError("integral representation [0] is not canonical; use []");
  }
}

IntegralRepresentation IntegralRepresentation::parse(std::string_view text) {
  return IntegralRepresentation(parse_natural_list(text));
}

std::uint64_t IntegralRepresentation::total() const {
  return std::accumulate(alphas_.begin(), alphas_.end(), std::uint64_t{0});
}

std::string IntegralRepresentation::to_string() const {
  return format_natural_list(alphas_);
}

IntegralRepresentation to_integral(const Word& v) {
  if (v.empty()) return {};
  std::vector<std::uint64_t> alphas;
  // Even indices are b-blocks; a word starting with a has alpha_0 = 0.
  Letter expected = Letter::b;
  std::uint64_t run = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == expected) {
      ++run;
    } else {
      alphas.push_back(run);
      expected = other(expected);
      run = 1;
    }
  }
  alphas.push_back(run);
  return IntegralRepresentation(std::move(alphas));
}

Word from_integral(const IntegralRepresentation& r) {
  check_materializable(r.total());
  Word v;
  v.reserve(r.total());
  Letter x = Letter::b;
  for (std::uint64_t alpha : r.alphas()) {
    v += Word::power(x, alpha);
    x = other(x);
  }
  return v;
}

std::vector<std::uint64_t> parse_natural_list(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']') {
    throw ParseError("expected a bracketed list like [0,2,2,1], got '" +
                     std::string(text) + "'");
  }
  std::vector<std::uint64_t> out;
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    const std::string_view item = body.substr(start, comma - start);
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ParseError("bad list element '" + std::string(item) + "' in '" +
                       std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_natural_list(std::span<const std::uint64_t> xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  os << ']';
  return os.str();
}

BigNat continuant(std::span<const std::uint64_t> terms) {
  BigNat before = 1;  // K of the list two shorter; K[] for the first step
  BigNat current = 1;  // K[]
  for (std::size_t i = 0; i < terms.size(); ++i) {
    // K[a0] = a0 fits the recurrence with K[] = 1 and an implicit K_{-2} = 0.
    BigNat next = BigNat(terms[i]) * current + (i == 0 ? BigNat(0) : before);
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

ContinuedFraction::ContinuedFraction(std::vector<std::uint64_t> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("continued fraction needs a_0");
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i] == 0) {
      throw DomainError("partial quotient a_" + std::to_string(i) +
                        " must be positive");
    }
  }
}

std::string ContinuedFraction::to_string() const {
  std::ostringstream os;
  os << '[' << terms_[0];
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    os << (i == 1 ? ';' : ',') << terms_[i];
  }
  os << ']';
  return os.str();
}

Rational cf_eval(const ContinuedFraction& cf) {
  const std::span<const std::uint64_t> t(cf.terms());
  return Rational(continuant(t), continuant(t.subspan(1)));
}

ConvergentTable convergents(const ContinuedFraction& cf) {
  const auto& a = cf.terms();
  ConvergentTable table;
  table.rows.push_back({-1, 1, 0, 1});
  table.rows.push_back({0, a[0], 1, BigNat(a[0]) + 1});
  for (std::size_t k = 1; k < a.size(); ++k) {
    const ConvergentRow& prev = table.rows[k];
    const ConvergentRow& prev2 = table.rows[k - 1];
    const BigNat ak = a[k];
    ConvergentRow row{static_cast<long>(k), ak * prev.A + prev2.A,
                      ak * prev.B + prev2.B, ak * prev.P + prev2.P};
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

// The empty directive behaves as the representation (0) in the closed forms.
std::vector<std::uint64_t> exponents_for_formulas(const Word& v) {
  auto alphas = to_integral(v).alphas();
  if (alphas.empty()) alphas.push_back(0);
  return alphas;
}

}  // namespace

ContinuedFraction slope_cf_of_directive(const Word& v) {
  auto terms = exponents_for_formulas(v);
  // [alpha_0; ..., alpha_{n-1}, alpha_n + 1]; for n = 0 this is [alpha_0 + 1].
  terms.back() += 1;
  return ContinuedFraction(std::move(terms));
}

Rational slope_from_directive(const Word& v) {
  return cf_eval(slope_cf_of_directive(v));
}

BigNat christoffel_length_from_directive(const Word& v) {
  auto terms = exponents_for_formulas(v);
  // K[alpha_0 + 1, ..., alpha_n + 1]; when n = 0 both increments land on
  // the single entry, giving K[alpha_0 + 2].
  terms.front() += 1;
  terms.back() += 1;
  return continuant(terms);
}

BigNat psi_length_from_directive(const Word& v) {
  return christoffel_length_from_directive(v) - 2;
}

BigNat minimal_period_from_directive(const Word& v) {
  auto terms = exponents_for_formulas(v);
  terms.pop_back();
  if (!terms.empty()) terms.front() += 1;
  return continuant(terms);
}

BigNat bcount_from_directive(const Word& v) {
  const auto cf = slope_cf_of_directive(v);
  return continuant(cf.terms()) - 1;
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 0) return std::nullopt;
  if (m == 1) return 0;
  // Extended Euclid on signed 128-bit to keep Bezout coefficients exact.
  __int128 old_r = static_cast<__int128>(a % m), r = static_cast<__int128>(m);
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quotient = old_r / r;
    __int128 tmp = old_r - quotient * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quotient * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

}  // namespace sturmian
