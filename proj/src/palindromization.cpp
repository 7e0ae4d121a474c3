#include "sturmian/palindromization.hpp"

#include <algorithm>
#include <vector>

#include "sturmian/arithmetic.hpp"
#include "sturmian/error.hpp"

namespace sturmian {

namespace {

// Prefix function of `s`.
std::vector<std::size_t> borders(std::string_view s) {
  std::vector<std::size_t> pi(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  return pi;
}

// Longest prefix of `pattern` that is a suffix of `text`.
std::size_t overlap(std::string_view pattern, std::string_view text) {
  std::string joined;
  joined.reserve(pattern.size() + text.size() + 1);
  joined.append(pattern).append(1, '#').append(text);
  return borders(joined).back();
}

// Lengths of all proper palindromic prefixes of w, ascending, including 0.
std::vector<std::size_t> proper_palindromic_prefixes(const Word& w) {
  std::vector<std::size_t> lengths;
  if (w.empty()) return lengths;
  const Word r = reverse(w);
  // A prefix of w is a palindrome iff it is a suffix of w~; those form the
  // border chain of the longest one.
  std::size_t longest = overlap(w.view(), r.view());
  const auto pi = borders(w.view());
  if (longest == w.size()) longest = pi.back();
  for (std::size_t k = longest; k > 0; k = pi[k - 1]) lengths.push_back(k);
  lengths.push_back(0);
  std::reverse(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace

std::size_t longest_palindromic_suffix(const Word& w) {
  if (w.empty()) return 0;
  const Word r = reverse(w);
  return overlap(r.view(), w.view());
}

Word palindromic_closure(const Word& w) {
  const std::size_t q = longest_palindromic_suffix(w);
  const std::size_t u = w.size() - q;
  check_materializable(w.size() + u);
  return w + reverse(w.prefix(u));
}

Word psi(const Word& v) {
  Word w;
  for (std::size_t i = 0; i < v.size(); ++i) w = palindromic_closure(w + v[i]);
  return w;
}

Word directive_word_of(const Word& w) {
  Word v;
  for (std::size_t k : proper_palindromic_prefixes(w)) v += w[k];
  // Round trip: every psi of a prefix of v must be a prefix of w.
  Word rebuilt;
  for (std::size_t i = 0; i < v.size(); ++i) {
    rebuilt = palindromic_closure(rebuilt + v[i]);
    if (!w.has_prefix(rebuilt)) break;
  }
  if (rebuilt != w) {
    throw NotCentral("'" + w.str() + "' is not in the image of psi");
  }
  return v;
}

Word mu(const Word& v, const Word& target) {
  Word w = target;
  for (std::size_t i = v.size(); i-- > 0;) {
    const Letter x = v[i];
    const std::size_t grown = w.size() + (w.size() - count_letter(w, x));
    check_materializable(grown);
    Word next;
    next.reserve(grown);
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] != x) next += x;
      next += w[j];
    }
    w = std::move(next);
  }
  return w;
}

BigNat p_x(const Word& v, Letter x) {
  if (v.size() > 64) return minimal_period_from_directive(v + x);
  return mu(v, Word::letter(x)).size();
}

bool justin_check(const Word& v, const Word& u) {
  return psi(v + u) == mu(v, psi(u)) + psi(v);
}

Word exchange_E(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out += other(w[i]);
  return out;
}

Word op_c(const Word& v) {
  if (v.size() < 2) return v;
  const std::size_t n = v.size();
  return v.prefix(n - 2) + v[n - 1] + v[n - 2];
}

Word op_d(const Word& v) {
  if (v.size() < 2) return v;
  return Word::letter(v[1]) + v[0] + v.suffix(v.size() - 2);
}

Word fibonacci_directive_prefix(std::size_t n) {
  Word v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v += (i % 2 == 0 ? Letter::a : Letter::b);
  return v;
}

DirectiveSpec::DirectiveSpec(Word pre, Word per)
    : preperiod(std::move(pre)), period(std::move(per)) {
  if (period.empty()) throw DomainError("directive period must be non-empty");
}

DirectiveSpec DirectiveSpec::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != text.npos) {
    throw ParseError("directive spec must look like 'preperiod|period', got '" +
                     std::string(text) + "'");
  }
  Word period = Word::parse(text.substr(bar + 1));
  if (period.empty()) {
    throw ParseError("directive spec '" + std::string(text) +
                     "' has an empty period");
  }
  return DirectiveSpec(Word::parse(text.substr(0, bar)), std::move(period));
}

std::string DirectiveSpec::to_string() const {
  return preperiod.str() + "|" + period.str();
}

Letter DirectiveSpec::at(std::size_t i) const {
  if (i < preperiod.size()) return preperiod[i];
  return period[(i - preperiod.size()) % period.size()];
}

Word DirectiveSpec::prefix(std::size_t n) const {
  Word v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v += at(i);
  return v;
}

bool DirectiveSpec::is_characteristic() const {
  const std::size_t bs = count_letter(period, Letter::b);
  return bs > 0 && bs < period.size();
}

PsiStream psi_stream_advance(const PsiStream& s, std::size_t steps) {
  PsiStream next = s;
  for (std::size_t i = 0; i < steps; ++i) {
    next.current = palindromic_closure(next.current + next.spec.at(next.emitted));
    ++next.emitted;
  }
  return next;
}

Word psi_stream_prefix(const DirectiveSpec& spec, std::size_t n) {
  check_materializable(n);
  PsiStream s(spec);
  // Each closure adds at least one letter, so this terminates.
  while (s.current.size() < n) s = psi_stream_advance(s, 1);
  return s.current.prefix(n);
}

}  // namespace sturmian
