#include "sturmian/word.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <vector>

#include "sturmian/error.hpp"

namespace sturmian {

namespace {

std::atomic<std::size_t> g_max_word_length{kDefaultMaxWordLength};

}  // namespace

Letter letter_from_char(char c) {
  if (c == 'a') return Letter::a;
  if (c == 'b') return Letter::b;
  throw ParseError(std::string("not a letter of {a,b}: '") + c + "'");
}

std::size_t max_word_length() { return g_max_word_length.load(); }

void set_max_word_length(std::size_t limit) { g_max_word_length.store(limit); }

void check_materializable(std::size_t length) {
  const std::size_t limit = max_word_length();
  if (length > limit) {
    throw SizeError("word of length " + std::to_string(length) +
                    " exceeds the materialization limit " +
                    std::to_string(limit));
  }
}

Word Word::parse(std::string_view text) {
  for (char c : text) letter_from_char(c);
  check_materializable(text.size());
  return Word(std::string(text));
}

Word Word::power(Letter x, std::size_t n) {
  check_materializable(n);
  return Word(std::string(n, to_char(x)));
}

Word& Word::operator+=(const Word& o) {
  check_materializable(size() + o.size());
  letters_ += o.letters_;
  return *this;
}

Word& Word::operator+=(Letter x) {
  check_materializable(size() + 1);
  letters_ += to_char(x);
  return *this;
}

Word reverse(const Word& w) {
  std::string s(w.view());
  std::reverse(s.begin(), s.end());
  return Word::parse(s);
}

bool is_palindrome(const Word& w) {
  const auto s = w.view();
  return std::equal(s.begin(), s.begin() + s.size() / 2, s.rbegin());
}

bool has_period(const Word& w, std::size_t p) {
  if (p == 0) throw DomainError("period must be positive");
  const auto s = w.view();
  for (std::size_t i = p; i < s.size(); ++i) {
    if (s[i] != s[i - p]) return false;
  }
  return true;
}

std::size_t minimal_period(const Word& w) {
  const auto s = w.view();
  if (s.empty()) return 1;
  // Longest proper border via the prefix function; period = |w| - border.
  std::vector<std::size_t> border(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && s[i] != s[k]) k = border[k - 1];
    if (s[i] == s[k]) ++k;
    border[i] = k;
  }
  return s.size() - border.back();
}

bool fine_wilf_collapse(const Word& w, std::size_t p, std::size_t q) {
  if (!has_period(w, p) || !has_period(w, q)) {
    throw DomainError("fine_wilf_collapse requires both " + std::to_string(p) +
                      " and " + std::to_string(q) + " to be periods");
  }
  return w.size() + std::gcd(p, q) >= p + q;
}

std::size_t count_letter(const Word& w, Letter x) {
  return static_cast<std::size_t>(
      std::count(w.view().begin(), w.view().end(), to_char(x)));
}

Rational slope_eta(const Word& w) {
  if (w.empty()) return Rational(1, 1);
  return Rational(count_letter(w, Letter::b), count_letter(w, Letter::a));
}

BigNat fibonacci(long n) {
  if (n < -1) throw DomainError("fibonacci index must be >= -1");
  BigNat prev = 1;  // F_{-1}
  BigNat cur = 1;   // F_0
  for (long i = 0; i < n; ++i) {
    BigNat next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return n == -1 ? prev : cur;
}

bool is_lyndon(const Word& w) {
  // Duval scan: w is Lyndon iff the scan consumes all of w with no
  // repetition of a shorter period.
  const auto s = w.view();
  if (s.empty()) return false;
  std::size_t k = 0;
  std::size_t j = 1;
  while (j < s.size() && s[k] <= s[j]) {
    k = s[k] < s[j] ? 0 : k + 1;
    ++j;
  }
  return j == s.size() && k == 0;
}

}  // namespace sturmian
