// Slow, definition-level reference implementations used as test oracles.
// None of these call into the library beyond Word construction.
#ifndef STURMIAN_TESTS_ORACLES_HPP
#define STURMIAN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sturmian/word.hpp"

namespace oracle {

using sturmian::Word;

inline std::string rev(const std::string& s) { return {s.rbegin(), s.rend()}; }

inline bool is_pal(const std::string& s) { return s == rev(s); }

/// All words of length n in lexicographic order.
inline std::vector<std::string> words(std::size_t n) {
  std::vector<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::string s(n, 'a');
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> (n - 1 - i) & 1) s[i] = 'b';
    }
    out.push_back(s);
  }
  return out;
}

/// All words of length <= n.
inline std::vector<std::string> words_up_to(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k <= n; ++k) {
    for (auto& s : words(k)) out.push_back(std::move(s));
  }
  return out;
}

/// Shortest palindrome with prefix s, found by trying every extension.
inline std::string closure(const std::string& s) {
  for (std::size_t k = 0; k <= s.size(); ++k) {
    std::string t = s + rev(s.substr(0, k));
    if (is_pal(t)) return t;
  }
  return {};
}

inline std::string psi(const std::string& v) {
  std::string w;
  for (char c : v) w = closure(w + c);
  return w;
}

inline bool has_period(const std::string& s, std::size_t p) {
  for (std::size_t i = 0; i + p < s.size(); ++i) {
    if (s[i] != s[i + p]) return false;
  }
  return true;
}

inline std::size_t min_period(const std::string& s) {
  if (s.empty()) return 1;
  std::size_t p = 1;
  while (!has_period(s, p)) ++p;
  return p;
}

/// Lyndon iff strictly smaller than every proper rotation.
inline bool lyndon(const std::string& s) {
  if (s.empty()) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s < s.substr(i) + s.substr(0, i))) return false;
  }
  return true;
}

/// Continuant as the top-left entry of prod [[a_i, 1], [1, 0]].
inline unsigned __int128 continuant(const std::vector<std::uint64_t>& xs) {
  unsigned __int128 m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (std::uint64_t a : xs) {
    const unsigned __int128 n00 = m00 * a + m01;
    const unsigned __int128 n10 = m10 * a + m11;
    m01 = m00;
    m11 = m10;
    m00 = n00;
    m10 = n10;
  }
  return m00;
}

inline std::string u128_str(unsigned __int128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  return s;
}

/// Lower Christoffel word with p b's and q a's: letter i (1-based) is b iff
/// the line of slope p/(p+q) crosses an integer between i-1 and i.
inline std::string christoffel(std::uint64_t p, std::uint64_t q) {
  const std::uint64_t n = p + q;
  std::string s;
  for (std::uint64_t i = 1; i <= n; ++i) {
    s += (i * p) / n > ((i - 1) * p) / n ? 'b' : 'a';
  }
  return s;
}

/// Every (w1, w2) with w = w1 ab w2 = w2 ba w1.
inline std::vector<std::pair<std::string, std::string>> central_splits(
    const std::string& w) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i + 2 <= w.size(); ++i) {
    const std::string w1 = w.substr(0, i);
    const std::string w2 = w.substr(i + 2);
    if (w1 + "ab" + w2 == w && w2 + "ba" + w1 == w) out.emplace_back(w1, w2);
  }
  return out;
}

/// Every split whole = w1 w2 into two Christoffel words with w1 < w2.
inline std::vector<std::pair<std::string, std::string>> christoffel_splits(
    const std::string& w) {
  auto is_ch = [](const std::string& s) {
    const std::uint64_t p = static_cast<std::uint64_t>(std::count(s.begin(), s.end(), 'b'));
    const std::uint64_t q = s.size() - p;
    std::uint64_t a = p, b = q;
    while (b) { a %= b; std::swap(a, b); }
    return a == 1 && christoffel(p, q) == s;
  };
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 1; i < w.size(); ++i) {
    const std::string w1 = w.substr(0, i);
    const std::string w2 = w.substr(i);
    if (w1 < w2 && is_ch(w1) && is_ch(w2)) out.emplace_back(w1, w2);
  }
  return out;
}

inline std::uint64_t fib(int n) {  // F_{-1} = F_0 = 1
  std::uint64_t a = 1, b = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

inline std::uint64_t totient_by_gcd(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t a = k, b = n;
    while (b) { a %= b; std::swap(a, b); }
    if (a == 1) ++count;
  }
  return count;
}

inline Word W(const std::string& s) { return Word::parse(s); }

}  // namespace oracle

#endif  // STURMIAN_TESTS_ORACLES_HPP
