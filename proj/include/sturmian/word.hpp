#ifndef STURMIAN_WORD_HPP
#define STURMIAN_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "sturmian/bignat.hpp"
#include "sturmian/rational.hpp"

namespace sturmian {

/// A letter of the ordered binary alphabet, a < b.
enum class Letter : std::uint8_t { a = 0, b = 1 };

constexpr char to_char(Letter x) { return x == Letter::a ? 'a' : 'b'; }
constexpr Letter other(Letter x) { return x == Letter::a ? Letter::b : Letter::a; }
/// Throws ParseError for anything but 'a' or 'b'.
Letter letter_from_char(char c);

inline constexpr std::size_t kDefaultMaxWordLength = std::size_t{1} << 24;

/// Upper bound on the length of any word the library materializes.
std::size_t max_word_length();
void set_max_word_length(std::size_t limit);
/// Throws SizeError if `length` exceeds the materialization limit.
void check_materializable(std::size_t length);

/// Finite word over {a, b}. Immutable value type; the empty word is valid.
class Word {
 public:
  Word() = default;
  /// Throws ParseError on any character other than 'a' and 'b'.
  static Word parse(std::string_view text);
  static Word letter(Letter x) { return Word(std::string(1, to_char(x))); }
  static Word power(Letter x, std::size_t n);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const {
    return letters_[i] == 'a' ? Letter::a : Letter::b;
  }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[size() - 1]; }

  /// Letters as an ASCII view of 'a'/'b'.
  std::string_view view() const { return letters_; }
  const std::string& str() const { return letters_; }

  Word prefix(std::size_t n) const { return Word(letters_.substr(0, n)); }
  Word suffix(std::size_t n) const {
    return Word(letters_.substr(letters_.size() - n));
  }
  Word factor(std::size_t pos, std::size_t n) const {
    return Word(letters_.substr(pos, n));
  }
  bool has_prefix(const Word& p) const {
    return p.size() <= size() && letters_.compare(0, p.size(), p.letters_) == 0;
  }

  void reserve(std::size_t n) { letters_.reserve(n); }

  Word& operator+=(const Word& o);
  Word& operator+=(Letter x);
  friend Word operator+(Word u, const Word& v) { return u += v; }
  friend Word operator+(Word u, Letter x) { return u += x; }
  friend Word operator+(Letter x, const Word& u) { return Word::letter(x) + u; }

  /// Lexicographic order induced by a < b.
  friend std::strong_ordering operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << w.letters_;
  }

 private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}

  std::string letters_;
};

Word reverse(const Word& w);
bool is_palindrome(const Word& w);

/// True iff positions congruent mod p carry equal letters. p must be >= 1.
bool has_period(const Word& w, std::size_t p);
/// Smallest period; 1 for the empty word.
std::size_t minimal_period(const Word& w);

/// Requires both periods; returns whether |w| >= p + q - gcd(p, q).
bool fine_wilf_collapse(const Word& w, std::size_t p, std::size_t q);

std::size_t count_letter(const Word& w, Letter x);
/// |w|_b / |w|_a, with 1 for the empty word and infinity for b^n, n > 0.
Rational slope_eta(const Word& w);

/// F_n with F_{-1} = F_0 = 1; n >= -1.
BigNat fibonacci(long n);

bool is_lyndon(const Word& w);

}  // namespace sturmian

template <>
struct std::hash<sturmian::Word> {
  std::size_t operator()(const sturmian::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};

#endif  // STURMIAN_WORD_HPP
