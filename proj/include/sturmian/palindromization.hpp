#ifndef STURMIAN_PALINDROMIZATION_HPP
#define STURMIAN_PALINDROMIZATION_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "sturmian/bignat.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// Length of the longest palindromic suffix of w (0 only for the empty word).
std::size_t longest_palindromic_suffix(const Word& w);

/// Shortest palindrome having w as a prefix: uQ -> uQ~u where Q is the
/// longest palindromic suffix.
Word palindromic_closure(const Word& w);

/// Iterated palindromic closure directed by v; psi(empty) = empty.
Word psi(const Word& v);

/// Inverse of psi. Throws NotCentral when w is not psi of any word.
Word directive_word_of(const Word& w);

/// Applies mu_v = mu_{x1} o ... o mu_{xn} to target, where mu_x fixes x and
/// sends the other letter y to xy.
Word mu(const Word& v, const Word& target);

/// p_x(v) = |mu_v(x)|. Directives longer than 64 letters use the continuant
/// closed form; shorter ones materialize mu_v(x).
BigNat p_x(const Word& v, Letter x);

/// Evaluates both sides of psi(vu) = mu_v(psi(u)) psi(v).
bool justin_check(const Word& v, const Word& u);

/// Letterwise exchange a <-> b.
Word exchange_E(const Word& w);
/// Swaps the last two letters (identity on words shorter than 2).
Word op_c(const Word& v);
/// Swaps the first two letters (identity on words shorter than 2).
Word op_d(const Word& v);

/// Length-n prefix of (ab)^omega.
Word fibonacci_directive_prefix(std::size_t n);

/// Eventually periodic infinite directive word preperiod . period^omega.
struct DirectiveSpec {
  Word preperiod;
  Word period;

  /// Throws DomainError if period is empty.
  DirectiveSpec(Word pre, Word per);

  /// Parses "preperiod|period", e.g. "|ab" or "abb|ab".
  static DirectiveSpec parse(std::string_view text);
  std::string to_string() const;

  /// Letter at 0-based position i of the infinite word.
  Letter at(std::size_t i) const;
  /// First n letters.
  Word prefix(std::size_t n) const;
  /// Both letters occur in the period, i.e. infinitely often.
  bool is_characteristic() const;
};

/// Streaming evaluation of psi on an infinite directive word. `current` is
/// psi of the first `emitted` directive letters.
struct PsiStream {
  DirectiveSpec spec;
  std::size_t emitted = 0;
  Word current;

  explicit PsiStream(DirectiveSpec s) : spec(std::move(s)) {}
  PsiStream(DirectiveSpec s, std::size_t emitted_letters, Word cur)
      : spec(std::move(s)), emitted(emitted_letters), current(std::move(cur)) {}
};

/// Consumes `steps` more directive letters, one closure per letter.
PsiStream psi_stream_advance(const PsiStream& s, std::size_t steps);

/// First n letters of psi(spec); advances until the palindromic prefix is
/// at least n letters long.
Word psi_stream_prefix(const DirectiveSpec& spec, std::size_t n);

}  // namespace sturmian

#endif  // STURMIAN_PALINDROMIZATION_HPP
