#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "sturmian/error.hpp"
#include "sturmian/families.hpp"
#include "sturmian/palindromization.hpp"

using namespace sturmian;
using oracle::W;

TEST(Central, Recognition) {
  EXPECT_TRUE(is_central(W("ababaababa")));
  EXPECT_TRUE(is_central(W("")));
  EXPECT_FALSE(is_central(W("abab")));
  for (std::size_t n = 0; n < 12; ++n) EXPECT_TRUE(is_central(Word::power(Letter::a, n)));
}

TEST(Central, RecognitionMatchesPeriodCharacterization) {
  // w is central iff it has coprime periods p, q with |w| = p + q - 2, or is
  // a power of a single letter.
  for (const auto& s : oracle::words_up_to(12)) {
    bool expected = s.find('a') == std::string::npos || s.find('b') == std::string::npos;
    for (std::size_t p = 1; !expected && p <= s.size() + 1; ++p) {
      const std::size_t q = s.size() + 2 - p;
      expected = q >= 1 && std::gcd(p, q) == 1 && oracle::has_period(s, p) &&
                 oracle::has_period(s, q);
    }
    ASSERT_EQ(is_central(W(s)), expected) << s;
  }
}

TEST(Central, Certificate) {
  const auto c = central_certificate(W("aabaabaaabaabaa"));
  EXPECT_EQ(c.p, 7u);
  EXPECT_EQ(c.q, 10u);
  EXPECT_EQ(c.directive, W("aabba"));
  const auto e = central_certificate(W(""));
  EXPECT_EQ(e.p, 1u);
  EXPECT_EQ(e.q, 1u);
  const auto f = central_certificate(W("abaababaaba"));
  EXPECT_EQ(f.p, 5u);
  EXPECT_EQ(f.q, 8u);
  EXPECT_THROW(central_certificate(W("abab")), NotCentral);
}

TEST(Central, CertificateInvariantsExhaustive) {
  for (const auto& v : oracle::words_up_to(10)) {
    const Word w = psi(W(v));
    const auto c = central_certificate(w);
    EXPECT_EQ(c.p + c.q, w.size() + 2);
    EXPECT_EQ(std::gcd(c.p, c.q), 1u);
    EXPECT_EQ(c.p, oracle::min_period(w.str()));
    EXPECT_TRUE(oracle::has_period(w.str(), c.q));
  }
}

TEST(Central, Decompose) {
  // ababa ab aba = aba ba ababa
  const auto split = central_decompose(W("ababaababa"));
  ASSERT_TRUE(split.has_value());
  EXPECT_EQ(split->w1, W("ababa"));
  EXPECT_EQ(split->w2, W("aba"));
  EXPECT_FALSE(central_decompose(W("aaa")).has_value());
  EXPECT_FALSE(central_decompose(W("")).has_value());
  const auto aba = central_decompose(W("aba"));
  ASSERT_TRUE(aba.has_value());
  EXPECT_EQ(aba->w1, W(""));
  EXPECT_EQ(aba->w2, W("a"));
}

TEST(Central, DecomposeMatchesSplitSearchExhaustive) {
  for (const auto& v : oracle::words_up_to(11)) {
    const Word w = psi(W(v));
    const auto splits = oracle::central_splits(w.str());
    const auto got = central_decompose(w);
    if (!got) {
      EXPECT_TRUE(splits.empty()) << w;
      continue;
    }
    ASSERT_EQ(splits.size(), 1u) << w;
    EXPECT_EQ(got->w1.str(), splits[0].first);
    EXPECT_EQ(got->w2.str(), splits[0].second);
    EXPECT_TRUE(is_central(got->w1));
    EXPECT_TRUE(is_central(got->w2));
  }
}

TEST(Central, Totient) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(6), 2u);
  EXPECT_EQ(count_central(0), BigNat(1));
  EXPECT_EQ(count_central(1), BigNat(2));
  EXPECT_EQ(count_central(4), BigNat(2));
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    ASSERT_EQ(euler_phi(n), oracle::totient_by_gcd(n)) << n;
  }
}

TEST(Central, CountByLengthIsTotient) {
  std::map<std::size_t, std::set<std::string>> by_length;
  for (const auto& v : oracle::words_up_to(14)) {
    const std::string w = oracle::psi(v);
    if (w.size() <= 14) by_length[w.size()].insert(w);
  }
  for (std::size_t n = 0; n <= 14; ++n) {
    EXPECT_EQ(BigNat(by_length[n].size()), count_central(n)) << n;
  }
}

TEST(Standard, Recognition) {
  EXPECT_TRUE(is_standard(W("a")));
  EXPECT_TRUE(is_standard(W("b")));
  EXPECT_TRUE(is_standard(W("ababaababaab")));
  EXPECT_FALSE(is_standard(W("")));
  EXPECT_FALSE(is_standard(W("aa")));
  EXPECT_FALSE(is_standard(W("ababab")));
}

TEST(Standard, Decompose) {
  const auto d = standard_decompose(W("abaab"));
  EXPECT_EQ(d.directive, W("ab"));
  EXPECT_EQ(d.x, Letter::a);
  EXPECT_EQ(d.y, Letter::b);
  const auto e = standard_decompose(W("ab"));
  EXPECT_EQ(e.directive, W(""));
  const auto f = standard_decompose(W("aabaabaaabaabaaab"));
  EXPECT_EQ(f.directive, W("aabba"));
  EXPECT_THROW(standard_decompose(W("a")), NotStandard);
  EXPECT_THROW(standard_decompose(W("abab")), NotStandard);
}

TEST(Standard, SequencesProduceStandardWords) {
  std::vector<std::vector<std::uint64_t>> all{{}};
  for (int depth = 0; depth < 6; ++depth) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& c : all) {
      for (std::uint64_t x = (c.empty() ? 0 : 1); x <= 4; ++x) {
        auto d = c;
        d.push_back(x);
        next.push_back(d);
      }
    }
    for (const auto& c : next) {
      const auto seq = standard_from_coefficients(c);
      for (long n = -1; n < static_cast<long>(seq.terms.size()) - 1; ++n) {
        if (seq.term(n).size() > 500) continue;
        ASSERT_TRUE(is_standard(seq.term(n))) << seq.term(n);
        if (seq.term(n).size() >= 2) {
          const auto d = standard_decompose(seq.term(n));
          EXPECT_EQ(psi(d.directive) + d.x + d.y, seq.term(n));
        }
      }
    }
    all = std::move(next);
  }
  EXPECT_THROW(standard_from_coefficients({1, 0}), DomainError);
}

TEST(Christoffel, Vectors) {
  EXPECT_EQ(christoffel(5, 12), W("aaabaabaaabaabaab"));
  EXPECT_EQ(christoffel(1, 1), W("ab"));
  EXPECT_EQ(christoffel(0, 1), W("a"));
  EXPECT_EQ(christoffel(1, 0), W("b"));
  EXPECT_EQ(christoffel(7, 5), W("abababbababb"));
  EXPECT_THROW(christoffel(2, 4), DomainError);
  EXPECT_THROW(christoffel(0, 0), DomainError);
}

TEST(Christoffel, MatchesFloorDefinition) {
  for (std::uint64_t n = 2; n <= 200; ++n) {
    for (std::uint64_t p = 1; p < n; ++p) {
      if (std::gcd(p, n) != 1) continue;
      const Word w = christoffel(p, n - p);
      ASSERT_EQ(w.str(), oracle::christoffel(p, n - p));
      EXPECT_EQ(slope_eta(w), Rational(p, n - p));
    }
  }
}

TEST(Christoffel, Recognition) {
  EXPECT_TRUE(is_christoffel(W("aaabaabaaabaabaab")));
  EXPECT_EQ(W("aaabaabaaabaabaab").factor(1, 15), psi(W("aabba")));
  EXPECT_TRUE(is_christoffel(W("b")));
  EXPECT_FALSE(is_christoffel(W("ba")));
  EXPECT_FALSE(is_christoffel(W("")));
  std::set<std::string> all;
  for (std::uint64_t n = 1; n <= 13; ++n) {
    for (std::uint64_t p = 0; p <= n; ++p) {
      if (std::gcd(p, n - p) == 1) all.insert(christoffel(p, n - p).str());
    }
  }
  for (const auto& s : oracle::words_up_to(13)) {
    if (s.empty()) continue;
    ASSERT_EQ(is_christoffel(W(s)), all.count(s) == 1) << s;
  }
}

TEST(Christoffel, Factorization) {
  const auto f = christoffel_factorize(W("aaabaabaaabaabaab"));
  EXPECT_EQ(f.w1, W("aaabaab"));
  EXPECT_EQ(f.w2, W("aaabaabaab"));
  EXPECT_EQ(f.p_inv, 7u);
  EXPECT_EQ(f.q_inv, 10u);
  EXPECT_EQ(5 * 7 % 17, 1);
  EXPECT_EQ(12 * 10 % 17, 1);
  const auto g = christoffel_factorize(W("ab"));
  EXPECT_EQ(g.w1, W("a"));
  EXPECT_EQ(g.w2, W("b"));
  EXPECT_THROW(christoffel_factorize(W("a")), NotChristoffel);
  EXPECT_THROW(christoffel_factorize(W("ba")), NotChristoffel);
}

TEST(Christoffel, FactorizationIsTheUniqueSplit) {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    for (std::uint64_t p = 1; p < n; ++p) {
      if (std::gcd(p, n) != 1) continue;
      const Word w = christoffel(p, n - p);
      const auto f = christoffel_factorize(w);
      const auto splits = oracle::christoffel_splits(w.str());
      ASSERT_EQ(splits.size(), 1u) << w;
      EXPECT_EQ(f.w1.str(), splits[0].first);
      EXPECT_EQ(f.w2.str(), splits[0].second);
      EXPECT_EQ(f.w1.size() * p % n, 1u);
      EXPECT_EQ(f.w2.size() * (n - p) % n, 1u);
    }
  }
}
