#include "sturmian/extremal.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <unordered_set>

#include "sturmian/arithmetic.hpp"
#include "sturmian/error.hpp"
#include "sturmian/families.hpp"
#include "sturmian/palindromization.hpp"

namespace sturmian {

std::string to_string(Mode m) {
  return m == Mode::materialized ? "materialized" : "arithmetic";
}

DirectiveStats stats_materialized(const Word& v) {
  const Word w = psi(v);
  return {w.size(), minimal_period(w), count_letter(w, Letter::b),
          slope_eta(Letter::a + w + Letter::b)};
}

DirectiveStats stats_arithmetic(const Word& v) {
  return {psi_length_from_directive(v), minimal_period_from_directive(v),
          bcount_from_directive(v), slope_from_directive(v)};
}

DirectiveStats stats(const Word& v, Mode mode) {
  return mode == Mode::materialized ? stats_materialized(v) : stats_arithmetic(v);
}

namespace {

enum class Statistic { length, period, bcount };

BigNat measure_word(const Word& psi_v, Statistic s) {
  switch (s) {
    case Statistic::length: return psi_v.size();
    case Statistic::period: return minimal_period(psi_v);
    case Statistic::bcount: return count_letter(psi_v, Letter::b);
  }
  return 0;
}

BigNat measure_directive(const Word& v, Statistic s) {
  switch (s) {
    case Statistic::length: return psi_length_from_directive(v);
    case Statistic::period: return minimal_period_from_directive(v);
    case Statistic::bcount: return bcount_from_directive(v);
  }
  return 0;
}

// Running (max, argmax). Merging is associative and commutative.
class MaxAccumulator {
 public:
  void offer(const BigNat& value, const std::string& key) {
    if (!seen_ || value > max_) {
      max_ = value;
      argmax_.clear();
      seen_ = true;
    }
    if (value == max_) argmax_.insert(key);
  }

  void merge(MaxAccumulator&& o) {
    if (!o.seen_) return;
    if (!seen_ || o.max_ > max_) {
      *this = std::move(o);
    } else if (o.max_ == max_) {
      argmax_.merge(o.argmax_);
    }
  }

  const BigNat& max() const { return max_; }
  std::set<std::string>& argmax() { return argmax_; }

 private:
  bool seen_ = false;
  BigNat max_;
  std::set<std::string> argmax_;
};

std::size_t worker_count() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs task(i, acc) for i in [0, tasks) across workers, merging results.
template <class Task>
MaxAccumulator parallel_max(std::size_t tasks, Task task) {
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(tasks, 1));
  std::vector<MaxAccumulator> partial(workers);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < tasks; i += workers) task(i, partial[w]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  MaxAccumulator total;
  for (auto& p : partial) total.merge(std::move(p));
  return total;
}

Word word_from_bits(std::uint64_t bits, std::size_t n) {
  Word v;
  v.reserve(n);
  for (std::size_t i = n; i-- > 0;) v += ((bits >> i) & 1) ? Letter::b : Letter::a;
  return v;
}

template <class Visit>
void psi_tree(const Word& v, const Word& psi_v, std::size_t remaining, Visit& visit) {
  if (remaining == 0) {
    visit(v, psi_v);
    return;
  }
  for (Letter x : {Letter::a, Letter::b}) {
    psi_tree(v + x, palindromic_closure(psi_v + x), remaining - 1, visit);
  }
}

void check_order_bound(std::size_t n, Mode mode, const OracleBounds& bounds) {
  const std::size_t limit =
      mode == Mode::materialized ? bounds.materialized : bounds.arithmetic;
  if (n > limit) {
    throw BoundExceeded("order " + std::to_string(n) + " exceeds the " +
                        to_string(mode) + " bound " + std::to_string(limit));
  }
}

// Maximum of a statistic over directive words of length n, optionally only
// those starting with a. Work is split by fixed directive prefixes.
MaxAccumulator enumerate_directives(std::size_t n, Mode mode, Statistic stat,
                                    bool starts_with_a) {
  const std::size_t depth = std::min<std::size_t>(n, 4);
  std::vector<Word> prefixes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << depth); ++bits) {
    Word p = word_from_bits(bits, depth);
    if (starts_with_a && !p.empty() && p.front() != Letter::a) continue;
    prefixes.push_back(std::move(p));
  }
  if (starts_with_a && n > 0 && prefixes.empty()) return {};

  return parallel_max(prefixes.size(), [&](std::size_t i, MaxAccumulator& acc) {
    const Word& prefix = prefixes[i];
    const std::size_t rest = n - prefix.size();
    if (mode == Mode::materialized) {
      auto visit = [&](const Word& v, const Word& psi_v) {
        acc.offer(measure_word(psi_v, stat), v.str());
      };
      psi_tree(prefix, psi(prefix), rest, visit);
    } else {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << rest); ++bits) {
        const Word v = prefix + word_from_bits(bits, rest);
        acc.offer(measure_directive(v, stat), v.str());
      }
    }
  });
}

ExtremalReport make_report(std::size_t n, MaxAccumulator acc, BigNat expected_max,
                           std::set<std::string> expected_argmax) {
  ExtremalReport r;
  r.order = n;
  r.maximum = acc.max();
  r.argmax = std::move(acc.argmax());
  r.expected_max = std::move(expected_max);
  r.expected_argmax = std::move(expected_argmax);
  r.passed = r.maximum == r.expected_max && r.argmax == r.expected_argmax;
  return r;
}

long as_index(std::size_t n) { return static_cast<long>(n); }

}  // namespace

ExtremalReport verify_max_length(std::size_t n, Mode mode, const OracleBounds& bounds) {
  check_order_bound(n, mode, bounds);
  const Word fib = fibonacci_directive_prefix(n);
  return make_report(n, enumerate_directives(n, mode, Statistic::length, false),
                     fibonacci(as_index(n) + 1) - 2,
                     {fib.str(), exchange_E(fib).str()});
}

ExtremalReport verify_max_period(std::size_t n, Mode mode, const OracleBounds& bounds) {
  if (n < 1) throw DomainError("verify_max_period needs order n >= 1");
  check_order_bound(n, mode, bounds);
  const Word fib = fibonacci_directive_prefix(n);
  const Word swapped = op_c(fib);
  return make_report(n, enumerate_directives(n, mode, Statistic::period, false),
                     fibonacci(as_index(n) - 1),
                     {fib.str(), exchange_E(fib).str(), swapped.str(),
                      exchange_E(swapped).str()});
}

ExtremalReport verify_max_bcount(std::size_t n, Mode mode, const OracleBounds& bounds) {
  if (n < 1) throw DomainError("verify_max_bcount needs order n >= 1");
  check_order_bound(n, mode, bounds);
  const Word fib = fibonacci_directive_prefix(n);
  std::set<std::string> expected;
  for (const Word& v : {fib, exchange_E(op_d(fib))}) {
    if (v.front() == Letter::a) expected.insert(v.str());
  }
  return make_report(n, enumerate_directives(n, mode, Statistic::bcount, true),
                     fibonacci(as_index(n) - 1) - 1, std::move(expected));
}

namespace {

void check_continuant_bound(std::size_t n, const OracleBounds& bounds) {
  if (n > bounds.continuant) {
    throw BoundExceeded("order " + std::to_string(n) +
                        " exceeds the continuant bound " +
                        std::to_string(bounds.continuant));
  }
}

std::vector<std::uint64_t> ones(std::size_t k) { return std::vector<std::uint64_t>(k, 1); }

std::vector<std::uint64_t> cat(std::vector<std::uint64_t> a,
                               const std::vector<std::uint64_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

ExtremalReport verify_continuant_max(std::size_t n, const OracleBounds& bounds) {
  check_continuant_bound(n, bounds);
  MaxAccumulator acc;
  std::vector<std::uint64_t> terms;
  for_each_exponent_list(n, [&](std::span<const std::uint64_t> alphas) {
    terms.assign(alphas.begin(), alphas.end());
    terms.front() += 1;
    terms.back() += 1;
    acc.offer(continuant(terms), format_natural_list(alphas));
  });
  std::set<std::string> expected{format_natural_list(cat({0}, ones(n)))};
  if (n >= 1) expected.insert(format_natural_list(ones(n)));
  return make_report(n, std::move(acc), fibonacci(as_index(n) + 1), std::move(expected));
}

std::vector<std::vector<std::uint64_t>> period_continuant_equality_lists(std::size_t n) {
  std::vector<std::vector<std::uint64_t>> lists;
  lists.push_back(cat({0}, ones(n)));  // alpha_0 = 0, m = n, all ones
  lists.push_back(ones(n));            // alpha_0 = 1, m = n - 1, all ones
  if (n >= 3) {
    // alpha_0 = 0, m = n - 1, ones then (2, 1).
    lists.push_back(cat(cat({0}, ones(n - 3)), {2, 1}));
    // The exchange image of the previous list: drop the leading 0. For n >= 4
    // this is alpha_0 = 1, m = n - 2, ones then (2, 1); for n = 3 it is (2, 1).
    lists.push_back(cat(ones(n - 3), {2, 1}));
  }
  return lists;
}

ExtremalReport verify_period_continuant_max(std::size_t n, const OracleBounds& bounds) {
  if (n < 2) throw DomainError("verify_period_continuant_max needs n >= 2");
  check_continuant_bound(n, bounds);
  MaxAccumulator acc;
  std::vector<std::uint64_t> terms;
  for_each_exponent_list(n, [&](std::span<const std::uint64_t> alphas) {
    terms.assign(alphas.begin(), alphas.end() - 1);
    if (!terms.empty()) terms.front() += 1;
    acc.offer(continuant(terms), format_natural_list(alphas));
  });
  std::set<std::string> expected;
  for (const auto& l : period_continuant_equality_lists(n)) {
    expected.insert(format_natural_list(l));
  }
  return make_report(n, std::move(acc), fibonacci(as_index(n) - 1), std::move(expected));
}

bool all_passed(std::span<const PropertyRow> rows) {
  return std::all_of(rows.begin(), rows.end(),
                     [](const PropertyRow& r) { return r.passed; });
}

std::vector<PropertyRow> fib_lemma_rows(std::size_t n_max) {
  std::vector<PropertyRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const long ln = as_index(n);
    const BigNat bound = fibonacci(ln + 1);
    bool ok = true;
    std::size_t equalities = 0;
    for (long x = 1; x <= ln; ++x) {
      const BigNat lhs = BigNat(static_cast<std::uint64_t>(x)) * fibonacci(ln - x) +
                         fibonacci(ln - x + 1);
      if (lhs > bound) ok = false;
      if (lhs == bound) {
        ++equalities;
        if (x != 1) ok = false;
      }
    }
    ok = ok && equalities == 1;
    rows.push_back({n, ok, {{"bound", bound.to_string()},
                            {"equality_cases", std::to_string(equalities)}}});
  }
  return rows;
}

bool verify_fib_lemma(std::size_t n_max) { return all_passed(fib_lemma_rows(n_max)); }

std::vector<PropertyRow> harmonic_rows(std::size_t order_max) {
  std::vector<PropertyRow> rows;
  PsiStream stream(DirectiveSpec::parse("|ab"));
  for (std::size_t n = 1; n <= order_max; ++n) {
    stream = psi_stream_advance(stream, 1);
    const Word& w = stream.current;
    const BigNat period = minimal_period_from_directive(fibonacci_directive_prefix(n));
    const BigNat modulus = BigNat(w.size()) + 2;
    const BigNat residue = (period * period) % modulus;
    const bool harmonic = residue == 1 || residue + 1 == modulus;
    const bool paths_agree = period == BigNat(minimal_period(w));
    rows.push_back({n, harmonic && paths_agree,
                    {{"length", std::to_string(w.size())},
                     {"period", period.to_string()},
                     {"modulus", modulus.to_string()},
                     {"residue", residue.to_string()}}});
  }
  return rows;
}

bool verify_harmonic_fibonacci(std::size_t order_max) {
  return all_passed(harmonic_rows(order_max));
}

namespace {

// Distinct central words of length <= n_max, grouped by length.
std::vector<std::size_t> central_counts_by_length(std::size_t n_max) {
  std::vector<std::unordered_set<Word>> by_len(n_max + 1);
  // |psi(v)| >= |v| and psi grows strictly, so pruning on length is exact.
  auto walk = [&](auto& self, const Word& psi_v) -> void {
    by_len[psi_v.size()].insert(psi_v);
    for (Letter x : {Letter::a, Letter::b}) {
      Word next = palindromic_closure(psi_v + x);
      if (next.size() <= n_max) self(self, next);
    }
  };
  walk(walk, Word());
  std::vector<std::size_t> counts;
  for (const auto& s : by_len) counts.push_back(s.size());
  return counts;
}

std::size_t central_count_of_order(std::size_t n) {
  std::unordered_set<Word> seen;
  auto visit = [&](const Word&, const Word& psi_v) { seen.insert(psi_v); };
  psi_tree(Word(), Word(), n, visit);
  return seen.size();
}

}  // namespace

std::vector<PropertyRow> central_count_rows(std::size_t n_max, CentralIndex index,
                                            const OracleBounds& bounds) {
  if (n_max > bounds.central_count) {
    throw BoundExceeded("central-count order " + std::to_string(n_max) +
                        " exceeds the bound " + std::to_string(bounds.central_count));
  }
  const auto by_length = central_counts_by_length(n_max);
  std::vector<PropertyRow> rows;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const std::size_t by_order = central_count_of_order(n);
    const BigNat expected = count_central(n);
    const std::size_t observed = index == CentralIndex::order ? by_order : by_length[n];
    rows.push_back({n, BigNat(observed) == expected,
                    {{"indexed_by", index == CentralIndex::order ? "order" : "length"},
                     {"distinct_by_order", std::to_string(by_order)},
                     {"distinct_by_length", std::to_string(by_length[n])},
                     {"expected", expected.to_string()}}});
  }
  return rows;
}

bool verify_central_count(std::size_t n_max, CentralIndex index,
                          const OracleBounds& bounds) {
  return all_passed(central_count_rows(n_max, index, bounds));
}

std::vector<PropertyRow> stream_rows(std::size_t order_max, const OracleBounds& bounds) {
  check_order_bound(order_max, Mode::arithmetic, bounds);
  const DirectiveSpec f_spec = DirectiveSpec::parse("|ab");
  const DirectiveSpec ef_spec = DirectiveSpec::parse("|ba");
  const DirectiveSpec g_spec = DirectiveSpec::parse("abb|ab");
  PsiStream f(f_spec), ef(ef_spec), g(g_spec);
  std::vector<PropertyRow> rows;
  for (std::size_t n = 0; n <= order_max; ++n) {
    if (n > 0) {
      f = psi_stream_advance(f, 1);
      ef = psi_stream_advance(ef, 1);
      g = psi_stream_advance(g, 1);
    }
    const std::string fv = f_spec.prefix(n).str();
    const std::string efv = ef_spec.prefix(n).str();
    const std::string gv = g_spec.prefix(n).str();
    PropertyRow row{n, true, {}};
    auto check = [&](const char* name, const BigNat& value, const std::string& directive,
                     const ExtremalReport& report) {
      const bool ok = report.passed && value == report.maximum &&
                      report.argmax.count(directive) == 1;
      row.passed = row.passed && ok;
      row.fields.emplace_back(name, value.to_string() + (ok ? "" : " (not maximal)"));
    };
    const auto len = verify_max_length(n, Mode::arithmetic, bounds);
    check("f_length", f.current.size(), fv, len);
    check("Ef_length", ef.current.size(), efv, len);
    if (n >= 1) {
      const auto per = verify_max_period(n, Mode::arithmetic, bounds);
      check("f_period", minimal_period(f.current), fv, per);
      check("Ef_period", minimal_period(ef.current), efv, per);
      const auto bc = verify_max_bcount(n, Mode::arithmetic, bounds);
      check("f_bcount", count_letter(f.current, Letter::b), fv, bc);
      check("g_bcount", count_letter(g.current, Letter::b), gv, bc);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool verify_characteristic_extremal_streams(std::size_t order_max,
                                            const OracleBounds& bounds) {
  return all_passed(stream_rows(order_max, bounds));
}

std::size_t dual_path_mismatches_exhaustive(std::size_t max_len) {
  std::size_t mismatches = 0;
  for (std::size_t n = 0; n <= max_len; ++n) {
    auto visit = [&](const Word& v, const Word& psi_v) {
      const DirectiveStats m{psi_v.size(), minimal_period(psi_v),
                             count_letter(psi_v, Letter::b),
                             slope_eta(Letter::a + psi_v + Letter::b)};
      if (!(m == stats_arithmetic(v))) ++mismatches;
    };
    psi_tree(Word(), Word(), n, visit);
  }
  return mismatches;
}

std::size_t dual_path_mismatches_random(std::size_t samples, std::size_t min_len,
                                        std::size_t max_len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len_dist(min_len, max_len);
  std::bernoulli_distribution coin(0.5);
  std::size_t mismatches = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t n = len_dist(rng);
    Word v;
    for (std::size_t i = 0; i < n; ++i) v += coin(rng) ? Letter::b : Letter::a;
    if (!(stats_materialized(v) == stats_arithmetic(v))) ++mismatches;
  }
  return mismatches;
}

}  // namespace sturmian
