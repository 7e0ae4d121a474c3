#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturmian/arithmetic.hpp"
#include "sturmian/error.hpp"
#include "sturmian/extremal.hpp"
#include "sturmian/families.hpp"
#include "sturmian/palindromization.hpp"
#include "sturmian/word.hpp"

namespace sturmian::cli {

namespace {

constexpr std::size_t kElideAfter = 120;

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string json_list(const std::set<std::string>& items) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : items) arr.push_back(s);
  return arr.dump();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string tsv_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\t') out += "\\t";
    else if (c == '\n') out += "\\n";
    else out += c;
  }
  return out;
}

struct Settings {
  Format format = Format::json;
  bool full = false;
  OracleBounds bounds;
};

std::string show_word(const Word& w, const Settings& s) {
  if (s.full || w.size() <= kElideAfter) return w.str();
  return w.str().substr(0, kElideAfter) + "...";
}

OutputRecord error_record(const std::string& command, Fields inputs, const Error& e) {
  OutputRecord r;
  r.command = command;
  r.inputs = std::move(inputs);
  r.result = {{"message", e.what()}};
  r.ok = false;
  r.error_kind = e.kind();
  return r;
}

// ---- subcommands ------------------------------------------------------------

OutputRecord cmd_psi(const std::string& directive, const Settings& s) {
  const Word v = Word::parse(directive);
  const Word w = psi(v);
  return {"psi",
          {{"directive", directive}},
          {{"word", show_word(w, s)},
           {"length", std::to_string(w.size())},
           {"minimal_period", std::to_string(minimal_period(w))},
           {"b_count", std::to_string(count_letter(w, Letter::b))},
           {"integral", to_integral(v).to_string()}},
          true,
          std::nullopt};
}

OutputRecord cmd_stream(const std::string& spec_text, std::size_t prefix_len,
                        const Settings& s) {
  const DirectiveSpec spec = DirectiveSpec::parse(spec_text);
  const Word prefix = psi_stream_prefix(spec, prefix_len);
  OutputRecord r{"stream",
                 {{"spec", spec_text}, {"prefix_len", std::to_string(prefix_len)}},
                 {{"prefix", show_word(prefix, s)},
                  {"length", std::to_string(prefix.size())},
                  {"characteristic", bool_str(spec.is_characteristic())}},
                 true,
                 std::nullopt};
  if (!spec.is_characteristic()) {
    r.result.emplace_back(
        "note",
        "period lacks a letter: psi of this directive word is not a "
        "characteristic Sturmian word (both letters must occur infinitely often)");
  }
  return r;
}

OutputRecord cmd_christoffel(std::uint64_t p, std::uint64_t q, bool factor,
                             const Settings& s) {
  const Word w = christoffel(p, q);
  OutputRecord r{"christoffel",
                 {{"p", std::to_string(p)},
                  {"q", std::to_string(q)},
                  {"factor", bool_str(factor)}},
                 {{"word", show_word(w, s)},
                  {"length", std::to_string(w.size())},
                  {"slope", slope_eta(w).to_string()}},
                 true,
                 std::nullopt};
  if (factor) {
    if (w.size() < 2) {
      r.result.emplace_back("w1", "");
      r.result.emplace_back("w2", "");
      r.result.emplace_back("note", "single letters have no proper factorization");
    } else {
      const auto f = christoffel_factorize(w);
      r.result.emplace_back("w1", show_word(f.w1, s));
      r.result.emplace_back("w2", show_word(f.w2, s));
      r.result.emplace_back("w1_length", std::to_string(f.w1.size()));
      r.result.emplace_back("w2_length", std::to_string(f.w2.size()));
      r.result.emplace_back("inverse_of_b_count", std::to_string(f.p_inv));
      r.result.emplace_back("inverse_of_a_count", std::to_string(f.q_inv));
    }
  }
  return r;
}

OutputRecord cmd_arith(const std::string& sub, const std::string& payload) {
  OutputRecord r{"arith", {{"subcommand", sub}, {"payload", payload}}, {}, true,
                 std::nullopt};
  if (sub == "intrep") {
    if (!payload.empty() && payload.front() == '[') {
      const auto rep = IntegralRepresentation::parse(payload);
      r.result = {{"word", from_integral(rep).str()}, {"integral", rep.to_string()}};
    } else {
      const Word v = Word::parse(payload);
      r.result = {{"word", v.str()}, {"integral", to_integral(v).to_string()}};
    }
  } else if (sub == "continuant") {
    r.result = {{"value", continuant(parse_natural_list(payload)).to_string()}};
  } else if (sub == "cf") {
    const ContinuedFraction cf(parse_natural_list(payload));
    const auto table = convergents(cf);
    r.result = {{"cf", cf.to_string()},
                {"value", cf_eval(cf).to_string()},
                {"P", table.last().P.to_string()}};
  } else if (sub == "slope") {
    const Word v = Word::parse(payload);
    r.result = {{"cf", slope_cf_of_directive(v).to_string()},
                {"value", slope_from_directive(v).to_string()}};
  } else if (sub == "length") {
    const Word v = Word::parse(payload);
    r.result = {{"value", christoffel_length_from_directive(v).to_string()},
                {"psi_length", psi_length_from_directive(v).to_string()}};
  } else if (sub == "period") {
    r.result = {{"value", minimal_period_from_directive(Word::parse(payload)).to_string()}};
  } else {
    throw ParseError("unknown arith subcommand '" + sub + "'");
  }
  return r;
}

enum class VerifyMode { materialized, arithmetic, both };

std::string mode_name(VerifyMode m) {
  switch (m) {
    case VerifyMode::materialized: return "materialized";
    case VerifyMode::arithmetic: return "arithmetic";
    case VerifyMode::both: return "both";
  }
  return "";
}

Fields report_fields(const ExtremalReport& r) {
  return {{"maximum", r.maximum.to_string()},
          {"expected_max", r.expected_max.to_string()},
          {"argmax", json_list(r.argmax)},
          {"expected_argmax", json_list(r.expected_argmax)}};
}

using WordVerifier = ExtremalReport (*)(std::size_t, Mode, const OracleBounds&);

// Records for one of the enumerating word theorems; returns false on failure.
bool verify_word_theorem(const std::string& theorem, WordVerifier verifier,
                         std::size_t first, std::size_t n_max, VerifyMode mode,
                         const Settings& s, RecordWriter& w) {
  bool all_ok = true;
  for (std::size_t n = first; n <= n_max; ++n) {
    OutputRecord rec{"verify",
                     {{"theorem", theorem},
                      {"order", std::to_string(n)},
                      {"mode", mode_name(mode)}},
                     {},
                     true,
                     std::nullopt};
    bool passed = false;
    if (mode == VerifyMode::both) {
      const auto arith = verifier(n, Mode::arithmetic, s.bounds);
      rec.result = report_fields(arith);
      passed = arith.passed;
      if (n <= s.bounds.materialized) {
        const auto mat = verifier(n, Mode::materialized, s.bounds);
        const bool agree = mat.maximum == arith.maximum && mat.argmax == arith.argmax;
        rec.result.emplace_back("paths", "materialized+arithmetic");
        rec.result.emplace_back("paths_agree", bool_str(agree));
        passed = passed && mat.passed && agree;
      } else {
        rec.result.emplace_back("paths", "arithmetic");
        rec.result.emplace_back("paths_agree", "n/a");
      }
    } else {
      const Mode m = mode == VerifyMode::materialized ? Mode::materialized : Mode::arithmetic;
      const auto rep = verifier(n, m, s.bounds);
      rec.result = report_fields(rep);
      rec.result.emplace_back("paths", to_string(m));
      rec.result.emplace_back("paths_agree", "n/a");
      passed = rep.passed;
    }
    rec.result.emplace_back("passed", bool_str(passed));
    all_ok = all_ok && passed;
    w.write(rec);
  }
  return all_ok;
}

bool write_property_rows(const std::string& theorem, const std::vector<PropertyRow>& rows,
                         RecordWriter& w) {
  for (const auto& row : rows) {
    OutputRecord rec{"verify",
                     {{"theorem", theorem}, {"order", std::to_string(row.order)}},
                     row.fields,
                     true,
                     std::nullopt};
    rec.result.emplace_back("passed", bool_str(row.passed));
    w.write(rec);
  }
  return all_passed(rows);
}

bool cmd_verify(const std::string& theorem, std::size_t n_max, VerifyMode mode,
                CentralIndex index, const Settings& s, RecordWriter& w) {
  if (mode == VerifyMode::materialized && n_max > s.bounds.materialized &&
      (theorem == "max-length" || theorem == "max-period" || theorem == "max-bcount")) {
    throw BoundExceeded("order " + std::to_string(n_max) +
                        " exceeds the materialized bound " +
                        std::to_string(s.bounds.materialized));
  }
  if (theorem == "max-length") {
    if (n_max > s.bounds.arithmetic) {
      throw BoundExceeded("order " + std::to_string(n_max) + " exceeds the arithmetic bound");
    }
    return verify_word_theorem(theorem, &verify_max_length, 0, n_max, mode, s, w);
  }
  if (theorem == "max-period" || theorem == "max-bcount") {
    if (n_max > s.bounds.arithmetic) {
      throw BoundExceeded("order " + std::to_string(n_max) + " exceeds the arithmetic bound");
    }
    return verify_word_theorem(
        theorem, theorem == "max-period" ? &verify_max_period : &verify_max_bcount, 1,
        n_max, mode, s, w);
  }
  if (theorem == "continuant-max" || theorem == "period-continuant-max") {
    if (n_max > s.bounds.continuant) {
      throw BoundExceeded("order " + std::to_string(n_max) + " exceeds the continuant bound");
    }
    const bool period = theorem == "period-continuant-max";
    bool all_ok = true;
    for (std::size_t n = period ? 2 : 0; n <= n_max; ++n) {
      const auto rep = period ? verify_period_continuant_max(n, s.bounds)
                              : verify_continuant_max(n, s.bounds);
      OutputRecord rec{"verify",
                       {{"theorem", theorem}, {"order", std::to_string(n)}},
                       report_fields(rep),
                       true,
                       std::nullopt};
      rec.result.emplace_back("passed", bool_str(rep.passed));
      all_ok = all_ok && rep.passed;
      w.write(rec);
    }
    return all_ok;
  }
  if (theorem == "fib-lemma") return write_property_rows(theorem, fib_lemma_rows(n_max), w);
  if (theorem == "harmonic") return write_property_rows(theorem, harmonic_rows(n_max), w);
  if (theorem == "central-count") {
    return write_property_rows(theorem, central_count_rows(n_max, index, s.bounds), w);
  }
  if (theorem == "streams") return write_property_rows(theorem, stream_rows(n_max, s.bounds), w);
  throw ParseError("unknown theorem '" + theorem + "'");
}

OutputRecord cmd_selfcheck(std::uint64_t seed, std::size_t samples, std::size_t min_len,
                           std::size_t max_len, bool& passed) {
  if (min_len > max_len) throw DomainError("--min-len must not exceed --max-len");
  const std::size_t dual = dual_path_mismatches_random(samples, min_len, max_len, seed);

  // Fine and Wilf on random words with planted periods.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> period_dist(1, 12);
  std::bernoulli_distribution coin(0.5);
  std::size_t fine_wilf_cases = 0;
  std::size_t fine_wilf_violations = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t p = period_dist(rng);
    const std::size_t q = period_dist(rng);
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, p + q + 4)(rng);
    Word block;
    for (std::size_t k = 0; k < p; ++k) block += coin(rng) ? Letter::b : Letter::a;
    Word w;
    for (std::size_t k = 0; k < len; ++k) w += block[k % p];
    if (!has_period(w, q)) continue;
    ++fine_wilf_cases;
    if (fine_wilf_collapse(w, p, q) && !has_period(w, std::gcd(p, q))) {
      ++fine_wilf_violations;
    }
  }
  passed = dual == 0 && fine_wilf_violations == 0;
  return {"selfcheck",
          {{"seed", std::to_string(seed)},
           {"samples", std::to_string(samples)},
           {"min_len", std::to_string(min_len)},
           {"max_len", std::to_string(max_len)}},
          {{"dual_path_mismatches", std::to_string(dual)},
           {"fine_wilf_cases", std::to_string(fine_wilf_cases)},
           {"fine_wilf_violations", std::to_string(fine_wilf_violations)},
           {"passed", bool_str(passed)}},
          true,
          std::nullopt};
}

}  // namespace

std::string to_json_line(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.inputs) j["inputs"][k] = v;
  j["result"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.result) j["result"][k] = v;
  j["status"] = r.ok ? "ok" : "error";
  j["error_kind"] = r.error_kind ? nlohmann::ordered_json(*r.error_kind) : nullptr;
  return j.dump();
}

void RecordWriter::write(const OutputRecord& r) {
  if (format_ == Format::json) {
    out_ << to_json_line(r) << '\n';
    return;
  }
  std::vector<std::string> header{"command", "status", "error_kind"};
  for (const auto& kv : r.inputs) header.push_back("inputs." + kv.first);
  for (const auto& kv : r.result) header.push_back("result." + kv.first);
  if (header != header_) {
    for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "\t" : "") << header[i];
    out_ << '\n';
    header_ = std::move(header);
  }
  out_ << r.command << '\t' << (r.ok ? "ok" : "error") << '\t'
       << (r.error_kind ? *r.error_kind : "");
  for (const auto& kv : r.inputs) out_ << '\t' << tsv_escape(kv.second);
  for (const auto& kv : r.result) out_ << '\t' << tsv_escape(kv.second);
  out_ << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Palindromization, Christoffel words and continuants on {a,b}"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  std::string format = "json";
  std::optional<std::size_t> max_word_len;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--max-word-len", max_word_len,
                 "Materialization cap in letters (overrides STURMIAN_MAX_WORD_LEN)");
  app.add_flag("--full", settings.full, "Do not elide words longer than 120 letters");

  std::string directive;
  auto* psi_cmd = app.add_subcommand("psi", "psi of a directive word");
  psi_cmd->add_option("directive", directive, "Word over {a,b} (may be empty)")->required();

  std::string spec;
  std::size_t prefix_len = 0;
  auto* stream_cmd = app.add_subcommand("stream", "Prefix of psi of preperiod|period");
  stream_cmd->add_option("spec", spec, "Directive spec 'preperiod|period'")->required();
  stream_cmd->add_option("prefix_len", prefix_len, "Letters to emit")->required();

  std::uint64_t p = 0;
  std::uint64_t q = 0;
  bool factor = false;
  auto* ch_cmd = app.add_subcommand("christoffel", "Christoffel word with p b's and q a's");
  ch_cmd->add_option("p", p, "Number of b's")->required();
  ch_cmd->add_option("q", q, "Number of a's")->required();
  ch_cmd->add_flag("--factor,--with-factorization", factor,
                   "Also emit the Lyndon factorization");

  std::string theorem;
  std::size_t n_max = 0;
  std::string mode = "both";
  std::string index = "order";
  auto* verify_cmd = app.add_subcommand("verify", "Per-order extremal verification");
  verify_cmd->add_option("theorem", theorem, "Property to verify")
      ->required()
      ->check(CLI::IsMember({"max-length", "max-period", "max-bcount", "continuant-max",
                             "period-continuant-max", "fib-lemma", "harmonic",
                             "central-count", "streams"}));
  verify_cmd->add_option("n_max", n_max, "Largest order")->required();
  verify_cmd->add_option("--mode", mode, "Statistic evaluation path")
      ->check(CLI::IsMember({"materialized", "arithmetic", "both"}));
  verify_cmd->add_option("--index", index, "central-count grouping")
      ->check(CLI::IsMember({"order", "length"}));
  verify_cmd->add_option("--max-order-materialized", settings.bounds.materialized);
  verify_cmd->add_option("--max-order-arithmetic", settings.bounds.arithmetic);
  verify_cmd->add_option("--max-order-continuant", settings.bounds.continuant);

  std::string arith_sub;
  std::string payload;
  auto* arith_cmd = app.add_subcommand("arith", "Integral representations and continuants");
  arith_cmd->add_option("subcommand", arith_sub)
      ->required()
      ->check(CLI::IsMember({"intrep", "continuant", "cf", "slope", "length", "period"}));
  arith_cmd->add_option("payload", payload, "Word or bracketed list")->required();

  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  std::size_t min_len = 13;
  std::size_t max_len = 18;
  auto* self_cmd = app.add_subcommand("selfcheck", "Randomized dual-path and Fine-Wilf checks");
  self_cmd->add_option("--seed", seed);
  self_cmd->add_option("--samples", samples);
  self_cmd->add_option("--min-len", min_len);
  self_cmd->add_option("--max-len", max_len);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  settings.format = format == "tsv" ? Format::tsv : Format::json;
  set_max_word_length(kDefaultMaxWordLength);
  if (const char* env = std::getenv("STURMIAN_MAX_WORD_LEN"); env && *env) {
    try {
      set_max_word_length(BigNat::parse(env).to_u64());
    } catch (const Error& e) {
      err << "ignoring STURMIAN_MAX_WORD_LEN: " << e.what() << '\n';
    }
  }
  if (max_word_len) set_max_word_length(*max_word_len);

  RecordWriter writer(out, settings.format);
  std::string command;
  Fields inputs;
  try {
    if (psi_cmd->parsed()) {
      command = "psi";
      inputs = {{"directive", directive}};
      writer.write(cmd_psi(directive, settings));
    } else if (stream_cmd->parsed()) {
      command = "stream";
      inputs = {{"spec", spec}, {"prefix_len", std::to_string(prefix_len)}};
      writer.write(cmd_stream(spec, prefix_len, settings));
    } else if (ch_cmd->parsed()) {
      command = "christoffel";
      inputs = {{"p", std::to_string(p)}, {"q", std::to_string(q)}};
      writer.write(cmd_christoffel(p, q, factor, settings));
    } else if (verify_cmd->parsed()) {
      command = "verify";
      inputs = {{"theorem", theorem}, {"n_max", std::to_string(n_max)}, {"mode", mode}};
      const VerifyMode vm = mode == "materialized" ? VerifyMode::materialized
                            : mode == "arithmetic" ? VerifyMode::arithmetic
                                                   : VerifyMode::both;
      const CentralIndex ci = index == "length" ? CentralIndex::length : CentralIndex::order;
      if (!cmd_verify(theorem, n_max, vm, ci, settings, writer)) {
        return kExitVerificationFailed;
      }
    } else if (arith_cmd->parsed()) {
      command = "arith";
      inputs = {{"subcommand", arith_sub}, {"payload", payload}};
      writer.write(cmd_arith(arith_sub, payload));
    } else if (self_cmd->parsed()) {
      command = "selfcheck";
      bool passed = false;
      writer.write(cmd_selfcheck(seed, samples, min_len, max_len, passed));
      if (!passed) return kExitVerificationFailed;
    }
  } catch (const Error& e) {
    writer.write(error_record(command, inputs, e));
    err << command << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace sturmian::cli
