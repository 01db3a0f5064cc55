#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nedlib/compose.hpp"
#include "nedlib/json_io.hpp"
#include "nedlib/metrics.hpp"
#include "nedlib/oracle.hpp"
#include "nedlib/propcheck.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitLimits = 2;
constexpr int kExitUndefinedComposition = 3;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

using nedlib::DistanceResult;
using nedlib::Metric;
using nedlib::Rational;
using nedlib::Word;

struct DistOptions {
  std::string metric;
  std::string a, b;
  bool have_words = false;
  bool witness = false;
  bool json = false;
  bool csv = false;
  std::string file;
  int max_ced_len = 0;  // 0: default or NEDLIB_MAX_CED_LEN
  bool allow_pad_glyph = false;
};

struct ComposeOptions {
  std::string p12, p23, s1;
  bool bare = false;
  std::string s2, s3;
  bool json = false;
};

struct CheckOptions {
  std::string property = "all";
  std::uint64_t seed = 0;
  long trials = 10'000;
  int alphabet = 3;
  int max_len = 10;
  bool json = false;
  bool oracle = false;
};

std::size_t resolve_ced_cap(int flag_value) {
  if (flag_value > 0) return static_cast<std::size_t>(flag_value);
  if (const char* env = std::getenv("NEDLIB_MAX_CED_LEN")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return 12;
}

bool validate_word(const Word& w, bool allow_pad_glyph) {
  if (allow_pad_glyph) return true;
  return w.find(nedlib::kPadGlyph) == Word::npos;
}

DistanceResult compute(Metric metric, const Word& a, const Word& b, bool witness,
                       std::size_t ced_cap) {
  switch (metric) {
    case Metric::ed:
      return nedlib::ed(a, b, witness);
    case Metric::ned:
      return nedlib::ned(a, b, witness);
    case Metric::ged:
      return nedlib::ged(a, b);
    case Metric::ced: {
      nedlib::CedSearchConfig cfg;
      cfg.max_word_len = ced_cap;
      return nedlib::ced(a, b, cfg);
    }
    case Metric::ced_prime: {
      nedlib::CedSearchConfig cfg;
      cfg.max_word_len = ced_cap;
      return nedlib::ced_prime(a, b, cfg);
    }
  }
  throw std::logic_error("unreachable metric");
}

void print_human_result(const DistanceResult& result, const Word& a) {
  std::cout << result.value.str() << " (" << nedlib::decimal_string(result.value) << ")\n";
  if (result.witness) {
    std::cout << "path: " << to_text(*result.witness) << "\n";
    std::cout << "bare: " << to_bare_text(*result.witness) << "\n";
    nedlib::Alignment rows = nedlib::render_alignment(*result.witness, a);
    std::cout << "align: " << rows.source << "\n";
    std::cout << "       " << rows.target << "\n";
  }
  if (!result.chain.empty() && result.chain.size() > 1) {
    std::cout << "chain:";
    for (const auto& step : result.chain) std::cout << " \"" << step << "\"";
    std::cout << "\n";
  }
}

int run_dist(const DistOptions& opts) {
  auto metric = nedlib::metric_from_name(opts.metric);
  if (!metric) {
    std::cerr << "unknown metric '" << opts.metric << "'\n";
    return kExitUsage;
  }
  const std::size_t ced_cap = resolve_ced_cap(opts.max_ced_len);

  if (!opts.file.empty()) {
    std::ifstream in(opts.file);
    if (!in) {
      std::cerr << "cannot open " << opts.file << "\n";
      return kExitUsage;
    }
    std::vector<std::pair<Word, Word>> pairs;
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const std::size_t tab = line.find('\t');
      if (tab == std::string::npos) {
        std::cerr << "batch line without a tab separator: '" << line << "'\n";
        return kExitUsage;
      }
      pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
    for (const auto& [a, b] : pairs)
      if (!validate_word(a, opts.allow_pad_glyph) || !validate_word(b, opts.allow_pad_glyph)) {
        std::cerr << "input word contains the reserved pad glyph '_'\n";
        return kExitUsage;
      }
    std::vector<DistanceResult> results;
    results.reserve(pairs.size());
    for (const auto& [a, b] : pairs) results.push_back(compute(*metric, a, b, false, ced_cap));
    if (opts.json) {
      nedlib::Json json;
      json["results"] = nedlib::Json::array();
      for (std::size_t i = 0; i < results.size(); ++i) {
        nedlib::Json entry = nedlib::result_to_json(results[i]);
        entry["a"] = pairs[i].first;
        entry["b"] = pairs[i].second;
        json["results"].push_back(std::move(entry));
      }
      std::cout << json.dump() << "\n";
    } else {
      std::cout << nedlib::csv_header() << "\n";
      for (std::size_t i = 0; i < results.size(); ++i)
        std::cout << nedlib::csv_row(results[i], pairs[i].first, pairs[i].second) << "\n";
    }
    return kExitOk;
  }

  if (!opts.have_words) {
    std::cerr << "expected two words (or --file)\n";
    return kExitUsage;
  }
  if (!validate_word(opts.a, opts.allow_pad_glyph) ||
      !validate_word(opts.b, opts.allow_pad_glyph)) {
    std::cerr << "input word contains the reserved pad glyph '_'\n";
    return kExitUsage;
  }

  DistanceResult result = compute(*metric, opts.a, opts.b, opts.witness, ced_cap);
  if (opts.json) {
    std::cout << nedlib::result_to_json(result).dump() << "\n";
  } else if (opts.csv) {
    std::cout << nedlib::csv_header() << "\n"
              << nedlib::csv_row(result, opts.a, opts.b) << "\n";
  } else {
    print_human_result(result, opts.a);
  }
  return kExitOk;
}

int run_align(const std::string& path_text, const Word& word) {
  nedlib::EditPath path = nedlib::parse_path(path_text);
  nedlib::Alignment rows = nedlib::render_alignment(path, word);
  std::cout << rows.source << "\n" << rows.target << "\n";
  return kExitOk;
}

int run_compose(const ComposeOptions& opts) {
  nedlib::EditPath p12, p23;
  if (opts.bare) {
    p12 = nedlib::infer_subscripts(opts.p12, opts.s1, opts.s2);
    p23 = nedlib::infer_subscripts(opts.p23, opts.s2, opts.s3);
  } else {
    p12 = nedlib::parse_path(opts.p12);
    p23 = nedlib::parse_path(opts.p23);
  }

  nedlib::ApplyResult r12 = nedlib::apply(p12, opts.s1);
  if (!r12.valid) {
    std::cerr << "p12 does not apply to s1 (position " << r12.error.position << ")\n";
    return kExitUndefinedComposition;
  }
  nedlib::ApplyResult r23 = nedlib::apply(p23, r12.output);
  if (!r23.valid) {
    std::cerr << "p23 does not apply to apply(p12, s1) (position " << r23.error.position
              << ")\n";
    return kExitUndefinedComposition;
  }

  nedlib::ComposeOutcome outcome = nedlib::compose(p12, p23);
  if (!outcome.defined) {
    std::cerr << "composition undefined at positions (" << outcome.failed_at.pos12 << ", "
              << outcome.failed_at.pos23 << ")\n";
    return kExitUndefinedComposition;
  }

  const long long w12 = nedlib::wgt(p12), l12 = nedlib::len(p12);
  const long long w23 = nedlib::wgt(p23), l23 = nedlib::len(p23);
  const bool apply_ok = nedlib::is_path_from(outcome.projected, opts.s1, r23.output);
  const bool weight_ok = outcome.wgt_raw <= w12 + w23;
  const bool length_ok = outcome.len_raw >= std::max(l12, l23);

  if (opts.json) {
    nedlib::Json json;
    json["raw"] = to_text(outcome.raw);
    json["projected"] = to_text(outcome.projected);
    json["wgt_p12"] = w12;
    json["len_p12"] = l12;
    json["wgt_p23"] = w23;
    json["len_p23"] = l23;
    json["wgt_p13"] = outcome.wgt_raw;
    json["len_p13"] = outcome.len_raw;
    json["wgt_projected"] = outcome.wgt_proj;
    json["len_projected"] = outcome.len_proj;
    json["blanks"] = outcome.blanks;
    json["apply_matches"] = apply_ok;
    json["weight_bound"] = weight_ok;
    json["length_bound"] = length_ok;
    std::cout << json.dump() << "\n";
  } else {
    std::cout << "raw:       " << to_text(outcome.raw) << "\n";
    std::cout << "projected: " << to_text(outcome.projected) << "\n";
    std::cout << "raw bare:  " << to_bare_text(outcome.raw) << "\n";
    std::cout << "proj bare: " << to_bare_text(outcome.projected) << "\n";
    std::cout << "wgt(p12)=" << w12 << " len(p12)=" << l12 << " wgt(p23)=" << w23
              << " len(p23)=" << l23 << " wgt(p13)=" << outcome.wgt_raw
              << " len(p13)=" << outcome.len_raw << "\n";
    std::cout << "wgt(proj)=" << outcome.wgt_proj << " len(proj)=" << outcome.len_proj
              << " blanks=" << outcome.blanks << "\n";
    std::cout << "apply(h(p13), s1) == s3: " << (apply_ok ? "yes" : "no") << "\n";
    std::cout << "wgt(p13) <= wgt(p12)+wgt(p23): " << (weight_ok ? "yes" : "no") << "\n";
    std::cout << "len(p13) >= max(len(p12),len(p23)): " << (length_ok ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

// Exhaustive cross-validation of the optimized metrics against the
// brute-force references, over all short binary words.
int run_oracle_sweeps(const CheckOptions& opts) {
  nedlib::EnumBudget ned_budget;
  ned_budget.alphabet = "ab";
  ned_budget.max_len = std::min(opts.max_len, 5);
  long ned_pairs = 0, ned_mismatches = 0;
  for (const Word& a : nedlib::enumerate_words(ned_budget))
    for (const Word& b : nedlib::enumerate_words(ned_budget)) {
      ++ned_pairs;
      if (nedlib::ned(a, b).value != nedlib::brute_force_ned(a, b)) ++ned_mismatches;
    }
  std::cout << (ned_mismatches == 0 ? "[PASS] " : "[FAIL] ") << "ned-oracle  exhaustive pairs="
            << ned_pairs << " mismatches=" << ned_mismatches << "\n";

  nedlib::EnumBudget ced_budget;
  ced_budget.alphabet = "ab";
  ced_budget.max_len = std::min(opts.max_len, 4);
  long ced_pairs = 0, ced_mismatches = 0;
  for (const Word& a : nedlib::enumerate_words(ced_budget))
    for (const Word& b : nedlib::enumerate_words(ced_budget)) {
      ++ced_pairs;
      if (nedlib::ced(a, b).value !=
          nedlib::brute_force_ced(a, b, nedlib::relaxed_ced_space(a, b)))
        ++ced_mismatches;
    }
  std::cout << (ced_mismatches == 0 ? "[PASS] " : "[FAIL] ") << "ced-oracle  exhaustive pairs="
            << ced_pairs << " mismatches=" << ced_mismatches << "\n";

  return ned_mismatches == 0 && ced_mismatches == 0 ? kExitOk : kExitPropertyFailure;
}

int run_check(const CheckOptions& opts) {
  if (opts.oracle) return run_oracle_sweeps(opts);
  nedlib::FuzzConfig cfg;
  cfg.seed = opts.seed;
  cfg.trials = opts.trials;
  cfg.alphabet_size = opts.alphabet;
  cfg.max_word_len = opts.max_len;

  std::vector<std::string> ids;
  if (opts.property == "all") {
    ids = nedlib::property_ids();
  } else {
    const auto& known = nedlib::property_ids();
    if (std::find(known.begin(), known.end(), opts.property) == known.end()) {
      std::cerr << "unknown property '" << opts.property << "'; known:";
      for (const auto& id : known) std::cerr << " " << id;
      std::cerr << "\n";
      return kExitUsage;
    }
    ids.push_back(opts.property);
  }

  std::vector<nedlib::PropertyReport> reports = nedlib::run_properties(ids, cfg);
  bool all_pass = true;
  for (const auto& report : reports) all_pass = all_pass && report.pass;

  if (opts.json) {
    std::cout << nedlib::reports_to_json(reports, cfg.seed).dump() << "\n";
  } else {
    for (const auto& report : reports) {
      std::cout << (report.pass ? "[PASS] " : "[FAIL] ") << report.property_id << "  "
                << (report.exhaustive ? "exhaustive" : "fuzz") << " seed=" << report.seed
                << " trials=" << report.trials_run << " (" << report.elapsed_ms << " ms)\n";
      for (const auto& note : report.notes) std::cout << "       " << note << "\n";
      if (report.counterexample) {
        std::cout << "       counterexample:";
        for (const auto& w : report.counterexample->words) std::cout << " \"" << w << "\"";
        std::cout << "\n       detail: " << report.counterexample->detail << "\n";
      }
    }
    std::cout << (all_pass ? "all properties passed" : "some properties FAILED") << "\n";
  }
  return all_pass ? kExitOk : kExitPropertyFailure;
}

int run_bench(long reps) {
  struct SplitMix {
    std::uint64_t s;
    std::uint64_t next() {
      s += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = s;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    }
  };
  SplitMix rng{12345};
  auto random_word = [&](std::size_t length) {
    Word w(length, 'a');
    for (auto& c : w) c = static_cast<char>('a' + rng.next() % 3);
    return w;
  };
  auto time_ms = [](auto&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };

  std::cout << "metric,size,reps,total_ms\n";
  for (std::size_t size : {8, 16, 32, 64}) {
    Word a = random_word(size), b = random_word(size);
    std::cout << "ed," << size << "," << reps << ","
              << time_ms([&] {
                   for (long i = 0; i < reps; ++i) nedlib::ed(a, b, false);
                 })
              << "\n";
    std::cout << "ned," << size << "," << reps << ","
              << time_ms([&] {
                   for (long i = 0; i < reps; ++i) nedlib::ned(a, b);
                 })
              << "\n";
    std::cout << "ged," << size << "," << reps << ","
              << time_ms([&] {
                   for (long i = 0; i < reps; ++i) nedlib::ged(a, b);
                 })
              << "\n";
  }
  for (std::size_t size : {4, 6}) {
    Word a = random_word(size), b = random_word(size);
    std::cout << "ced," << size << "," << reps << ","
              << time_ms([&] {
                   for (long i = 0; i < reps; ++i) nedlib::ced(a, b);
                 })
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact normalized edit distance toolkit"};
  app.require_subcommand(1);

  DistOptions dist_opts;
  CLI::App* dist_cmd = app.add_subcommand("dist", "Compute a distance between two words");
  dist_cmd->add_option("metric", dist_opts.metric, "ed | ned | ged | ced | cedp")->required();
  auto* dist_a = dist_cmd->add_option("a", dist_opts.a, "first word (may be empty: \"\")");
  auto* dist_b = dist_cmd->add_option("b", dist_opts.b, "second word");
  dist_cmd->add_flag("--witness", dist_opts.witness, "also print the optimal path / chain");
  dist_cmd->add_flag("--json", dist_opts.json, "JSON output");
  dist_cmd->add_flag("--csv", dist_opts.csv, "CSV output");
  dist_cmd->add_option("--file", dist_opts.file, "batch mode: tab-separated word pairs");
  dist_cmd->add_option("--max-ced-len", dist_opts.max_ced_len,
                       "cap for the exact contextual search (default 12)");
  dist_cmd->add_flag("--allow-pad-glyph", dist_opts.allow_pad_glyph,
                     "accept '_' inside input words");

  DistOptions path_opts;
  CLI::App* path_cmd =
      app.add_subcommand("path", "Compute a distance and always print the witness");
  path_cmd->add_option("metric", path_opts.metric, "ed | ned | ged | ced | cedp")->required();
  auto* path_a = path_cmd->add_option("a", path_opts.a, "first word");
  auto* path_b = path_cmd->add_option("b", path_opts.b, "second word");
  path_cmd->add_flag("--json", path_opts.json, "JSON output");
  path_cmd->add_option("--max-ced-len", path_opts.max_ced_len,
                       "cap for the exact contextual search (default 12)");
  path_cmd->add_flag("--allow-pad-glyph", path_opts.allow_pad_glyph,
                     "accept '_' inside input words");

  std::string align_path, align_word;
  CLI::App* align_cmd = app.add_subcommand("align", "Render the alignment a path induces");
  align_cmd->add_option("path", align_path, "edit path, e.g. x(a).n(c).x(b).c(b>c)")->required();
  auto* align_w = align_cmd->add_option("word", align_word, "source word");

  ComposeOptions compose_opts;
  CLI::App* compose_cmd = app.add_subcommand("compose", "Compose two edit paths");
  compose_cmd->add_option("p12", compose_opts.p12, "path from s1 to s2")->required();
  compose_cmd->add_option("p23", compose_opts.p23, "path from s2 to s3")->required();
  auto* compose_s1 = compose_cmd->add_option("s1", compose_opts.s1, "source word");
  compose_cmd->add_flag("--bare", compose_opts.bare,
                        "paths are bare letters; needs --s2 and --s3");
  auto* compose_s2 = compose_cmd->add_option("--s2", compose_opts.s2, "middle word (bare mode)");
  auto* compose_s3 = compose_cmd->add_option("--s3", compose_opts.s3, "target word (bare mode)");
  compose_cmd->add_flag("--json", compose_opts.json, "JSON output");

  CheckOptions check_opts;
  CLI::App* check_cmd = app.add_subcommand("check", "Run the property verification suite");
  check_cmd->add_option("--property", check_opts.property, "property id or 'all'");
  check_cmd->add_option("--seed", check_opts.seed, "fuzz seed (default 0)");
  check_cmd->add_option("--trials", check_opts.trials, "fuzz trials (default 10000)");
  check_cmd->add_option("--alphabet", check_opts.alphabet, "alphabet size (default 3)");
  check_cmd->add_option("--max-len", check_opts.max_len, "max word length (default 10)");
  check_cmd->add_flag("--json", check_opts.json, "JSON report");
  check_cmd->add_flag("--oracle", check_opts.oracle,
                      "run the exhaustive oracle cross-validation sweeps instead");

  long bench_reps = 5;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Time the metrics; no assertions");
  bench_cmd->add_option("--reps", bench_reps, "repetitions per case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dist_cmd) {
      dist_opts.have_words = dist_a->count() > 0 && dist_b->count() > 0;
      return run_dist(dist_opts);
    }
    if (*path_cmd) {
      path_opts.witness = true;
      path_opts.have_words = path_a->count() > 0 && path_b->count() > 0;
      return run_dist(path_opts);
    }
    if (*align_cmd) {
      if (align_w->count() == 0) {
        std::cerr << "align needs a source word\n";
        return kExitUsage;
      }
      return run_align(align_path, align_word);
    }
    if (*compose_cmd) {
      if (compose_s1->count() == 0) {
        std::cerr << "compose needs the source word s1\n";
        return kExitUsage;
      }
      if (compose_opts.bare && (compose_s2->count() == 0 || compose_s3->count() == 0)) {
        std::cerr << "--bare needs --s2 and --s3 to infer subscripts\n";
        return kExitUsage;
      }
      return run_compose(compose_opts);
    }
    if (*check_cmd) return run_check(check_opts);
    if (*bench_cmd) return run_bench(bench_reps);
  } catch (const nedlib::BudgetError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return kExitLimits;
  } catch (const nedlib::EditModelError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
