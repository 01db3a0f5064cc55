#include "nedlib/propcheck.hpp"

#include <algorithm>
#include <array>
#include <chrono>

#include "nedlib/compose.hpp"
#include "nedlib/oracle.hpp"

namespace nedlib {
namespace {

// splitmix64: tiny, portable, and stable across platforms, which the
// byte-identical-report guarantee depends on.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }
};

// Each trial draws from its own stream so trials can be replayed (or later
// parallelized) independently of one another.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  Rng seeder(seed ^ (0xd1b54a32d192ed03ULL * (trial + 1)));
  return Rng(seeder.next());
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

char nth_symbol(int i) { return static_cast<char>('a' + i); }

Word gen_word(Rng& rng, int alphabet_size, int max_len) {
  const std::size_t length = rng.below(static_cast<std::uint64_t>(max_len) + 1);
  Word w(length, 'a');
  for (auto& c : w) c = nth_symbol(static_cast<int>(rng.below(alphabet_size)));
  return w;
}

Word mutate_word(Rng& rng, Word w, int alphabet_size, int max_len) {
  const int edits = 1 + static_cast<int>(rng.below(3));
  for (int e = 0; e < edits; ++e) {
    const std::uint64_t op = rng.below(3);
    if (op == 0 && !w.empty()) {
      w.erase(rng.below(w.size()), 1);
    } else if (op == 1 && w.size() < static_cast<std::size_t>(max_len)) {
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(rng.below(w.size() + 1)),
               nth_symbol(static_cast<int>(rng.below(alphabet_size))));
    } else if (!w.empty()) {
      w[rng.below(w.size())] = nth_symbol(static_cast<int>(rng.below(alphabet_size)));
    }
  }
  return w;
}

// Biased toward related triples: triangle slack is smallest between words
// that share structure, so pure independent sampling would mostly test the
// easy cases.
std::array<Word, 3> gen_triple(Rng& rng, const FuzzConfig& cfg) {
  switch (rng.below(5)) {
    case 0: {
      return {gen_word(rng, cfg.alphabet_size, cfg.max_word_len),
              gen_word(rng, cfg.alphabet_size, cfg.max_word_len),
              gen_word(rng, cfg.alphabet_size, cfg.max_word_len)};
    }
    case 1: {
      Word s1 = gen_word(rng, cfg.alphabet_size, cfg.max_word_len);
      Word s2 = mutate_word(rng, s1, cfg.alphabet_size, cfg.max_word_len);
      Word s3 = mutate_word(rng, s2, cfg.alphabet_size, cfg.max_word_len);
      return {std::move(s1), std::move(s2), std::move(s3)};
    }
    case 2: {
      Word s1 = gen_word(rng, cfg.alphabet_size, cfg.max_word_len);
      Word s2 = mutate_word(rng, s1, cfg.alphabet_size, cfg.max_word_len);
      return {s1, std::move(s2), s1};
    }
    case 3: {
      Word s1 = gen_word(rng, cfg.alphabet_size, cfg.max_word_len);
      Word s3 = mutate_word(rng, s1, cfg.alphabet_size, cfg.max_word_len);
      return {s1, s1, std::move(s3)};
    }
    default: {
      Word s1 = gen_word(rng, cfg.alphabet_size, cfg.max_word_len);
      return {s1, s1, s1};
    }
  }
}

// A random valid (possibly sloppy) edit path out of `w`; may contain
// same-symbol changes, never blanks.
EditPath random_path(Rng& rng, const Word& w, int alphabet_size) {
  EditPath path;
  const std::size_t max_letters = w.size() + 4;
  std::size_t i = 0;
  while (i < w.size()) {
    const bool may_insert = path.size() < max_letters;
    switch (rng.below(may_insert ? 8 : 6)) {
      case 0:
      case 1:
      case 2:
        path.push_back(EditLetter::no_change(w[i]));
        ++i;
        break;
      case 3:
      case 4:
        path.push_back(
            EditLetter::change(w[i], nth_symbol(static_cast<int>(rng.below(alphabet_size)))));
        ++i;
        break;
      case 5:
        path.push_back(EditLetter::erase(w[i]));
        ++i;
        break;
      default:
        path.push_back(EditLetter::insert(nth_symbol(static_cast<int>(rng.below(alphabet_size)))));
        break;
    }
  }
  const std::uint64_t tail = rng.below(3);
  for (std::uint64_t t = 0; t < tail; ++t)
    path.push_back(EditLetter::insert(nth_symbol(static_cast<int>(rng.below(alphabet_size)))));
  return path;
}

template <typename Fails>
std::vector<Word> shrink_words(std::vector<Word> words, Fails&& fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t wi = 0; wi < words.size() && !changed; ++wi) {
      for (std::size_t pos = 0; pos < words[wi].size() && !changed; ++pos) {
        std::vector<Word> candidate = words;
        candidate[wi].erase(pos, 1);
        if (fails(candidate)) {
          words = std::move(candidate);
          changed = true;
        }
      }
    }
  }
  return words;
}

std::string quoted(const Word& w) { return "\"" + w + "\""; }

Rational eval_metric(CheckMetric metric, const Word& a, const Word& b) {
  switch (metric) {
    case CheckMetric::ed:
      return ed(a, b, false).value;
    case CheckMetric::ned:
      return ned(a, b).value;
    case CheckMetric::ged:
      return ged(a, b).value;
    case CheckMetric::ced: {
      CedSearchConfig cfg;
      cfg.max_word_len = 16;
      return ced(a, b, cfg).value;
    }
    case CheckMetric::post_normalized:
      return post_normalized_distance(a, b);
  }
  return Rational(0);
}

std::string_view check_metric_label(CheckMetric metric) {
  switch (metric) {
    case CheckMetric::ed:
      return "ed";
    case CheckMetric::ned:
      return "ned";
    case CheckMetric::ged:
      return "ged";
    case CheckMetric::ced:
      return "ced";
    case CheckMetric::post_normalized:
      return "post-normalized";
  }
  return {};
}

std::optional<CheckMetric> check_metric_from_label(std::string_view label) {
  if (label == "ed") return CheckMetric::ed;
  if (label == "ned") return CheckMetric::ned;
  if (label == "ged") return CheckMetric::ged;
  if (label == "ced") return CheckMetric::ced;
  if (label == "post-normalized") return CheckMetric::post_normalized;
  return std::nullopt;
}

std::optional<std::string> axiom_violation(CheckMetric metric, const Word& s1, const Word& s2,
                                           const Word& s3) {
  const Rational zero(0);
  const Rational d11 = eval_metric(metric, s1, s1);
  if (d11 != zero) return "d(s1,s1) = " + d11.str() + " but must be 0";
  const Rational d12 = eval_metric(metric, s1, s2);
  if (s1 == s2 && d12 != zero) return "d(s1,s2) = " + d12.str() + " for equal words";
  if (s1 != s2 && !(d12 > zero)) return "d(s1,s2) = 0 for distinct words";
  const Rational d21 = eval_metric(metric, s2, s1);
  if (d12 != d21) return "asymmetric: d(s1,s2) = " + d12.str() + ", d(s2,s1) = " + d21.str();
  if ((metric == CheckMetric::ned || metric == CheckMetric::ged) && d12 > Rational(1))
    return "d(s1,s2) = " + d12.str() + " above 1";
  const Rational d13 = eval_metric(metric, s1, s3);
  const Rational d23 = eval_metric(metric, s2, s3);
  if (d13 > d12 + d23)
    return "triangle violated: d(s1,s3) = " + d13.str() + " > " + d12.str() + " + " + d23.str();
  return std::nullopt;
}

bool shares_symbol(const Word& a, const Word& b) {
  for (char c : a)
    if (b.find(c) != Word::npos) return true;
  return false;
}

Word repeat(const Word& w, int k) {
  Word out;
  out.reserve(w.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out += w;
  return out;
}

Rational metric_value(Metric metric, const Word& a, const Word& b) {
  switch (metric) {
    case Metric::ed:
      return ed(a, b, false).value;
    case Metric::ned:
      return ned(a, b).value;
    case Metric::ged:
      return ged(a, b).value;
    case Metric::ced: {
      CedSearchConfig cfg;
      cfg.max_word_len = 16;
      return ced(a, b, cfg).value;
    }
    case Metric::ced_prime: {
      CedSearchConfig cfg;
      cfg.max_word_len = 16;
      return ced_prime(a, b, cfg).value;
    }
  }
  return Rational(0);
}

void fail_with(PropertyReport& report, std::vector<Word> words, std::string detail) {
  report.pass = false;
  report.counterexample = Counterexample{std::move(words), std::move(detail)};
}

}  // namespace

Rational post_normalized_distance(const Word& a, const Word& b) {
  const std::int64_t total = static_cast<std::int64_t>(a.size() + b.size());
  if (total == 0) return Rational(0);
  return Rational(ed(a, b, false).value.num(), total);
}

PropertyReport check_metric_axioms(CheckMetric metric, const FuzzConfig& cfg) {
  Stopwatch timer;
  PropertyReport report;
  report.property_id = std::string("metric-axioms-") + std::string(check_metric_label(metric));
  report.seed = cfg.seed;
  report.pass = true;

  FuzzConfig local = cfg;
  if (metric == CheckMetric::ced) {
    // Exact contextual search is exponential in word length.
    local.trials = std::min(local.trials, 1000L);
    local.max_word_len = std::min(local.max_word_len, 6);
    local.alphabet_size = std::min(local.alphabet_size, 3);
  }
  report.notes.push_back("alphabet=" + std::to_string(local.alphabet_size) +
                         " max-len=" + std::to_string(local.max_word_len));

  for (long trial = 0; trial < local.trials; ++trial) {
    Rng rng = trial_rng(local.seed, static_cast<std::uint64_t>(trial));
    auto [s1, s2, s3] = gen_triple(rng, local);
    ++report.trials_run;
    auto violation = axiom_violation(metric, s1, s2, s3);
    if (violation) {
      auto fails = [&](const std::vector<Word>& w) {
        return axiom_violation(metric, w[0], w[1], w[2]).has_value();
      };
      std::vector<Word> shrunk = shrink_words({s1, s2, s3}, fails);
      fail_with(report, shrunk, *axiom_violation(metric, shrunk[0], shrunk[1], shrunk[2]));
      break;
    }
  }
  report.elapsed_ms = timer.ms();
  return report;
}

PropertyReport check_antitheticals(const FuzzConfig& cfg) {
  Stopwatch timer;
  PropertyReport report;
  report.property_id = "antitheticals";
  report.seed = cfg.seed;
  report.pass = true;

  const Rational one(1);
  auto biconditional_fails = [&](const Word& a, const Word& b) -> bool {
    if (a.empty() && b.empty()) return false;  // cost of the empty path is 0 by convention
    const bool expect_one = !shares_symbol(a, b);
    return (ned(a, b).value == one) != expect_one;
  };

  // Exhaustive sweep on small words, then fuzz with a generator that is
  // biased to actually produce disjoint-alphabet pairs.
  for (const char* alphabet : {"abc", "ab"}) {
    EnumBudget budget;
    budget.alphabet = alphabet;
    budget.max_len = budget.alphabet.size() == 3 ? 3 : 4;
    const std::vector<Word> words = enumerate_words(budget);
    for (const Word& a : words)
      for (const Word& b : words) {
        ++report.trials_run;
        if (biconditional_fails(a, b)) {
          fail_with(report, {a, b}, "value-1 biconditional violated");
          report.elapsed_ms = timer.ms();
          return report;
        }
      }
  }

  for (long trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = trial_rng(cfg.seed, 0x10000000ULL + static_cast<std::uint64_t>(trial));
    Word a, b;
    const int k = std::max(1, cfg.alphabet_size);
    if (rng.below(2) == 0) {
      a = gen_word(rng, k, cfg.max_word_len);
      b = gen_word(rng, k, cfg.max_word_len);
      for (auto& c : b) c = static_cast<char>(c + k);  // shift into a disjoint range
    } else {
      a = gen_word(rng, k, cfg.max_word_len);
      b = gen_word(rng, k, cfg.max_word_len);
    }
    ++report.trials_run;
    if (biconditional_fails(a, b)) {
      auto fails = [&](const std::vector<Word>& w) { return biconditional_fails(w[0], w[1]); };
      std::vector<Word> shrunk = shrink_words({a, b}, fails);
      fail_with(report, shrunk, "value-1 biconditional violated");
      report.elapsed_ms = timer.ms();
      return report;
    }
  }

  // The documented failures of the other two distances on this property.
  const Rational g = ged("aa", "bb").value;
  if (g != Rational(2, 3)) {
    fail_with(report, {"aa", "bb"}, "expected ged = 2/3, got " + g.str());
  } else {
    report.notes.push_back("ged(\"aa\",\"bb\") = 2/3 with disjoint symbols: violation recorded");
  }
  const Rational cp = ced_prime("a", "aaaa").value;
  if (cp != Rational(1)) {
    fail_with(report, {"a", "aaaa"}, "expected ced' = 1, got " + cp.str());
  } else {
    report.notes.push_back("ced'(\"a\",\"aaaa\") = 1 with a shared symbol: violation recorded");
  }

  report.elapsed_ms = timer.ms();
  return report;
}

PropertyReport check_non_escalation(Metric metric, const Word& u, const Word& v, int k_max) {
  Stopwatch timer;
  PropertyReport report;
  report.property_id = std::string("non-escalation-") + std::string(metric_name(metric));
  report.pass = true;
  report.notes.push_back("u=" + quoted(u) + " v=" + quoted(v) + " k<=" + std::to_string(k_max));

  if (metric == Metric::ced || metric == Metric::ced_prime) {
    // Here repetition is expected to escalate: confirm the ladder is
    // strictly increasing.
    std::vector<Rational> ladder;
    for (int k = 1; k <= k_max; ++k) {
      ladder.push_back(metric_value(metric, repeat(u, k), repeat(v, k)));
      report.notes.push_back("d(u^" + std::to_string(k) + ",v^" + std::to_string(k) +
                             ") = " + ladder.back().str());
      ++report.trials_run;
    }
    for (std::size_t i = 1; i < ladder.size(); ++i) {
      if (!(ladder[i - 1] < ladder[i])) {
        fail_with(report, {u, v},
                  "ladder not strictly increasing at k=" + std::to_string(i + 1) + " (k_max=" +
                      std::to_string(k_max) + ")");
        report.elapsed_ms = timer.ms();
        return report;
      }
    }
    report.notes.push_back("escalation confirmed");
    report.elapsed_ms = timer.ms();
    return report;
  }

  const Rational base = metric_value(metric, u, v);
  report.notes.push_back("d(u,v) = " + base.str());
  for (int k = 2; k <= k_max; ++k) {
    const Rational dk = metric_value(metric, repeat(u, k), repeat(v, k));
    ++report.trials_run;
    if (dk > base) {
      fail_with(report, {u, v},
                "d(u^" + std::to_string(k) + ",v^" + std::to_string(k) + ") = " + dk.str() +
                    " exceeds d(u,v) = " + base.str() + " (k_max=" + std::to_string(k_max) + ")");
      break;
    }
  }
  report.elapsed_ms = timer.ms();
  return report;
}

namespace {

// Side alphabets for padding: the first letters not used by the core words.
std::pair<std::string, std::string> side_alphabets(const Word& s1, const Word& s2) {
  std::string side1, side2;
  for (char c = 'a'; c <= 'z'; ++c) {
    if (s1.find(c) != Word::npos || s2.find(c) != Word::npos) continue;
    if (side1.size() < 2)
      side1.push_back(c);
    else if (side2.size() < 2)
      side2.push_back(c);
    else
      break;
  }
  return {side1, side2};
}

Word pad_word(Rng& rng, const Word& base, const std::string& side, int max_len) {
  Word out = base;
  if (side.empty()) return out;
  const int room = max_len - static_cast<int>(base.size());
  const std::uint64_t count = room <= 0 ? 0 : rng.below(static_cast<std::uint64_t>(room) + 1);
  for (std::uint64_t t = 0; t < count; ++t) {
    const std::size_t pos = rng.below(out.size() + 1);
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), side[rng.below(side.size())]);
  }
  return out;
}

}  // namespace

PropertyReport check_pure_uniformity(const Word& s1, const Word& s2, const FuzzConfig& cfg) {
  Stopwatch timer;
  PropertyReport report;
  report.property_id = "pure-uniformity";
  report.seed = cfg.seed;
  report.pass = true;
  report.notes.push_back("s1=" + quoted(s1) + " s2=" + quoted(s2));

  const auto [side1, side2] = side_alphabets(s1, s2);
  AlphabetSet core, set1, set2;
  for (char c : s1) core.insert(c);
  for (char c : s2) core.insert(c);
  for (char c : side1) set1.insert(c);
  for (char c : side2) set2.insert(c);

  const Rational base = ned(s1, s2).value;
  const int padded_max = cfg.max_word_len + 4;

  for (long trial = 0; trial < cfg.trials && report.pass; ++trial) {
    Rng rng = trial_rng(cfg.seed, 0x20000000ULL + static_cast<std::uint64_t>(trial));
    const Word p1 = pad_word(rng, s1, side1, padded_max);
    const Word p2 = pad_word(rng, s2, side2, padded_max);
    ++report.trials_run;

    DistanceResult padded = ned(p1, p2, true);
    if (padded.value < base) {
      fail_with(report, {s1, s2, p1, p2},
                "padding lowered the distance: " + padded.value.str() + " < " + base.str());
      break;
    }
    // Constructive half: project the padded witness back onto the core
    // alphabet and confirm it connects the core words at no greater cost.
    const EditPath projected = project_f(*padded.witness, core, set1, set2);
    if (!is_path_from(projected, s1, s2)) {
      fail_with(report, {s1, s2, p1, p2}, "projected witness does not connect the core words");
      break;
    }
    if (cost(projected) > cost(*padded.witness)) {
      fail_with(report, {s1, s2, p1, p2}, "projection increased the cost");
      break;
    }
  }
  if (report.pass)
    report.notes.push_back("unpadded pair attains the minimum: d = " + base.str());

  // Recorded violations of the other two distances at the documented
  // witness pair (full scale for the closed form, 5/10 for the search).
  const Word a50(50, 'a'), a100(100, 'a');
  const Word a50c50 = Word(50, 'a') + Word(50, 'c');
  const Rational g1 = ged(a50, a100).value;
  const Rational g2 = ged(a50c50, a100).value;
  if (g1 != Rational(1, 2)) {
    fail_with(report, {a50, a100}, "expected ged = 1/2, got " + g1.str());
  } else if (g2 == g1) {
    fail_with(report, {a50c50, a100}, "ged did not react to padding");
  } else {
    report.notes.push_back("ged violation recorded: d(a^50,a^100) = " + g1.str() +
                           " vs d(a^50 c^50,a^100) = " + g2.str());
  }

  const Word a5(5, 'a'), a10(10, 'a');
  const Word a5c5 = Word(5, 'a') + Word(5, 'c');
  Rational harmonic_tail(0);
  for (int i = 6; i <= 10; ++i) harmonic_tail += Rational(1, i);
  const Rational c1 = ced(a5, a10).value;
  const Rational c2 = ced(a5c5, a10).value;
  if (c1 != harmonic_tail) {
    fail_with(report, {a5, a10}, "expected ced = " + harmonic_tail.str() + ", got " + c1.str());
  } else if (!(c2 < c1)) {
    fail_with(report, {a5c5, a10}, "ced padding violation missing: " + c2.str());
  } else {
    report.notes.push_back("ced violation recorded (5/10 scale): d(a^5,a^10) = " + c1.str() +
                           " vs d(a^5 c^5,a^10) = " + c2.str());
  }

  report.elapsed_ms = timer.ms();
  return report;
}

namespace {

std::optional<std::string> compose_chain_violation(const Word& s1, const EditPath& p12,
                                                   const EditPath& p23) {
  ApplyResult r12 = nedlib::apply(p12, s1);
  if (!r12.valid) return "p12 does not apply to s1";
  ApplyResult r23 = nedlib::apply(p23, r12.output);
  if (!r23.valid) return "p23 does not apply to s2";
  const Word& s3 = r23.output;

  ComposeOutcome outcome = compose(p12, p23);
  if (!outcome.defined)
    return "composition undefined at positions (" + std::to_string(outcome.failed_at.pos12) +
           "," + std::to_string(outcome.failed_at.pos23) + ")";
  if (!is_path_from(outcome.projected, s1, s3)) return "projected path misses s3";
  const long long w12 = wgt(p12), w23 = wgt(p23), l12 = len(p12), l23 = len(p23);
  if (outcome.wgt_raw > w12 + w23) return "weight bound violated";
  if (outcome.len_raw < std::max(l12, l23)) return "length bound violated";
  if (cost(outcome.raw) > cost(p12) + cost(p23)) return "cost bound violated";
  if (cost(outcome.projected) > cost(outcome.raw)) return "projection raised the cost";
  if (outcome.wgt_raw != 2 * outcome.blanks + outcome.wgt_proj) return "weight bookkeeping off";
  if (outcome.len_raw != 2 * outcome.blanks + outcome.len_proj) return "length bookkeeping off";
  return std::nullopt;
}

std::optional<std::string> compose_chain_violation_on_words(const Word& s1, const Word& s2,
                                                            const Word& s3) {
  EditPath p12 = *ned(s1, s2, true).witness;
  EditPath p23 = *ned(s2, s3, true).witness;
  if (auto v = compose_chain_violation(s1, p12, p23)) return v;
  // End-to-end triangle inequality on the same triple.
  const Rational d13 = ned(s1, s3).value;
  const Rational d12 = cost(p12), d23 = cost(p23);
  if (d13 > d12 + d23)
    return "triangle violated: " + d13.str() + " > " + d12.str() + " + " + d23.str();
  return std::nullopt;
}

}  // namespace

PropertyReport check_compose_chain(const FuzzConfig& cfg) {
  Stopwatch timer;
  PropertyReport report;
  report.property_id = "compose-chain";
  report.seed = cfg.seed;
  report.pass = true;

  for (long trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = trial_rng(cfg.seed, 0x30000000ULL + static_cast<std::uint64_t>(trial));
    ++report.trials_run;
    if (rng.below(2) == 0) {
      // Optimal legs from the distance itself.
      auto [s1, s2, s3] = gen_triple(rng, cfg);
      if (auto violation = compose_chain_violation_on_words(s1, s2, s3)) {
        auto fails = [](const std::vector<Word>& w) {
          return compose_chain_violation_on_words(w[0], w[1], w[2]).has_value();
        };
        std::vector<Word> shrunk = shrink_words({s1, s2, s3}, fails);
        fail_with(report, shrunk,
                  *compose_chain_violation_on_words(shrunk[0], shrunk[1], shrunk[2]));
        break;
      }
    } else {
      // Arbitrary valid legs, including sloppy ones the optimizer would
      // never emit.
      Word s1 = gen_word(rng, cfg.alphabet_size, cfg.max_word_len);
      EditPath p12 = random_path(rng, s1, cfg.alphabet_size);
      Word s2 = nedlib::apply(p12, s1).output;
      EditPath p23 = random_path(rng, s2, cfg.alphabet_size);
      if (auto violation = compose_chain_violation(s1, p12, p23)) {
        fail_with(report, {s1, s2},
                  *violation + "; p12=" + to_text(p12) + "; p23=" + to_text(p23));
        break;
      }
    }
  }
  report.elapsed_ms = timer.ms();
  return report;
}

PropertyReport check_fraction_lemmas(const FuzzConfig& cfg, int grid) {
  Stopwatch timer;
  PropertyReport report;
  report.property_id = "fraction-lemmas";
  report.seed = cfg.seed;
  report.exhaustive = true;
  report.pass = true;

  // (d+1)/(l+1) >= d/l whenever 0 <= d <= l.
  for (std::int64_t l = 1; l <= grid && report.pass; ++l)
    for (std::int64_t d = 0; d <= l; ++d) {
      ++report.trials_run;
      if (l * (d + 1) < d * (l + 1)) {
        fail_with(report, {}, "lemma 1 fails at d=" + std::to_string(d) +
                                  " l=" + std::to_string(l));
        break;
      }
    }

  // d12/l12 + d23/l23 >= d13/l13 whenever d13 <= d12+d23 and
  // l13 >= max(l12,l23). The extreme point d13 = d12+d23, l13 = max(l12,l23)
  // dominates every admissible (d13,l13), so sweeping it covers the grid.
  for (std::int64_t l12 = 1; l12 <= grid && report.pass; ++l12)
    for (std::int64_t l23 = 1; l23 <= grid && report.pass; ++l23) {
      const std::int64_t l13 = std::max(l12, l23);
      const std::int64_t rhs_scale = l12 * l23;
      for (std::int64_t d12 = 0; d12 <= grid && report.pass; ++d12) {
        const std::int64_t lhs_base = d12 * l23 * l13;
        const std::int64_t rhs_base = d12 * rhs_scale;
        for (std::int64_t d23 = 0; d23 <= grid; ++d23) {
          if (lhs_base + d23 * l12 * l13 < rhs_base + d23 * rhs_scale) {
            fail_with(report, {},
                      "lemma 2 fails at d12=" + std::to_string(d12) + " l12=" +
                          std::to_string(l12) + " d23=" + std::to_string(d23) +
                          " l23=" + std::to_string(l23));
            break;
          }
        }
        report.trials_run += grid + 1;
      }
    }

  report.notes.push_back("grid=" + std::to_string(grid));
  report.elapsed_ms = timer.ms();
  return report;
}

PropertyReport check_post_normalized_demo(const FuzzConfig& cfg) {
  Stopwatch timer;
  PropertyReport report;
  report.property_id = "post-normalized-triangle";
  report.seed = cfg.seed;
  report.pass = false;

  for (long trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = trial_rng(cfg.seed, 0x40000000ULL + static_cast<std::uint64_t>(trial));
    auto [s1, s2, s3] = gen_triple(rng, cfg);
    ++report.trials_run;
    const Rational d13 = post_normalized_distance(s1, s3);
    const Rational d12 = post_normalized_distance(s1, s2);
    const Rational d23 = post_normalized_distance(s2, s3);
    if (d13 > d12 + d23) {
      auto fails = [](const std::vector<Word>& w) {
        return post_normalized_distance(w[0], w[2]) >
               post_normalized_distance(w[0], w[1]) + post_normalized_distance(w[1], w[2]);
      };
      std::vector<Word> witness = shrink_words({s1, s2, s3}, fails);
      report.pass = true;
      report.notes.push_back(
          "violation found: d(" + quoted(witness[0]) + "," + quoted(witness[2]) + ") = " +
          post_normalized_distance(witness[0], witness[2]).str() + " > " +
          post_normalized_distance(witness[0], witness[1]).str() + " + " +
          post_normalized_distance(witness[1], witness[2]).str() + " via " + quoted(witness[1]));
      break;
    }
  }
  if (!report.pass)
    fail_with(report, {}, "no triangle violation of the post-normalized variant found");
  report.elapsed_ms = timer.ms();
  return report;
}

namespace {

bool letters_degenerate(const EditPath& path) {
  for (const auto& l : path)
    if (l.op == EditOp::Change && l.from == l.to) return true;
  return false;
}

std::optional<std::string> edit_model_violation(const Word& w, const EditPath& path) {
  if (wgt(path) > len(path)) return "weight exceeds length";
  if (len(path) != static_cast<long long>(path.size())) return "blank-free length is off";
  const Rational c = cost(path);
  if (c < Rational(0) || c > Rational(1)) return "cost outside [0,1]";

  ApplyResult forward = nedlib::apply(path, w);
  if (!forward.valid) return "generated path does not apply";
  const EditPath back = reverse_path(path);
  if (reverse_path(back) != path) return "reversal is not an involution";
  ApplyResult backward = nedlib::apply(back, forward.output);
  if (!backward.valid || backward.output != w) return "reverse path does not undo";
  if (cost(back) != c) return "reverse path changed the cost";

  Alignment rows = render_alignment(path, w);
  if (rows.source.size() != rows.target.size()) return "alignment rows differ in length";
  Word stripped_source, stripped_target;
  long long mismatches = 0;
  for (std::size_t i = 0; i < rows.source.size(); ++i) {
    if (rows.source[i] != kPadGlyph) stripped_source.push_back(rows.source[i]);
    if (rows.target[i] != kPadGlyph) stripped_target.push_back(rows.target[i]);
    if (rows.source[i] != rows.target[i]) ++mismatches;
  }
  if (stripped_source != w) return "alignment source row does not match the word";
  if (stripped_target != forward.output) return "alignment target row does not match the result";
  if (!letters_degenerate(path) && mismatches != wgt(path))
    return "alignment disagreements do not equal the weight";

  if (parse_path(to_text(path)) != path) return "text form does not round-trip";
  if (project_h(path) != path) return "projection changed a blank-free path";
  return std::nullopt;
}

}  // namespace

PropertyReport check_edit_model(const FuzzConfig& cfg) {
  Stopwatch timer;
  PropertyReport report;
  report.property_id = "edit-model";
  report.seed = cfg.seed;
  report.pass = true;

  for (long trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = trial_rng(cfg.seed, 0x50000000ULL + static_cast<std::uint64_t>(trial));
    Word w = gen_word(rng, cfg.alphabet_size, cfg.max_word_len);
    EditPath path = random_path(rng, w, cfg.alphabet_size);
    ++report.trials_run;
    if (auto violation = edit_model_violation(w, path)) {
      fail_with(report, {w}, *violation + "; path=" + to_text(path));
      break;
    }
    // Splice blanks in: the projection may only lower the cost, and apply
    // must refuse the blank.
    EditPath with_blanks = path;
    const std::uint64_t blanks = 1 + rng.below(3);
    for (std::uint64_t t = 0; t < blanks; ++t)
      with_blanks.insert(with_blanks.begin() + static_cast<std::ptrdiff_t>(
                             rng.below(with_blanks.size() + 1)),
                         EditLetter::blank());
    if (cost(project_h(with_blanks)) > cost(with_blanks)) {
      fail_with(report, {w}, "blank projection raised the cost; path=" + to_text(with_blanks));
      break;
    }
    ApplyResult blocked = nedlib::apply(with_blanks, w);
    if (blocked.valid || blocked.error.kind != PathError::Kind::blank_in_path) {
      fail_with(report, {w}, "apply accepted a blank; path=" + to_text(with_blanks));
      break;
    }
  }
  report.elapsed_ms = timer.ms();
  return report;
}

namespace {

PropertyReport merge_reports(std::string id, std::vector<PropertyReport> parts) {
  PropertyReport merged;
  merged.property_id = std::move(id);
  merged.pass = true;
  for (auto& part : parts) {
    merged.trials_run += part.trials_run;
    merged.seed = part.seed != 0 ? part.seed : merged.seed;
    merged.exhaustive = merged.exhaustive || part.exhaustive;
    for (auto& note : part.notes)
      merged.notes.push_back("[" + part.property_id + "] " + note);
    if (!part.pass && merged.pass) {
      merged.pass = false;
      merged.counterexample = std::move(part.counterexample);
      if (merged.counterexample)
        merged.counterexample->detail =
            "[" + part.property_id + "] " + merged.counterexample->detail;
    }
    merged.elapsed_ms += part.elapsed_ms;
  }
  return merged;
}

PropertyReport run_non_escalation_suite(const FuzzConfig& cfg) {
  std::vector<PropertyReport> parts;
  parts.push_back(check_non_escalation(Metric::ned, "aab", "aaab", 5));
  parts.push_back(check_non_escalation(Metric::ged, "aab", "aaab", 5));
  // Random small pairs; repetition keeps the words within comfortable sizes.
  const long pair_trials = std::min(cfg.trials, 300L);
  PropertyReport fuzz;
  fuzz.property_id = "non-escalation-fuzz";
  fuzz.seed = cfg.seed;
  fuzz.pass = true;
  for (long trial = 0; trial < pair_trials && fuzz.pass; ++trial) {
    Rng rng = trial_rng(cfg.seed, 0x60000000ULL + static_cast<std::uint64_t>(trial));
    const Word u = gen_word(rng, cfg.alphabet_size, 4);
    const Word v = gen_word(rng, cfg.alphabet_size, 4);
    ++fuzz.trials_run;
    for (Metric metric : {Metric::ned, Metric::ged}) {
      const Rational base = metric_value(metric, u, v);
      for (int k = 2; k <= 3; ++k) {
        const Rational dk = metric_value(metric, repeat(u, k), repeat(v, k));
        if (dk > base) {
          fail_with(fuzz, {u, v},
                    std::string(metric_name(metric)) + " escalated at k=" + std::to_string(k) +
                        ": " + dk.str() + " > " + base.str());
          break;
        }
      }
      if (!fuzz.pass) break;
    }
  }
  parts.push_back(std::move(fuzz));
  PropertyReport merged = merge_reports("non-escalation", std::move(parts));
  merged.seed = cfg.seed;
  return merged;
}

PropertyReport run_pure_uniformity_suite(const FuzzConfig& cfg) {
  FuzzConfig local = cfg;
  local.trials = std::max(1L, cfg.trials / 3);
  local.max_word_len = std::min(cfg.max_word_len, 8);
  std::vector<PropertyReport> parts;
  parts.push_back(check_pure_uniformity("ab", "abbab", local));
  parts.push_back(check_pure_uniformity("abc", "cba", local));
  parts.push_back(check_pure_uniformity("", "ab", local));
  PropertyReport merged = merge_reports("pure-uniformity", std::move(parts));
  merged.seed = cfg.seed;
  return merged;
}

}  // namespace

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = {
      "edit-model",        "fraction-lemmas",   "metric-axioms-ed",
      "metric-axioms-ned", "metric-axioms-ged", "metric-axioms-ced",
      "antitheticals",     "non-escalation",    "ced-escalation",
      "pure-uniformity",   "compose-chain",     "post-normalized-triangle"};
  return ids;
}

std::optional<PropertyReport> run_property(const std::string& id, const FuzzConfig& cfg) {
  if (id == "edit-model") return check_edit_model(cfg);
  if (id == "fraction-lemmas") return check_fraction_lemmas(cfg);
  if (id == "metric-axioms-ed") return check_metric_axioms(CheckMetric::ed, cfg);
  if (id == "metric-axioms-ned") return check_metric_axioms(CheckMetric::ned, cfg);
  if (id == "metric-axioms-ged") return check_metric_axioms(CheckMetric::ged, cfg);
  if (id == "metric-axioms-ced") return check_metric_axioms(CheckMetric::ced, cfg);
  if (id == "antitheticals") return check_antitheticals(cfg);
  if (id == "non-escalation") return run_non_escalation_suite(cfg);
  if (id == "ced-escalation") {
    PropertyReport report = check_non_escalation(Metric::ced, "aab", "aaab", 3);
    report.property_id = "ced-escalation";
    report.seed = cfg.seed;
    return report;
  }
  if (id == "pure-uniformity") return run_pure_uniformity_suite(cfg);
  if (id == "compose-chain") return check_compose_chain(cfg);
  if (id == "post-normalized-triangle") return check_post_normalized_demo(cfg);
  return std::nullopt;
}

std::vector<PropertyReport> run_properties(const std::vector<std::string>& ids,
                                           const FuzzConfig& cfg) {
  std::vector<PropertyReport> reports;
  reports.reserve(ids.size());
  for (const auto& id : ids) {
    auto report = run_property(id, cfg);
    if (report) reports.push_back(std::move(*report));
  }
  return reports;
}

bool replay_counterexample(const std::string& property_id, const Counterexample& ce) {
  if (property_id.rfind("metric-axioms-", 0) == 0 && ce.words.size() == 3) {
    auto metric = check_metric_from_label(property_id.substr(14));
    if (!metric) return false;
    return axiom_violation(*metric, ce.words[0], ce.words[1], ce.words[2]).has_value();
  }
  if (property_id == "antitheticals" && ce.words.size() == 2) {
    const Word& a = ce.words[0];
    const Word& b = ce.words[1];
    if (a.empty() && b.empty()) return false;
    return (ned(a, b).value == Rational(1)) != !shares_symbol(a, b);
  }
  if (property_id == "compose-chain" && ce.words.size() == 3)
    return compose_chain_violation_on_words(ce.words[0], ce.words[1], ce.words[2]).has_value();
  if (property_id == "pure-uniformity" && ce.words.size() == 4)
    return ned(ce.words[2], ce.words[3]).value < ned(ce.words[0], ce.words[1]).value;
  if (property_id == "post-normalized-triangle" && ce.words.size() == 3)
    return post_normalized_distance(ce.words[0], ce.words[2]) >
           post_normalized_distance(ce.words[0], ce.words[1]) +
               post_normalized_distance(ce.words[1], ce.words[2]);
  return false;
}

}  // namespace nedlib
