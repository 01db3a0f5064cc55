#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nedlib/edit_model.hpp"
#include "nedlib/metrics.hpp"
#include "nedlib/rational.hpp"

namespace nedlib {

/// Seeded generation parameters. Identical configs give byte-identical
/// reports apart from elapsed time: every trial draws from its own stream
/// derived from (seed, trial index).
struct FuzzConfig {
  std::uint64_t seed = 0;
  long trials = 10'000;
  int alphabet_size = 3;
  int max_word_len = 10;
};

/// The words (and optional extra context) that made a property fail, already
/// shrunk: no single-character deletion keeps it failing.
struct Counterexample {
  std::vector<Word> words;
  std::string detail;
};

struct PropertyReport {
  std::string property_id;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  long trials_run = 0;
  bool pass = false;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;  // recorded values, witnesses, sub-results
  double elapsed_ms = 0.0;
};

/// Which distance a metric-axiom run exercises. post_normalized is the demo
/// ED/(|a|+|b|) variant that is expected to break the triangle inequality.
enum class CheckMetric { ed, ned, ged, ced, post_normalized };

Rational post_normalized_distance(const Word& a, const Word& b);

/// Identity of indiscernibles, symmetry and the triangle inequality over
/// sampled triples, with exact rational comparison. The contextual metric is
/// clamped to short words and few trials internally.
PropertyReport check_metric_axioms(CheckMetric metric, const FuzzConfig& cfg);

/// Distance 1 exactly for words sharing no symbol: biconditional for the
/// normalized distance (exhaustive on small words plus fuzz), and the
/// documented violations of the other two recorded.
PropertyReport check_antitheticals(const FuzzConfig& cfg);

/// d(u^k, v^k) <= d(u, v) for the metrics that promise it; for the
/// contextual metric, confirms the strictly increasing counterexample ladder
/// instead.
PropertyReport check_non_escalation(Metric metric, const Word& u, const Word& v, int k_max);

/// Padding either word with fresh side-alphabet symbols never drops the
/// normalized distance below the unpadded value (which attains the minimum),
/// checked both by sampling paddings and by projecting witness paths back
/// down; the closed-form and contextual violations are recorded.
PropertyReport check_pure_uniformity(const Word& s1, const Word& s2, const FuzzConfig& cfg);

/// Composition chains over sampled triples: always defined, the projected
/// path really maps s1 to s3, and the weight/length/cost bounds hold.
PropertyReport check_compose_chain(const FuzzConfig& cfg);

/// The two integer-fraction facts behind the cost bounds, swept exhaustively
/// over the grid of numerators and denominators up to `grid`.
PropertyReport check_fraction_lemmas(const FuzzConfig& cfg, int grid = 200);

/// Expected-failure demo: passes when the fuzzer exhibits a triangle
/// violation of the post-normalized variant.
PropertyReport check_post_normalized_demo(const FuzzConfig& cfg);

/// Core edit-path algebra under random words and paths: weight/length/cost
/// relations, reversal round trips, alignment agreement counts, text-form
/// round trips.
PropertyReport check_edit_model(const FuzzConfig& cfg);

/// Registry used by the CLI: stable ids in a stable order.
const std::vector<std::string>& property_ids();
std::optional<PropertyReport> run_property(const std::string& id, const FuzzConfig& cfg);
std::vector<PropertyReport> run_properties(const std::vector<std::string>& ids,
                                           const FuzzConfig& cfg);

/// Re-evaluates a failed report's counterexample. Returns true when it still
/// fails, which every recorded counterexample must.
bool replay_counterexample(const std::string& property_id, const Counterexample& ce);

}  // namespace nedlib
