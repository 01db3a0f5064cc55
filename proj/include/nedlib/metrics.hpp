#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "nedlib/edit_model.hpp"
#include "nedlib/rational.hpp"

namespace nedlib {

enum class Metric { ed, ned, ged, ced, ced_prime };

std::string_view metric_name(Metric metric);
std::optional<Metric> metric_from_name(std::string_view name);

/// A size or search limit was hit before an exact answer could be produced.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact distance value plus, when available, a witness: an edit path for the
/// path-based metrics, or the chain of intermediate words for the contextual
/// one.
struct DistanceResult {
  Metric metric = Metric::ed;
  Rational value;
  std::optional<EditPath> witness;
  std::vector<Word> chain;
};

/// Limits for the exact contextual-distance search. Restricted mode explores
/// words over the symbols of the two inputs with lengths up to the longer
/// input; relaxed mode widens the space by `extra_symbols` fresh letters and
/// `length_slack` extra length, which exists to cross-validate the
/// restriction.
struct CedSearchConfig {
  std::size_t max_word_len = 12;
  bool relaxed = false;
  int extra_symbols = 1;
  std::size_t length_slack = 2;
  std::size_t node_cap = 1'000'000;
};

/// Levenshtein distance with a minimum-weight witness path.
DistanceResult ed(const Word& a, const Word& b, bool want_witness = true);

/// Normalized edit distance: the minimum over edit paths of weight/length,
/// compared exactly. Runs the layered dynamic program over exact path length
/// (O(mn) space, O(mn(m+n)) time); witness reconstruction keeps the whole
/// layered table, so request it only at sane sizes.
DistanceResult ned(const Word& a, const Word& b, bool want_witness = false);

/// 2*ED/(|a|+|b|+ED); 0 for two empty words. Carries the underlying
/// minimum-weight path as witness.
DistanceResult ged(const Word& a, const Word& b);

/// Contextual edit distance: cheapest chain of single edits where each step
/// costs 1/max of the lengths it connects. Exact Dijkstra over the implicit
/// word graph; throws BudgetError when inputs exceed cfg.max_word_len or the
/// search outgrows cfg.node_cap.
DistanceResult ced(const Word& a, const Word& b, const CedSearchConfig& cfg = {});

/// min(1, ced).
DistanceResult ced_prime(const Word& a, const Word& b, const CedSearchConfig& cfg = {});

}  // namespace nedlib
