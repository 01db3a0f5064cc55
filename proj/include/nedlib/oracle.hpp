#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nedlib/edit_model.hpp"
#include "nedlib/metrics.hpp"
#include "nedlib/rational.hpp"

namespace nedlib {

/// Bounds for exhaustive word enumeration and the relaxed contextual search.
struct EnumBudget {
  std::string alphabet = "ab";
  std::size_t max_len = 5;
  std::size_t cap = 1'000'000;  // total states/words allowed
};

/// Every word over the budget's alphabet with length <= max_len, in
/// length-then-lexicographic order, each exactly once. Throws BudgetError
/// when the enumeration would exceed the cap.
std::vector<Word> enumerate_words(const EnumBudget& budget);

/// Reference normalized edit distance by walking every monotone alignment of
/// the two words (every lattice path, i.e. every canonical Blank-free edit
/// path) and minimizing weight/length exactly. Deliberately simple and
/// independent of the layered dynamic program it cross-checks.
Rational brute_force_ned(const Word& a, const Word& b, std::size_t max_total_len = 12);

/// Reference contextual edit distance searched over an explicitly given word
/// space (alphabet and length bound), normally one widened beyond what the
/// production search visits. Flat map-based Dijkstra, kept separate from the
/// production engine on purpose.
Rational brute_force_ced(const Word& a, const Word& b, const EnumBudget& space);

/// The widened space used to validate the restricted production search: the
/// two inputs' symbols plus one fresh letter, lengths up to max(|a|,|b|)+2.
EnumBudget relaxed_ced_space(const Word& a, const Word& b);

}  // namespace nedlib
