#include <doctest.h>

#include <algorithm>

#include "nedlib/metrics.hpp"

using namespace nedlib;

namespace {

Word times(const Word& w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out += w;
  return out;
}

// Test-only reference: minimum weight over every monotone alignment.
int min_weight_by_enumeration(const Word& a, const Word& b) {
  struct Frame {
    std::size_t i, j;
    int weight;
  };
  int best = -1;
  std::vector<Frame> stack{{0, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.i == a.size() && f.j == b.size()) {
      if (best < 0 || f.weight < best) best = f.weight;
      continue;
    }
    if (f.i < a.size() && f.j < b.size())
      stack.push_back({f.i + 1, f.j + 1, f.weight + (a[f.i] == b[f.j] ? 0 : 1)});
    if (f.i < a.size()) stack.push_back({f.i + 1, f.j, f.weight + 1});
    if (f.j < b.size()) stack.push_back({f.i, f.j + 1, f.weight + 1});
  }
  return best;
}

}  // namespace

TEST_CASE("ed golden values") {
  CHECK(ed("aabcde", "abpcg").value == Rational(4));
  CHECK(ed(times("a", 96) + times("b", 4), times("a", 100)).value == Rational(4));
  CHECK(ed("abab", "abab").value == Rational(0));
  CHECK(min_weight_by_enumeration("acbb", "cc") == 3);
  CHECK(ed("acbb", "cc").value == Rational(3));
  CHECK(ed("", "abc").value == Rational(3));
}

TEST_CASE("ed witness transforms a into b at the stated weight") {
  for (auto [a, b] : std::vector<std::pair<Word, Word>>{
           {"aabcde", "abpcg"}, {"acbb", "cc"}, {"", "ab"}, {"ab", ""}, {"abc", "abc"}}) {
    DistanceResult r = ed(a, b);
    REQUIRE(r.witness.has_value());
    CHECK(is_path_from(*r.witness, a, b));
    CHECK(Rational(wgt(*r.witness)) == r.value);
  }
}

TEST_CASE("ned golden values") {
  CHECK(ned("acbb", "cc").value == Rational(3, 4));
  CHECK(ned("aabcde", "abpcg").value == Rational(4, 7));
  CHECK(ned(times("a", 96) + times("b", 4), times("a", 100)).value == Rational(1, 25));
  CHECK(ned("", "a").value == Rational(1));
  CHECK(ned("abab", "abab").value == Rational(0));
  CHECK(ned("", "").value == Rational(0));
  CHECK(ned("abab", "ababab").value == Rational(1, 3));
}

TEST_CASE("ned witness is optimal and deterministic") {
  DistanceResult r = ned("acbb", "cc", true);
  REQUIRE(r.witness.has_value());
  CHECK(is_path_from(*r.witness, "acbb", "cc"));
  CHECK(cost(*r.witness) == r.value);
  CHECK(to_text(*r.witness) == "x(a).n(c).x(b).c(b>c)");

  DistanceResult longer = ned("aabcde", "abpcg", true);
  REQUIRE(longer.witness.has_value());
  CHECK(is_path_from(*longer.witness, "aabcde", "abpcg"));
  CHECK(cost(*longer.witness) == Rational(4, 7));

  DistanceResult empty = ned("", "", true);
  REQUIRE(empty.witness.has_value());
  CHECK(empty.witness->empty());
}

TEST_CASE("ned is symmetric on spot checks") {
  CHECK(ned("acbb", "cc").value == ned("cc", "acbb").value);
  CHECK(ned("aabcde", "abpcg").value == ned("abpcg", "aabcde").value);
}

TEST_CASE("ged golden values") {
  CHECK(ged("aa", "bb").value == Rational(2, 3));
  CHECK(ged("", "a").value == Rational(1));
  CHECK(ged(times("a", 50), times("a", 100)).value == Rational(1, 2));
  CHECK(ged("aab", "b").value == Rational(2, 3));
  CHECK(ged("abc", "abc").value == Rational(0));
  CHECK(ged("", "").value == Rational(0));
}

TEST_CASE("ged stays consistent with its own edit distance") {
  // The padded pure-uniformity witness: ED is 50 substitutions, so the
  // closed form gives 2*50/(100+100+50) = 2/5.
  const Word a50c50 = times("a", 50) + times("c", 50);
  const Word a100 = times("a", 100);
  CHECK(ed(a50c50, a100).value == Rational(50));
  CHECK(ged(a50c50, a100).value == Rational(2, 5));
}

TEST_CASE("ced golden values") {
  CHECK(ced("aab", "aaab").value == Rational(1, 4));
  CHECK(ced(times("aab", 2), times("aaab", 2)).value == Rational(15, 56));
  CHECK(ced(times("aab", 3), times("aaab", 3)).value == Rational(181, 660));
  CHECK(ced("", "aaa").value == Rational(11, 6));
  CHECK(ced("abc", "abc").value == Rational(0));

  Rational harmonic(0);
  for (int n = 1; n <= 8; ++n) {
    harmonic += Rational(1, n);
    CHECK(ced("", times("a", n)).value == harmonic);
  }
}

TEST_CASE("ced grows without bound along the harmonic witnesses") {
  Rational harmonic(0);
  for (int n = 1; n <= 11; ++n) {
    harmonic += Rational(1, n);
    const Rational value = ced("", times("a", n)).value;
    CHECK(value == harmonic);
    if (n >= 4) CHECK(value > Rational(1));
  }
  CHECK(ced("", times("a", 11)).value > Rational(2));
}

TEST_CASE("ced chain witness is a unit-edit chain costing the value") {
  DistanceResult r = ced("aab", "aaab");
  REQUIRE(r.chain.size() >= 2);
  CHECK(r.chain.front() == "aab");
  CHECK(r.chain.back() == "aaab");
  Rational total(0);
  for (std::size_t i = 1; i < r.chain.size(); ++i) {
    CHECK(ed(r.chain[i - 1], r.chain[i], false).value == Rational(1));
    total += Rational(1, static_cast<std::int64_t>(
                             std::max(r.chain[i - 1].size(), r.chain[i].size())));
  }
  CHECK(total == r.value);

  CHECK(ced("aa", "aa").chain == std::vector<Word>{"aa"});
}

TEST_CASE("ced respects its budgets") {
  CedSearchConfig tight;
  tight.max_word_len = 4;
  CHECK_THROWS_AS(ced("aaaaa", "a", tight), BudgetError);

  CedSearchConfig tiny_cap;
  tiny_cap.node_cap = 3;
  CHECK_THROWS_AS(ced("abab", "baba", tiny_cap), BudgetError);
}

TEST_CASE("ced is symmetric on spot checks") {
  CHECK(ced("aab", "aaab").value == ced("aaab", "aab").value);
  CHECK(ced("ab", "ba").value == ced("ba", "ab").value);
}

TEST_CASE("ced_prime caps at one") {
  CHECK(ced_prime("a", "aaaa").value == Rational(1));
  CHECK(ced("a", "aaaa").value == Rational(13, 12));
  CHECK(ced_prime("aab", "aaab").value == Rational(1, 4));
  CHECK(ced_prime("ab", "ab").value == Rational(0));
}

TEST_CASE("metric names round-trip") {
  for (Metric m : {Metric::ed, Metric::ned, Metric::ged, Metric::ced, Metric::ced_prime})
    CHECK(metric_from_name(metric_name(m)) == m);
  CHECK_FALSE(metric_from_name("nope").has_value());
}
