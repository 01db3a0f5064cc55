#include <doctest.h>

#include "nedlib/compose.hpp"
#include "nedlib/metrics.hpp"
#include "nedlib/oracle.hpp"

using namespace nedlib;

TEST_CASE("cmps_h base and blank cases") {
  CHECK(cmps_h({}, {}).defined);
  CHECK(cmps_h({}, {}).raw.empty());

  CmpsResult collapsed = cmps_h({EditLetter::insert('a')}, {EditLetter::erase('a')});
  REQUIRE(collapsed.defined);
  CHECK(collapsed.raw == EditPath{EditLetter::blank()});

  CmpsResult undef = cmps_h({EditLetter::no_change('a')}, {EditLetter::erase('b')});
  CHECK_FALSE(undef.defined);
  CHECK(undef.failed_at.pos12 == 1);
  CHECK(undef.failed_at.pos23 == 1);

  CHECK_THROWS_AS(cmps_h({EditLetter::blank()}, {}), BlankInPathError);
  CHECK_THROWS_AS(cmps_h({}, {EditLetter::blank()}), BlankInPathError);
}

TEST_CASE("one-sided tails compose") {
  // Deletes on the left pass through when the right side is spent, and
  // vice versa for inserts.
  CmpsResult left = cmps_h({EditLetter::erase('a'), EditLetter::erase('b')}, {});
  REQUIRE(left.defined);
  CHECK(to_bare_text(left.raw) == "xx");

  CmpsResult right = cmps_h({}, {EditLetter::insert('a')});
  REQUIRE(right.defined);
  CHECK(to_bare_text(right.raw) == "v");

  CmpsResult stuck = cmps_h({EditLetter::no_change('a')}, {});
  CHECK_FALSE(stuck.defined);
  CHECK(stuck.failed_at.pos12 == 1);
  CHECK(stuck.failed_at.pos23 == 1);  // exhausted side: length + 1
}

TEST_CASE("the worked composition example") {
  const Word s1 = "abab", s2 = "bcbbab", s3 = "ababab";
  const EditPath p12 = infer_subscripts("cvnvnn", s1, s2);
  const EditPath p23 = infer_subscripts("vncnxnn", s2, s3);

  ComposeOutcome outcome = compose(p12, p23);
  REQUIRE(outcome.defined);
  CHECK(to_bare_text(outcome.raw) == "vcvnbnn");
  CHECK(to_text(outcome.raw) == "v(a).c(a>b).v(a).n(b).B.n(a).n(b)");
  CHECK(to_bare_text(outcome.projected) == "vcvnnn");
  CHECK(is_path_from(outcome.projected, s1, s3));
  CHECK(cost(outcome.projected) == Rational(1, 2));

  CHECK(outcome.wgt_raw == 5);
  CHECK(outcome.len_raw == 8);
  CHECK(outcome.wgt_proj == 3);
  CHECK(outcome.len_proj == 6);
  CHECK(outcome.blanks == 1);
  CHECK(outcome.wgt_raw <= wgt(p12) + wgt(p23));
  CHECK(outcome.len_raw >= std::max(len(p12), len(p23)));
  CHECK(cost(outcome.raw) <= cost(p12) + cost(p23));
  CHECK(cost(outcome.projected) <= cost(outcome.raw));

  // The composed path is legitimately worse than the direct optimum.
  CHECK(ned(s1, s3).value == Rational(1, 3));
  CHECK(ned(s1, s3).value < cost(outcome.projected));
}

TEST_CASE("composing identity paths is the identity") {
  const Word w = "abca";
  EditPath id;
  for (char c : w) id.push_back(EditLetter::no_change(c));
  ComposeOutcome outcome = compose(id, id);
  REQUIRE(outcome.defined);
  CHECK(outcome.raw == id);
  CHECK(outcome.wgt_raw == 0);
  CHECK(outcome.len_raw == static_cast<long long>(w.size()));
}

TEST_CASE("chains from optimal witnesses always compose") {
  EnumBudget budget;
  budget.alphabet = "ab";
  budget.max_len = 3;
  const std::vector<Word> words = enumerate_words(budget);
  for (const Word& s1 : words)
    for (const Word& s2 : words)
      for (const Word& s3 : words) {
        const EditPath p12 = *ned(s1, s2, true).witness;
        const EditPath p23 = *ned(s2, s3, true).witness;
        ComposeOutcome outcome = compose(p12, p23);
        REQUIRE(outcome.defined);
        REQUIRE(is_path_from(outcome.projected, s1, s3));
        REQUIRE(outcome.wgt_raw <= wgt(p12) + wgt(p23));
        REQUIRE(outcome.len_raw >= std::max(len(p12), len(p23)));
        REQUIRE(cost(outcome.raw) <= cost(p12) + cost(p23));
        REQUIRE(cost(outcome.projected) <= cost(outcome.raw));
        REQUIRE(outcome.wgt_raw == 2 * outcome.blanks + outcome.wgt_proj);
        REQUIRE(outcome.len_raw == 2 * outcome.blanks + outcome.len_proj);
      }
}
