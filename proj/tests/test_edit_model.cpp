#include <doctest.h>

#include "nedlib/edit_model.hpp"

using namespace nedlib;

namespace {

EditPath example_path() {
  // x(a).n(b).c(c>a).n(d).v(e).v(e)
  return {EditLetter::erase('a'),       EditLetter::no_change('b'),
          EditLetter::change('c', 'a'), EditLetter::no_change('d'),
          EditLetter::insert('e'),      EditLetter::insert('e')};
}

}  // namespace

TEST_CASE("apply follows the recursion") {
  ApplyResult r = nedlib::apply(example_path(), "abcd");
  REQUIRE(r.valid);
  CHECK(r.output == "badee");

  CHECK(nedlib::apply({}, "").valid);
  CHECK(nedlib::apply({}, "").output == "");

  ApplyResult mismatch = nedlib::apply({EditLetter::no_change('a')}, "b");
  CHECK_FALSE(mismatch.valid);
  CHECK(mismatch.error.kind == PathError::Kind::invalid_path);
  CHECK(mismatch.error.position == 1);

  ApplyResult leftovers = nedlib::apply({}, "a");
  CHECK_FALSE(leftovers.valid);
  CHECK(leftovers.error.position == 1);

  ApplyResult blank = nedlib::apply({EditLetter::no_change('a'), EditLetter::blank()}, "a");
  CHECK_FALSE(blank.valid);
  CHECK(blank.error.kind == PathError::Kind::blank_in_path);
  CHECK(blank.error.position == 2);

  ApplyResult ran_out = nedlib::apply({EditLetter::no_change('a'), EditLetter::no_change('b')}, "a");
  CHECK_FALSE(ran_out.valid);
  CHECK(ran_out.error.position == 2);
}

TEST_CASE("weights, lengths and costs") {
  const EditPath p = example_path();
  CHECK(wgt(p) == 4);
  CHECK(len(p) == 6);
  CHECK(cost(p) == Rational(2, 3));

  CHECK(wgt(EditPath{}) == 0);
  CHECK(len(EditPath{}) == 0);
  CHECK(cost(EditPath{}) == Rational(0));

  CHECK(wgt(EditLetter::blank()) == 2);
  CHECK(len(EditLetter::blank()) == 2);
  CHECK(len(EditPath{EditLetter::blank(), EditLetter::no_change('a')}) == 3);

  const EditPath nnn(3, EditLetter::no_change('a'));
  CHECK(cost(nnn) == Rational(0));
}

TEST_CASE("reverse_path is the letterwise dual") {
  EditPath p{EditLetter::erase('a'), EditLetter::no_change('b')};
  EditPath expected{EditLetter::insert('a'), EditLetter::no_change('b')};
  CHECK(reverse_path(p) == expected);

  EditPath n{EditLetter::no_change('a')};
  CHECK(reverse_path(n) == n);

  const EditPath example = example_path();
  CHECK(reverse_path(reverse_path(example)) == example);
  CHECK(cost(reverse_path(example)) == cost(example));
  CHECK(is_path_from(reverse_path(example), "badee", "abcd"));

  CHECK_THROWS_AS(reverse_path({EditLetter::blank()}), BlankInPathError);
}

TEST_CASE("project_h drops blanks") {
  EditPath raw{EditLetter::insert('a'), EditLetter::change('a', 'b'), EditLetter::insert('a'),
               EditLetter::no_change('b'), EditLetter::blank(), EditLetter::no_change('a'),
               EditLetter::no_change('b')};
  CHECK(to_bare_text(raw) == "vcvnbnn");
  CHECK(to_bare_text(project_h(raw)) == "vcvnnn");
  CHECK(project_h({EditLetter::blank()}).empty());
  const EditPath clean = example_path();
  CHECK(project_h(clean) == clean);
}

TEST_CASE("project_f maps side symbols away") {
  const AlphabetSet core{'a', 'b'};
  const AlphabetSet side1{'s', 't'};
  const AlphabetSet side2{'x', 'y'};

  CHECK(project_f({EditLetter::change('s', 'a')}, core, side1, side2) ==
        EditPath{EditLetter::insert('a')});
  CHECK(project_f({EditLetter::change('a', 'x')}, core, side1, side2) ==
        EditPath{EditLetter::erase('a')});
  CHECK(project_f({EditLetter::no_change('a')}, core, side1, side2) ==
        EditPath{EditLetter::no_change('a')});
  CHECK(project_f({EditLetter::change('a', 'b')}, core, side1, side2) ==
        EditPath{EditLetter::change('a', 'b')});
  CHECK(project_f({EditLetter::erase('s')}, core, side1, side2).empty());
  CHECK(project_f({EditLetter::insert('y')}, core, side1, side2).empty());
  CHECK(project_f({EditLetter::change('s', 'y')}, core, side1, side2).empty());

  CHECK_THROWS_AS(project_f({}, {'a'}, {'a'}, {'b'}), AlphabetError);
  CHECK_THROWS_AS(project_f({}, {'a'}, {'b'}, {'b'}), AlphabetError);
}

TEST_CASE("project_word filters") {
  CHECK(project_word("abcbacc", {'a', 'b'}) == "abba");
  CHECK(project_word("abc", {'a', 'b', 'c'}) == "abc");
  CHECK(project_word("abc", {}) == "");
}

TEST_CASE("render_alignment pads at inserts and deletes") {
  Alignment one = render_alignment(
      {EditLetter::erase('a'), EditLetter::no_change('c'), EditLetter::erase('b'),
       EditLetter::change('b', 'c')},
      "acbb");
  CHECK(one.source == "acbb");
  CHECK(one.target == "_c_c");

  Alignment two = render_alignment(example_path(), "abcd");
  CHECK(two.source == "abcd__");
  CHECK(two.target == "_badee");

  const Word w = "abab";
  Alignment same = render_alignment(EditPath(w.size(), EditLetter::no_change('a')), "aaaa");
  CHECK(same.source == "aaaa");
  CHECK(same.target == "aaaa");

  CHECK_THROWS_AS(render_alignment({EditLetter::no_change('a')}, "b"), InvalidPathError);
  CHECK_THROWS_AS(render_alignment({EditLetter::blank()}, ""), BlankInPathError);
}

TEST_CASE("text forms round-trip") {
  const EditPath p = example_path();
  CHECK(to_text(p) == "x(a).n(b).c(c>a).n(d).v(e).v(e)");
  CHECK(to_bare_text(p) == "xncnvv");
  CHECK(parse_path(to_text(p)) == p);
  CHECK(parse_path("").empty());
  CHECK(parse_path("B") == EditPath{EditLetter::blank()});

  CHECK_THROWS_AS(parse_path("q(a)"), PathFormatError);
  CHECK_THROWS_AS(parse_path("n(ab)"), PathFormatError);
  CHECK_THROWS_AS(parse_path("c(a>b"), PathFormatError);
}

TEST_CASE("infer_subscripts lifts bare paths onto word pairs") {
  EditPath p12 = infer_subscripts("cvnvnn", "abab", "bcbbab");
  CHECK(to_text(p12) == "c(a>b).v(c).n(b).v(b).n(a).n(b)");
  CHECK(is_path_from(p12, "abab", "bcbbab"));

  EditPath p23 = infer_subscripts("vncnxnn", "bcbbab", "ababab");
  CHECK(to_text(p23) == "v(a).n(b).c(c>a).n(b).x(b).n(a).n(b)");
  CHECK(is_path_from(p23, "bcbbab", "ababab"));

  CHECK(infer_subscripts("", "", "").empty());
  CHECK_THROWS_AS(infer_subscripts("n", "a", "b"), PathFormatError);
  CHECK_THROWS_AS(infer_subscripts("nn", "a", "a"), PathFormatError);
  CHECK_THROWS_AS(infer_subscripts("n", "aa", "aa"), PathFormatError);
}
