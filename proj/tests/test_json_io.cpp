#include <doctest.h>

#include "nedlib/json_io.hpp"

using namespace nedlib;

TEST_CASE("path JSON round-trips") {
  const EditPath path{EditLetter::erase('a'), EditLetter::no_change('b'),
                      EditLetter::change('c', 'a'), EditLetter::insert('e'),
                      EditLetter::blank()};
  CHECK(path_from_json(path_to_json(path)) == path);
  CHECK(path_to_json(path)[0]["op"] == "x");
  CHECK(path_to_json(path)[4]["op"] == "b");
}

TEST_CASE("distance results serialize to the documented shape") {
  DistanceResult result;
  result.metric = Metric::ned;
  result.value = Rational(3, 4);
  result.witness = EditPath{EditLetter::erase('a'), EditLetter::no_change('c'),
                            EditLetter::erase('b'), EditLetter::change('b', 'c')};
  Json json = result_to_json(result);
  CHECK(json["metric"] == "ned");
  CHECK(json["value"]["num"] == 3);
  CHECK(json["value"]["den"] == 4);
  CHECK(json["value_decimal"] == 0.75);
  CHECK(json["witness"] == "x(a).n(c).x(b).c(b>c)");

  // Emitted bytes parse back and re-render identically.
  const std::string bytes = json.dump();
  CHECK(Json::parse(bytes).dump() == bytes);
}

TEST_CASE("chains serialize for the contextual metric") {
  DistanceResult result;
  result.metric = Metric::ced;
  result.value = Rational(1, 4);
  result.chain = {"aab", "aaab"};
  Json json = result_to_json(result);
  CHECK(json["chain"].size() == 2);
  CHECK_FALSE(json.contains("witness"));
}

TEST_CASE("csv output") {
  DistanceResult result;
  result.metric = Metric::ged;
  result.value = Rational(2, 3);
  CHECK(csv_header() == "metric,a,b,num,den,decimal");
  CHECK(csv_row(result, "aa", "bb") == "ged,aa,bb,2,3,0.666667");

  DistanceResult zero;
  zero.metric = Metric::ned;
  zero.value = Rational(0);
  CHECK(csv_row(zero, "", "") == "ned,,,0,1,0");

  DistanceResult quoted;
  quoted.metric = Metric::ed;
  quoted.value = Rational(1);
  CHECK(csv_row(quoted, "a,b", "c") == "ed,\"a,b\",c,1,1,1");
}

TEST_CASE("decimal rendering uses six significant digits") {
  CHECK(decimal_string(Rational(3, 4)) == "0.75");
  CHECK(decimal_string(Rational(4, 7)) == "0.571429");
  CHECK(decimal_string(Rational(0)) == "0");
  CHECK(decimal_string(Rational(1)) == "1");
  CHECK(decimal_string(Rational(181, 660)) == "0.274242");
}

TEST_CASE("report JSON round-trips and keeps field order") {
  PropertyReport report;
  report.property_id = "metric-axioms-ned";
  report.seed = 7;
  report.trials_run = 10;
  report.pass = false;
  report.counterexample = Counterexample{{"ab", "aba", "ba"}, "triangle violated"};
  report.notes = {"alphabet=3 max-len=12"};
  report.elapsed_ms = 1.5;

  Json json = report_to_json(report);
  CHECK(json["property"] == "metric-axioms-ned");
  CHECK(json["outcome"] == "fail");
  CHECK(json["counterexample"]["words"].size() == 3);
  const std::string bytes = json.dump();
  CHECK(Json::parse(bytes).dump() == bytes);

  Json wrapped = reports_to_json({report}, 7);
  CHECK(wrapped["all_pass"] == false);
  CHECK(wrapped["reports"].size() == 1);
}
