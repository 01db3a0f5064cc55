#include <doctest.h>

#include "nedlib/propcheck.hpp"

using namespace nedlib;

namespace {

FuzzConfig quick(long trials, int max_len = 8) {
  FuzzConfig cfg;
  cfg.seed = 0;
  cfg.trials = trials;
  cfg.alphabet_size = 3;
  cfg.max_word_len = max_len;
  return cfg;
}

}  // namespace

TEST_CASE("edit-model property holds") {
  PropertyReport report = check_edit_model(quick(400));
  CHECK(report.pass);
  CHECK(report.trials_run == 400);
}

TEST_CASE("metric axioms hold for the real metrics") {
  CHECK(check_metric_axioms(CheckMetric::ed, quick(300)).pass);
  CHECK(check_metric_axioms(CheckMetric::ned, quick(300)).pass);
  CHECK(check_metric_axioms(CheckMetric::ged, quick(300)).pass);
  PropertyReport ced_report = check_metric_axioms(CheckMetric::ced, quick(60));
  CHECK(ced_report.pass);
  CHECK(ced_report.trials_run == 60);
}

TEST_CASE("post-normalized variant fails the axioms and the failure replays") {
  PropertyReport report = check_metric_axioms(CheckMetric::post_normalized, quick(5000));
  REQUIRE_FALSE(report.pass);
  REQUIRE(report.counterexample.has_value());
  CHECK(report.counterexample->words.size() == 3);
  CHECK(replay_counterexample(report.property_id, *report.counterexample));

  // The shrinker's contract: no single deletion keeps the triple failing.
  const auto& words = report.counterexample->words;
  for (std::size_t wi = 0; wi < words.size(); ++wi)
    for (std::size_t pos = 0; pos < words[wi].size(); ++pos) {
      Counterexample smaller{words, ""};
      smaller.words[wi].erase(pos, 1);
      CHECK_FALSE(replay_counterexample(report.property_id, smaller));
    }
}

TEST_CASE("a concrete post-normalized triangle violation") {
  const Rational direct = post_normalized_distance("ab", "ba");
  const Rational via = post_normalized_distance("ab", "aba") + post_normalized_distance("aba", "ba");
  CHECK(direct == Rational(1, 2));
  CHECK(via == Rational(2, 5));
  CHECK(direct > via);
}

TEST_CASE("post-normalized demo finds a violation") {
  PropertyReport report = check_post_normalized_demo(quick(5000));
  CHECK(report.pass);
  REQUIRE_FALSE(report.notes.empty());
}

TEST_CASE("antitheticals") {
  PropertyReport report = check_antitheticals(quick(300));
  CHECK(report.pass);
  REQUIRE(report.notes.size() >= 2);
}

TEST_CASE("non-escalation and the contextual escalation ladder") {
  CHECK(check_non_escalation(Metric::ned, "aab", "aaab", 5).pass);
  CHECK(check_non_escalation(Metric::ged, "aab", "aaab", 5).pass);

  PropertyReport ladder = check_non_escalation(Metric::ced, "aab", "aaab", 3);
  CHECK(ladder.pass);
  bool saw_first = false, saw_second = false, saw_third = false;
  for (const auto& note : ladder.notes) {
    saw_first = saw_first || note.find("= 1/4") != std::string::npos;
    saw_second = saw_second || note.find("= 15/56") != std::string::npos;
    saw_third = saw_third || note.find("= 181/660") != std::string::npos;
  }
  CHECK(saw_first);
  CHECK(saw_second);
  CHECK(saw_third);
}

TEST_CASE("pure uniformity") {
  PropertyReport report = check_pure_uniformity("ab", "abbab", quick(60));
  CHECK(report.pass);
  bool recorded_ged = false, recorded_ced = false;
  for (const auto& note : report.notes) {
    recorded_ged = recorded_ged || note.find("ged violation") != std::string::npos;
    recorded_ced = recorded_ced || note.find("ced violation") != std::string::npos;
  }
  CHECK(recorded_ged);
  CHECK(recorded_ced);
}

TEST_CASE("compose chains") {
  PropertyReport report = check_compose_chain(quick(300));
  CHECK(report.pass);
}

TEST_CASE("fraction lemmas on a reduced grid") {
  PropertyReport report = check_fraction_lemmas(quick(1), 60);
  CHECK(report.pass);
  CHECK(report.exhaustive);
}

TEST_CASE("property registry runs everything") {
  FuzzConfig cfg = quick(40, 6);
  for (const auto& id : property_ids()) {
    auto report = run_property(id, cfg);
    REQUIRE(report.has_value());
    CHECK(report->property_id == id);
    CHECK(report->pass);
  }
  CHECK_FALSE(run_property("no-such-property", cfg).has_value());
}

TEST_CASE("identical configs give identical reports modulo timing") {
  for (const auto& id : {"metric-axioms-ned", "compose-chain", "antitheticals"}) {
    FuzzConfig cfg = quick(120, 7);
    cfg.seed = 42;
    PropertyReport one = *run_property(id, cfg);
    PropertyReport two = *run_property(id, cfg);
    CHECK(one.property_id == two.property_id);
    CHECK(one.trials_run == two.trials_run);
    CHECK(one.pass == two.pass);
    CHECK(one.notes == two.notes);
    CHECK(one.counterexample.has_value() == two.counterexample.has_value());
    if (one.counterexample) {
      CHECK(one.counterexample->words == two.counterexample->words);
      CHECK(one.counterexample->detail == two.counterexample->detail);
    }
  }
}
