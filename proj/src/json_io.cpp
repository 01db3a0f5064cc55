#include "nedlib/json_io.hpp"

#include <cstdio>

namespace nedlib {

Json path_to_json(const EditPath& path) {
  Json array = Json::array();
  for (const auto& letter : path) {
    Json record;
    switch (letter.op) {
      case EditOp::NoChange:
        record["op"] = "n";
        record["sym"] = std::string(1, letter.from);
        break;
      case EditOp::Change:
        record["op"] = "c";
        record["from"] = std::string(1, letter.from);
        record["to"] = std::string(1, letter.to);
        break;
      case EditOp::Insert:
        record["op"] = "v";
        record["sym"] = std::string(1, letter.to);
        break;
      case EditOp::Delete:
        record["op"] = "x";
        record["sym"] = std::string(1, letter.from);
        break;
      case EditOp::Blank:
        record["op"] = "b";
        break;
    }
    array.push_back(std::move(record));
  }
  return array;
}

namespace {

Symbol one_symbol(const Json& json, const char* key) {
  const std::string s = json.at(key).get<std::string>();
  if (s.size() != 1) throw PathFormatError("JSON edit letter: field must hold one symbol");
  return s[0];
}

}  // namespace

EditPath path_from_json(const Json& json) {
  EditPath path;
  for (const auto& record : json) {
    const std::string op = record.at("op").get<std::string>();
    if (op == "n")
      path.push_back(EditLetter::no_change(one_symbol(record, "sym")));
    else if (op == "c")
      path.push_back(EditLetter::change(one_symbol(record, "from"), one_symbol(record, "to")));
    else if (op == "v")
      path.push_back(EditLetter::insert(one_symbol(record, "sym")));
    else if (op == "x")
      path.push_back(EditLetter::erase(one_symbol(record, "sym")));
    else if (op == "b")
      path.push_back(EditLetter::blank());
    else
      throw PathFormatError("JSON edit letter: unknown op '" + op + "'");
  }
  return path;
}

std::string decimal_string(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", value.to_double());
  return buffer;
}

Json result_to_json(const DistanceResult& result) {
  Json json;
  json["metric"] = std::string(metric_name(result.metric));
  json["value"] = Json{{"num", result.value.num()}, {"den", result.value.den()}};
  json["value_decimal"] = result.value.to_double();
  if (result.witness) json["witness"] = to_text(*result.witness);
  if (!result.chain.empty()) json["chain"] = result.chain;
  return json;
}

Json report_to_json(const PropertyReport& report) {
  Json json;
  json["property"] = report.property_id;
  json["mode"] = report.exhaustive ? "exhaustive" : "fuzz";
  json["seed"] = report.seed;
  json["trials_run"] = report.trials_run;
  json["outcome"] = report.pass ? "pass" : "fail";
  if (report.counterexample) {
    json["counterexample"] =
        Json{{"words", report.counterexample->words}, {"detail", report.counterexample->detail}};
  }
  json["notes"] = report.notes;
  json["elapsed_ms"] = report.elapsed_ms;
  return json;
}

Json reports_to_json(const std::vector<PropertyReport>& reports, std::uint64_t seed) {
  bool all_pass = true;
  Json array = Json::array();
  for (const auto& report : reports) {
    all_pass = all_pass && report.pass;
    array.push_back(report_to_json(report));
  }
  Json json;
  json["seed"] = seed;
  json["all_pass"] = all_pass;
  json["reports"] = std::move(array);
  return json;
}

namespace {

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted.push_back('"');
  return quoted;
}

}  // namespace

std::string csv_header() { return "metric,a,b,num,den,decimal"; }

std::string csv_row(const DistanceResult& result, const Word& a, const Word& b) {
  std::string row(metric_name(result.metric));
  row += "," + csv_field(a) + "," + csv_field(b) + "," + std::to_string(result.value.num()) +
         "," + std::to_string(result.value.den()) + "," + decimal_string(result.value);
  return row;
}

}  // namespace nedlib
