#include "nedlib/compose.hpp"

namespace nedlib {

CmpsResult cmps_h(const EditPath& p12, const EditPath& p23) {
  for (std::size_t i = 0; i < p12.size(); ++i)
    if (p12[i].op == EditOp::Blank) throw BlankInPathError(i + 1);
  for (std::size_t j = 0; j < p23.size(); ++j)
    if (p23[j].op == EditOp::Blank) throw BlankInPathError(j + 1);

  CmpsResult result;
  std::size_t i = 0, j = 0;
  while (i < p12.size() || j < p23.size()) {
    // A delete on the first leg never touches the middle word, so it passes
    // through before anything else; likewise an insert on the second leg.
    if (i < p12.size() && p12[i].op == EditOp::Delete) {
      result.raw.push_back(p12[i]);
      ++i;
      continue;
    }
    if (j < p23.size() && p23[j].op == EditOp::Insert) {
      result.raw.push_back(p23[j]);
      ++j;
      continue;
    }
    if (i < p12.size() && j < p23.size()) {
      const EditLetter& l12 = p12[i];
      const EditLetter& l23 = p23[j];
      bool matched = true;
      // The remaining cases pair a letter producing a middle symbol with a
      // letter consuming the same symbol.
      if (l12.op == EditOp::NoChange && l23.op == EditOp::NoChange && l12.to == l23.from) {
        result.raw.push_back(l12);
      } else if (l12.op == EditOp::NoChange && l23.op == EditOp::Change && l12.to == l23.from) {
        result.raw.push_back(EditLetter::change(l12.from, l23.to));
      } else if (l12.op == EditOp::NoChange && l23.op == EditOp::Delete && l12.to == l23.from) {
        result.raw.push_back(EditLetter::erase(l12.from));
      } else if (l12.op == EditOp::Change && l23.op == EditOp::Change && l12.to == l23.from) {
        result.raw.push_back(EditLetter::change(l12.from, l23.to));
      } else if (l12.op == EditOp::Change && l23.op == EditOp::Delete && l12.to == l23.from) {
        result.raw.push_back(EditLetter::erase(l12.from));
      } else if (l12.op == EditOp::Change && l23.op == EditOp::NoChange && l12.to == l23.from) {
        result.raw.push_back(l12);
      } else if (l12.op == EditOp::Insert && l23.op == EditOp::NoChange && l12.to == l23.from) {
        result.raw.push_back(l12);
      } else if (l12.op == EditOp::Insert && l23.op == EditOp::Change && l12.to == l23.from) {
        result.raw.push_back(EditLetter::insert(l23.to));
      } else if (l12.op == EditOp::Insert && l23.op == EditOp::Delete && l12.to == l23.from) {
        result.raw.push_back(EditLetter::blank());
      } else {
        matched = false;
      }
      if (matched) {
        ++i;
        ++j;
        continue;
      }
    }
    result.failed_at = {i + 1, j + 1};
    result.raw.clear();
    return result;
  }
  result.defined = true;
  return result;
}

ComposeOutcome compose(const EditPath& p12, const EditPath& p23) {
  CmpsResult raw = cmps_h(p12, p23);
  ComposeOutcome outcome;
  outcome.defined = raw.defined;
  outcome.failed_at = raw.failed_at;
  if (!raw.defined) return outcome;
  outcome.raw = std::move(raw.raw);
  outcome.projected = project_h(outcome.raw);
  outcome.wgt_raw = wgt(outcome.raw);
  outcome.len_raw = len(outcome.raw);
  outcome.wgt_proj = wgt(outcome.projected);
  outcome.len_proj = len(outcome.projected);
  outcome.blanks = static_cast<long long>(outcome.raw.size() - outcome.projected.size());
  return outcome;
}

}  // namespace nedlib
