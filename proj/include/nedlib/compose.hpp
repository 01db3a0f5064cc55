#pragma once

#include <cstddef>

#include "nedlib/edit_model.hpp"

namespace nedlib {

/// 1-based positions of the letters under inspection when composition found
/// no matching case; a side that was already exhausted reports length+1.
struct ComposePositions {
  std::size_t pos12 = 0;
  std::size_t pos23 = 0;
};

struct CmpsResult {
  bool defined = false;
  EditPath raw;  // may contain Blank letters
  ComposePositions failed_at;
};

/// Composes two edit paths by the inductive case analysis: deletes on the
/// left and inserts on the right pass through, matching heads fuse, and an
/// insert immediately deleted again collapses to a Blank. Returns undefined
/// (with the offending positions) when the inputs are not a valid chain.
/// Inputs must be Blank-free; throws BlankInPathError otherwise.
CmpsResult cmps_h(const EditPath& p12, const EditPath& p23);

/// Raw composition plus its Blank-free projection and their weight/length
/// bookkeeping. blanks counts the Blank letters of the raw path, so
/// wgt_raw == 2*blanks + wgt_proj and len_raw == 2*blanks + len_proj.
struct ComposeOutcome {
  bool defined = false;
  EditPath raw;
  EditPath projected;
  long long wgt_raw = 0;
  long long len_raw = 0;
  long long wgt_proj = 0;
  long long len_proj = 0;
  long long blanks = 0;
  ComposePositions failed_at;
};

ComposeOutcome compose(const EditPath& p12, const EditPath& p23);

}  // namespace nedlib
