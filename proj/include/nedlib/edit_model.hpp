#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nedlib/rational.hpp"

namespace nedlib {

// Words are plain byte strings: one char per alphabet symbol. The algorithms
// never interpret the bytes beyond equality, so any 8-bit alphabet works.
using Symbol = char;
using Word = std::string;
using AlphabetSet = std::set<Symbol>;

/// Glyph used to pad alignment rows. The CLI refuses it inside input words so
/// rendered alignments stay unambiguous.
inline constexpr char kPadGlyph = '_';

enum class EditOp : std::uint8_t { NoChange, Change, Insert, Delete, Blank };

/// One edit operation over the subscripted alphabet: `from` is the symbol
/// consumed from the source word, `to` the symbol produced in the target.
/// Unused slots stay 0. Blank carries no symbols; it only ever appears in
/// raw composition output, never in paths meant for apply().
struct EditLetter {
  EditOp op = EditOp::NoChange;
  Symbol from = 0;
  Symbol to = 0;

  static EditLetter no_change(Symbol s) { return {EditOp::NoChange, s, s}; }
  static EditLetter change(Symbol a, Symbol b) { return {EditOp::Change, a, b}; }
  static EditLetter insert(Symbol s) { return {EditOp::Insert, 0, s}; }
  static EditLetter erase(Symbol s) { return {EditOp::Delete, s, 0}; }
  static EditLetter blank() { return {EditOp::Blank, 0, 0}; }

  friend bool operator==(const EditLetter&, const EditLetter&) = default;
};

using EditPath = std::vector<EditLetter>;

/// Why apply() rejected a path, and where. Positions are 1-based letter
/// indices; when the path ran out with source symbols left over, position is
/// one past the final letter.
struct PathError {
  enum class Kind { invalid_path, blank_in_path };
  Kind kind = Kind::invalid_path;
  std::size_t position = 0;
};

struct ApplyResult {
  bool valid = false;
  Word output;
  PathError error;
};

class EditModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BlankInPathError : public EditModelError {
 public:
  explicit BlankInPathError(std::size_t position)
      : EditModelError("blank letter at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class InvalidPathError : public EditModelError {
 public:
  explicit InvalidPathError(std::size_t position)
      : EditModelError("path does not apply to the word; first mismatch at position " +
                       std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class AlphabetError : public EditModelError {
 public:
  using EditModelError::EditModelError;
};

class PathFormatError : public EditModelError {
 public:
  using EditModelError::EditModelError;
};

// Weights and lengths. NoChange weighs 0, Change/Insert/Delete weigh 1,
// Blank weighs 2 and also counts 2 toward length (it abbreviates an
// insert-then-delete pair).
int wgt(const EditLetter& letter);
int len(const EditLetter& letter);
long long wgt(const EditPath& path);
long long len(const EditPath& path);

/// Weight divided by length, or 0 for the empty path.
Rational cost(const EditPath& path);

/// Runs the path against a source word. Blank letters and mismatched symbols
/// make the result invalid rather than throwing: invalid paths are an
/// ordinary data-level outcome here.
ApplyResult apply(const EditPath& path, const Word& word);

/// True iff `path` transforms `from` into `to`.
bool is_path_from(const EditPath& path, const Word& from, const Word& to);

/// Letterwise dual: swaps inserts with deletes and flips change pairs, so the
/// result transforms apply(path, w) back into w at the same cost.
/// Throws BlankInPathError on Blank letters.
EditPath reverse_path(const EditPath& path);

/// Drops every Blank letter, keeping the rest in order.
EditPath project_h(const EditPath& path);

/// Projects a path over core+side1+side2 symbols down to one over core:
/// letters fully over core pass through, a change from side1 into core
/// becomes an insert, a change from core into side2 becomes a delete, and
/// everything else vanishes. The three alphabets must be pairwise disjoint.
EditPath project_f(const EditPath& path, const AlphabetSet& core, const AlphabetSet& side1,
                   const AlphabetSet& side2);

/// Subsequence of `word` made of the symbols in `keep`.
Word project_word(const Word& word, const AlphabetSet& keep);

/// Equal-length rows induced by a path: the source word padded at each
/// insert, and the transformed word padded at each delete. The rows disagree
/// exactly where the path spends weight (degenerate same-symbol changes
/// excepted).
struct Alignment {
  std::string source;
  std::string target;
};

/// Throws InvalidPathError when apply(path, word) would fail, and
/// BlankInPathError on Blank letters.
Alignment render_alignment(const EditPath& path, const Word& word);

// Text forms. The subscripted form is the machine format:
//   x(a).n(b).c(c>a).n(d).v(e).v(e)     with `B` for a blank letter.
// The bare form drops the subscripts for display: "xncnvv", blank as 'b'.
std::string to_text(const EditLetter& letter);
std::string to_text(const EditPath& path);
std::string to_bare_text(const EditPath& path);

/// Parses the subscripted text form. Throws PathFormatError.
EditPath parse_path(std::string_view text);

/// Lifts a bare-letter display string onto concrete words by simulating the
/// walk from `source` to `target`, filling in the subscripts. Throws
/// PathFormatError when the bare path does not fit the word pair.
EditPath infer_subscripts(std::string_view bare, const Word& source, const Word& target);

}  // namespace nedlib
