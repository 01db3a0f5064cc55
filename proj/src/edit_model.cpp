#include "nedlib/edit_model.hpp"

#include <algorithm>

namespace nedlib {
namespace {

bool in(const AlphabetSet& set, Symbol s) { return set.count(s) != 0; }

}  // namespace

int wgt(const EditLetter& letter) {
  switch (letter.op) {
    case EditOp::NoChange:
      return 0;
    case EditOp::Blank:
      return 2;
    default:
      return 1;
  }
}

int len(const EditLetter& letter) { return letter.op == EditOp::Blank ? 2 : 1; }

long long wgt(const EditPath& path) {
  long long total = 0;
  for (const auto& letter : path) total += wgt(letter);
  return total;
}

long long len(const EditPath& path) {
  long long total = 0;
  for (const auto& letter : path) total += len(letter);
  return total;
}

Rational cost(const EditPath& path) {
  const long long l = len(path);
  if (l == 0) return Rational(0);
  return Rational(wgt(path), l);
}

ApplyResult apply(const EditPath& path, const Word& word) {
  ApplyResult result;
  result.output.reserve(word.size() + path.size());
  std::size_t w = 0;  // next unconsumed source symbol
  for (std::size_t i = 0; i < path.size(); ++i) {
    const EditLetter& letter = path[i];
    switch (letter.op) {
      case EditOp::Blank:
        result.error = {PathError::Kind::blank_in_path, i + 1};
        return result;
      case EditOp::Insert:
        result.output.push_back(letter.to);
        break;
      case EditOp::NoChange:
      case EditOp::Change:
      case EditOp::Delete:
        if (w >= word.size() || word[w] != letter.from) {
          result.error = {PathError::Kind::invalid_path, i + 1};
          return result;
        }
        if (letter.op != EditOp::Delete) result.output.push_back(letter.to);
        ++w;
        break;
    }
  }
  if (w != word.size()) {
    result.error = {PathError::Kind::invalid_path, path.size() + 1};
    return result;
  }
  result.valid = true;
  return result;
}

bool is_path_from(const EditPath& path, const Word& from, const Word& to) {
  ApplyResult r = apply(path, from);
  return r.valid && r.output == to;
}

EditPath reverse_path(const EditPath& path) {
  EditPath out;
  out.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const EditLetter& letter = path[i];
    switch (letter.op) {
      case EditOp::NoChange:
        out.push_back(letter);
        break;
      case EditOp::Change:
        out.push_back(EditLetter::change(letter.to, letter.from));
        break;
      case EditOp::Insert:
        out.push_back(EditLetter::erase(letter.to));
        break;
      case EditOp::Delete:
        out.push_back(EditLetter::insert(letter.from));
        break;
      case EditOp::Blank:
        throw BlankInPathError(i + 1);
    }
  }
  return out;
}

EditPath project_h(const EditPath& path) {
  EditPath out;
  out.reserve(path.size());
  for (const auto& letter : path)
    if (letter.op != EditOp::Blank) out.push_back(letter);
  return out;
}

EditPath project_f(const EditPath& path, const AlphabetSet& core, const AlphabetSet& side1,
                   const AlphabetSet& side2) {
  for (Symbol s : core)
    if (in(side1, s) || in(side2, s)) throw AlphabetError("core overlaps a side alphabet");
  for (Symbol s : side1)
    if (in(side2, s)) throw AlphabetError("side alphabets overlap");

  EditPath out;
  out.reserve(path.size());
  for (const auto& letter : path) {
    switch (letter.op) {
      case EditOp::NoChange:
      case EditOp::Delete:
        if (in(core, letter.from)) out.push_back(letter);
        break;
      case EditOp::Insert:
        if (in(core, letter.to)) out.push_back(letter);
        break;
      case EditOp::Change:
        if (in(core, letter.from) && in(core, letter.to)) {
          out.push_back(letter);
        } else if (in(side1, letter.from) && in(core, letter.to)) {
          out.push_back(EditLetter::insert(letter.to));
        } else if (in(core, letter.from) && in(side2, letter.to)) {
          out.push_back(EditLetter::erase(letter.from));
        }
        break;
      case EditOp::Blank:
        break;
    }
  }
  return out;
}

Word project_word(const Word& word, const AlphabetSet& keep) {
  Word out;
  out.reserve(word.size());
  for (Symbol s : word)
    if (in(keep, s)) out.push_back(s);
  return out;
}

Alignment render_alignment(const EditPath& path, const Word& word) {
  Alignment rows;
  rows.source.reserve(path.size());
  rows.target.reserve(path.size());
  std::size_t w = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const EditLetter& letter = path[i];
    switch (letter.op) {
      case EditOp::Blank:
        throw BlankInPathError(i + 1);
      case EditOp::Insert:
        rows.source.push_back(kPadGlyph);
        rows.target.push_back(letter.to);
        break;
      case EditOp::Delete:
      case EditOp::NoChange:
      case EditOp::Change:
        if (w >= word.size() || word[w] != letter.from) throw InvalidPathError(i + 1);
        rows.source.push_back(letter.from);
        rows.target.push_back(letter.op == EditOp::Delete ? kPadGlyph : letter.to);
        ++w;
        break;
    }
  }
  if (w != word.size()) throw InvalidPathError(path.size() + 1);
  return rows;
}

std::string to_text(const EditLetter& letter) {
  switch (letter.op) {
    case EditOp::NoChange:
      return std::string("n(") + letter.from + ")";
    case EditOp::Change:
      return std::string("c(") + letter.from + ">" + letter.to + ")";
    case EditOp::Insert:
      return std::string("v(") + letter.to + ")";
    case EditOp::Delete:
      return std::string("x(") + letter.from + ")";
    case EditOp::Blank:
      return "B";
  }
  return {};
}

std::string to_text(const EditPath& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out.push_back('.');
    out += to_text(path[i]);
  }
  return out;
}

std::string to_bare_text(const EditPath& path) {
  std::string out;
  out.reserve(path.size());
  for (const auto& letter : path) {
    switch (letter.op) {
      case EditOp::NoChange:
        out.push_back('n');
        break;
      case EditOp::Change:
        out.push_back('c');
        break;
      case EditOp::Insert:
        out.push_back('v');
        break;
      case EditOp::Delete:
        out.push_back('x');
        break;
      case EditOp::Blank:
        out.push_back('b');
        break;
    }
  }
  return out;
}

namespace {

[[noreturn]] void bad_token(std::string_view token) {
  throw PathFormatError("cannot parse edit letter '" + std::string(token) + "'");
}

EditLetter parse_letter(std::string_view token) {
  if (token == "B") return EditLetter::blank();
  if (token.size() == 4 && token[1] == '(' && token[3] == ')') {
    Symbol s = token[2];
    switch (token[0]) {
      case 'n':
        return EditLetter::no_change(s);
      case 'v':
        return EditLetter::insert(s);
      case 'x':
        return EditLetter::erase(s);
      default:
        bad_token(token);
    }
  }
  if (token.size() == 6 && token[0] == 'c' && token[1] == '(' && token[3] == '>' &&
      token[5] == ')') {
    return EditLetter::change(token[2], token[4]);
  }
  bad_token(token);
}

}  // namespace

EditPath parse_path(std::string_view text) {
  EditPath path;
  if (text.empty()) return path;
  std::size_t start = 0;
  while (true) {
    std::size_t dot = text.find('.', start);
    std::string_view token =
        dot == std::string_view::npos ? text.substr(start) : text.substr(start, dot - start);
    path.push_back(parse_letter(token));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return path;
}

EditPath infer_subscripts(std::string_view bare, const Word& source, const Word& target) {
  EditPath path;
  path.reserve(bare.size());
  std::size_t s = 0, t = 0;
  for (std::size_t i = 0; i < bare.size(); ++i) {
    char op = bare[i];
    if (op == ' ' || op == '.') continue;
    switch (op) {
      case 'n':
        if (s >= source.size() || t >= target.size() || source[s] != target[t])
          throw PathFormatError("bare path: no-change at position " + std::to_string(i + 1) +
                                " does not match the words");
        path.push_back(EditLetter::no_change(source[s]));
        ++s, ++t;
        break;
      case 'c':
        if (s >= source.size() || t >= target.size())
          throw PathFormatError("bare path: change at position " + std::to_string(i + 1) +
                                " overruns a word");
        path.push_back(EditLetter::change(source[s], target[t]));
        ++s, ++t;
        break;
      case 'v':
        if (t >= target.size())
          throw PathFormatError("bare path: insert at position " + std::to_string(i + 1) +
                                " overruns the target");
        path.push_back(EditLetter::insert(target[t]));
        ++t;
        break;
      case 'x':
        if (s >= source.size())
          throw PathFormatError("bare path: delete at position " + std::to_string(i + 1) +
                                " overruns the source");
        path.push_back(EditLetter::erase(source[s]));
        ++s;
        break;
      default:
        throw PathFormatError(std::string("bare path: unknown letter '") + op + "'");
    }
  }
  if (s != source.size() || t != target.size())
    throw PathFormatError("bare path does not cover both words");
  return path;
}

}  // namespace nedlib
