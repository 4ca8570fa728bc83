#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "faultlines/common.hpp"

namespace faultlines {

// Lines are 1-indexed physical lines of the exact text sent to models.
// Columns are 0-indexed byte offsets within a line; end is exclusive.
struct Span {
  int line = 0;
  int col_begin = 0;
  int col_end = 0;

  bool operator==(const Span&) const = default;
};

enum class TokenKind { Identifier, Keyword, Number, String, Comment, Op, Punct };

struct Token {
  TokenKind kind = TokenKind::Punct;
  std::string text;
  int line = 0;
  int col = 0;
  int end_line = 0;  // > line for multi-line strings/comments
  int end_col = 0;

  Span span() const { return Span{line, col, end_col}; }
};

// Loop header with the expression that bounds iteration, when one can be
// isolated on a single physical line.
struct LoopSite {
  int line = 0;
  std::string form;  // "for-range", "for-counted", "while-bound", "for-iter", "while"
  std::optional<Span> bound_span;  // stop / upper-bound expression
  std::optional<Span> start_span;  // start / lower-bound expression
  bool bound_is_int_literal = false;
  bool start_is_int_literal = false;
};

struct OpSite {
  Span span;
  std::string op;
};

// A position where a full statement line may be inserted.
struct StatementBoundary {
  int line = 0;         // insert before this line
  std::string indent;   // leading whitespace of the statement at `line`
  int function_index = -1;  // enclosing function, -1 at top level
  int ordinal = 0;          // statement position within its block, 0-based
};

struct FunctionSpan {
  std::string name;
  int start_line = 0;   // includes decorators / annotations / modifiers
  int header_line = 0;  // line holding the signature
  int end_line = 0;
  int body_first_line = 0;  // 0 when the body could not be located
  std::string return_type;  // Java; empty for constructors and Python
  int nesting = 0;
  int class_index = -1;  // Java: owning class body, -1 otherwise
};

struct CommentSpan {
  int line = 0;
  Span span;          // whole comment token including delimiters
  std::string style;  // "#", "//", "/*"
};

struct IdentifierInfo {
  std::string name;
  int scope_id = 0;  // 0 = file scope, >0 = function scopes
  Span declaration;
  std::vector<Span> occurrences;  // complete within the scope
};

struct SyntaxIndex {
  Language language = Language::PY;
  int line_count = 0;
  std::vector<LoopSite> loop_sites;
  std::vector<OpSite> boolean_op_sites;
  std::vector<OpSite> arith_op_sites;
  std::vector<StatementBoundary> statement_boundaries;
  std::vector<FunctionSpan> function_spans;
  std::vector<CommentSpan> comment_spans;
  std::vector<IdentifierInfo> identifier_table;
  // Java: positions accepting member declarations (unused for Python).
  std::vector<StatementBoundary> member_boundaries;
  std::unordered_set<std::string> identifier_texts;  // every identifier in file
  std::vector<std::string> string_contents;          // literal bodies, quotes stripped
};

// Parses source into the mutation-site index. Throws ParseFailure with
// line/column context when the frontend rejects the text.
SyntaxIndex parse_source(const std::string& source, Language language);

enum class EditKind { ReplaceSpan, InsertLinesBefore, MoveBlock };

struct Edit {
  EditKind kind = EditKind::ReplaceSpan;
  Span span;                       // ReplaceSpan target
  std::string replacement;         // ReplaceSpan text (single line)
  int line = 0;                    // InsertLinesBefore target, MoveBlock destination
  std::vector<std::string> lines;  // InsertLinesBefore payload
  int block_begin = 0;             // MoveBlock source range, inclusive
  int block_end = 0;

  static Edit replace_span(Span s, std::string text);
  static Edit insert_before(int line, std::vector<std::string> new_lines);
  static Edit move_block(int begin, int end, int before_line);
};

// Total mapping from pre-edit line numbers to post-edit line numbers.
class LineLedger {
 public:
  LineLedger() = default;
  static LineLedger identity(int line_count);

  // 0 means the line was deleted.
  int map(int original_line) const;
  bool is_deleted(int original_line) const { return map(original_line) == 0; }
  int original_count() const { return static_cast<int>(to_current_.size()); }
  int current_count() const { return current_count_; }

  // Composition: (a.then(b)).map(x) == b.map(a.map(x)).
  LineLedger then(const LineLedger& next) const;

  std::vector<int>& slots() { return to_current_; }
  void set_current_count(int n) { current_count_ = n; }

 private:
  std::vector<int> to_current_;
  int current_count_ = 0;
};

struct EditResult {
  std::string text;
  LineLedger ledger;
};

// Applies a non-overlapping batch of edits. A MoveBlock must be the only
// edit in its batch. Targets refer to pre-batch line numbers.
EditResult apply_edits(const std::string& source, const std::vector<Edit>& edits);

// Partition of [1, line_count] into four bands; boundaries use the ceiling
// of each 25% multiple. Throws LineOutOfRange.
Quartile quartile_of(int line, int line_count);

// First and last line of a quartile band, both inclusive.
std::pair<int, int> quartile_range(Quartile q, int line_count);

// Text helpers shared by frontends and engines.
std::vector<std::string> split_lines(const std::string& text, bool* had_trailing_newline = nullptr);
std::string join_lines(const std::vector<std::string>& lines, bool trailing_newline);
int count_physical_lines(const std::string& text);
int count_nonblank_lines(const std::string& text);
std::string slice_span(const std::string& source, const Span& span);
std::string leading_whitespace(const std::string& line);

// Token stream access, exposed for the frontends and tests.
std::vector<Token> tokenize(const std::string& source, Language language);

}  // namespace faultlines
