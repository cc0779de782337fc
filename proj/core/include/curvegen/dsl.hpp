#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "curvegen/decision.hpp"
#include "curvegen/formal_object.hpp"

namespace curvegen::dsl {

/// One `+`-separated summand of an object declaration, as written.
struct DeclaredPiece {
  SemistablePiece piece;
  std::int64_t shift = 0;
  bool hn_only = false;

  friend bool operator==(const DeclaredPiece&, const DeclaredPiece&) = default;
};

struct ObjectDecl {
  std::string name;
  std::vector<DeclaredPiece> summands;

  /// Summand `[n]` lands in cohomological degree -n. A degree is HN-only if
  /// any of its summands says so, except on genus zero.
  FormalObject build(const Curve& curve) const;

  friend bool operator==(const ObjectDecl&, const ObjectDecl&) = default;
};

enum class QueryKind { Analyze, Pairing, Semiorth, Faltings };

std::string_view to_string(QueryKind kind);

struct Query {
  QueryKind kind;
  std::string left;
  std::string right;  ///< empty for single-object queries

  friend bool operator==(const Query&, const Query&) = default;
};

struct AnalysisRequest {
  Curve curve{0};
  std::vector<ObjectDecl> objects;
  /// Resolved to piece labels. A positional reference `E.2` to an unlabelled
  /// piece gives that piece the label "E.2".
  std::vector<Assumption> assumptions;
  std::vector<Query> queries;

  const ObjectDecl* find(std::string_view name) const;
  /// Assumptions whose two labels both occur in the object.
  std::vector<Assumption> assumptions_for(const ObjectDecl& decl) const;

  friend bool operator==(const AnalysisRequest&, const AnalysisRequest&) = default;
};

enum class ParseErrorKind { Syntax, Semantic };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, int column, std::string message, std::vector<std::string> expected = {});

  ParseErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  /// Bare message without the position prefix.
  const std::string& message() const noexcept { return message_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  ParseErrorKind kind_;
  int line_;
  int column_;
  std::string message_;
  std::vector<std::string> expected_;
};

/// Parses a request:
///
///   request     := curve_decl { decl } { query }
///   curve_decl  := "curve" "genus" INT
///   decl        := object_decl | assume_decl
///   object_decl := "object" NAME "=" sheaf_expr { "+" sheaf_expr }
///   sheaf_expr  := piece [ "[" INT "]" ]
///   piece       := "bundle" "(" "r=" INT "," "d=" INT { "," attr } ")" | "tors" "(" "len=" INT ")"
///   attr        := "h0=" INT | "stable" | "id=" NAME | "hn_only"
///   assume_decl := "assume" "hom" "(" ref "," ref ")" "=" "0"
///   query       := "analyze" NAME | "pairing" NAME NAME | "semiorth" NAME NAME | "faltings" NAME
///   ref         := NAME | NAME "." INT
///
/// `#` starts a comment running to the end of the line.
AnalysisRequest parse(std::string_view source);

/// Canonical source text; parse(to_source(r)) == r.
std::string to_source(const AnalysisRequest& request);

}  // namespace curvegen::dsl
