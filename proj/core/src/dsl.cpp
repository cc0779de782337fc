#include "curvegen/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "curvegen/error.hpp"

namespace curvegen::dsl {

std::string_view to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::Analyze: return "analyze";
    case QueryKind::Pairing: return "pairing";
    case QueryKind::Semiorth: return "semiorth";
    case QueryKind::Faltings: return "faltings";
  }
  return "unknown";
}

FormalObject ObjectDecl::build(const Curve& curve) const {
  std::map<std::int64_t, std::vector<SemistablePiece>> pieces;
  std::set<std::int64_t> hn_degrees;
  for (const auto& s : summands) {
    const std::int64_t degree = -s.shift;
    pieces[degree].push_back(s.piece);
    if (s.hn_only) hn_degrees.insert(degree);
  }
  std::map<std::int64_t, FormalSheaf> graded;
  for (auto& [degree, list] : pieces) {
    const bool hn = hn_degrees.count(degree) > 0 && curve.genus() != 0;
    graded.emplace(degree, FormalSheaf(std::move(list), hn ? Splitting::HNOnly : Splitting::Split));
  }
  return FormalObject(std::move(graded));
}

const ObjectDecl* AnalysisRequest::find(std::string_view name) const {
  auto it = std::find_if(objects.begin(), objects.end(), [&](const ObjectDecl& d) { return d.name == name; });
  return it == objects.end() ? nullptr : &*it;
}

std::vector<Assumption> AnalysisRequest::assumptions_for(const ObjectDecl& decl) const {
  std::set<std::string> labels;
  for (const auto& s : decl.summands) {
    if (s.piece.id()) labels.insert(*s.piece.id());
  }
  std::vector<Assumption> out;
  for (const auto& a : assumptions) {
    if (labels.count(a.source) && labels.count(a.target)) out.push_back(a);
  }
  return out;
}

namespace {

std::string format_error(ParseErrorKind kind, int line, int column, const std::string& message) {
  std::ostringstream os;
  os << line << ":" << column << ": " << (kind == ParseErrorKind::Syntax ? "syntax error: " : "semantic error: ")
     << message;
  return os.str();
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, int line, int column, std::string message,
                       std::vector<std::string> expected)
    : std::runtime_error(format_error(kind, line, column, message)),
      kind_(kind),
      line_(line),
      column_(column),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

// ----------------------------------------------------------------------------
// Lexer

enum class Tok { Name, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  std::int64_t value = 0;
  int line = 1;
  int column = 1;
};

const std::set<std::string, std::less<>> kKeywords = {"curve",   "genus",   "object",   "assume",
                                                     "hom",     "bundle",  "tors",     "analyze",
                                                     "pairing", "semiorth", "faltings"};

bool is_name_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto bump = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') bump(1);
      continue;
    }
    Token tok{Tok::End, {}, 0, line, column};
    if (is_name_start(c)) {
      std::size_t j = i;
      while (j < src.size() && (is_name_start(src[j]) || is_digit(src[j]))) ++j;
      tok.kind = Tok::Name;
      tok.text = std::string(src.substr(i, j - i));
      bump(j - i);
    } else if (is_digit(c) || (c == '-' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      std::size_t j = i + 1;
      while (j < src.size() && is_digit(src[j])) ++j;
      tok.kind = Tok::Int;
      tok.text = std::string(src.substr(i, j - i));
      auto [ptr, ec] = std::from_chars(src.data() + i, src.data() + j, tok.value);
      if (ec != std::errc() || ptr != src.data() + j) {
        throw ParseError(ParseErrorKind::Syntax, line, column, "integer '" + tok.text + "' out of range");
      }
      bump(j - i);
    } else if (std::string_view("=+()[],.").find(c) != std::string_view::npos) {
      tok.kind = Tok::Punct;
      tok.text = std::string(1, c);
      bump(1);
    } else {
      const auto uc = static_cast<unsigned char>(c);
      const std::string shown = uc < 0x80 ? std::string(1, c) : std::string("non-ASCII byte");
      throw ParseError(ParseErrorKind::Syntax, line, column, "unexpected character '" + shown + "'");
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Tok::End, {}, 0, line, column});
  return out;
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Int: return "integer " + t.text;
    default: return "'" + t.text + "'";
  }
}

// ----------------------------------------------------------------------------
// Parser

struct RawRef {
  std::string name;
  std::optional<std::int64_t> index;
  Token at;
};

struct RawAssumption {
  RawRef source;
  RawRef target;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  AnalysisRequest run() {
    AnalysisRequest req;
    if (at_keyword("curve")) {
      parse_curve();
      req.curve = *curve_;
    }
    std::vector<RawAssumption> raw;
    while (true) {
      if (at_keyword("object")) {
        req.objects.push_back(parse_object(req));
      } else if (at_keyword("assume")) {
        raw.push_back(parse_assume());
      } else {
        break;
      }
    }
    if (!curve_ && peek().kind == Tok::End && req.objects.empty() && raw.empty()) {
      syntax_error({"'curve'"});
    }
    resolve_assumptions(req, raw);
    while (peek().kind != Tok::End) {
      if (at_keyword("analyze") || at_keyword("pairing") || at_keyword("semiorth") || at_keyword("faltings")) {
        req.queries.push_back(parse_query(req));
      } else {
        std::vector<std::string> expected = {"'analyze'", "'pairing'", "'semiorth'", "'faltings'", "end of input"};
        if (req.queries.empty()) expected.insert(expected.begin(), {"'object'", "'assume'"});
        if (!curve_ && req.objects.empty() && raw.empty()) expected.insert(expected.begin(), "'curve'");
        syntax_error(expected);
      }
    }
    if (!curve_) semantic_error(toks_.front(), "missing 'curve genus N' declaration");
    return req;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool at_keyword(std::string_view kw) const { return peek().kind == Tok::Name && peek().text == kw; }
  bool at_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }

  [[noreturn]] void syntax_error(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + describe(t);
    throw ParseError(ParseErrorKind::Syntax, t.line, t.column, msg, std::move(expected));
  }

  [[noreturn]] static void semantic_error(const Token& at, const std::string& message) {
    throw ParseError(ParseErrorKind::Semantic, at.line, at.column, message);
  }

  const Token& expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) syntax_error({"'" + std::string(kw) + "'"});
    return advance();
  }

  const Token& expect_punct(char c) {
    if (!at_punct(c)) syntax_error({"'" + std::string(1, c) + "'"});
    return advance();
  }

  std::int64_t expect_int(const std::string& what) {
    if (peek().kind != Tok::Int) syntax_error({what});
    return advance().value;
  }

  const Token& expect_name(const std::string& what) {
    if (peek().kind != Tok::Name || kKeywords.count(peek().text)) syntax_error({what});
    return advance();
  }

  // "key" "=" ; the lexer keeps `r=` as two tokens.
  void expect_key(std::string_view key) {
    if (!at_keyword(key)) syntax_error({"'" + std::string(key) + "='"});
    advance();
    expect_punct('=');
  }

  void parse_curve() {
    const Token& start = expect_keyword("curve");
    expect_keyword("genus");
    const Token& at = peek();
    const std::int64_t g = expect_int("genus (integer)");
    if (g < 0) semantic_error(at, "genus must be non-negative");
    (void)start;
    curve_ = Curve(g);
  }

  ObjectDecl parse_object(const AnalysisRequest& req) {
    expect_keyword("object");
    const Token name = expect_name("object name");
    if (req.find(name.text)) semantic_error(name, "duplicate object name '" + name.text + "'");
    expect_punct('=');

    ObjectDecl decl;
    decl.name = name.text;
    do {
      DeclaredPiece dp = parse_piece();
      if (at_punct('[')) {
        advance();
        dp.shift = expect_int("shift (integer)");
        expect_punct(']');
      }
      decl.summands.push_back(std::move(dp));
    } while (at_punct('+') && (advance(), true));
    return decl;
  }

  DeclaredPiece parse_piece() {
    const Token start = peek();
    if (at_keyword("tors")) {
      advance();
      expect_punct('(');
      expect_key("len");
      const std::int64_t len = expect_int("length (integer)");
      expect_punct(')');
      if (len == 0) semantic_error(start, "zero class: torsion of length 0");
      if (len < 0) semantic_error(start, "torsion length must be positive");
      return DeclaredPiece{SemistablePiece::torsion(len)};
    }
    if (!at_keyword("bundle")) syntax_error({"'bundle'", "'tors'"});
    advance();
    expect_punct('(');
    expect_key("r");
    const std::int64_t r = expect_int("rank (integer)");
    expect_punct(',');
    expect_key("d");
    const std::int64_t d = expect_int("degree (integer)");

    PieceAnnotations ann;
    bool hn_only = false;
    std::set<std::string> seen;
    std::optional<Token> h0_at;
    while (at_punct(',')) {
      advance();
      const Token attr = peek();
      if (attr.kind != Tok::Name) syntax_error({"'h0='", "'stable'", "'id='", "'hn_only'"});
      if (!seen.insert(attr.text).second) semantic_error(attr, "duplicate attribute '" + attr.text + "'");
      if (attr.text == "h0") {
        expect_key("h0");
        const Token& v = peek();
        ann.h0 = expect_int("h0 (integer)");
        if (*ann.h0 < 0) semantic_error(v, "h0 must be non-negative");
        h0_at = attr;
      } else if (attr.text == "stable") {
        advance();
        ann.stable = true;
      } else if (attr.text == "id") {
        expect_key("id");
        ann.id = expect_name("id label").text;
      } else if (attr.text == "hn_only") {
        advance();
        hn_only = true;
      } else {
        syntax_error({"'h0='", "'stable'", "'id='", "'hn_only'"});
      }
    }
    expect_punct(')');

    if (r == 0 && d == 0) semantic_error(start, "zero class: bundle(r=0,d=0)");
    if (r < 0) semantic_error(start, "rank must be non-negative");
    if (r == 0 && d < 0) semantic_error(start, "torsion (r=0) needs a positive length d");
    if (r == 0 && (ann.h0 || ann.stable)) semantic_error(start, "annotation on torsion piece");

    DeclaredPiece out{SemistablePiece(ChernPair(r, d), 1, ann), 0, hn_only};
    if (curve_ && h0_at && !h0_consistent(out.piece, *curve_)) {
      semantic_error(*h0_at, "h0=" + std::to_string(*ann.h0) + " is impossible for a semistable bundle of class " +
                                 out.piece.cls().to_string() + " on genus " + std::to_string(curve_->genus()));
    }
    return out;
  }

  RawRef parse_ref() {
    const Token name = expect_name("piece reference");
    RawRef ref{name.text, std::nullopt, name};
    if (at_punct('.')) {
      advance();
      ref.index = expect_int("piece index");
    }
    return ref;
  }

  RawAssumption parse_assume() {
    expect_keyword("assume");
    expect_keyword("hom");
    expect_punct('(');
    RawRef a = parse_ref();
    expect_punct(',');
    RawRef b = parse_ref();
    expect_punct(')');
    expect_punct('=');
    if (peek().kind != Tok::Int || peek().value != 0) syntax_error({"'0'"});
    advance();
    return {std::move(a), std::move(b)};
  }

  Query parse_query(const AnalysisRequest& req) {
    const Token kw = advance();
    Query q{QueryKind::Analyze, {}, {}};
    auto object_name = [&]() {
      const Token name = expect_name("object name");
      if (!req.find(name.text)) semantic_error(name, "unknown object '" + name.text + "'");
      return name.text;
    };
    if (kw.text == "analyze") {
      q.kind = QueryKind::Analyze;
      q.left = object_name();
    } else if (kw.text == "faltings") {
      q.kind = QueryKind::Faltings;
      q.left = object_name();
    } else {
      q.kind = kw.text == "pairing" ? QueryKind::Pairing : QueryKind::Semiorth;
      q.left = object_name();
      q.right = object_name();
    }
    return q;
  }

  // Resolves references to labels, labelling positionally referenced pieces,
  // then checks the labels are consistent across the request.
  void resolve_assumptions(AnalysisRequest& req, const std::vector<RawAssumption>& raw) {
    auto resolve = [&](const RawRef& ref) -> std::string {
      if (ref.index) {
        auto it = std::find_if(req.objects.begin(), req.objects.end(),
                               [&](const ObjectDecl& d) { return d.name == ref.name; });
        if (it == req.objects.end()) semantic_error(ref.at, "unknown object '" + ref.name + "'");
        const auto n = static_cast<std::int64_t>(it->summands.size());
        if (*ref.index < 1 || *ref.index > n) {
          semantic_error(ref.at, "object '" + ref.name + "' has " + std::to_string(n) + " pieces, no piece " +
                                     std::to_string(*ref.index));
        }
        auto& piece = it->summands[static_cast<std::size_t>(*ref.index - 1)].piece;
        if (piece.id()) return *piece.id();
        PieceAnnotations ann = piece.annotations();
        ann.id = ref.name + "." + std::to_string(*ref.index);
        piece = piece.with_annotations(ann);
        return *ann.id;
      }
      for (const auto& d : req.objects) {
        for (const auto& s : d.summands) {
          if (s.piece.id() == ref.name) return ref.name;
        }
      }
      semantic_error(ref.at, "unknown piece label '" + ref.name + "'");
    };

    std::vector<Assumption> resolved;
    for (const auto& r : raw) resolved.push_back({resolve(r.source), resolve(r.target)});

    std::map<std::string, ChernPair> label_class;
    for (const auto& d : req.objects) {
      for (const auto& s : d.summands) {
        if (!s.piece.id()) continue;
        auto [it, inserted] = label_class.emplace(*s.piece.id(), s.piece.cls());
        if (!inserted && !(it->second == s.piece.cls())) {
          semantic_error(toks_.front(), "label '" + *s.piece.id() + "' used for pieces of different classes " +
                                            it->second.to_string() + " and " + s.piece.cls().to_string());
        }
      }
    }

    for (std::size_t i = 0; i < raw.size(); ++i) {
      const Assumption& a = resolved[i];
      const Token& at = raw[i].source.at;
      if (a.source == a.target) semantic_error(at, "hom(" + a.source + ", " + a.target + ") contains the identity");
      const bool shared = std::any_of(req.objects.begin(), req.objects.end(), [&](const ObjectDecl& d) {
        const AnalysisRequest probe{req.curve, {d}, {a}, {}};
        return !probe.assumptions_for(d).empty();
      });
      if (!shared) semantic_error(at, "assumption relates pieces that never occur in the same object");
      const ChernPair& cs = label_class.at(a.source);
      const ChernPair& ct = label_class.at(a.target);
      if (cs.is_torsion() || ct.is_torsion()) semantic_error(at, "hom assumptions relate bundles, not torsion");
      if (curve_ && euler_pairing(cs, ct, *curve_) > 0) {
        semantic_error(at, "hom(" + a.source + ", " + a.target + ") = 0 contradicts Riemann-Roch: chi = " +
                               std::to_string(euler_pairing(cs, ct, *curve_)) + " > 0");
      }
    }
    req.assumptions = std::move(resolved);

    for (const auto& d : req.objects) {
      try {
        (void)d.build(req.curve);
      } catch (const Error& e) {
        semantic_error(toks_.front(), "object '" + d.name + "': " + e.what());
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<Curve> curve_;
};

std::string piece_source(const DeclaredPiece& dp) {
  const auto& p = dp.piece;
  const auto& ann = p.annotations();
  // Labels containing '.' come from positional references and are re-created on parse.
  const bool print_id = ann.id && ann.id->find('.') == std::string::npos;
  std::string out;
  if (p.is_torsion() && !print_id && !dp.hn_only) {
    out = "tors(len=" + std::to_string(p.cls().length()) + ")";
  } else {
    out = "bundle(r=" + std::to_string(p.cls().rank()) + ",d=" + std::to_string(p.cls().degree());
    if (ann.h0) out += ",h0=" + std::to_string(*ann.h0);
    if (ann.stable) out += ",stable";
    if (print_id) out += ",id=" + *ann.id;
    if (dp.hn_only) out += ",hn_only";
    out += ")";
  }
  if (dp.shift != 0) out += "[" + std::to_string(dp.shift) + "]";
  return out;
}

}  // namespace

AnalysisRequest parse(std::string_view source) { return Parser(source).run(); }

std::string to_source(const AnalysisRequest& request) {
  std::ostringstream os;
  os << "curve genus " << request.curve.genus() << "\n";
  for (const auto& d : request.objects) {
    os << "object " << d.name << " =";
    bool first = true;
    for (const auto& s : d.summands) {
      for (std::int64_t k = 0; k < s.piece.multiplicity(); ++k) {
        os << (first ? " " : " + ") << piece_source(s);
        first = false;
      }
    }
    os << "\n";
  }
  for (const auto& a : request.assumptions) os << "assume hom(" << a.source << ", " << a.target << ") = 0\n";
  for (const auto& q : request.queries) {
    os << to_string(q.kind) << " " << q.left;
    if (!q.right.empty()) os << " " << q.right;
    os << "\n";
  }
  return os.str();
}

}  // namespace curvegen::dsl
