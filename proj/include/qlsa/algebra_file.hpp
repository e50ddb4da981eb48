#pragma once

// Line-oriented text format for quadratic Lie superalgebras:
//
//   algebra g4
//   dim_even 4
//   dim_odd 0
//   backend exact
//   basis X P Q Z
//   bracket X P = 1 P
//   bracket P Q = 1 Z
//   form X Z = 1
//
// plus `param <name> = <value>` bindings and `#` comments. Brackets and form
// entries not listed are zero; each unordered pair appears at most once.
//
// The same statement syntax carries the inputs of the extension commands:
//   image <a> = <terms>        linear map, column a
//   psi <a> <h> = <terms>      psi(a)(h) for a representation
//   theta <a> <b> = <terms>    theta(a,b) in g*, labels read as dual vectors
//   phi <a> <b> = <terms>      phi(a*,b*) in g

#include "qlsa/extensions.hpp"
#include "qlsa/superalgebra.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlsa::io {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_label, parity, antisymmetry, backend, io };

  ParseError(Kind kind, std::string source, int line, int column, std::string message);

  Kind kind() const { return kind_; }
  const std::string& source() const { return source_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  Kind kind_;
  std::string source_;
  int line_;
  int column_;
  std::string message_;
};

std::string to_string(ParseError::Kind k);

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

/// One non-blank line with comments stripped.
struct Line {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text);

/// `<keyword> <label>... = <coeff> <label> [+ <coeff> <label> ...]` or
/// `<keyword> <label>... = <coeff>`.
struct Statement {
  int line = 0;
  Token keyword;
  std::vector<Token> labels;
  std::vector<std::pair<Token, Token>> terms;  // (coefficient, label)
  std::optional<Token> scalar;
};

/// Splits a line at `=`; `arity` is the number of labels before it. With
/// `scalar_rhs` the right side is one coefficient, otherwise a term list (a
/// lone `0` is the empty sum).
Statement parse_statement(const Line& line, std::size_t arity, bool scalar_rhs, const std::string& source);

struct Header {
  std::string name = "unnamed";
  Backend backend = Backend::exact;
  std::vector<std::string> basis;
  Index dim_even = 0;
  Index dim_odd = 0;
  std::vector<std::pair<std::string, std::string>> params;
};

template <FieldScalar S>
struct AlgebraDocument {
  Header header;
  QuadraticAlgebra<S> algebra;
};

namespace detail {

struct Context {
  std::string source;

  [[noreturn]] void fail(ParseError::Kind kind, int line, int column, const std::string& message) const {
    throw ParseError(kind, source, line, column, message);
  }
  [[noreturn]] void fail(ParseError::Kind kind, int line, const Token& at, const std::string& message) const {
    fail(kind, line, at.column, message);
  }

  Index label(const SuperVectorSpace& space, int line, const Token& t) const {
    if (auto i = space.find(t.text)) return *i;
    fail(ParseError::Kind::unknown_label, line, t, "unknown basis label '" + t.text + "'");
  }

  /// A label of g, or of g* written with a trailing `*`.
  Index dual_label(const SuperVectorSpace& space, int line, const Token& t) const {
    if (auto i = space.find(t.text)) return *i;
    if (!t.text.empty() && t.text.back() == '*')
      if (auto i = space.find(t.text.substr(0, t.text.size() - 1))) return *i;
    fail(ParseError::Kind::unknown_label, line, t, "unknown basis label '" + t.text + "'");
  }

  template <FieldScalar S>
  S scalar(int line, const Token& t) const {
    try {
      return parse_scalar<S>(t.text);
    } catch (const ScalarParseError& e) {
      fail(ParseError::Kind::syntax, line, t, e.what());
    }
  }

  template <FieldScalar S>
  Vector<S> terms(const SuperVectorSpace& space, const Statement& st, std::optional<int> parity = std::nullopt,
                  bool dual = false) const {
    Vector<S> v = Vector<S>::Zero(space.dim());
    for (const auto& [c, l] : st.terms) {
      const Index k = dual ? dual_label(space, st.line, l) : label(space, st.line, l);
      if (parity && space.parity(k) != *parity)
        fail(ParseError::Kind::parity, st.line, l,
             "term '" + l.text + "' has parity " + std::to_string(space.parity(k)) + ", expected " +
                 std::to_string(*parity));
      v(k) += scalar<S>(st.line, c);
    }
    return v;
  }
};

Header parse_header(const std::vector<Line>& lines, const Context& ctx, std::vector<const Line*>& body);

inline std::pair<Index, Index> ordered(Index a, Index b) { return a <= b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace detail

/// Parses an algebra file. An exact-backend file may be read on the complex
/// backend; the reverse is a ParseError of kind backend.
template <FieldScalar S>
AlgebraDocument<S> parse_algebra(std::string_view text, const std::string& source = "<input>") {
  using K = ParseError::Kind;
  const detail::Context ctx{source};
  const auto lines = tokenize(text);
  std::vector<const Line*> body;
  Header header = detail::parse_header(lines, ctx, body);
  if constexpr (std::same_as<S, Rational>) {
    if (header.backend == Backend::complex)
      ctx.fail(K::backend, 1, 1, "complex-backend file cannot be read on the exact backend");
  }
  const SuperVectorSpace space(header.dim_even, header.dim_odd, header.basis);
  const Index n = space.dim();

  std::vector<Matrix<S>> ad(static_cast<std::size_t>(n), Matrix<S>::Zero(n, n));
  Matrix<S> gram = Matrix<S>::Zero(n, n);
  std::map<std::pair<Index, Index>, int> seen_bracket, seen_form;
  std::optional<FormParity> parity;
  int parity_line = 0;

  for (const Line* line : body) {
    const std::string& kw = line->tokens.front().text;
    if (kw == "bracket") {
      const Statement st = parse_statement(*line, 2, false, source);
      const Index i = ctx.label(space, st.line, st.labels[0]);
      const Index j = ctx.label(space, st.line, st.labels[1]);
      if (auto it = seen_bracket.find(detail::ordered(i, j)); it != seen_bracket.end())
        ctx.fail(K::antisymmetry, st.line, st.labels[0],
                 "bracket of " + space.label(i) + " and " + space.label(j) + " already given on line " +
                     std::to_string(it->second) + "; only one orientation per pair may appear");
      seen_bracket[detail::ordered(i, j)] = st.line;
      const Vector<S> v = ctx.terms<S>(space, st, (space.parity(i) + space.parity(j)) % 2);
      const int sign = graded_sign(space.parity(i), space.parity(j));
      if (i == j && sign == 1 && !is_zero(v))
        ctx.fail(K::antisymmetry, st.line, st.labels[0],
                 "[" + space.label(i) + "," + space.label(i) + "] must vanish for an even element");
      for (Index k = 0; k < n; ++k) {
        ad[static_cast<std::size_t>(i)](k, j) = v(k);
        if (i != j) ad[static_cast<std::size_t>(j)](k, i) = -S(sign) * v(k);
      }
    } else if (kw == "form") {
      const Statement st = parse_statement(*line, 2, true, source);
      const Index i = ctx.label(space, st.line, st.labels[0]);
      const Index j = ctx.label(space, st.line, st.labels[1]);
      if (auto it = seen_form.find(detail::ordered(i, j)); it != seen_form.end())
        ctx.fail(K::antisymmetry, st.line, st.labels[0],
                 "form entry for " + space.label(i) + ", " + space.label(j) + " already given on line " +
                     std::to_string(it->second));
      seen_form[detail::ordered(i, j)] = st.line;
      const S value = ctx.scalar<S>(st.line, *st.scalar);
      if (is_zero(value)) continue;
      const FormParity p = space.parity(i) == space.parity(j) ? FormParity::even : FormParity::odd;
      if (parity && *parity != p)
        ctx.fail(K::parity, st.line, st.labels[0],
                 "form entry pairs elements of " + std::string(p == FormParity::even ? "equal" : "different") +
                     " parity, but line " + std::to_string(parity_line) + " makes the form " + to_string(*parity));
      parity = p;
      parity_line = st.line;
      const int sign = graded_sign(space.parity(i), space.parity(j));
      if (i == j && sign == -1)
        ctx.fail(K::antisymmetry, st.line, st.labels[0], "B(" + space.label(i) + "," + space.label(i) +
                                                             ") must vanish for an odd element");
      gram(i, j) = value;
      gram(j, i) = S(sign) * value;
    } else {
      ctx.fail(K::syntax, line->number, line->tokens.front(), "unexpected '" + kw + "'");
    }
  }
  return {std::move(header),
          QuadraticAlgebra<S>(LieSuperalgebra<S>(space, std::move(ad)),
                              BilinearForm<S>{std::move(gram), parity.value_or(FormParity::even)})};
}

Backend peek_backend(std::string_view text, const std::string& source = "<input>");

std::string read_text(const std::filesystem::path& path);

template <FieldScalar S>
AlgebraDocument<S> read_algebra(const std::filesystem::path& path) {
  return parse_algebra<S>(read_text(path), path.string());
}

/// Canonical text: header, params, brackets [e_i,e_j] for i <= j in basis
/// order, then form entries for i <= j. parse_algebra(emit_algebra(q)) == q.
template <FieldScalar S>
std::string emit_algebra(const QuadraticAlgebra<S>& q, const std::string& name,
                         const std::vector<std::pair<std::string, std::string>>& params = {}) {
  const auto& space = q.space();
  std::string out = "algebra " + name + "\n";
  out += "dim_even " + std::to_string(space.dim_even()) + "\n";
  out += "dim_odd " + std::to_string(space.dim_odd()) + "\n";
  out += "backend " + std::string(FieldTraits<S>::name) + "\n";
  out += "basis";
  for (const auto& l : space.labels()) out += " " + l;
  out += "\n";
  for (const auto& [k, v] : params) out += "param " + k + " = " + v + "\n";
  for (Index i = 0; i < space.dim(); ++i)
    for (Index j = i; j < space.dim(); ++j) {
      const Vector<S> v = q.algebra().bracket(i, j);
      if (is_zero(v)) continue;
      out += "bracket " + space.label(i) + " " + space.label(j) + " =";
      bool first = true;
      for (Index k = 0; k < space.dim(); ++k) {
        if (is_zero(v(k))) continue;
        out += (first ? " " : " + ") + format_scalar(v(k)) + " " + space.label(k);
        first = false;
      }
      out += "\n";
    }
  for (Index i = 0; i < space.dim(); ++i)
    for (Index j = i; j < space.dim(); ++j)
      if (!is_zero(q.form().gram(i, j)))
        out += "form " + space.label(i) + " " + space.label(j) + " = " + format_scalar(q.form().gram(i, j)) + "\n";
  return out;
}

// --- extension inputs -------------------------------------------------------

namespace detail {

template <FieldScalar S, typename Fn>
void for_each_statement(std::string_view text, const std::string& source, std::string_view keyword,
                        std::size_t arity, Fn&& fn) {
  const Context ctx{source};
  for (const auto& line : tokenize(text)) {
    if (line.tokens.front().text != keyword)
      ctx.fail(ParseError::Kind::syntax, line.number, line.tokens.front(),
               "expected '" + std::string(keyword) + "', found '" + line.tokens.front().text + "'");
    fn(ctx, parse_statement(line, arity, false, source));
  }
}

}  // namespace detail

/// `image <a> = <terms>` lines: column a of a linear map source -> target.
/// Unlisted columns are zero.
template <FieldScalar S>
Matrix<S> parse_map(std::string_view text, const SuperVectorSpace& source_space, const SuperVectorSpace& target_space,
                    const std::string& source = "<map>") {
  Matrix<S> m = Matrix<S>::Zero(target_space.dim(), source_space.dim());
  std::vector<int> seen(static_cast<std::size_t>(source_space.dim()), 0);
  detail::for_each_statement<S>(text, source, "image", 1, [&](const detail::Context& ctx, const Statement& st) {
    const Index a = ctx.label(source_space, st.line, st.labels[0]);
    if (seen[static_cast<std::size_t>(a)])
      ctx.fail(ParseError::Kind::syntax, st.line, st.labels[0], "image of '" + st.labels[0].text + "' given twice");
    seen[static_cast<std::size_t>(a)] = st.line;
    m.col(a) = ctx.terms<S>(target_space, st, source_space.parity(a));
  });
  return m;
}

/// `psi <a> <v> = <terms>` lines: psi(e_a)(v) as a vector of the target space.
template <FieldScalar S>
std::vector<Matrix<S>> parse_psi(std::string_view text, const SuperVectorSpace& base, const SuperVectorSpace& target,
                                 const std::string& source = "<psi>") {
  std::vector<Matrix<S>> psi(static_cast<std::size_t>(base.dim()), Matrix<S>::Zero(target.dim(), target.dim()));
  detail::for_each_statement<S>(text, source, "psi", 2, [&](const detail::Context& ctx, const Statement& st) {
    const Index a = ctx.label(base, st.line, st.labels[0]);
    const Index v = ctx.label(target, st.line, st.labels[1]);
    psi[static_cast<std::size_t>(a)].col(v) = ctx.terms<S>(target, st);
  });
  return psi;
}

/// (a, b, value) rows of a theta or phi file.
template <FieldScalar S>
struct TripleEntry {
  Index a;
  Index b;
  Vector<S> value;
  int line;
};

template <FieldScalar S>
std::vector<TripleEntry<S>> parse_triples(std::string_view text, const SuperVectorSpace& g, std::string_view keyword,
                                          const std::string& source) {
  std::vector<TripleEntry<S>> out;
  std::map<std::pair<Index, Index>, int> seen;
  detail::for_each_statement<S>(text, source, keyword, 2, [&](const detail::Context& ctx, const Statement& st) {
    const Index a = ctx.dual_label(g, st.line, st.labels[0]);
    const Index b = ctx.dual_label(g, st.line, st.labels[1]);
    if (auto it = seen.find(detail::ordered(a, b)); it != seen.end())
      ctx.fail(ParseError::Kind::antisymmetry, st.line, st.labels[0],
               std::string(keyword) + " of " + g.label(a) + ", " + g.label(b) + " already given on line " +
                   std::to_string(it->second));
    seen[detail::ordered(a, b)] = st.line;
    out.push_back({a, b, ctx.terms<S>(g, st, std::nullopt, true), st.line});
  });
  return out;
}

/// `theta <a> <b> = <terms>`: theta(e_a,e_b) = sum c_k e_k*. Labels may carry
/// a trailing `*`. Filled antisymmetrically.
template <FieldScalar S>
Cocycle2<S> parse_cocycle(std::string_view text, const LieSuperalgebra<S>& g, const std::string& source = "<theta>") {
  auto c = Cocycle2<S>::zero(g);
  for (const auto& e : parse_triples<S>(text, g.space(), "theta", source)) {
    if (e.a == e.b && !is_zero(e.value))
      throw ParseError(ParseError::Kind::antisymmetry, source, e.line, 1, "theta(X,X) must vanish");
    for (Index k = 0; k < g.dim(); ++k) {
      c.theta(e.a, e.b, k) = e.value(k);
      c.theta(e.b, e.a, k) = -e.value(k);
    }
  }
  return c;
}

/// `phi <a> <b> = <terms>`: phi(e_a*,e_b*) = sum c_k e_k, filled symmetrically.
template <FieldScalar S>
SymPairing<S> parse_pairing(std::string_view text, const LieSuperalgebra<S>& g, const std::string& source = "<phi>") {
  auto p = SymPairing<S>::zero(g);
  for (const auto& e : parse_triples<S>(text, g.space(), "phi", source))
    for (Index k = 0; k < g.dim(); ++k) {
      p.phi(e.a, e.b, k) = e.value(k);
      p.phi(e.b, e.a, k) = e.value(k);
    }
  return p;
}

}  // namespace qlsa::io
