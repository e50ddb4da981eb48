#include "qlsa/algebra_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace qlsa::io {

ParseError::ParseError(Kind kind, std::string source, int line, int column, std::string message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + to_string(kind) +
                         " error: " + message),
      kind_(kind),
      source_(std::move(source)),
      line_(line),
      column_(column),
      message_(std::move(message)) {}

std::string to_string(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::syntax: return "syntax";
    case ParseError::Kind::unknown_label: return "unknown-label";
    case ParseError::Kind::parity: return "parity";
    case ParseError::Kind::antisymmetry: return "antisymmetry";
    case ParseError::Kind::backend: return "backend";
    case ParseError::Kind::io: return "io";
  }
  return "?";
}

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

Statement parse_statement(const Line& line, std::size_t arity, bool scalar_rhs, const std::string& source) {
  using K = ParseError::Kind;
  const auto& t = line.tokens;
  const auto fail = [&](int column, const std::string& msg) -> ParseError {
    return ParseError(K::syntax, source, line.number, column, msg);
  };
  const int past_end = t.back().column + static_cast<int>(t.back().text.size());
  Statement st;
  st.line = line.number;
  st.keyword = t.front();
  if (t.size() < arity + 3) throw fail(past_end, "'" + t.front().text + "' expects " + std::to_string(arity) +
                                                     " label(s), '=' and a right-hand side");
  for (std::size_t i = 1; i <= arity; ++i) {
    if (t[i].text == "=" || t[i].text == "+") throw fail(t[i].column, "expected a basis label, found '" + t[i].text + "'");
    st.labels.push_back(t[i]);
  }
  if (t[arity + 1].text != "=") throw fail(t[arity + 1].column, "expected '=', found '" + t[arity + 1].text + "'");
  const std::size_t rhs = arity + 2;
  if (scalar_rhs) {
    if (t.size() != rhs + 1) throw fail(t[rhs + 1].column, "expected a single coefficient");
    st.scalar = t[rhs];
    return st;
  }
  if (t.size() == rhs + 1 && t[rhs].text == "0") return st;
  std::size_t i = rhs;
  while (true) {
    if (i + 1 >= t.size()) throw fail(i < t.size() ? t[i].column : past_end, "expected '<coefficient> <label>'");
    st.terms.emplace_back(t[i], t[i + 1]);
    i += 2;
    if (i == t.size()) break;
    if (t[i].text != "+") throw fail(t[i].column, "expected '+' between terms, found '" + t[i].text + "'");
    ++i;
    if (i == t.size()) throw fail(past_end, "dangling '+'");
  }
  return st;
}

namespace detail {

Header parse_header(const std::vector<Line>& lines, const Context& ctx, std::vector<const Line*>& body) {
  using K = ParseError::Kind;
  Header h;
  std::set<std::string> seen;
  int basis_line = 0;
  bool in_body = false;
  std::optional<Index> dim_even, dim_odd;

  const auto single = [&](const Line& line) -> const Token& {
    if (line.tokens.size() != 2)
      ctx.fail(K::syntax, line.number, line.tokens.size() > 2 ? line.tokens[2] : line.tokens[0],
               "'" + line.tokens[0].text + "' takes exactly one value");
    return line.tokens[1];
  };
  const auto count = [&](const Line& line) -> Index {
    const Token& t = single(line);
    if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos || t.text.size() > 6)
      ctx.fail(K::syntax, line.number, t, "expected a non-negative integer, found '" + t.text + "'");
    return std::stoi(t.text);
  };

  for (const auto& line : lines) {
    const std::string& kw = line.tokens.front().text;
    if (kw == "bracket" || kw == "form") {
      in_body = true;
      body.push_back(&line);
      continue;
    }
    if (kw == "param") {
      const Statement st = parse_statement(line, 1, true, ctx.source);
      h.params.emplace_back(st.labels[0].text, st.scalar->text);
      continue;
    }
    if (kw != "algebra" && kw != "dim_even" && kw != "dim_odd" && kw != "backend" && kw != "basis")
      ctx.fail(K::syntax, line.number, line.tokens.front(), "unknown keyword '" + kw + "'");
    if (in_body) ctx.fail(K::syntax, line.number, line.tokens.front(), "'" + kw + "' must precede bracket and form lines");
    if (!seen.insert(kw).second) ctx.fail(K::syntax, line.number, line.tokens.front(), "duplicate '" + kw + "'");
    if (kw == "algebra") {
      h.name = single(line).text;
    } else if (kw == "dim_even") {
      dim_even = count(line);
    } else if (kw == "dim_odd") {
      dim_odd = count(line);
    } else if (kw == "backend") {
      const Token& t = single(line);
      if (t.text == "exact") h.backend = Backend::exact;
      else if (t.text == "complex") h.backend = Backend::complex;
      else ctx.fail(K::syntax, line.number, t, "backend must be 'exact' or 'complex', found '" + t.text + "'");
    } else {
      basis_line = line.number;
      std::set<std::string> distinct;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const Token& t = line.tokens[i];
        if (t.text == "=" || t.text == "+")
          ctx.fail(K::syntax, line.number, t, "'" + t.text + "' cannot be a basis label");
        if (!distinct.insert(t.text).second)
          ctx.fail(K::syntax, line.number, t, "duplicate basis label '" + t.text + "'");
        h.basis.push_back(t.text);
      }
    }
  }
  const int last = lines.empty() ? 1 : lines.back().number;
  if (!dim_even) ctx.fail(K::syntax, last, 1, "missing 'dim_even'");
  if (!dim_odd) ctx.fail(K::syntax, last, 1, "missing 'dim_odd'");
  if (!basis_line) ctx.fail(K::syntax, last, 1, "missing 'basis'");
  h.dim_even = *dim_even;
  h.dim_odd = *dim_odd;
  if (static_cast<Index>(h.basis.size()) != h.dim_even + h.dim_odd)
    ctx.fail(K::syntax, basis_line, 1,
             "basis has " + std::to_string(h.basis.size()) + " labels but dim_even + dim_odd = " +
                 std::to_string(h.dim_even + h.dim_odd));
  return h;
}

}  // namespace detail

Backend peek_backend(std::string_view text, const std::string& source) {
  for (const auto& line : tokenize(text))
    if (line.tokens.front().text == "backend" && line.tokens.size() == 2) {
      if (line.tokens[1].text == "complex") return Backend::complex;
      if (line.tokens[1].text == "exact") return Backend::exact;
      throw ParseError(ParseError::Kind::syntax, source, line.number, line.tokens[1].column,
                       "backend must be 'exact' or 'complex'");
    }
  return Backend::exact;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseError::Kind::io, path.string(), 0, 0, "cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace qlsa::io
