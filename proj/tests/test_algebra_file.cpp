#include "catch2/catch_amalgamated.hpp"
#include "oracle.hpp"
#include "qlsa/algebra_file.hpp"
#include "qlsa/catalog.hpp"

using namespace qlsa;
using Q = Rational;
using io::ParseError;

namespace {

constexpr const char* kDiamond = R"(# the diamond algebra
algebra g4
dim_even 4
dim_odd 0
backend exact
basis X P Q Z
bracket X P = 1 P
bracket X Q = -1 Q
bracket P Q = 1 Z
form X Z = 1
form P Q = 1
)";

ParseError parse_error(const std::string& text) {
  try {
    io::parse_algebra<Q>(text, "case.alg");
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  throw std::logic_error("unreachable");
}

std::string without_comments_and_blanks(const std::string& text) {
  std::string out;
  for (const auto& line : io::tokenize(text)) {
    for (const auto& t : line.tokens) out += t.text + " ";
    out += "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("the diamond algebra file parses and round-trips") {
  const auto doc = io::parse_algebra<Q>(kDiamond);
  CHECK(doc.header.name == "g4");
  CHECK(doc.algebra.verified().all());
  CHECK(oracle::table(doc.algebra).c == oracle::table(catalog::build("g4")).c);
  const auto text = io::emit_algebra(doc.algebra, "g4");
  CHECK(without_comments_and_blanks(text) == without_comments_and_blanks(kDiamond));
}

TEST_CASE("every catalog sample round-trips exactly") {
  for (const auto& e : catalog::list())
    for (const auto& p : e.samples()) {
      const auto q = catalog::build(e.id, p);
      const auto text = io::emit_algebra(q, e.id);
      const auto back = io::parse_algebra<Q>(text).algebra;
      INFO(catalog::sample_key(e.id, p));
      CHECK(oracle::table(back).c == oracle::table(q).c);
      CHECK(oracle::table(back).g == oracle::table(q).g);
      CHECK(back.form().parity == q.form().parity);
      CHECK(io::emit_algebra(back, e.id) == text);
    }
}

TEST_CASE("the g^o_{6,7} transcription parses and verifies") {
  const auto doc = io::parse_algebra<Q>(R"(algebra go6_7
dim_even 3
dim_odd 3
basis X0 Y0 Z0 X1 Y1 Z1
bracket X0 Y0 = 1 Y0
bracket X0 Z0 = -1/2 Z0
bracket X0 Y1 = -1 Y1
bracket X0 Z1 = 1/2 Z1
bracket Y0 Y1 = 1 X1
bracket Z0 Z1 = -1/2 X1
bracket Z1 Y1 = 1 Z0   # written in the printed orientation
bracket Z1 Z1 = 1 Y0
form X0 X1 = 1
form Y0 Y1 = 1
form Z0 Z1 = 1
)");
  CHECK(doc.algebra.form().parity == FormParity::odd);
  CHECK(doc.algebra.verified().all());
  CHECK(oracle::table(doc.algebra).c == oracle::table(catalog::build("go6_7")).c);
}

TEST_CASE("parse errors carry kind, line and column") {
  const std::string head = "algebra t\ndim_even 4\ndim_odd 0\nbasis X P Q Z\n";
  SECTION("both orientations of a pair") {
    const auto e = parse_error(head + "bracket P X = -1 P\nbracket X P = 1 P\n");
    CHECK(e.kind() == ParseError::Kind::antisymmetry);
    CHECK(e.line() == 6);
    CHECK(e.column() == 9);
    CHECK(std::string(e.what()).rfind("case.alg:6:9: antisymmetry error:", 0) == 0);
  }
  SECTION("unknown label") {
    const auto e = parse_error(head + "bracket X W = 1 P\n");
    CHECK(e.kind() == ParseError::Kind::unknown_label);
    CHECK(e.line() == 5);
    CHECK(e.column() == 11);
  }
  SECTION("missing equals sign") {
    const auto e = parse_error(head + "bracket X P 1 P\n");
    CHECK(e.kind() == ParseError::Kind::syntax);
    CHECK(e.column() == 13);
  }
  SECTION("bad coefficient") {
    const auto e = parse_error(head + "bracket X P = one P\n");
    CHECK(e.kind() == ParseError::Kind::syntax);
    CHECK(e.column() == 15);
  }
  SECTION("dangling plus") {
    CHECK(parse_error(head + "bracket X P = 1 P +\n").kind() == ParseError::Kind::syntax);
  }
  SECTION("even self-bracket") {
    CHECK(parse_error(head + "bracket X X = 1 P\n").kind() == ParseError::Kind::antisymmetry);
  }
  SECTION("basis count mismatch") {
    const auto e = parse_error("algebra t\ndim_even 2\ndim_odd 0\nbasis X\n");
    CHECK(e.kind() == ParseError::Kind::syntax);
    CHECK(e.line() == 4);
  }
  SECTION("header after body") {
    CHECK(parse_error(head + "bracket X P = 1 P\ndim_odd 0\n").kind() == ParseError::Kind::syntax);
  }
  SECTION("missing basis") {
    CHECK(parse_error("dim_even 1\ndim_odd 0\n").kind() == ParseError::Kind::syntax);
  }
  SECTION("unknown keyword") {
    const auto e = parse_error(head + "brackets X P = 1 P\n");
    CHECK(e.line() == 5);
    CHECK(e.column() == 1);
  }
}

TEST_CASE("parity errors") {
  const std::string head = "algebra t\ndim_even 1\ndim_odd 2\nbasis E U V\n";
  CHECK(parse_error(head + "bracket E U = 1 E\n").kind() == ParseError::Kind::parity);
  CHECK(parse_error(head + "form E U = 1\nform U V = 1\n").kind() == ParseError::Kind::parity);
  // Odd-odd self brackets are allowed; an odd form must vanish on the diagonal.
  CHECK_NOTHROW(io::parse_algebra<Q>(head + "bracket U U = 1 E\nform E E = 1\nform U V = 1\n"));
}

TEST_CASE("backends") {
  const std::string complex_file = "algebra c\ndim_even 1\ndim_odd 1\nbackend complex\nbasis X0 X1\n"
                                   "bracket X1 X1 = 2+1i X0\nform X0 X1 = 1\n";
  CHECK(io::peek_backend(complex_file, "c") == Backend::complex);
  CHECK(io::peek_backend(kDiamond, "d") == Backend::exact);
  CHECK(parse_error(complex_file).kind() == ParseError::Kind::backend);
  const auto doc = io::parse_algebra<Complex>(complex_file);
  CHECK(doc.algebra.algebra().bracket(1, 1)(0) == Complex(2, 1));
  const auto diamond = io::parse_algebra<Complex>(kDiamond);
  CHECK(diamond.algebra.verified().all());
}

TEST_CASE("comments, blank lines and the empty sum") {
  const auto doc = io::parse_algebra<Q>("\n# c\nalgebra z   # trailing\n\ndim_even 2\ndim_odd 0\nbasis A B\n"
                                         "bracket A B = 0\nform A A = 1\nform B B = 1\n");
  CHECK(doc.algebra.algebra().is_abelian());
}

TEST_CASE("random algebra files round-trip") {
  // Transport catalog algebras to random bases; the text round trip must be exact.
  oracle::Gen gen(97);
  for (int trial = 0; trial < 20; ++trial) {
    const auto& e = catalog::list()[static_cast<std::size_t>(gen.below(static_cast<int>(catalog::list().size())))];
    const auto q = catalog::build(e.id, e.samples().front());
    if (q.dim() > 7) continue;
    const auto t = oracle::table(q);
    const auto [a, inv] = gen.graded_invertible(t.n, static_cast<int>(q.space().dim_even()));
    const auto moved = oracle::to_algebra(oracle::transport(t, a, inv), q.space(), q.form().parity);
    const auto back = io::parse_algebra<Q>(io::emit_algebra(moved, "m")).algebra;
    CHECK(oracle::table(back).c == oracle::table(moved).c);
    CHECK(oracle::table(back).g == oracle::table(moved).g);
  }
}

TEST_CASE("auxiliary files") {
  const auto g4 = catalog::build("g4");
  const auto m = io::parse_map<Q>("image X = 1 X\nimage P = 2 P + 1 Z\n", g4.space(), g4.space());
  CHECK(m(1, 1) == 2);
  CHECK(m(3, 1) == 1);
  CHECK(m(0, 0) == 1);
  CHECK(m(2, 2) == 0);
  CHECK_THROWS_AS(io::parse_map<Q>("image X = 1 X\nimage X = 1 P\n", g4.space(), g4.space()), ParseError);

  const auto h3 = BracketTable<Q>(SuperVectorSpace::even({"X", "Y", "Z"})).set("X", "Y", {{1, "Z"}}).build();
  const auto theta = io::parse_cocycle<Q>("theta X Y = 1 Z*\ntheta Y Z = 1 X\n", h3);
  CHECK(theta.theta(0, 1, 2) == 1);
  CHECK(theta.theta(1, 0, 2) == -1);
  CHECK(theta.theta(2, 1, 0) == -1);
  const auto phi = io::parse_pairing<Q>("phi X Y = 3 Z\n", h3);
  CHECK(phi.phi(0, 1, 2) == 3);
  CHECK(phi.phi(1, 0, 2) == 3);
}
