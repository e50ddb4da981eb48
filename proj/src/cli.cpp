#include "qlsa/cli.hpp"

#include "CLI11.hpp"
#include "qlsa/algebra_file.hpp"
#include "qlsa/catalog.hpp"
#include "qlsa/claims.hpp"
#include "qlsa/derivations.hpp"
#include "qlsa/extensions.hpp"
#include "qlsa/morphisms.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef QLSA_DATA_DIR
#define QLSA_DATA_DIR "data"
#endif

namespace qlsa::cli {

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Settings {
  double tol = 1e-9;
  std::string format = "text";
  bool no_timestamp = false;

  bool json() const { return format == "json"; }
};

int emit_report(const Report& r, const Settings& s, std::ostream& out) {
  if (s.json())
    out << r.to_json().dump(2) << "\n";
  else
    out << r.to_text();
  return r.passed() ? kPass : kFail;
}

template <FieldScalar S>
std::string describe_matrix(const Matrix<S>& d, const SuperVectorSpace& space) {
  std::string out;
  for (Index j = 0; j < d.cols(); ++j) {
    const Vector<S> col = d.col(j);
    if (is_zero(col)) continue;
    if (!out.empty()) out += "; ";
    out += space.label(j) + " -> " + format_vector(col, space);
  }
  return out.empty() ? "0" : out;
}

template <FieldScalar S>
std::string describe_vectors(const std::vector<Vector<S>>& vs, const SuperVectorSpace& space) {
  std::string out;
  for (const auto& v : vs) out += (out.empty() ? "" : ", ") + format_vector(v, space);
  return out;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io::ParseError(io::ParseError::Kind::io, path, 0, 0, "cannot write file");
  f << text;
}

// --- commands ---------------------------------------------------------------

template <FieldScalar S>
int cmd_verify(const std::string& file, const Settings& s, std::ostream& out) {
  const auto doc = io::read_algebra<S>(file);
  const auto& q = doc.algebra;
  Report r("verify " + doc.header.name);
  r.merge(verify_jacobi(q.algebra()));
  r.merge(verify_form(q.algebra(), q.form()));
  if (q.verified().nondegenerate) r.merge(verify_center_identities(q));
  return emit_report(r, s, out);
}

template <FieldScalar S>
int cmd_derivations(const std::string& file, const std::string& kind_text, const Settings& s, std::ostream& out) {
  const auto doc = io::read_algebra<S>(file);
  const auto kind = parse_derivation_kind(kind_text);
  const auto& q = doc.algebra;
  const auto space = kind == DerivationKind::skew ? derivation_space(q, kind) : derivation_space(q.algebra(), kind);
  Report r(to_string(kind) + " derivations of " + doc.header.name);
  r.info("dimension", "even derivations D[X,Y] = [DX,Y] + [X,DY]" +
                          std::string(kind == DerivationKind::skew ? " with B(DX,Y) = -B(X,DY)" : ""),
         std::to_string(space.dim()));
  for (Index i = 0; i < space.dim(); ++i)
    r.info("D" + std::to_string(i + 1), "basis element", describe_matrix(space.basis[static_cast<std::size_t>(i)], q.space()));
  return emit_report(r, s, out);
}

template <FieldScalar S>
int cmd_decompose(const std::string& file, const Settings& s, std::ostream& out) {
  const auto doc = io::read_algebra<S>(file);
  const auto& q = doc.algebra;
  Report r("decompose " + doc.header.name);
  r.add("non-degenerate", refs::nondegenerate, q.verified().nondegenerate);
  if (q.verified().nondegenerate) {
    const auto z = center(q.algebra());
    r.info("center", "Z(g)", z.is_zero() ? "0" : "span{" + describe_vectors(z.basis(), q.space()) + "}");
    if (const auto w = decomposability_via_center(q)) {
      r.info("central witness", refs::central_witness, describe_vectors(w->central, q.space()));
      std::ostringstream gram;
      for (Index i = 0; i < w->gram.rows(); ++i)
        for (Index j = 0; j < w->gram.cols(); ++j) gram << (i || j ? " " : "") << format_scalar(w->gram(i, j));
      r.info("form on witness", "B restricted to the central witness", gram.str());
      r.info("ideal", "non-degenerate central ideal", "span{" + describe_vectors(w->ideal.basis(), q.space()) + "}");
      r.info("complement", "orthogonal complement",
             "span{" + describe_vectors(w->complement.basis(), q.space()) + "}");
      r.merge(verify_decomposition(q, w->ideal, w->complement));
    } else {
      r.info("central witness", refs::central_witness, "none found");
    }
  }
  return emit_report(r, s, out);
}

template <FieldScalar S>
int cmd_check_iso(const std::string& src, const std::string& tgt, const std::string& map_file, bool isometry,
                  const Settings& s, std::ostream& out) {
  const auto a = io::read_algebra<S>(src);
  const auto b = io::read_algebra<S>(tgt);
  const Matrix<S> m = io::parse_map<S>(io::read_text(map_file), a.algebra.space(), b.algebra.space(), map_file);
  Report r((isometry ? "i-isomorphism " : "isomorphism ") + a.header.name + " -> " + b.header.name);
  r.merge(isometry ? verify_i_isomorphism(m, a.algebra, b.algebra) : verify_isomorphism(m, a.algebra.algebra(), b.algebra.algebra()));
  return emit_report(r, s, out);
}

struct ExtendArgs {
  std::string construction;
  std::vector<std::string> files;
  std::string derivation, psi, theta, phi, odd, e_label = "e", f_label = "f", name, output;
};

template <FieldScalar S>
int cmd_extend(const ExtendArgs& x, const Settings& s, std::ostream& out, std::ostream& err) {
  const auto read = [](const std::string& path) { return io::read_algebra<S>(path); };
  const auto need = [&](std::size_t n) {
    if (x.files.size() != n)
      throw CLI::ValidationError("extend " + x.construction, "expects " + std::to_string(n) + " algebra file(s)");
  };
  const auto need_opt = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw CLI::ValidationError("extend " + x.construction, std::string("requires ") + flag);
  };
  std::optional<QuadraticAlgebra<S>> q;
  LieSuperalgebra<S> algebra;
  std::vector<std::string> warnings;
  std::string base_name;

  if (x.construction == "double1d") {
    need(1);
    need_opt(x.derivation, "--derivation");
    const auto h = read(x.files[0]);
    base_name = h.header.name;
    const Matrix<S> c =
        io::parse_map<S>(io::read_text(x.derivation), h.algebra.space(), h.algebra.space(), x.derivation);
    q = double_extension_1d(h.algebra, c, x.e_label, x.f_label);
  } else if (x.construction == "double") {
    need(2);
    need_opt(x.psi, "--psi");
    const auto g = read(x.files[0]);
    const auto h = read(x.files[1]);
    base_name = g.header.name + "_" + h.header.name;
    const auto psi = io::parse_psi<S>(io::read_text(x.psi), g.algebra.space(), h.algebra.space(), x.psi);
    q = double_extension_general(g.algebra.algebra(), h.algebra, psi);
  } else if (x.construction == "tstar") {
    need(1);
    const auto g = read(x.files[0]);
    base_name = g.header.name;
    const auto c = x.theta.empty() ? Cocycle2<S>::zero(g.algebra.algebra())
                                   : io::parse_cocycle<S>(io::read_text(x.theta), g.algebra.algebra(), x.theta);
    auto ext = t_star_extension(c);
    algebra = ext.algebra;
    warnings = ext.warnings;
    if (ext.form) q = ext.quadratic();
  } else if (x.construction == "superdouble") {
    need(1);
    need_opt(x.psi, "--psi");
    need_opt(x.odd, "--odd");
    const auto g = read(x.files[0]);
    base_name = g.header.name;
    std::vector<std::string> labels;
    std::istringstream in(x.odd);
    for (std::string l; in >> l;) labels.push_back(l);
    if (labels.size() % 2 != 0) throw CLI::ValidationError("--odd", "needs an even number of labels X1.. Y1..");
    const auto target = SymplecticSpace<S>::canonical(labels);
    const SuperVectorSpace plane(0, static_cast<Index>(labels.size()), labels);
    const auto psi = io::parse_psi<S>(io::read_text(x.psi), g.algebra.space(), plane, x.psi);
    std::optional<Cocycle2<S>> theta;
    if (!x.theta.empty()) theta = io::parse_cocycle<S>(io::read_text(x.theta), g.algebra.algebra(), x.theta);
    auto ext = super_double_extension(Representation<S>{g.algebra.algebra(), target, psi}, theta);
    algebra = ext.algebra;
    warnings = ext.warnings;
    if (ext.form) q = ext.quadratic();
  } else if (x.construction == "tsstar") {
    need(1);
    const auto g = read(x.files[0]);
    base_name = g.header.name;
    const auto p = x.phi.empty() ? SymPairing<S>::zero(g.algebra.algebra())
                                 : io::parse_pairing<S>(io::read_text(x.phi), g.algebra.algebra(), x.phi);
    auto ext = ts_star_extension(p);
    algebra = ext.algebra;
    warnings = ext.warnings;
    if (ext.form) q = ext.quadratic();
  }

  const std::string name = x.name.empty() ? x.construction + "_" + base_name : x.name;
  const QuadraticAlgebra<S> result =
      q ? *q
        : QuadraticAlgebra<S>(algebra, BilinearForm<S>{Matrix<S>::Zero(algebra.dim(), algebra.dim()), FormParity::even});
  const std::string text = io::emit_algebra(result, name);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  if (s.json()) {
    nlohmann::json j{{"algebra", text}, {"warnings", warnings}, {"quadratic", q.has_value()}};
    write_output(j.dump(2) + "\n", x.output, out);
  } else {
    write_output(text, x.output, out);
  }
  return kPass;
}

int cmd_catalog_list(const Settings& s, std::ostream& out) {
  if (s.json()) {
    auto arr = nlohmann::json::array();
    for (const auto& e : catalog::list()) {
      auto params = nlohmann::json::array();
      for (const auto& p : e.params) params.push_back({{"name", p.name}, {"rule", p.rule}});
      arr.push_back({{"id", e.id}, {"source", e.source}, {"params", params}, {"samples", e.samples().size()}});
    }
    out << arr.dump(2) << "\n";
    return kPass;
  }
  for (const auto& e : catalog::list()) {
    std::string params;
    for (const auto& p : e.params) params += (params.empty() ? "" : ", ") + p.name + ": " + p.rule;
    out << std::left << std::setw(8) << e.id << "  " << (params.empty() ? "-" : params) << "  | " << e.source << "\n";
  }
  out << catalog::list().size() << " entries\n";
  return kPass;
}

int cmd_catalog_emit(const std::string& id, const std::vector<std::string>& raw, const std::string& output,
                     std::ostream& out) {
  catalog::Params params;
  std::vector<std::pair<std::string, std::string>> bindings;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--param", "expected k=v, got '" + kv + "'");
    const std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
    try {
      params[k] = parse_scalar<Rational>(v);
    } catch (const ScalarParseError& e) {
      throw CLI::ValidationError("--param", e.what());
    }
    bindings.emplace_back(k, format_scalar(params[k]));
  }
  const auto q = catalog::build(id, params);
  std::sort(bindings.begin(), bindings.end());
  write_output(io::emit_algebra(q, id, bindings), output, out);
  return kPass;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

}  // namespace

std::filesystem::path default_data_dir() { return QLSA_DATA_DIR; }

int write_full_report(const std::filesystem::path& data_dir, bool json, bool with_timestamp, std::ostream& out) {
  Report all("qlsa verification report");
  std::vector<std::pair<const claims::Claim*, Report>> results;
  const auto list = claims::all_claims(data_dir);
  for (const auto& c : list) results.emplace_back(&c, c.run());
  for (const auto& [c, r] : results) all.merge(r, "[" + c->id + "] ");
  if (json) {
    out << all.to_json().dump(2) << "\n";
    return all.passed() ? kPass : kFail;
  }
  out << "# qlsa verification report\n";
  if (with_timestamp) out << "# generated " << timestamp() << "\n";
  out << "\n";
  for (const auto& [c, r] : results) out << r.to_text() << "\n";
  out << "== summary\n";
  for (const auto& [c, r] : results)
    out << (r.passed() ? "PASS " : "FAIL ") << c->id << " (" << r.checks().size() << " checks, " << r.failures()
        << " failed)\n";
  out << (all.passed() ? "PASS" : "FAIL") << " (" << all.checks().size() << " checks, " << all.failures()
      << " failed)\n";
  return all.passed() ? kPass : kFail;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Quadratic and odd-quadratic Lie superalgebras: verification, derivations, extensions, catalog",
               "qlsa"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", s.tol, "tolerance for the complex backend")->envname("QLSA_TOL")->check(CLI::PositiveNumber);
  app.add_option("--format", s.format, "output format")
      ->envname("QLSA_FORMAT")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-timestamp", s.no_timestamp, "omit the timestamp line of `report`")->envname("QLSA_NO_TIMESTAMP");

  std::string file, file2, kind = "all", map_file, id, output, data_dir = default_data_dir().string();
  bool isometry = false, report_all = false;
  std::vector<std::string> params;
  std::optional<std::string> only;

  auto* verify = app.add_subcommand("verify", "axioms and center identities of an algebra file");
  verify->add_option("file", file, "algebra file")->required()->check(CLI::ExistingFile);

  auto* derivations = app.add_subcommand("derivations", "basis of Der, Der_a or the inner derivations");
  derivations->add_option("file", file, "algebra file")->required()->check(CLI::ExistingFile);
  derivations->add_option("--kind", kind, "all | skew | inner")->check(CLI::IsMember({"all", "skew", "inner"}));

  auto* decompose = app.add_subcommand("decompose", "search for a central non-degenerate ideal");
  decompose->add_option("file", file, "algebra file")->required()->check(CLI::ExistingFile);

  auto* iso = app.add_subcommand("check-iso", "verify a map between two algebra files");
  iso->add_option("source", file, "source algebra file")->required()->check(CLI::ExistingFile);
  iso->add_option("target", file2, "target algebra file")->required()->check(CLI::ExistingFile);
  iso->add_option("--map", map_file, "map file of `image <label> = <terms>` lines")
      ->required()
      ->check(CLI::ExistingFile);
  iso->add_flag("--isometry", isometry, "also require B'(AX,AY) = B(X,Y)");

  ExtendArgs ext;
  auto* extend = app.add_subcommand("extend", "build a new algebra by an extension");
  extend->require_subcommand(1);
  extend->fallthrough();
  extend->add_option("-o,--output", ext.output, "write the algebra file here instead of stdout");
  extend->add_option("--name", ext.name, "name of the result");
  for (const char* c : {"double1d", "double", "tstar", "superdouble", "tsstar"}) {
    auto* sub = extend->add_subcommand(c);
    sub->fallthrough();
    sub->add_option("files", ext.files, "input algebra file(s)")->required()->check(CLI::ExistingFile);
    sub->callback([&ext, c] { ext.construction = c; });
  }
  extend->get_subcommand("double1d")->add_option("--derivation", ext.derivation, "skew derivation C as a map file")
      ->check(CLI::ExistingFile);
  extend->get_subcommand("double1d")->add_option("--e", ext.e_label, "label of the new even element e");
  extend->get_subcommand("double1d")->add_option("--f", ext.f_label, "label of the new element f");
  extend->get_subcommand("double")->add_option("--psi", ext.psi, "psi : g -> Der_a(h) as `psi` lines")
      ->check(CLI::ExistingFile);
  extend->get_subcommand("tstar")->add_option("--theta", ext.theta, "2-cocycle as `theta` lines")
      ->check(CLI::ExistingFile);
  extend->get_subcommand("superdouble")->add_option("--odd", ext.odd, "symplectic labels, X's then Y's, e.g. \"X1 Y1\"");
  extend->get_subcommand("superdouble")->add_option("--psi", ext.psi, "psi : g -> sp(V) as `psi` lines")
      ->check(CLI::ExistingFile);
  extend->get_subcommand("superdouble")->add_option("--theta", ext.theta, "optional 2-cocycle")
      ->check(CLI::ExistingFile);
  extend->get_subcommand("tsstar")->add_option("--phi", ext.phi, "symmetric pairing as `phi` lines")
      ->check(CLI::ExistingFile);

  auto* cat = app.add_subcommand("catalog", "named algebras");
  cat->require_subcommand(1);
  cat->fallthrough();
  auto* cat_list = cat->add_subcommand("list", "list entries");
  auto* cat_emit = cat->add_subcommand("emit", "print an entry as an algebra file");
  cat_emit->add_option("id", id, "entry id")->required();
  cat_emit->add_option("--param", params, "parameter binding k=v (repeatable)");
  cat_emit->add_option("-o,--output", output, "write here instead of stdout");
  auto* cat_verify = cat->add_subcommand("verify", "verify every entry over its sample grid");
  cat_verify->add_option("--id", only, "only this entry");
  for (auto* sub : {cat_list, cat_emit, cat_verify}) sub->fallthrough();

  auto* report = app.add_subcommand("report", "the full verification report");
  report->add_flag("--all", report_all, "run every check (the default)");
  report->add_option("--data-dir", data_dir, "directory of the shipped algebra files");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }
  set_tolerance(s.tol);

  const auto backend_of = [](const std::string& path) { return io::peek_backend(io::read_text(path), path); };
  const auto dispatch = [&](std::initializer_list<std::string> files, auto&& body) -> int {
    bool complex = false;
    for (const auto& f : files) complex = complex || backend_of(f) == Backend::complex;
    return complex ? body(Complex{}) : body(Rational{});
  };

  try {
    if (verify->parsed())
      return dispatch({file}, [&]<typename S>(S) { return cmd_verify<S>(file, s, out); });
    if (derivations->parsed())
      return dispatch({file}, [&]<typename S>(S) { return cmd_derivations<S>(file, kind, s, out); });
    if (decompose->parsed())
      return dispatch({file}, [&]<typename S>(S) { return cmd_decompose<S>(file, s, out); });
    if (iso->parsed())
      return dispatch({file, file2},
                      [&]<typename S>(S) { return cmd_check_iso<S>(file, file2, map_file, isometry, s, out); });
    if (extend->parsed()) {
      std::vector<std::string> files = ext.files;
      bool complex = false;
      for (const auto& f : files) complex = complex || backend_of(f) == Backend::complex;
      return complex ? cmd_extend<Complex>(ext, s, out, err) : cmd_extend<Rational>(ext, s, out, err);
    }
    if (cat_list->parsed()) return cmd_catalog_list(s, out);
    if (cat_emit->parsed()) return cmd_catalog_emit(id, params, output, out);
    if (cat_verify->parsed()) {
      const Report r = catalog::verify_all(only);
      const int code = emit_report(r, s, out);
      if (!s.json()) {
        std::size_t samples = 0, entries = 0;
        for (const auto& e : catalog::list())
          if (!only || e.id == *only) ++entries, samples += e.samples().size();
        out << entries << " entries, " << samples << " samples\n";
      }
      return code;
    }
    if (report->parsed()) return write_full_report(data_dir, s.json(), !s.no_timestamp, out);
  } catch (const io::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const catalog::CatalogError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ExtensionError& e) {
    err << "error: " << e.what() << "\n";
    emit_report(e.report(), s, s.json() ? out : err);
    return kFail;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace qlsa::cli
