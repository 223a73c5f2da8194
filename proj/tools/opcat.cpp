// opcat: command-line front end for the opcat library.
// Exit codes: 0 success, 1 violations or failed certificate, 2 parse/schema/I-O error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "opcat/fixtures.hpp"
#include "opcat/io.hpp"

using namespace opcat;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --out PATH, or standard output; summaries go to whichever stream is not carrying data
struct Output {
  std::string path;
  std::ostream& summary() const { return path.empty() ? std::cerr : std::cout; }
  void emit(const std::string& text) const {
    if (path.empty())
      std::cout << text;
    else
      write_file(path, text);
  }
};

int report(const ValidationReport& r) {
  if (r.ok()) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << r.size() << " violation(s)\n" << r.str(1000);
  return 1;
}

int cmd_validate(const std::string& path, const std::string& expected) {
  const std::string text = read_text(path);
  const json env = parse_text(text);
  const std::string k = env.at("kind").get<std::string>();
  if (!expected.empty() && k != expected) throw ParseError("file has kind \"" + k + "\", expected \"" + expected + "\"");
  if (k == kind::simplicial_set) return report(validate_simplicial(load<TruncatedSimplicialSet>(text)));
  if (k == kind::category) return report(validate_category(load<FiniteCategory>(text)));
  if (k == kind::two_category) return report(validate_2category(load<Finite2Category>(text)));
  if (k == kind::monoidal_category) return report(validate_moncat(load<StrictMonCat>(text)));
  if (k == kind::operadic) return report(validate_operadic(load<UnaryOperadic2Cat>(text)));
  if (k == kind::presentation) return report(validate_presentation(load<MonPresentation>(text)));
  if (k == kind::operad) {
    const auto P = load<CategoricalOperad>(text);
    if (auto r = validate_operadic(*P.base); !r.ok()) return report(r);
    return report(validate_operad(P));
  }
  if (k == kind::functor) return report(validate_operadic_functor(load<OperadicFunctor>(text)));
  if (k == kind::fibration) return report(check_split_fibration(load<SplitFibration>(text)));
  throw ParseError("kind \"" + k + "\" has no validator");
}

std::string levels(const TruncatedSimplicialSet& X) {
  std::string s;
  for (int k = 0; k <= X.max_level; ++k) s += (k ? " " : "") + std::to_string(X.size(k));
  return s;
}

int cmd_nerve(const std::string& path, const Output& out) {
  const auto C = load<Finite2Category>(read_text(path));
  const auto X = duskin_nerve(C);
  out.emit(save(X));
  out.summary() << "nerve levels " << levels(X) << "\n";
  return 0;
}

int cmd_dec(const std::string& path, const Output& out) {
  const auto C = load<Finite2Category>(read_text(path));
  const auto D = dec_nerve_comparison(C);
  out.emit(save(D.slice.D));
  out.summary() << "dec levels " << levels(*D.iso.map.source) << ", nerve of the lax slice levels "
                << levels(*D.iso.map.target) << ", iso " << (D.iso.certified ? "certified" : "FAILED") << "\n";
  if (!D.iso.certified) out.summary() << D.iso.report.str();
  return D.iso.certified ? 0 : 1;
}

int cmd_para(const std::string& path, const Output& out) {
  const auto O = para(load<StrictMonCat>(read_text(path)));
  out.emit(save(O));
  const auto r = validate_operadic(O);
  out.summary() << "para: " << O.objects() << " objects, " << O.one_cells() << " 1-cells, " << O.C.two_cells()
                << " 2-cells, " << (r.ok() ? "valid" : "INVALID") << "\n";
  return r.ok() ? 0 : 1;
}

std::shared_ptr<const UnaryOperadic2Cat> load_base(const std::string& base_path, const CategoricalOperad& P) {
  auto O = std::make_shared<const UnaryOperadic2Cat>(load<UnaryOperadic2Cat>(read_text(base_path)));
  if (!(*O == *P.base)) throw Error("the operad lives over a different base");
  return O;
}

int cmd_groth(const std::string& base_path, const std::string& operad_path, const Output& out) {
  const auto P = load<CategoricalOperad>(read_text(operad_path));
  const auto O = load_base(base_path, P);
  const auto G = grothendieck(O, P);
  const auto F = canonical_fibration(G);
  out.emit(save(F));
  out.summary() << "total: " << G.total->objects() << " objects, " << G.total->one_cells() << " 1-cells, "
                << G.total->C.two_cells() << " 2-cells; split fibration "
                << (F.report.ok() ? "certified" : "FAILED") << "\n";
  return F.report.ok() ? 0 : 1;
}

int cmd_extract(const std::string& path, const Output& out) {
  const auto F = load<SplitFibration>(read_text(path));
  const auto P = extract_operad(F);
  out.emit(save(P));
  out.summary() << "extracted operad over " << P.base->objects() << " objects\n";
  return 0;
}

int cmd_roundtrip(const std::string& base_path, const std::string& operad_path) {
  const auto P = load<CategoricalOperad>(read_text(operad_path));
  const auto O = load_base(base_path, P);
  const auto a = roundtrip_operad(O, P);
  const auto F = canonical_fibration(grothendieck(O, P));
  const auto b = roundtrip_fibration(F);
  std::cout << "extract(groth(P)) = P: " << (a.certified ? "certified" : "FAILED") << "\n"
            << "groth(extract(F)) = F over the base: " << (b.certified ? "certified" : "FAILED") << "\n";
  if (!a.certified) std::cout << a.report.str();
  if (!b.certified) std::cout << b.report.str();
  return a.certified && b.certified ? 0 : 1;
}

int cmd_adjoint(const std::string& sset_path, const std::string& moncat_path) {
  const auto X = load<TruncatedSimplicialSet>(read_text(sset_path));
  const auto M = load<StrictMonCat>(read_text(moncat_path));
  const auto c = adjunction_check(X, M);
  std::cout << "counts " << c.maps << " = " << c.assignments << ", bijection "
            << (c.certified ? "certified" : "FAILED") << "\n";
  if (!c.certified) std::cout << c.report.str();
  return c.certified ? 0 : 1;
}

int cmd_equal(const std::string& pres_path, const std::string& terms_path, int bound) {
  const auto P = load<MonPresentation>(read_text(pres_path));
  const json env = parse_text(read_text(terms_path));
  const json& body = body_of(env, kind::term_pair);
  const auto [a, b] = detail::guarded([&] {
    return std::pair{term_from_json(detail::sub(body, "left")), term_from_json(detail::sub(body, "right"))};
  });
  const auto r = presentation_equal(P, a, b, bound);
  std::cout << to_string(r.outcome) << " (bound " << r.bound << ", " << r.explored << " terms explored)\n";
  return r.outcome == Equality::equal ? 0 : 1;
}

int cmd_examples(const std::string& name, bool list, const Output& out) {
  if (list || name.empty()) {
    for (const auto& n : fixture_names()) std::cout << n << "\n";
    return 0;
  }
  out.emit(fixture(name));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unary operadic 2-categories, categorical operads and their Grothendieck construction"};
  app.require_subcommand(1);
  Output out;
  std::string a, b, kind_opt;
  int bound = 0;
  bool list = false;

  auto* v = app.add_subcommand("validate", "run the validator for the file's kind");
  v->add_option("file", a)->required();
  v->add_option("--kind", kind_opt, "expected kind");
  auto* nerve = app.add_subcommand("nerve", "Duskin nerve of a 2-category (levels 0..3)");
  nerve->add_option("two_category", a)->required();
  auto* dec = app.add_subcommand("dec", "lax slice sum DC and the certified iso dec NC = N DC");
  dec->add_option("two_category", a)->required();
  auto* para_c = app.add_subcommand("para", "the operadic 2-category Para of a monoidal category");
  para_c->add_option("monoidal_category", a)->required();
  auto* groth = app.add_subcommand("groth", "Grothendieck construction with its canonical splitting");
  groth->add_option("base", a)->required();
  groth->add_option("operad", b)->required();
  auto* extract = app.add_subcommand("extract", "operad of a split fibration");
  extract->add_option("fibration", a)->required();
  auto* rt = app.add_subcommand("roundtrip", "certify both round trips for an operad");
  rt->add_option("base", a)->required();
  rt->add_option("operad", b)->required();
  auto* adj = app.add_subcommand("adjoint", "certify sSet(X, Psi M) = StrMonCat(Phi tr3 X, M)");
  adj->add_option("simplicial_set", a)->required();
  adj->add_option("monoidal_category", b)->required();
  auto* eq = app.add_subcommand("equal", "decide equality of two terms in a presentation");
  eq->add_option("presentation", a)->required();
  eq->add_option("terms", b, "term_pair file")->required();
  eq->add_option("--bound", bound, "closure bound (0: default)");
  auto* ex = app.add_subcommand("examples", "write a named fixture");
  ex->add_option("name", a);
  ex->add_flag("--list", list, "list fixture names");
  for (auto* s : {nerve, dec, para_c, groth, extract, ex}) s->add_option("--out", out.path, "output file");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*v) return cmd_validate(a, kind_opt);
    if (*nerve) return cmd_nerve(a, out);
    if (*dec) return cmd_dec(a, out);
    if (*para_c) return cmd_para(a, out);
    if (*groth) return cmd_groth(a, b, out);
    if (*extract) return cmd_extract(a, out);
    if (*rt) return cmd_roundtrip(a, b);
    if (*adj) return cmd_adjoint(a, b);
    if (*eq) return cmd_equal(a, b, bound);
    if (*ex) return cmd_examples(a, list, out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidInput& e) {
    std::cout << e.report().size() << " violation(s)\n" << e.report().str(1000);
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
