// folkengine: command-line front end for the finite-category homotopy
// engine. Exit codes: 0 = all checks pass, 1 = a checked property fails
// (witness printed), 2 = input or usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "folk/modelstruct.hpp"
#include "folk/textio.hpp"

using namespace folk;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string sanitize(std::string name) {
  for (char& c : name)
    if (c == '#' || c == ' ') c = '_';
  return name;
}

// Loads a workspace from files; returns the last functor block parsed in
// the final file unless --name selected one.
struct LoadedFunctor {
  Workspace ws;
  FunctorMap f;
};

LoadedFunctor load_functor(Kit& kit, const std::vector<std::string>& files,
                           const std::string& name) {
  LoadedFunctor lf;
  lf.ws.kit = &kit;
  std::string last;
  for (const auto& path : files) {
    Workspace before = lf.ws;
    parse_text(lf.ws, slurp(path));
    for (const auto& [n, f] : lf.ws.functors)
      if (!before.functors.count(n)) last = n;
  }
  std::string pick = name.empty() ? last : name;
  if (pick.empty()) throw std::runtime_error("no functor block found");
  lf.f = lf.ws.functor(pick);
  return lf;
}

// Self-contained serialization: category blocks for dom/cod then the
// functor block.
std::string functor_file(const FunctorMap& f) {
  std::string out;
  out += print_category(*f.dom);
  if (f.cod.get() != f.dom.get()) out += print_category(*f.cod);
  FunctorMap g = f;
  g.name = sanitize(f.name);
  return out + print_functor(g);
}

std::string homotopy_file(const Homotopy& h, const std::string& name) {
  std::string out;
  out += print_category(*h.a0);
  if (h.a1.get() != h.a0.get()) out += print_category(*h.a1);
  Homotopy g = h;
  g.carrier.name = sanitize(name);
  return out + print_homotopy(g, h.a0->name(), h.a1->name());
}

Corpus corpus_for(Kit& kit, const std::string& dir) {
  if (!dir.empty()) return load_corpus(kit, dir);
  const char* env = std::getenv("FOLKENGINE_CORPUS");
  if (env && *env) return load_corpus(kit, env);
  return default_corpus(kit);
}

int cmd_check(const std::vector<std::string>& files) {
  Kit kit;
  Workspace ws;
  ws.kit = &kit;
  for (const auto& path : files) parse_text(ws, slurp(path));
  std::cout << "parsed " << ws.categories.size() << " categories, " << ws.functors.size()
            << " functors, " << ws.nats.size() << " natural transformations, "
            << ws.homotopies.size() << " homotopies, " << ws.squares.size() << " squares\n";
  std::cout << "all values validated\n";
  return 0;
}

int cmd_interval_verify() {
  Kit kit;
  Corpus corpus = default_corpus(kit);
  Report rep = verify_interval(kit, corpus.test_family);
  rep.print(std::cout);
  return rep.all_pass() ? 0 : 1;
}

int cmd_interval_dump() {
  Kit kit;
  const IntervalStructure& iv = kit.iv();
  std::cout << print_category(*iv.one) << print_category(*iv.I) << print_category(*iv.S)
            << print_category(*iv.IxI.cat) << print_category(*iv.IxS.cat);
  for (const FunctorMap* f : {&iv.i0, &iv.i1, &iv.p, &iv.v, &iv.r0, &iv.r1, &iv.s, &iv.gul,
                              &iv.glr, &iv.gur, &iv.ql, &iv.qr, &iv.w, &iv.pbar, &iv.x})
    std::cout << print_functor(*f);
  return 0;
}

int cmd_functor_check(const std::vector<std::string>& files, const std::string& name) {
  Kit kit;
  LoadedFunctor lf = load_functor(kit, files, name);
  ValidationReport rep = validate(lf.f);
  std::cout << "functor " << lf.f.name << ": " << rep.summary() << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_equiv(const std::vector<std::string>& files, const std::string& name) {
  Kit kit;
  LoadedFunctor lf = load_functor(kit, files, name);
  auto cert = find_equivalence(kit, lf.f);
  bool oracle = equivalence_oracle(lf.f);
  if (cert.has_value() != oracle) {
    std::cout << "FAIL: search and oracle disagree on " << lf.f.name << "\n";
    return 1;
  }
  if (!cert) {
    std::cout << lf.f.name << ": not a homotopy equivalence (search exhausted, oracle agrees)\n";
    return 1;
  }
  std::cout << lf.f.name << ": homotopy equivalence\n";
  std::cout << functor_file(cert->f_inv);
  std::cout << homotopy_file(cert->h_left, "h_left");
  std::cout << homotopy_file(cert->h_right, "h_right");
  return 0;
}

int cmd_fib(const std::vector<std::string>& files, const std::string& name, bool normally_cloven) {
  Kit kit;
  LoadedFunctor lf = load_functor(kit, files, name);
  IsoFibrationResult r = is_isofibration(lf.f);
  if (!r.holds) {
    std::cout << lf.f.name << ": not an iso-fibration; witness: " << r.describe(lf.f) << "\n";
    return 1;
  }
  if (normally_cloven && !is_normally_cloven_fibration(kit, lf.f)) {
    std::cout << lf.f.name << ": iso-fibration but the canonical cleavage fails\n";
    return 1;
  }
  std::cout << lf.f.name << ": " << (normally_cloven ? "normally cloven " : "")
            << "iso-fibration\n";
  return 0;
}

int cmd_cofib(const std::vector<std::string>& files, const std::string& name,
              bool normally_cloven) {
  Kit kit;
  LoadedFunctor lf = load_functor(kit, files, name);
  if (normally_cloven) {
    auto nc = normally_cloven_cofibration(kit, lf.f);
    if (!nc) {
      std::cout << lf.f.name << ": not a normally cloven iso-cofibration (criterion lift search "
                   "exhausted)\n";
      return 1;
    }
    std::cout << lf.f.name << ": normally cloven iso-cofibration\n";
    return 0;
  }
  auto w = is_cofibration(kit, lf.f);
  if (!w) {
    std::cout << lf.f.name << ": not an iso-cofibration (retraction search exhausted";
    if (!injective_on_objects_oracle(lf.f)) std::cout << "; not injective on objects";
    std::cout << ")\n";
    return 1;
  }
  std::cout << lf.f.name << ": iso-cofibration\n";
  return 0;
}

int cmd_factor(const std::vector<std::string>& files, const std::string& name,
               const std::string& mode_str, const std::string& outdir) {
  Kit kit;
  LoadedFunctor lf = load_functor(kit, files, name);
  FactorMode mode;
  if (mode_str == "cyl")
    mode = FactorMode::MappingCyl;
  else if (mode_str == "cocyl")
    mode = FactorMode::MappingCocyl;
  else if (mode_str == "cof-tfib")
    mode = FactorMode::CofThenTrivFib;
  else if (mode_str == "tcof-fib")
    mode = FactorMode::TrivCofThenFib;
  else
    throw CLI::ValidationError("--mode must be one of cyl, cocyl, cof-tfib, tcof-fib");
  Factorization fac = factor(kit, lf.f, mode);
  std::string why;
  if (!validate_factorization(kit, fac, &why)) {
    std::cout << "FAIL: factorization certificates do not re-validate: " << why << "\n";
    return 1;
  }
  std::filesystem::create_directories(outdir);
  auto path = [&](const std::string& n) { return outdir + "/" + n; };
  emit(path("mid.cat"), print_category(*fac.mid));
  FunctorMap j = fac.j;
  j.name = "j";
  FunctorMap g = fac.g;
  g.name = "g";
  emit(path("j.fun"), functor_file(j));
  emit(path("g.fun"), functor_file(g));
  std::ostringstream audit;
  audit << "mode " << to_string(fac.mode) << "\n";
  audit << "f " << sanitize(lf.f.name) << " : " << lf.f.dom->name() << " -> "
        << lf.f.cod->name() << "\n";
  for (const auto& a : fac.audit) audit << "audit " << a << "\n";
  if (fac.j_nc) {
    FunctorMap l = fac.j_nc->l;
    l.name = "criterion_lift";
    emit(path("j_criterion_lift.fun"), functor_file(l));
    audit << "certificate j_criterion_lift.fun (normally cloven cofibration)\n";
  }
  if (fac.j_cof) {
    FunctorMap r = fac.j_cof->r;
    r.name = "r_witness";
    emit(path("j_cof_witness.fun"), functor_file(r));
    audit << "certificate j_cof_witness.fun (cofibration retraction witness)\n";
  }
  if (fac.j_sdr) {
    FunctorMap r = fac.j_sdr->r;
    r.name = "j_sdr_retraction";
    emit(path("j_sdr_retraction.fun"), functor_file(r));
    emit(path("j_sdr_homotopy.hom"), homotopy_file(fac.j_sdr->h, "j_sdr_homotopy"));
    audit << "certificate j_sdr_retraction.fun + j_sdr_homotopy.hom (section of an SDR)\n";
  }
  if (fac.g_sdr) {
    FunctorMap s = fac.g_sdr->j;
    s.name = "g_sdr_section";
    emit(path("g_sdr_section.fun"), functor_file(s));
    emit(path("g_sdr_homotopy.hom"), homotopy_file(fac.g_sdr->h, "g_sdr_homotopy"));
    audit << "certificate g_sdr_section.fun + g_sdr_homotopy.hom (SDR retraction)\n";
  }
  if (fac.g_has_cleavage) {
    CocylMData md = cocyl_m_sdr_data(kit, fac.g);
    FunctorMap n = md.sdr.j;
    n.name = "g_cleavage_section";
    emit(path("g_cleavage_section.fun"), functor_file(n));
    audit << "certificate g_cleavage_section.fun (functorial section of the canonical arrow "
             "into the mapping co-cylinder)\n";
  }
  if (fac.j_equiv)
    emit(path("j_equiv_inverse.fun"), functor_file(fac.j_equiv->f_inv));
  if (fac.g_equiv)
    emit(path("g_equiv_inverse.fun"), functor_file(fac.g_equiv->f_inv));
  emit(path("factorization.txt"), audit.str());
  std::cout << "wrote factorization (" << to_string(fac.mode) << ") to " << outdir << "\n";
  return 0;
}

int cmd_lift(const std::string& file, const std::string& out) {
  Kit kit;
  Workspace ws;
  ws.kit = &kit;
  parse_text(ws, slurp(file));
  if (ws.squares.empty()) throw std::runtime_error("no square block in " + file);
  const NamedSquare& sq = ws.squares.begin()->second;
  LiftProblem p{ws.functor(sq.left), ws.functor(sq.right), ws.functor(sq.top),
                ws.functor(sq.bottom)};
  if (!square_commutes(p)) {
    std::cout << "FAIL: the square does not commute\n";
    return 1;
  }
  auto cert_j = find_equivalence(kit, p.j);
  auto cert_f = find_equivalence(kit, p.f);
  bool f_fib = is_isofibration(p.f).holds;
  bool f_nc = f_fib && is_normally_cloven_fibration(kit, p.f);
  std::optional<LiftSolution> sol;
  std::string rule;
  if (cert_j && f_nc && is_cofibration(kit, p.j)) {
    SdrCertificate sdr_j = sdr_for_trivial_cofibration(kit, p.j, *cert_j);
    sol = lift_against_sdr(kit, p, canonical_cleavage(p.f), sdr_j);
    rule = "trivial cofibration vs normally cloven fibration";
  } else if (cert_j && f_fib) {
    auto nc = normally_cloven_cofibration(kit, p.j);
    if (nc) {
      SdrCertificate sdr_j = sdr_for_trivial_cofibration(kit, p.j, *cert_j);
      sol = dual_chep_lift(kit, p, *nc, sdr_j);
      rule = "trivial normally cloven cofibration vs fibration";
    }
  }
  if (!sol && cert_f && f_nc) {
    auto w = is_cofibration(kit, p.j);
    if (w) {
      SdrRetractionCertificate sdr_f = sdr_for_trivial_fibration(kit, p.f, *cert_f);
      sol = chep_lift(kit, p, *w, canonical_cleavage(p.f), sdr_f);
      rule = "cofibration vs trivial normally cloven fibration";
    }
  }
  if (!sol) {
    std::cout << "FAIL: no lifting rule applies (square legs are not a trivial-cofibration/"
                 "fibration or cofibration/trivial-fibration pair)\n";
    return 1;
  }
  if (!fills(p, sol->l)) {
    std::cout << "FAIL: constructed lift does not fill\n";
    return 1;
  }
  FunctorMap l = sol->l;
  l.name = "l";
  emit(out, functor_file(l));
  std::cout << "lift written to " << out << " (" << rule << ")\n";
  return 0;
}

int cmd_axioms(const std::string& variant_str, const std::string& corpus_dir,
               const std::string& report_file, bool broken, bool timings) {
  Kit kit;
  Corpus corpus = corpus_for(kit, corpus_dir);
  Variant variant = variant_str == "B" ? Variant::B : Variant::A;
  VerifyOptions opts;
  if (broken) {
    opts.cleavage = [](const FunctorMap& f) { return broken_cleavage(f); };
    if (variant == Variant::B)
      std::cout << "note: the injected cleavage drives the fibration-side formula lifts, "
                   "which variant B does not use; run variant A to see the failure\n";
  }
  Report rep = verify_model_axioms(kit, corpus, variant, opts);
  rep.print(std::cout, timings);
  if (!report_file.empty()) {
    std::ofstream out(report_file);
    rep.print(out);  // file output stays byte-deterministic
  }
  return rep.all_pass() ? 0 : 1;
}

int cmd_selftest_pipeline() {
  // End-to-end drive of the file formats: factor a functor to disk,
  // re-parse every artifact, and check the certificate equations; then
  // solve a lifting problem from a square file and verify the result.
  Kit kit;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "folkengine-selftest";
  fs::create_directories(dir);
  FunctorMap p = kit.iv().p;
  emit((dir / "p.fun").string(), functor_file(p));
  int rc = cmd_factor({(dir / "p.fun").string()}, "", "cyl", (dir / "fac").string());
  if (rc != 0) return rc;
  Workspace ws;
  ws.kit = &kit;
  parse_text(ws, slurp((dir / "fac" / "mid.cat").string()));
  parse_text(ws, slurp((dir / "fac" / "j.fun").string()));
  parse_text(ws, slurp((dir / "fac" / "g.fun").string()));
  FunctorMap j = ws.functor("j"), g = ws.functor("g");
  if (compose(g, j).obj_map != std::vector<int>{0, 0}) {
    std::cout << "FAIL: reparsed factorization does not compose to p\n";
    return 1;
  }
  parse_text(ws, slurp((dir / "fac" / "g_sdr_section.fun").string()));
  parse_text(ws, slurp((dir / "fac" / "g_sdr_homotopy.hom").string()));
  SdrRetractionCertificate sdr;
  sdr.f = g;
  sdr.j = ws.functor("g_sdr_section");
  sdr.h = ws.homotopy("g_sdr_homotopy");
  if (!validate_sdr_retraction(kit, sdr)) {
    std::cout << "FAIL: reparsed SDR certificate does not validate\n";
    return 1;
  }
  // Square file through the lift command.
  std::string sq = print_category(*kit.one()) + print_category(*kit.I());
  sq += print_functor(kit.iv().i0) + print_functor(kit.iv().i1) + print_functor(kit.iv().p);
  FunctorMap bang = kit.bang(kit.I());
  bang.name = "bang";
  sq += print_functor(bang);
  sq += "square problem\nleft i0\nright p\ntop i1\nbottom bang\n";
  emit((dir / "problem.sq").string(), sq);
  rc = cmd_lift((dir / "problem.sq").string(), (dir / "l.fun").string());
  if (rc != 0) return rc;
  Workspace ws2;
  ws2.kit = &kit;
  parse_text(ws2, slurp((dir / "l.fun").string()));
  FunctorMap l = ws2.functor("l");
  if (l.obj_map != std::vector<int>{1, 1}) {
    std::cout << "FAIL: reparsed lift has the wrong object map\n";
    return 1;
  }
  std::cout << "pipeline self-test passed\n";
  return 0;
}

int cmd_selftest_roundtrip() {
  Kit kit;
  Corpus corpus = default_corpus(kit);
  for (const auto& cat : corpus.categories) {
    Workspace ws;
    ws.kit = &kit;
    parse_text(ws, print_category(*cat));
    if (!structurally_equal(*ws.category(cat->name()), *cat)) {
      std::cout << "FAIL: category " << cat->name() << " does not round-trip\n";
      return 1;
    }
  }
  const IntervalStructure& iv = kit.iv();
  Workspace ws;
  ws.kit = &kit;
  parse_text(ws, print_category(*iv.I) + print_category(*iv.S) + print_functor(iv.v) +
                     print_functor(iv.r0) + print_functor(iv.s));
  if (!structurally_equal(*ws.category("I"), *iv.I) ||
      ws.functor("v").arr_map != iv.v.arr_map || ws.functor("s").obj_map != iv.s.obj_map) {
    std::cout << "FAIL: interval functors do not round-trip\n";
    return 1;
  }
  std::cout << "round-trip self-test passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"folkengine: constructive homotopy checks on finite categories"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string name, mode, outdir = "factor-out", out = "l.fun";
  std::string variant = "A", corpus_dir, report_file;
  bool normally_cloven = false, broken = false, timings = false;

  auto* check = app.add_subcommand("check", "parse and validate category/functor files");
  check->add_option("files", files, "input files")->required();

  auto* interval = app.add_subcommand("interval", "interval structure commands");
  auto* iverify = interval->add_subcommand("verify", "check every structure axiom");
  auto* idump = interval->add_subcommand("dump", "emit the full structure in the text format");
  interval->require_subcommand(1);

  auto* functor = app.add_subcommand("functor", "functor commands");
  auto* fcheck = functor->add_subcommand("check", "validate a functor file");
  fcheck->add_option("files", files, "input files")->required();
  fcheck->add_option("--name", name, "functor name (default: last block)");
  functor->require_subcommand(1);

  auto* equiv = app.add_subcommand("equiv", "decide homotopy equivalence, print a certificate");
  equiv->add_option("files", files, "input files")->required();
  equiv->add_option("--name", name, "functor name");

  auto* fib = app.add_subcommand("fib", "decide the iso-fibration property");
  fib->add_option("files", files, "input files")->required();
  fib->add_option("--name", name, "functor name");
  fib->add_flag("--normally-cloven", normally_cloven, "also check the canonical cleavage");

  auto* cofib = app.add_subcommand("cofib", "decide the iso-cofibration property");
  cofib->add_option("files", files, "input files")->required();
  cofib->add_option("--name", name, "functor name");
  cofib->add_flag("--normally-cloven", normally_cloven, "require the criterion lift");

  auto* factor_cmd = app.add_subcommand("factor", "factor a functor, write certificates");
  factor_cmd->add_option("files", files, "input files")->required();
  factor_cmd->add_option("--name", name, "functor name");
  factor_cmd->add_option("--mode", mode, "cyl | cocyl | cof-tfib | tcof-fib")->required();
  factor_cmd->add_option("-o,--out", outdir, "output directory");

  auto* lift = app.add_subcommand("lift", "solve a lifting problem by the matching formula");
  lift->add_option("square", files, "square file")->required()->expected(1);
  lift->add_option("-o,--out", out, "output functor file");

  auto* axioms = app.add_subcommand("axioms", "verify the seven model-structure conditions");
  axioms->add_option("--variant", variant, "A | B")->required()->check(CLI::IsMember({"A", "B"}));
  axioms->add_option("--corpus", corpus_dir, "corpus directory (.cat files)");
  axioms->add_option("--report", report_file, "also write the report here");
  axioms->add_flag("--broken-cleavage", broken, "fault injection: violate lifting of identities");
  axioms->add_flag("--timings", timings, "print per-condition timings (non-deterministic bytes)");

  auto* selftest = app.add_subcommand("selftest-roundtrip", "serialization round-trip self-test");
  auto* selfpipe = app.add_subcommand("selftest-pipeline", "file-based factor/lift self-test");

  try {
    app.parse(argc, argv);
    if (check->parsed()) return cmd_check(files);
    if (interval->parsed()) {
      if (iverify->parsed()) return cmd_interval_verify();
      if (idump->parsed()) return cmd_interval_dump();
    }
    if (functor->parsed() && fcheck->parsed()) return cmd_functor_check(files, name);
    if (equiv->parsed()) return cmd_equiv(files, name);
    if (fib->parsed()) return cmd_fib(files, name, normally_cloven);
    if (cofib->parsed()) return cmd_cofib(files, name, normally_cloven);
    if (factor_cmd->parsed()) return cmd_factor(files, name, mode, outdir);
    if (lift->parsed()) return cmd_lift(files.at(0), out);
    if (axioms->parsed()) return cmd_axioms(variant, corpus_dir, report_file, broken, timings);
    if (selftest->parsed()) return cmd_selftest_roundtrip();
    if (selfpipe->parsed()) return cmd_selftest_pipeline();
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
