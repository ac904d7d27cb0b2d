// subordkit command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subordkit/subordkit.hpp"

namespace sk = subordkit;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  bool as_json = false;
  json j = json::object();
  std::ostringstream text;

  void line(const std::string& s) { text << s << "\n"; }

  void emit() const {
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
  }
};

unsigned max_atoms_override() {
  if (const char* v = std::getenv("SUBORDKIT_MAX_ATOMS")) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (end == v || *end != '\0' || n < 1 || n > sk::kMaxAtoms) {
      throw UsageError("SUBORDKIT_MAX_ATOMS must be an integer in [1, 12]");
    }
    return static_cast<unsigned>(n);
  }
  return sk::kMaxAtoms;
}

sk::Workspace load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  sk::Workspace ws;
  try {
    ws = sk::parse(buf.str());
  } catch (const sk::ParseError& e) {
    throw UsageError(path + ":" + e.what());
  } catch (const sk::SemanticError& e) {
    throw UsageError(path + ":" + e.what());
  }
  const unsigned cap = max_atoms_override();
  for (const std::string& n : ws.names_of(sk::DeclKind::algebra)) {
    if (ws.get<sk::BoolAlg>(n).n_atoms() > cap) {
      throw UsageError(path + ": algebra '" + n + "' exceeds SUBORDKIT_MAX_ATOMS = " + std::to_string(cap));
    }
  }
  return ws;
}

const sk::Decl& need(const sk::Workspace& ws, const std::string& name) {
  const sk::Decl* d = ws.find(name);
  if (!d) throw UsageError("no object named '" + name + "'");
  return *d;
}

/// An S5-subordination algebra named by an equiv, an endo sub or an algebra
/// (whose structure is then resolved as for morphisms).
sk::SubAlgebra resolve_algebra(const sk::Workspace& ws, const std::string& name) {
  const sk::Decl& d = need(ws, name);
  switch (d.kind) {
    case sk::DeclKind::equiv:
    case sk::DeclKind::space: return sk::from_equivalence(std::get<sk::FinSubSpace>(d.object));
    case sk::DeclKind::algebra: return sk::structure_of(ws, name);
    case sk::DeclKind::sub: {
      const auto& s = std::get<sk::Subordination>(d.object);
      if (!s.is_endo()) throw UsageError("'" + name + "' is not a relation on one algebra");
      try {
        return sk::SubAlgebra::make(s);
      } catch (const sk::PreconditionError& e) {
        throw UsageError("'" + name + "' is not an S5-subordination: " + e.what());
      }
    }
    default: throw UsageError("'" + name + "' is a " + sk::to_string(d.kind) + ", expected an algebra");
  }
}

struct Resolved {
  sk::Subordination t;
  sk::SubAlgebra b1;
  sk::SubAlgebra b2;
  std::optional<sk::PointRelation> rel;
  std::string how;
};

Resolved resolve_morphism(const sk::Workspace& ws, const std::string& name, const std::string& dom_structure,
                          const std::string& cod_structure) {
  const sk::Decl& d = need(ws, name);
  if (d.kind == sk::DeclKind::rel) {
    const auto& r = std::get<sk::PointRelation>(d.object);
    return {sk::from_closed_relation(r), sk::from_equivalence(r.dom()), sk::from_equivalence(r.cod()), r,
            "S_R with the partitions of the spaces"};
  }
  if (d.kind != sk::DeclKind::sub) throw UsageError("'" + name + "' is not a sub or rel");
  const auto& t = std::get<sk::Subordination>(d.object);
  if (d.sub_form == sk::SubForm::from_rel) {
    const auto& r = ws.get<sk::PointRelation>(d.source);
    return {t, sk::from_equivalence(r.dom()), sk::from_equivalence(r.cod()), r,
            "partitions of the spaces of '" + d.source + "'"};
  }
  if (d.sub_form == sk::SubForm::from_equiv) {
    const sk::SubAlgebra b = sk::from_equivalence(std::get<sk::FinSubSpace>(ws.at(d.source).object));
    return {t, b, b, std::nullopt, "its own structure"};
  }
  auto side = [&](const std::string& explicit_name, const std::string& alg) {
    if (!explicit_name.empty()) {
      sk::SubAlgebra s = resolve_algebra(ws, explicit_name);
      if (!(s.alg() == ws.get<sk::BoolAlg>(alg))) {
        throw UsageError("structure '" + explicit_name + "' is not on algebra '" + alg + "'");
      }
      return s;
    }
    return sk::structure_of(ws, alg);
  };
  return {t, side(dom_structure, d.dom), side(cod_structure, d.cod), std::nullopt,
          "structures resolved from the workspace"};
}

std::string verdict(bool b) { return b ? "yes" : "no"; }

std::string pass_text(bool b) { return b ? "pass" : "FAIL"; }

// ---------------------------------------------------------------------------
// check

bool check_object(const sk::Workspace& ws, const sk::Decl& d, Output& out, json& items) {
  json j;
  j["name"] = d.name;
  j["kind"] = sk::to_string(d.kind);
  bool ok = true;
  const std::string head = std::string(sk::to_string(d.kind)) + " " + d.name;
  switch (d.kind) {
    case sk::DeclKind::algebra:
    case sk::DeclKind::space:
    case sk::DeclKind::equiv:
    case sk::DeclKind::frame:
      out.line(head + ": ok");
      break;
    case sk::DeclKind::rel: {
      const auto& r = std::get<sk::PointRelation>(d.object);
      const auto w = sk::compatibility_witness(r);
      ok = !w;
      j["compatible"] = ok;
      if (w) j["witness"] = {w->first, w->second};
      out.line(head + ": compatible " + verdict(ok) +
               (w ? " (witness " + std::to_string(w->first) + "," + std::to_string(w->second) + ")" : ""));
      break;
    }
    case sk::DeclKind::sub: {
      const auto& t = std::get<sk::Subordination>(d.object);
      if (t.dom().n_atoms() > sk::kMaxAxiomAtoms || t.cod().n_atoms() > sk::kMaxAxiomAtoms) {
        throw UsageError("'" + d.name + "': axiom checks are capped at 5 atoms");
      }
      const sk::AxiomReport rep = sk::check_axioms(t);
      out.line(head + ":");
      json axioms = json::array();
      for (const auto& r : rep.results) {
        json a{{"axiom", sk::to_string(r.axiom)}, {"applicable", r.applicable}, {"pass", r.pass}};
        if (!r.pass) a["detail"] = r.detail;
        axioms.push_back(a);
        if (!r.applicable) {
          out.line("  " + sk::to_string(r.axiom) + " n/a");
        } else {
          out.line("  " + sk::to_string(r.axiom) + " " + pass_text(r.pass) + (r.pass ? "" : ": " + r.detail));
        }
      }
      ok = rep.all_applicable_pass();
      j["axioms"] = axioms;
      j["profile"] = sk::format_profile(rep.profile);
      out.line("  profile " + sk::format_profile(rep.profile));
      if (!t.is_endo()) {
        const Resolved m = resolve_morphism(ws, d.name, "", "");
        const sk::CompatResult c = sk::is_compatible(m.t, m.b1.s(), m.b2.s());
        j["compatible"] = c.compatible;
        if (!c.compatible) j["compatibility_detail"] = c.equation;
        out.line("  compatible " + verdict(c.compatible) + (c.compatible ? "" : " (" + c.equation + ")"));
        ok = ok && c.compatible;
      }
      break;
    }
    case sk::DeclKind::map: {
      const auto& h = std::get<sk::LatticeMap>(d.object);
      const sk::MapProfile p = sk::classify_map(h);
      j["profile"] = sk::format_profile(p);
      out.line(head + ": " + sk::format_profile(p));
      break;
    }
    case sk::DeclKind::devmap: {
      const sk::DeVriesFlags fl = sk::check_devries_morphism(std::get<sk::DeVriesMap>(d.object));
      j["M1"] = fl.m1;
      j["M2"] = fl.m2;
      j["M3"] = fl.m3;
      j["M4"] = fl.m4;
      j["MULT"] = fl.mult;
      j["LOWER_CONT"] = fl.lower_cont;
      j["failures"] = fl.failures;
      ok = fl.morphism() || fl.continuous_mult();
      out.line(head + ": M1 " + pass_text(fl.m1) + ", M2 " + pass_text(fl.m2) + ", M3 " + pass_text(fl.m3) +
               ", M4 " + pass_text(fl.m4) + ", MULT " + pass_text(fl.mult) + ", LOWER_CONT " +
               pass_text(fl.lower_cont));
      for (const auto& f : fl.failures) out.line("  " + f);
      break;
    }
    case sk::DeclKind::family: {
      const auto& f = std::get<sk::ElemFamily>(d.object);
      ok = sk::tag_valid(f);
      j["tag"] = sk::to_string(f.kind());
      j["tag_valid"] = ok;
      out.line(head + ": " + sk::to_string(f.kind()) + " tag " + (ok ? "valid" : "INVALID"));
      break;
    }
  }
  j["ok"] = ok;
  items.push_back(j);
  return ok;
}

int cmd_check(const sk::Workspace& ws, const std::string& object, Output& out) {
  json items = json::array();
  bool ok = true;
  if (!object.empty()) {
    ok = check_object(ws, need(ws, object), out, items);
  } else {
    for (const sk::Decl* d : ws.canonical()) ok = check_object(ws, *d, out, items) && ok;
  }
  out.j["objects"] = items;
  out.j["ok"] = ok;
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// round-ideals, macneille, booleanize

int cmd_round_ideals(const sk::Workspace& ws, const std::string& name, Output& out) {
  const sk::RoundIdealFrame ri = sk::round_ideals(resolve_algebra(ws, name));
  const sk::FinFrame& f = ri.frame();
  const sk::RoundIdealReport rep = sk::check_round_ideal_frame(ri);
  json ideals = json::array();
  out.line("round ideals of " + name + " (" + std::to_string(ri.size()) + "):");
  for (sk::Idx i = 0; i < ri.size(); ++i) {
    const std::string label = "down" + sk::format_mask(ri.generator(i));
    const sk::Idx star = sk::pseudocomplement(f, i);
    std::vector<std::string> above;
    for (sk::Idx k = 0; k < ri.size(); ++k) {
      if (sk::well_inside(f, i, k)) above.push_back("down" + sk::format_mask(ri.generator(k)));
    }
    ideals.push_back({{"index", i},
                      {"generator", sk::format_mask(ri.generator(i))},
                      {"members", sk::format_family(ri.family(i))},
                      {"pseudocomplement", "down" + sk::format_mask(ri.generator(star))},
                      {"well_inside", above}});
    std::string prec;
    for (std::size_t k = 0; k < above.size(); ++k) prec += (k ? ", " : "") + above[k];
    out.line("  " + std::to_string(i) + " " + label + " = " + sk::format_family(ri.family(i)));
    out.line("      * = down" + sk::format_mask(ri.generator(star)) + "; prec [" + prec + "]");
  }
  out.j["algebra"] = name;
  out.j["round_ideals"] = ideals;
  out.j["frame_valid"] = rep.frame_valid;
  out.j["regular"] = rep.regular;
  out.j["formulas_agree"] = rep.pseudocomplement_agrees && rep.well_inside_agrees;
  out.line("frame " + verdict(rep.frame_valid) + ", regular " + verdict(rep.regular) + ", formulas agree " +
           verdict(rep.pseudocomplement_agrees && rep.well_inside_agrees));
  return rep.ok() ? kOk : kCheckFailed;
}

int cmd_macneille(const sk::Workspace& ws, const std::string& name, Output& out) {
  const sk::MacNeilleAlgebra ni = sk::macneille(resolve_algebra(ws, name));
  const sk::BoolAlg alg = ni.algebra().alg();
  json normal = json::array();
  out.line("normal round ideals of " + name + " (" + std::to_string(alg.size()) + ", atoms " +
           std::to_string(alg.n_atoms()) + "):");
  for (sk::Mask m : sk::lex_order(alg.n_atoms())) {
    const sk::Idx i = ni.ri_index(m);
    normal.push_back({{"coordinate", sk::format_mask(m)},
                      {"ideal", "down" + sk::format_mask(ni.ri.generator(i))},
                      {"members", sk::format_family(ni.ri.family(i))}});
    out.line("  " + sk::format_mask(m) + " -> down" + sk::format_mask(ni.ri.generator(i)));
  }
  const sk::Subordination q = sk::q_relation(ni);
  out.j["algebra"] = name;
  out.j["normal_ideals"] = normal;
  out.j["well_inside"] = sk::format_pairs(ni.algebra().s());
  out.j["Q"] = sk::format_pairs(q);
  out.line("prec: " + sk::format_pairs(ni.algebra().s()));
  out.line("Q: " + sk::format_pairs(q));
  const sk::MacNeilleReport mr = sk::check_macneille(ni);
  const sk::QIsoReport qr = sk::check_q_iso(ni);
  const sk::IotaReport io = sk::iota_report(ni);
  json iota = json::array();
  const sk::BoolAlg& base = ni.ri.alg();
  out.line("iota:");
  for (sk::Mask b : sk::lex_order(base.n_atoms())) {
    const std::string v = sk::format_family(sk::ElemFamily::from_row(base, io.images[b]));
    iota.push_back({{"element", sk::format_mask(b)}, {"image", v}});
    out.line("  " + sk::format_mask(b) + " -> " + v);
  }
  out.j["iota"] = iota;
  out.j["iota_injective"] = io.injective;
  out.j["fixpoint_agrees"] = mr.fixpoint_agrees;
  out.j["q_iso"] = qr.left && qr.right;
  out.line("iota injective " + verdict(io.injective) + ", fixpoint formula agrees " + verdict(mr.fixpoint_agrees) +
           ", T o Q = S and Q o T = prec " + verdict(qr.left && qr.right));
  return mr.fixpoint_agrees && mr.prec_agrees && qr.left && qr.right ? kOk : kCheckFailed;
}

int cmd_booleanize(const sk::Workspace& ws, const std::string& name, Output& out) {
  const auto& f = [&]() -> const sk::FinFrame& {
    const sk::Decl& d = need(ws, name);
    if (d.kind != sk::DeclKind::frame) throw UsageError("'" + name + "' is not a frame");
    return std::get<sk::FinFrame>(d.object);
  }();
  const sk::Booleanization b = sk::booleanization(f);
  std::vector<std::string> labels;
  for (sk::Idx i : b.incl) labels.push_back(f.label(i));
  out.j["frame"] = name;
  out.j["size"] = f.size();
  out.j["regular_elements"] = b.incl;
  out.j["labels"] = labels;
  out.j["booleanization_size"] = b.frame.size();
  out.j["boolean"] = sk::is_boolean(b.frame);
  out.j["frame_regular"] = sk::is_regular_frame(f);
  std::string list;
  for (std::size_t i = 0; i < b.incl.size(); ++i) list += (i ? ", " : "") + std::to_string(b.incl[i]) + " " + labels[i];
  out.line("regular elements of " + name + ": [" + list + "]");
  out.line("booleanization size " + std::to_string(b.frame.size()) + ", boolean " +
           verdict(sk::is_boolean(b.frame)) + ", frame regular " + verdict(sk::is_regular_frame(f)));
  return sk::is_boolean(b.frame) ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const sk::Workspace& ws, const std::string& name, const std::string& dom_s,
                 const std::string& cod_s, Output& out) {
  const sk::Decl& d = need(ws, name);
  out.j["morphism"] = name;
  if (d.kind == sk::DeclKind::map) {
    const sk::MapProfile p = sk::classify_map(std::get<sk::LatticeMap>(d.object));
    out.j["kind"] = "map";
    out.j["profile"] = sk::format_profile(p);
    out.j["monotone"] = p.monotone;
    out.j["preframe"] = p.preframe;
    out.j["frame"] = p.frame;
    out.j["cmorph"] = sk::to_string(p.cmorph);
    if (p.cmorph == sk::Verdict::yes) out.j["diamond"] = p.diamond;
    out.line(name + ": " + sk::format_profile(p));
    if (p.cmorph == sk::Verdict::inconclusive) out.line("  c-morphism search inconclusive: " + p.cmorph_detail);
    return kOk;
  }
  if (d.kind == sk::DeclKind::devmap) {
    const sk::DeVriesFlags fl = sk::check_devries_morphism(std::get<sk::DeVriesMap>(d.object));
    out.j["kind"] = "devmap";
    out.j["de_vries_morphism"] = fl.morphism();
    out.j["mult_lower_cont"] = fl.continuous_mult();
    out.line(name + ": de Vries morphism " + verdict(fl.morphism()) + ", MULT and LOWER_CONT " +
             verdict(fl.continuous_mult()));
    return kOk;
  }
  const Resolved m = resolve_morphism(ws, name, dom_s, cod_s);
  out.j["kind"] = "subordination";
  out.j["structures"] = m.how;
  out.line(name + " (structures: " + m.how + ")");
  const sk::CompatResult c = sk::is_compatible(m.t, m.b1.s(), m.b2.s());
  out.j["compatible"] = c.compatible;
  if (!c.compatible) {
    out.j["compatibility_detail"] = c.equation + " at " + sk::detail::pair_text(c.witness.first, c.witness.second);
    out.line("  compatible no: " + c.equation + " at " + sk::detail::pair_text(c.witness.first, c.witness.second));
    const sk::ContinuityResult cu = sk::continuity_unchecked(m.t, m.b1.s(), m.b2.s());
    out.j["continuity_unchecked"] = cu.continuous;
    if (cu.witness) out.j["continuity_witness"] = sk::detail::pair_text(cu.witness->first, cu.witness->second);
    out.line("  continuity condition (unchecked) " + verdict(cu.continuous) +
             (cu.witness ? " at " + sk::detail::pair_text(cu.witness->first, cu.witness->second) : ""));
    return kCheckFailed;
  }
  out.line("  compatible yes");
  const sk::ContinuityResult cr = sk::is_continuous(m.t, m.b1.s(), m.b2.s());
  const sk::ContinuityVariants v = sk::continuity_variants(m.t, m.b1.s(), m.b2.s());
  const sk::FunctionalResult fr = sk::is_functional(m.t, m.b1.s(), m.b2.s());
  const bool iso = sk::is_isomorphism(m.t, m.b1.s(), m.b2.s());
  out.j["continuous"] = cr.continuous;
  if (cr.witness) out.j["continuity_witness"] = sk::detail::pair_text(cr.witness->first, cr.witness->second);
  out.j["variants_agree"] = v.agree();
  out.j["functional"] = fr.functional;
  if (!fr.functional) out.j["functional_detail"] = fr.detail;
  out.j["isomorphism"] = iso;
  out.line("  continuous " + verdict(cr.continuous) +
           (cr.witness ? " (fails at " + sk::detail::pair_text(cr.witness->first, cr.witness->second) + ")" : ""));
  out.line("  continuity variants agree " + verdict(v.agree()));
  out.line("  functional " + verdict(fr.functional) + (fr.functional ? "" : " (" + fr.detail + ")"));
  out.line("  isomorphism " + verdict(iso));
  if (m.rel) {
    const sk::FourWayReport fw = sk::continuity_crosscheck(*m.rel);
    const sk::PointFunctional pf = sk::point_functional(*m.rel);
    out.j["point_conditions_agree"] = fw.agree();
    out.j["point_functional"] = pf.functional;
    out.line("  point-side continuity conditions agree " + verdict(fw.agree()) + ", point-side functional " +
             verdict(pf.functional));
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// dual

int cmd_dual(const sk::Workspace& ws, const std::string& name, Output& out) {
  const sk::SubAlgebra b = resolve_algebra(ws, name);
  const sk::FinSubSpace x = sk::ult(b);
  const sk::DualityReport r = sk::duality_isomorphisms(b);
  const auto tr = sk::check_translation_laws(b);
  const auto pb = sk::check_phi_box(b);
  const auto pr = sk::check_psi_r(b);
  out.j["algebra"] = name;
  out.j["points"] = x.points();
  out.j["classes"] = sk::detail::classes_text(x.classes());
  out.j["quotient_size"] = r.quotient_size;
  out.j["irreducible"] = sk::is_irreducible(x);
  json iso = {{"RI=O_R", r.ri_to_or},          {"O_R=O(X/R)", r.or_to_quot}, {"RI=O(X/R)", r.ri_to_quot},
              {"NI=RO_R", r.ni_to_ro},         {"RO_R=RO(X/R)", r.ro_to_quot}, {"RO_R=O_R", r.ro_equals_or},
              {"phi_star", r.phi_star},        {"phi_double_star", r.phi_double_star}};
  out.j["isomorphisms"] = iso;
  out.j["translation_laws"] = !tr.has_value();
  out.j["phi_box"] = !pb.has_value();
  out.j["psi_r"] = !pr.has_value();
  out.line("ult(" + name + "): " + std::to_string(x.points()) + " points, classes " +
           sk::detail::classes_text(x.classes()) + ", quotient " + std::to_string(r.quotient_size) + " points");
  out.line("  irreducible " + verdict(sk::is_irreducible(x)));
  for (auto it = iso.begin(); it != iso.end(); ++it) out.line("  " + it.key() + " " + pass_text(it.value().get<bool>()));
  out.line("  translation laws " + pass_text(!tr) + (tr ? ": " + tr->detail : ""));
  out.line("  Phi(S^-1[I]) = Box_R Phi(I) " + pass_text(!pb) + (pb ? ": " + pb->detail : ""));
  out.line("  Psi(S[F]) = R[Psi(F)] " + pass_text(!pr) + (pr ? ": " + pr->detail : ""));
  if (!r.detail.empty()) out.line("  " + r.detail);
  return r.ok() && !tr && !pb && !pr ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// verify, suite

void print_law(const sk::LawReport& r, Output& out) {
  out.line(std::string(r.passed() ? "PASS " : "FAIL ") + r.law_id + "  instances=" + std::to_string(r.instances) +
           " failures=" + std::to_string(r.failure_count));
  for (const auto& f : r.failures) {
    out.line("  " + f.detail);
    std::istringstream in(f.workspace_dsl);
    for (std::string l; std::getline(in, l);) out.line("    " + l);
  }
}

int cmd_verify(const std::string& file, const std::string& law, bool list, Output& out) {
  if (list) {
    json laws = json::array();
    for (const auto& l : sk::all_laws()) {
      laws.push_back({{"law_id", l.id}, {"paper_anchor", l.anchor}});
      out.line(l.id + "  " + l.anchor);
    }
    out.j["laws"] = laws;
    return kOk;
  }
  if (file.empty()) throw UsageError("verify: a workspace file is required");
  if (law.empty()) throw UsageError("verify: --law is required");
  if (!sk::find_law(law)) throw UsageError("verify: unknown law '" + law + "' (see verify --list)");
  const sk::Workspace ws = load(file);
  const sk::LawReport r = sk::verify_law(ws, law);
  out.j = sk::to_json(r);
  print_law(r, out);
  if (r.instances == 0) out.line("  (the workspace supplies no instance for this law)");
  return r.passed() ? kOk : kCheckFailed;
}

int cmd_suite(sk::GenConfig cfg, const std::vector<std::string>& laws, Output& out) {
  for (const auto& l : laws) {
    if (!sk::find_law(l)) throw UsageError("suite: unknown law '" + l + "'");
    cfg.laws.insert(l);
  }
  const sk::SuiteReport r = sk::run_suite(cfg);
  out.j = sk::to_json(r);
  for (const auto& l : r.laws) print_law(l, out);
  out.line(std::string(r.passed() ? "all laws pass" : "some laws FAIL") + " (seed " + std::to_string(cfg.seed) + ")");
  return r.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite subordination algebras, their frames and dualities"};
  app.require_subcommand(1);
  Output out;
  std::string file, object, algebra, frame, morphism, law, dom_s, cod_s;
  bool list = false;
  std::vector<std::string> laws;
  sk::GenConfig cfg;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", out.as_json, "JSON output"); };

  auto* check = app.add_subcommand("check", "Axiom and profile report for each object");
  check->add_option("file", file, "workspace (.sub)")->required();
  check->add_option("--object", object, "only this object");
  add_json(check);

  auto* rid = app.add_subcommand("round-ideals", "Round-ideal frame with prec and pseudocomplements");
  rid->add_option("file", file)->required();
  rid->add_option("--algebra", algebra, "equiv, endo sub or algebra")->required();
  add_json(rid);

  auto* mac = app.add_subcommand("macneille", "Normal round ideals, Q and iota");
  mac->add_option("file", file)->required();
  mac->add_option("--algebra", algebra)->required();
  add_json(mac);

  auto* boo = app.add_subcommand("booleanize", "Regular elements of a frame");
  boo->add_option("file", file)->required();
  boo->add_option("--frame", frame)->required();
  add_json(boo);

  auto* cls = app.add_subcommand("classify", "Compatible/continuous/functional, or frame-map profile");
  cls->add_option("file", file)->required();
  cls->add_option("--morphism", morphism, "sub, rel, map or devmap")->required();
  cls->add_option("--dom-structure", dom_s, "structure on the domain algebra");
  cls->add_option("--cod-structure", cod_s, "structure on the codomain algebra");
  add_json(cls);

  auto* dual = app.add_subcommand("dual", "Dual space, quotient and isomorphism report");
  dual->add_option("file", file)->required();
  dual->add_option("--algebra", algebra)->required();
  add_json(dual);

  auto* ver = app.add_subcommand("verify", "Run one law on the instances of a workspace");
  ver->add_option("file", file);
  ver->add_option("--law", law);
  ver->add_flag("--list", list, "list law identifiers");
  add_json(ver);

  auto* suite = app.add_subcommand("suite", "Run the generated theorem suite");
  suite->add_option("--seed", cfg.seed, "64-bit seed");
  suite->add_option("--max-atoms-exhaustive", cfg.max_atoms_exhaustive)->check(CLI::Range(1u, 4u));
  suite->add_option("--max-atoms-sampled", cfg.max_atoms_sampled)->check(CLI::Range(1u, 5u));
  suite->add_option("--samples", cfg.samples_per_size, "samples per size");
  suite->add_option("--relation-samples", cfg.relation_samples);
  suite->add_option("--pair-samples", cfg.pair_samples);
  suite->add_option("--frame-samples", cfg.frame_samples);
  suite->add_option("--workspace-samples", cfg.workspace_samples);
  suite->add_option("--law", laws, "restrict to these laws");
  add_json(suite);

  auto* fmt = app.add_subcommand("fmt", "Canonical serialization");
  fmt->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  int status = kOk;
  try {
    if (check->parsed()) {
      status = cmd_check(load(file), object, out);
    } else if (rid->parsed()) {
      status = cmd_round_ideals(load(file), algebra, out);
    } else if (mac->parsed()) {
      status = cmd_macneille(load(file), algebra, out);
    } else if (boo->parsed()) {
      status = cmd_booleanize(load(file), frame, out);
    } else if (cls->parsed()) {
      status = cmd_classify(load(file), morphism, dom_s, cod_s, out);
    } else if (dual->parsed()) {
      status = cmd_dual(load(file), algebra, out);
    } else if (ver->parsed()) {
      status = cmd_verify(file, law, list, out);
    } else if (suite->parsed()) {
      cfg.max_atoms_sampled = std::min(cfg.max_atoms_sampled, max_atoms_override());
      status = cmd_suite(cfg, laws, out);
    } else if (fmt->parsed()) {
      std::cout << sk::serialize(load(file));
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const sk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  out.j["status"] = status;
  out.emit();
  return status;
}
