// Runs the default law suite and reports each acceptance criterion on one
// line. Exit status is nonzero if any criterion fails.

#include <cstdio>
#include <string>
#include <vector>

#include "subordkit/subordkit.hpp"

using namespace subordkit;

namespace {

struct Requirement {
  std::string law;
  std::size_t min_instances;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Requirement> laws;
};

bool check_laws(const SuiteReport& rep, const Criterion& c, std::string& note) {
  bool ok = true;
  for (const Requirement& r : c.laws) {
    const LawReport* l = rep.find(r.law);
    if (!l) {
      note += " " + r.law + "=missing";
      ok = false;
      continue;
    }
    const bool good = l->passed() && l->instances >= r.min_instances;
    if (!good) {
      note += " " + r.law + "=" + std::to_string(l->failure_count) + "/" + std::to_string(l->instances) +
              " (need >=" + std::to_string(r.min_instances) + ")";
      if (!l->failures.empty()) note += " [" + l->failures[0].detail + "]";
    } else {
      note += " " + r.law + "=" + std::to_string(l->instances);
    }
    ok = ok && good;
  }
  return ok;
}

}  // namespace

int main() {
  const GenConfig cfg;
  const SuiteReport rep = run_suite(cfg);

  // Exhaustive partitions of 1..3 atoms: 1 + 2 + 5.
  const std::size_t small = 8;
  const std::size_t algebras = small + 2 * cfg.samples_per_size;
  // Every compatible relation between spaces of at most three points, plus
  // the seeded four-point samples.
  std::size_t exhaustive_relations = 0;
  for (unsigned k1 = 1; k1 <= cfg.max_points_exhaustive; ++k1) {
    for (unsigned k2 = 1; k2 <= cfg.max_points_exhaustive; ++k2) {
      for (const FinSubSpace& x1 : gen_partitions(k1)) {
        for (const FinSubSpace& x2 : gen_partitions(k2)) {
          exhaustive_relations += std::size_t{1} << (x1.n_classes() * x2.n_classes());
        }
      }
    }
  }
  const std::size_t relations = exhaustive_relations + cfg.relation_samples;
  const std::vector<Criterion> criteria = {
      {1, "round-ideal frame laws",
       {{"RI.frame", algebras}, {"RI.pseudocomplement", algebras}, {"RI.well-inside", algebras}, {"RI.regular", algebras}}},
      {2, "MacNeille fixpoint", {{"NI.fixpoint", algebras}}},
      {3, "Q isomorphism and interpolation", {{"Q.iso", algebras}, {"NI.interpolation", small}}},
      {4, "functor laws and naturality",
       {{"RI.functor.identity", algebras},
        {"RI.functor.composition", cfg.pair_samples},
        {"B.functor.identity", 1},
        {"B.functor.composition", cfg.pair_samples},
        {"Q.naturality", relations},
        {"f.naturality", 1}}},
      {5, "continuity equivalences",
       {{"C.four-way", relations},
        {"C.variants", relations},
        {"C.composition", cfg.pair_samples}}},
      {6, "functionality",
       {{"F.characterization", relations},
        {"F.implies-continuous", 1},
        {"F.RI-frame-hom", 1},
        {"F.B-of-frame-hom", 1}}},
      {7, "box/T correspondence", {{"BT.box-roundtrip", 1}, {"BT.t-roundtrip", 1}}},
      {8, "isomorphisms with the point side",
       {{"S7.RI-O_R", 23},
        {"S7.O_R-quotient", 23},
        {"S7.NI-RO_R", 23},
        {"S7.RO_R-quotient", 23},
        {"S7.lemma.phi-box", small},
        {"S7.lemma.psi-R", small}}},
      {9, "booleanization",
       {{"BOOL.boolean", cfg.frame_samples}, {"BOOL.closure", cfg.frame_samples}, {"BOOL.three-chain", 1}}},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    std::string note;
    const bool ok = check_laws(rep, c, note);
    all = all && ok;
    std::printf("criterion %d %s: %s -%s\n", c.number, ok ? "PASS" : "FAIL", c.title.c_str(), note.c_str());
  }

  {
    std::string note;
    bool ok = check_laws(rep, {10, "", {{"DSL.roundtrip", cfg.workspace_samples}}}, note);
    const bool same = report_text(rep) == report_text(run_suite(cfg));
    note += same ? " reports=identical" : " reports=DIFFER";
    GenConfig mutated;
    mutated.laws = {"S7.lemma.phi-box"};
    mutated.box = mutated_box();
    const SuiteReport mutated_rep = run_suite(mutated);
    const LawReport* m = mutated_rep.find("S7.lemma.phi-box");
    bool caught = m && !m->passed() && !m->failures.empty();
    if (caught) {
      try {
        const Workspace ws = parse(m->failures[0].workspace_dsl);
        caught = !ws.empty() && !verify_law(ws, "S7.lemma.phi-box", mutated).passed();
      } catch (const Error& e) {
        caught = false;
        note += std::string(" witness unparseable: ") + e.what();
      }
    }
    note += caught ? " mutation=caught" : " mutation=MISSED";
    ok = ok && same && caught;
    all = all && ok;
    std::printf("criterion 10 %s: infrastructure -%s\n", ok ? "PASS" : "FAIL", note.c_str());
  }

  std::printf("%s\n", all ? "acceptance: PASS" : "acceptance: FAIL");
  return all ? 0 : 1;
}
