// Builds the three-atom algebra with classes {0,1},{2}, inspects its round
// ideals and MacNeille algebra, then classifies a relation out of it.

#include <iostream>

#include "subordkit/subordkit.hpp"

using namespace subordkit;

int main() {
  const FinSubSpace x = FinSubSpace::from_classes(3, {0b011, 0b100});
  const SubAlgebra b = from_equivalence(x);

  const AxiomReport axioms = check_axioms(b.s());
  std::cout << "profile " << format_profile(axioms.profile) << "\n";
  for (const AxiomResult& r : axioms.results) {
    if (!r.pass) std::cout << to_string(r.axiom) << " fails: " << r.detail << "\n";
  }

  const RoundIdealFrame ri = round_ideals(b);
  std::cout << "round ideals:";
  for (Idx i = 0; i < ri.size(); ++i) std::cout << " " << ri.frame().label(i);
  std::cout << "\n";

  const MacNeilleAlgebra ni = macneille(b);
  std::cout << "normal ideals: " << ni.algebra().alg().size() << "\n";

  const FinSubSpace y = FinSubSpace::discrete(2);
  const PointRelation r(x, y, {{0, 0}, {1, 0}, {2, 1}});
  const Subordination t = from_closed_relation(r);
  const Subordination sy = from_equivalence(y).s();
  std::cout << "continuous " << is_continuous(t, b.s(), sy).continuous << ", functional "
            << is_functional(t, b.s(), sy).functional << "\n";

  const DualityReport dual = duality_isomorphisms(b);
  std::cout << "quotient points " << dual.quotient_size << ", isomorphisms " << (dual.ok() ? "hold" : "fail") << "\n";
  return dual.ok() ? 0 : 1;
}
