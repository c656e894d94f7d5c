#pragma once

// Shared desk-scale algebras for the test suites.

#include "qc/algebra.hpp"
#include "qc/rep.hpp"

namespace qctest {

using namespace qc;

// Cyclic Nakayama algebra on three vertices with radical square zero:
// arrows a:0->1, b:1->2, c:2->0, all length-2 paths are relations, bound 2.
inline BoundAlgebra make_n3(felt p = 2) {
  Quiver q{3, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}}};
  auto rel = [](int first, int second) {
    return Relation{{{1, Path{0, {first, second}}}}};
  };
  std::vector<Relation> rels;
  rels.push_back(Relation{{{1, Path{0, {0, 1}}}}});  // a then b
  rels.push_back(Relation{{{1, Path{1, {1, 2}}}}});  // b then c
  rels.push_back(Relation{{{1, Path{2, {2, 0}}}}});  // c then a
  (void)rel;
  return BoundAlgebra::build(FieldPrime(p), q, rels, 2);
}

// A2: single arrow 0 -> 1, no relations, bound 2.
inline BoundAlgebra make_a2(felt p = 2) {
  Quiver q{2, {{"a", 0, 1}}};
  return BoundAlgebra::build(FieldPrime(p), q, {}, 2);
}

// One vertex, no arrows.
inline BoundAlgebra make_point(felt p = 2) {
  return BoundAlgebra::build(FieldPrime(p), Quiver{1, {}}, {}, 2);
}

}  // namespace qctest
