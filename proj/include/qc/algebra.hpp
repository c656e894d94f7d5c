#pragma once

// Bound quiver algebras A = kQ/I at desk scale: path bases in normal form and
// structure constants, with finiteness enforced by an explicit nilpotency
// bound (paths of length >= L vanish).

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "qc/mat.hpp"

namespace qc {

struct Arrow {
  std::string name;
  int src = 0;  // 0-based vertex
  int tgt = 0;
};

struct Quiver {
  int nv = 0;
  std::vector<Arrow> arrows;
  void check() const;  // unique arrow names, endpoints in range
};

// Composable left-to-right: arrows[i].tgt == arrows[i+1].src. The trivial
// path at a vertex has an empty arrow list.
struct Path {
  int start = 0;
  std::vector<int> arrows;  // arrow indices

  std::size_t len() const { return arrows.size(); }
  bool operator==(const Path& o) const { return start == o.start && arrows == o.arrows; }
};

struct RelTerm {
  felt coeff = 1;
  Path path;
};

// Linear combination of parallel paths of length >= 2 (admissibility).
struct Relation {
  std::vector<RelTerm> terms;
};

class BoundAlgebra {
 public:
  FieldPrime field;
  Quiver quiver;
  std::vector<Relation> relations;
  int bound = 2;  // nilpotency bound L: paths of length >= L are zero

  static BoundAlgebra build(FieldPrime f, Quiver q, std::vector<Relation> rels,
                            int bound, std::size_t basis_cap = 512);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }

  int path_end(const Path& p) const;
  bool composable(const Path& p) const;

  // Coordinates of a path over the normal-form basis (zero when len >= L).
  std::vector<felt> reduce_path(const Path& p) const;
  // Product basis[i] * basis[j], meaning basis[i] followed by basis[j].
  const std::vector<felt>& mul(std::size_t i, std::size_t j) const { return mul_[i][j]; }

  // Same arrow indices with src/tgt exchanged, reversed relations, same bound.
  const BoundAlgebra& opposite() const;

  std::string describe() const;

 private:
  std::vector<Path> basis_;
  std::unordered_map<std::string, std::size_t> enum_pos_;  // enumerated path -> index
  std::vector<std::vector<felt>> reduce_tab_;              // per enumerated path
  std::vector<std::vector<std::vector<felt>>> mul_;
  mutable std::shared_ptr<BoundAlgebra> opposite_;

  void check_relation(const Relation& r) const;
  void check_associativity() const;
  static std::string path_key(const Path& p);
};

}  // namespace qc
