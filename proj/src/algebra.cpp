#include "qc/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qc {

void Quiver::check() const {
  if (nv < 1) throw std::invalid_argument("quiver needs at least one vertex");
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (a.name.empty()) throw std::invalid_argument("arrow with empty name");
    if (!names.insert(a.name).second)
      throw std::invalid_argument("duplicate arrow name: " + a.name);
    if (a.src < 0 || a.src >= nv || a.tgt < 0 || a.tgt >= nv)
      throw std::invalid_argument("arrow endpoint out of range: " + a.name);
  }
}

int BoundAlgebra::path_end(const Path& p) const {
  return p.arrows.empty() ? p.start : quiver.arrows[p.arrows.back()].tgt;
}

bool BoundAlgebra::composable(const Path& p) const {
  int at = p.start;
  for (int a : p.arrows) {
    if (a < 0 || a >= static_cast<int>(quiver.arrows.size())) return false;
    if (quiver.arrows[a].src != at) return false;
    at = quiver.arrows[a].tgt;
  }
  return true;
}

std::string BoundAlgebra::path_key(const Path& p) {
  std::ostringstream os;
  os << p.start << ':';
  for (int a : p.arrows) os << a << ',';
  return os.str();
}

void BoundAlgebra::check_relation(const Relation& r) const {
  if (r.terms.empty()) throw std::invalid_argument("empty relation");
  bool nonzero = false;
  int s = r.terms.front().path.start;
  int e = -1;
  for (const auto& t : r.terms) {
    if (!composable(t.path)) throw std::invalid_argument("relation path not composable");
    if (t.path.len() < 2)
      throw std::invalid_argument("non-admissible relation: path of length < 2");
    if (t.path.start != s) throw std::invalid_argument("relation paths not parallel");
    int te = path_end(t.path);
    if (e == -1) e = te;
    if (te != e) throw std::invalid_argument("relation paths not parallel");
    if (t.coeff % field.p != 0) nonzero = true;
  }
  if (!nonzero) throw std::invalid_argument("relation with all-zero coefficients");
}

BoundAlgebra BoundAlgebra::build(FieldPrime f, Quiver q, std::vector<Relation> rels,
                                 int bound, std::size_t basis_cap) {
  q.check();
  if (bound < 2) throw std::invalid_argument("nilpotency bound must be >= 2");
  BoundAlgebra alg;
  alg.field = f;
  alg.quiver = std::move(q);
  alg.relations = std::move(rels);
  alg.bound = bound;
  for (const auto& r : alg.relations) alg.check_relation(r);

  // Enumerate paths of length < L, level by level.
  const std::size_t path_cap = std::max<std::size_t>(basis_cap * 16, 8192);
  std::vector<Path> paths;
  for (int v = 0; v < alg.quiver.nv; ++v) paths.push_back(Path{v, {}});
  std::size_t level_begin = 0;
  for (int len = 1; len < bound; ++len) {
    std::size_t level_end = paths.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      int end = alg.path_end(paths[i]);
      for (std::size_t a = 0; a < alg.quiver.arrows.size(); ++a) {
        if (alg.quiver.arrows[a].src != end) continue;
        Path ext = paths[i];
        ext.arrows.push_back(static_cast<int>(a));
        paths.push_back(std::move(ext));
        if (paths.size() > path_cap) throw std::invalid_argument("path enumeration cap exceeded");
      }
    }
    level_begin = level_end;
  }
  for (std::size_t i = 0; i < paths.size(); ++i) alg.enum_pos_[path_key(paths[i])] = i;

  // Two-sided ideal inside the path space: u * r * w for all enumerated u, w.
  std::vector<Mat> ideal_cols;
  Mat zero_col(f, paths.size(), 0);
  ideal_cols.push_back(zero_col);
  for (const auto& r : alg.relations) {
    int rs = r.terms.front().path.start;
    int re = alg.path_end(r.terms.front().path);
    for (const auto& u : paths) {
      if (alg.path_end(u) != rs) continue;
      for (const auto& w : paths) {
        if (w.start != re) continue;
        Mat col(f, paths.size(), 1);
        bool any = false;
        for (const auto& t : r.terms) {
          if (static_cast<int>(u.len() + t.path.len() + w.len()) >= bound) continue;
          Path full{u.start, u.arrows};
          full.arrows.insert(full.arrows.end(), t.path.arrows.begin(), t.path.arrows.end());
          full.arrows.insert(full.arrows.end(), w.arrows.begin(), w.arrows.end());
          std::size_t idx = alg.enum_pos_.at(path_key(full));
          col.set(idx, 0, f.add(col.at(idx, 0), t.coeff % f.p));
          any = true;
        }
        if (any && !col.is_zero()) ideal_cols.push_back(col);
      }
    }
  }
  Mat ideal = subspace_sum(ideal_cols);
  RrefResult rr = rref(transpose(ideal));  // rows: ideal elements in path coordinates

  std::vector<bool> reducible(paths.size(), false);
  for (std::size_t c : rr.pivots) reducible[c] = true;
  std::vector<std::size_t> basis_of_path(paths.size(), 0);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (reducible[i]) continue;
    basis_of_path[i] = alg.basis_.size();
    alg.basis_.push_back(paths[i]);
  }
  if (alg.basis_.size() > basis_cap)
    throw std::invalid_argument("algebra basis cap exceeded (" +
                                std::to_string(alg.basis_.size()) + " > " +
                                std::to_string(basis_cap) + ")");

  // Reduction table: pivot path = -(its rref row restricted to free paths).
  alg.reduce_tab_.assign(paths.size(), std::vector<felt>(alg.basis_.size(), 0));
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (!reducible[i]) {
      alg.reduce_tab_[i][basis_of_path[i]] = 1;
      continue;
    }
    std::size_t row = 0;
    while (rr.pivots[row] != i) ++row;
    for (std::size_t c = 0; c < paths.size(); ++c) {
      if (reducible[c] || c == i) continue;
      felt v = rr.m.at(row, c);
      if (v != 0) alg.reduce_tab_[i][basis_of_path[c]] = f.neg(v);
    }
  }

  // Structure constants.
  alg.mul_.assign(alg.dim(), std::vector<std::vector<felt>>(alg.dim()));
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      const Path& a = alg.basis_[i];
      const Path& b = alg.basis_[j];
      if (alg.path_end(a) != b.start) {
        alg.mul_[i][j].assign(alg.dim(), 0);
        continue;
      }
      Path ab{a.start, a.arrows};
      ab.arrows.insert(ab.arrows.end(), b.arrows.begin(), b.arrows.end());
      alg.mul_[i][j] = alg.reduce_path(ab);
    }

  if (alg.dim() <= 64) alg.check_associativity();
  return alg;
}

std::vector<felt> BoundAlgebra::reduce_path(const Path& p) const {
  std::vector<felt> zero(dim(), 0);
  if (static_cast<int>(p.len()) >= bound) return zero;
  auto it = enum_pos_.find(path_key(p));
  if (it == enum_pos_.end()) throw std::logic_error("reduce_path: unknown path");
  return reduce_tab_[it->second];
}

void BoundAlgebra::check_associativity() const {
  auto mul_coords = [&](const std::vector<felt>& x, const std::vector<felt>& y) {
    std::vector<felt> out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) continue;
        felt c = field.mul(x[i], y[j]);
        const auto& prod = mul_[i][j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (prod[k] != 0) out[k] = field.add(out[k], field.mul(c, prod[k]));
      }
    }
    return out;
  };
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t k = 0; k < dim(); ++k) {
        std::vector<felt> ei(dim(), 0), ej(dim(), 0), ek(dim(), 0);
        ei[i] = ej[j] = ek[k] = 1;
        if (mul_coords(mul_[i][j], ek) != mul_coords(ei, mul_[j][k]))
          throw std::logic_error("multiplication table not associative");
      }
}

const BoundAlgebra& BoundAlgebra::opposite() const {
  if (opposite_) return *opposite_;
  Quiver oq;
  oq.nv = quiver.nv;
  for (const auto& a : quiver.arrows) oq.arrows.push_back({a.name, a.tgt, a.src});
  std::vector<Relation> orels;
  for (const auto& r : relations) {
    Relation ro;
    for (const auto& t : r.terms) {
      Path rp;
      rp.start = path_end(t.path);
      rp.arrows.assign(t.path.arrows.rbegin(), t.path.arrows.rend());
      ro.terms.push_back({t.coeff, rp});
    }
    orels.push_back(ro);
  }
  opposite_ = std::make_shared<BoundAlgebra>(
      build(field, oq, orels, bound, std::max<std::size_t>(dim(), 512)));
  return *opposite_;
}

std::string BoundAlgebra::describe() const {
  std::ostringstream os;
  os << "F" << field.p << "-algebra on " << quiver.nv << " vertices, " << quiver.arrows.size()
     << " arrows, " << relations.size() << " relations, bound " << bound << ", dim " << dim();
  return os.str();
}

}  // namespace qc
