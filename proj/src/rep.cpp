#include "qc/rep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qc {

int Rep::total() const { return std::accumulate(dims.begin(), dims.end(), 0); }

bool Rep::is_zero() const { return total() == 0; }

bool Rep::operator==(const Rep& o) const {
  return alg == o.alg && dims == o.dims && mats == o.mats;
}

std::string Rep::key() const {
  std::ostringstream os;
  for (int d : dims) os << d << ',';
  os << '#';
  for (const auto& m : mats) {
    for (felt v : m.e) os << v << ',';
    os << ';';
  }
  return os.str();
}

Rep make_rep(const BoundAlgebra& alg, std::vector<int> dims, std::vector<Mat> mats) {
  Rep r{&alg, std::move(dims), std::move(mats)};
  check_rep(r);
  return r;
}

Rep zero_rep(const BoundAlgebra& alg) {
  std::vector<int> dims(alg.quiver.nv, 0);
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < alg.quiver.arrows.size(); ++a)
    mats.emplace_back(alg.field, 0, 0);
  return Rep{&alg, std::move(dims), std::move(mats)};
}

void check_rep(const Rep& r) {
  if (!r.alg) throw std::invalid_argument("rep without algebra");
  const auto& q = r.alg->quiver;
  if (static_cast<int>(r.dims.size()) != q.nv || r.mats.size() != q.arrows.size())
    throw std::invalid_argument("rep shape mismatch");
  for (int d : r.dims)
    if (d < 0) throw std::invalid_argument("negative fiber dimension");
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    const auto& m = r.mats[a];
    if (m.f != r.alg->field ||
        m.rows != static_cast<std::size_t>(r.dims[q.arrows[a].tgt]) ||
        m.cols != static_cast<std::size_t>(r.dims[q.arrows[a].src]))
      throw std::invalid_argument("arrow matrix shape mismatch: " + q.arrows[a].name);
  }
  if (!rep_satisfies_relations(r)) throw std::invalid_argument("rep violates a relation");
}

Mat eval_path(const Rep& r, const Path& p) {
  const auto& q = r.alg->quiver;
  int at = p.start;
  Mat m = Mat::identity(r.alg->field, r.dims[at]);
  for (int a : p.arrows) {
    m = mat_mul(r.mats[a], m);
    at = q.arrows[a].tgt;
  }
  return m;
}

namespace {

// every composable path of length exactly `bound` must act as zero
bool bound_paths_vanish(const Rep& r, int at, const Mat& acc, int remaining) {
  if (remaining == 0) return acc.is_zero();
  const auto& q = r.alg->quiver;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[a].src != at) continue;
    if (!bound_paths_vanish(r, q.arrows[a].tgt, mat_mul(r.mats[a], acc), remaining - 1))
      return false;
  }
  return true;
}

}  // namespace

bool rep_satisfies_relations(const Rep& r) {
  for (const auto& rel : r.alg->relations) {
    const Path& p0 = rel.terms.front().path;
    int s = p0.start, e = r.alg->path_end(p0);
    Mat acc(r.alg->field, r.dims[e], r.dims[s]);
    for (const auto& t : rel.terms)
      acc = mat_add(acc, mat_scale(eval_path(r, t.path), t.coeff % r.alg->field.p));
    if (!acc.is_zero()) return false;
  }
  for (int v = 0; v < r.alg->quiver.nv; ++v)
    if (!bound_paths_vanish(r, v, Mat::identity(r.alg->field, r.dims[v]), r.alg->bound))
      return false;
  return true;
}

Rep simple(const BoundAlgebra& alg, int vertex) {
  std::vector<int> dims(alg.quiver.nv, 0);
  dims[vertex] = 1;
  std::vector<Mat> mats;
  for (const auto& a : alg.quiver.arrows)
    mats.emplace_back(alg.field, dims[a.tgt], dims[a.src]);
  return make_rep(alg, std::move(dims), std::move(mats));
}

namespace {

// fibers of the projective at `vertex`: normal-form paths starting there
struct ProjFibers {
  std::vector<std::vector<std::size_t>> fib;        // per vertex: basis indices
  std::vector<std::pair<int, std::size_t>> pos;     // basis index -> (vertex, row)
};

ProjFibers proj_fibers(const BoundAlgebra& alg, int vertex) {
  ProjFibers pf;
  pf.fib.resize(alg.quiver.nv);
  pf.pos.assign(alg.dim(), {-1, 0});
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    const Path& p = alg.basis()[i];
    if (p.start != vertex) continue;
    int e = alg.path_end(p);
    pf.pos[i] = {e, pf.fib[e].size()};
    pf.fib[e].push_back(i);
  }
  return pf;
}

}  // namespace

Rep proj(const BoundAlgebra& alg, int vertex) {
  if (vertex < 0 || vertex >= alg.quiver.nv) throw std::invalid_argument("vertex out of range");
  ProjFibers pf = proj_fibers(alg, vertex);
  std::vector<int> dims(alg.quiver.nv);
  for (int v = 0; v < alg.quiver.nv; ++v) dims[v] = static_cast<int>(pf.fib[v].size());
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < alg.quiver.arrows.size(); ++a) {
    int s = alg.quiver.arrows[a].src, t = alg.quiver.arrows[a].tgt;
    Mat m(alg.field, dims[t], dims[s]);
    for (std::size_t c = 0; c < pf.fib[s].size(); ++c) {
      Path ext = alg.basis()[pf.fib[s][c]];
      ext.arrows.push_back(static_cast<int>(a));
      std::vector<felt> coords = alg.reduce_path(ext);
      for (std::size_t b = 0; b < coords.size(); ++b) {
        if (coords[b] == 0) continue;
        if (pf.pos[b].first != t) throw std::logic_error("path reduction lost endpoints");
        m.set(pf.pos[b].second, c, coords[b]);
      }
    }
    mats.push_back(std::move(m));
  }
  return make_rep(alg, std::move(dims), std::move(mats));
}

Rep inj(const BoundAlgebra& alg, int vertex) {
  const BoundAlgebra& opp = alg.opposite();
  Rep po = proj(opp, vertex);
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < alg.quiver.arrows.size(); ++a) mats.push_back(transpose(po.mats[a]));
  return make_rep(alg, po.dims, std::move(mats));
}

bool RepMor::is_zero() const {
  return std::all_of(maps.begin(), maps.end(), [](const Mat& m) { return m.is_zero(); });
}

bool RepMor::operator==(const RepMor& o) const {
  return src == o.src && tgt == o.tgt && maps == o.maps;
}

RepMor zero_mor(const Rep& x, const Rep& y) {
  if (x.alg != y.alg) throw std::invalid_argument("algebra mismatch");
  std::vector<Mat> maps;
  for (int v = 0; v < x.alg->quiver.nv; ++v)
    maps.emplace_back(x.alg->field, y.dims[v], x.dims[v]);
  return RepMor{x, y, std::move(maps)};
}

RepMor identity_mor(const Rep& x) {
  std::vector<Mat> maps;
  for (int v = 0; v < x.alg->quiver.nv; ++v)
    maps.push_back(Mat::identity(x.alg->field, x.dims[v]));
  return RepMor{x, x, std::move(maps)};
}

RepMor compose(const RepMor& g, const RepMor& f) {
  if (!(f.tgt == g.src)) throw std::invalid_argument("compose endpoint mismatch");
  std::vector<Mat> maps;
  for (std::size_t v = 0; v < f.maps.size(); ++v) maps.push_back(mat_mul(g.maps[v], f.maps[v]));
  return RepMor{f.src, g.tgt, std::move(maps)};
}

RepMor mor_add(const RepMor& a, const RepMor& b) {
  RepMor r = a;
  for (std::size_t v = 0; v < r.maps.size(); ++v) r.maps[v] = mat_add(a.maps[v], b.maps[v]);
  return r;
}

RepMor mor_sub(const RepMor& a, const RepMor& b) {
  RepMor r = a;
  for (std::size_t v = 0; v < r.maps.size(); ++v) r.maps[v] = mat_sub(a.maps[v], b.maps[v]);
  return r;
}

RepMor mor_neg(const RepMor& a) {
  RepMor r = a;
  for (auto& m : r.maps) m = mat_neg(m);
  return r;
}

RepMor mor_scale(const RepMor& a, felt c) {
  RepMor r = a;
  for (auto& m : r.maps) m = mat_scale(m, c);
  return r;
}

bool mor_commutes(const RepMor& m) {
  const auto& q = m.src.alg->quiver;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    if (mat_mul(m.maps[t], m.src.mats[a]) != mat_mul(m.tgt.mats[a], m.maps[s])) return false;
  }
  return true;
}

void check_mor(const RepMor& m) {
  if (m.src.alg != m.tgt.alg) throw std::invalid_argument("morphism across algebras");
  for (int v = 0; v < m.src.alg->quiver.nv; ++v)
    if (m.maps[v].rows != static_cast<std::size_t>(m.tgt.dims[v]) ||
        m.maps[v].cols != static_cast<std::size_t>(m.src.dims[v]))
      throw std::invalid_argument("morphism map shape mismatch");
  if (!mor_commutes(m)) throw std::invalid_argument("morphism does not intertwine");
}

bool is_mono(const RepMor& m) {
  for (std::size_t v = 0; v < m.maps.size(); ++v)
    if (rank(m.maps[v]) != m.maps[v].cols) return false;
  return true;
}

bool is_epi(const RepMor& m) {
  for (std::size_t v = 0; v < m.maps.size(); ++v)
    if (rank(m.maps[v]) != m.maps[v].rows) return false;
  return true;
}

static std::vector<std::size_t> flat_offsets(const Rep& x, const Rep& y) {
  std::vector<std::size_t> off(x.dims.size() + 1, 0);
  for (std::size_t v = 0; v < x.dims.size(); ++v)
    off[v + 1] = off[v] + static_cast<std::size_t>(y.dims[v]) * x.dims[v];
  return off;
}

std::size_t flat_dim(const Rep& x, const Rep& y) { return flat_offsets(x, y).back(); }

Mat flatten(const RepMor& m) {
  auto off = flat_offsets(m.src, m.tgt);
  Mat col(m.src.alg->field, off.back(), 1);
  for (std::size_t v = 0; v < m.maps.size(); ++v)
    for (std::size_t i = 0; i < m.maps[v].e.size(); ++i) col.set(off[v] + i, 0, m.maps[v].e[i]);
  return col;
}

RepMor unflatten(const Rep& x, const Rep& y, const Mat& column) {
  auto off = flat_offsets(x, y);
  if (column.rows != off.back() || column.cols != 1)
    throw std::invalid_argument("unflatten shape mismatch");
  RepMor m = zero_mor(x, y);
  for (std::size_t v = 0; v < m.maps.size(); ++v)
    for (std::size_t i = 0; i < m.maps[v].e.size(); ++i) m.maps[v].e[i] = column.at(off[v] + i, 0);
  return m;
}

// rows of the intertwining system: a flattened tuple is a morphism iff it is
// in the kernel
static Mat hom_constraints(const Rep& x, const Rep& y) {
  const auto& q = x.alg->quiver;
  auto off = flat_offsets(x, y);
  std::size_t ncols = off.back();
  std::size_t nrows = 0;
  for (const auto& a : q.arrows)
    nrows += static_cast<std::size_t>(y.dims[a.tgt]) * x.dims[a.src];
  Mat c(x.alg->field, nrows, ncols);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    const Mat& xa = x.mats[a];
    const Mat& ya = y.mats[a];
    for (int i = 0; i < y.dims[t]; ++i)
      for (int j = 0; j < x.dims[s]; ++j) {
        // (f_t xa - ya f_s)[i,j] = 0
        for (int k = 0; k < x.dims[t]; ++k) {
          std::size_t idx = off[t] + static_cast<std::size_t>(i) * x.dims[t] + k;
          c.set(row, idx, c.f.add(c.at(row, idx), xa.at(k, j)));
        }
        for (int k = 0; k < y.dims[s]; ++k) {
          std::size_t idx = off[s] + static_cast<std::size_t>(k) * x.dims[s] + j;
          c.set(row, idx, c.f.sub(c.at(row, idx), ya.at(i, k)));
        }
        ++row;
      }
  }
  return c;
}

std::vector<RepMor> hom_basis(const Rep& x, const Rep& y) {
  if (x.alg != y.alg) throw std::invalid_argument("algebra mismatch");
  Mat k = kernel_basis(hom_constraints(x, y));
  std::vector<RepMor> basis;
  for (std::size_t j = 0; j < k.cols; ++j) basis.push_back(unflatten(x, y, k.col(j)));
  return basis;
}

std::size_t hom_dim(const Rep& x, const Rep& y) { return hom_basis(x, y).size(); }

SubObject kernel(const RepMor& f) {
  const auto& q = f.src.alg->quiver;
  std::vector<Mat> kb;
  std::vector<int> dims;
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    kb.push_back(kernel_basis(f.maps[v]));
    dims.push_back(static_cast<int>(kb.back().cols));
  }
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    auto sol = solve(kb[t], mat_mul(f.src.mats[a], kb[s]));
    if (!sol) throw std::logic_error("kernel is not a subrepresentation");
    mats.push_back(*sol);
  }
  Rep kr = make_rep(*f.src.alg, dims, mats);
  RepMor incl{kr, f.src, kb};
  check_mor(incl);
  return {kr, incl};
}

QuotObject cokernel(const RepMor& f) {
  const auto& q = f.src.alg->quiver;
  std::vector<QuotientMaps> qs;
  std::vector<int> dims;
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    qs.push_back(quotient_maps(f.maps[v], f.tgt.dims[v]));
    dims.push_back(static_cast<int>(qs.back().proj.rows));
  }
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    mats.push_back(mat_mul(qs[t].proj, mat_mul(f.tgt.mats[a], qs[s].section)));
  }
  Rep cr = make_rep(*f.src.alg, dims, mats);
  std::vector<Mat> pm, sm;
  for (auto& qm : qs) {
    pm.push_back(qm.proj);
    sm.push_back(qm.section);
  }
  RepMor pr{f.tgt, cr, pm};
  check_mor(pr);
  return {cr, pr, sm};
}

ImageObject image(const RepMor& f) {
  const auto& q = f.src.alg->quiver;
  std::vector<Mat> ib;
  std::vector<int> dims;
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    ib.push_back(column_space_basis(f.maps[v]));
    dims.push_back(static_cast<int>(ib.back().cols));
  }
  std::vector<Mat> mats, onto;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    int s = q.arrows[a].src, t = q.arrows[a].tgt;
    auto sol = solve(ib[t], mat_mul(f.tgt.mats[a], ib[s]));
    if (!sol) throw std::logic_error("image is not a subrepresentation");
    mats.push_back(*sol);
  }
  for (std::size_t v = 0; v < f.maps.size(); ++v) {
    auto sol = solve(ib[v], f.maps[v]);
    if (!sol) throw std::logic_error("image coordinates inconsistent");
    onto.push_back(*sol);
  }
  Rep ir = make_rep(*f.src.alg, dims, mats);
  RepMor incl{ir, f.tgt, ib};
  RepMor surj{f.src, ir, onto};
  check_mor(incl);
  check_mor(surj);
  return {ir, incl, surj};
}

SumObject direct_sum(const BoundAlgebra& alg, const std::vector<Rep>& xs) {
  for (const auto& x : xs)
    if (x.alg != &alg) throw std::invalid_argument("direct sum across algebras");
  std::vector<int> dims(alg.quiver.nv, 0);
  for (const auto& x : xs)
    for (int v = 0; v < alg.quiver.nv; ++v) dims[v] += x.dims[v];
  std::vector<Mat> mats;
  for (std::size_t a = 0; a < alg.quiver.arrows.size(); ++a) {
    std::vector<Mat> blocks;
    for (const auto& x : xs) blocks.push_back(x.mats[a]);
    mats.push_back(block_diag(alg.field, blocks));
  }
  Rep sum = make_rep(alg, dims, mats);
  SumObject out{sum, {}, {}};
  std::vector<int> offset(alg.quiver.nv, 0);
  for (const auto& x : xs) {
    RepMor in = zero_mor(x, sum), pr = zero_mor(sum, x);
    for (int v = 0; v < alg.quiver.nv; ++v)
      for (int i = 0; i < x.dims[v]; ++i) {
        in.maps[v].set(offset[v] + i, i, 1);
        pr.maps[v].set(i, offset[v] + i, 1);
      }
    check_mor(in);
    check_mor(pr);
    out.in.push_back(std::move(in));
    out.out.push_back(std::move(pr));
    for (int v = 0; v < alg.quiver.nv; ++v) offset[v] += x.dims[v];
  }
  return out;
}

IsoResult is_iso(const Rep& x, const Rep& y, const SearchLimits& lim) {
  if (x.alg != y.alg) throw std::invalid_argument("algebra mismatch");
  if (x.dims != y.dims) return {Tri::No, std::nullopt};
  if (x.is_zero()) return {Tri::Yes, zero_mor(x, y)};
  std::vector<RepMor> hb = hom_basis(x, y);
  if (hb.empty()) return {Tri::No, std::nullopt};
  std::size_t space = pow_capped(x.alg->field.p, hb.size(), lim.combo_cap);
  bool total = space <= lim.combo_cap;
  std::vector<felt> tup(hb.size(), 0);
  std::size_t seen = 0;
  while (next_tuple(tup, x.alg->field.p)) {
    if (++seen > lim.combo_cap) break;
    RepMor cand = zero_mor(x, y);
    for (std::size_t i = 0; i < hb.size(); ++i)
      if (tup[i]) cand = mor_add(cand, mor_scale(hb[i], tup[i]));
    bool inv = true;
    for (const auto& m : cand.maps)
      if (rank(m) != m.rows || m.rows != m.cols) {
        inv = false;
        break;
      }
    if (inv) return {Tri::Yes, cand};
  }
  return {total ? Tri::No : Tri::Undecided, std::nullopt};
}

namespace {

void decompose_leaves(const Rep& x, const SearchLimits& lim, std::vector<Rep>& leaves) {
  if (x.is_zero()) return;
  std::vector<RepMor> endos = hom_basis(x, x);
  std::size_t space = pow_capped(x.alg->field.p, endos.size(), lim.combo_cap);
  bool total = space <= lim.combo_cap;
  std::size_t m = 0;
  while ((std::size_t{1} << m) < static_cast<std::size_t>(x.total())) ++m;
  std::vector<felt> tup(endos.size(), 0);
  std::size_t seen = 0;
  while (next_tuple(tup, x.alg->field.p)) {
    if (++seen > lim.combo_cap) break;
    RepMor e = zero_mor(x, x);
    for (std::size_t i = 0; i < endos.size(); ++i)
      if (tup[i]) e = mor_add(e, mor_scale(endos[i], tup[i]));
    RepMor ep = e;
    for (std::size_t s = 0; s < m; ++s) ep = compose(ep, ep);
    SubObject k = kernel(ep);
    if (k.rep.total() == 0 || k.rep.total() == x.total()) continue;
    ImageObject im = image(ep);
    if (k.rep.total() + im.rep.total() != x.total())
      throw std::logic_error("fitting split dimension mismatch");
    decompose_leaves(k.rep, lim, leaves);
    decompose_leaves(im.rep, lim, leaves);
    return;
  }
  if (!total)
    throw UndecidedError("undecided decomposition: endomorphism enumeration cap exceeded");
  leaves.push_back(x);
}

}  // namespace

std::vector<std::pair<Rep, int>> decompose(const Rep& x, const SearchLimits& lim) {
  std::vector<Rep> leaves;
  decompose_leaves(x, lim, leaves);
  std::vector<std::pair<Rep, int>> grouped;
  for (const auto& l : leaves) {
    bool placed = false;
    for (auto& g : grouped) {
      IsoResult r = is_iso(g.first, l, lim);
      if (r.status == Tri::Undecided)
        throw UndecidedError("undecided decomposition: isomorphism grouping cap exceeded");
      if (r.status == Tri::Yes) {
        ++g.second;
        placed = true;
        break;
      }
    }
    if (!placed) grouped.emplace_back(l, 1);
  }
  return grouped;
}

SubObject socle(const Rep& x) {
  const auto& q = x.alg->quiver;
  std::vector<Mat> kb;
  std::vector<int> dims;
  for (int v = 0; v < q.nv; ++v) {
    Mat stacked(x.alg->field, 0, x.dims[v]);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].src == v) stacked = vstack(stacked, x.mats[a]);
    kb.push_back(kernel_basis(stacked));
    dims.push_back(static_cast<int>(kb.back().cols));
  }
  std::vector<Mat> mats;
  for (const auto& a : q.arrows) mats.emplace_back(x.alg->field, dims[a.tgt], dims[a.src]);
  Rep sr = make_rep(*x.alg, dims, mats);
  RepMor incl{sr, x, kb};
  check_mor(incl);
  return {sr, incl};
}

QuotObject top(const Rep& x) {
  const auto& q = x.alg->quiver;
  std::vector<QuotientMaps> qs;
  std::vector<int> dims;
  for (int v = 0; v < q.nv; ++v) {
    Mat rad(x.alg->field, x.dims[v], 0);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].tgt == v) rad = hstack(rad, x.mats[a]);
    qs.push_back(quotient_maps(rad, x.dims[v]));
    dims.push_back(static_cast<int>(qs.back().proj.rows));
  }
  std::vector<Mat> mats, pm, sm;
  for (const auto& a : q.arrows) mats.emplace_back(x.alg->field, dims[a.tgt], dims[a.src]);
  Rep tr = make_rep(*x.alg, dims, mats);
  for (auto& qm : qs) {
    pm.push_back(qm.proj);
    sm.push_back(qm.section);
  }
  RepMor pr{x, tr, pm};
  check_mor(pr);
  return {tr, pr, sm};
}

// Linear system on an unknown morphism psi: x -> y: intertwining constraints
// plus equations post o psi o pre = rhs.
struct MorEquation {
  std::optional<RepMor> post;  // y -> c
  std::optional<RepMor> pre;   // d -> x
  RepMor rhs;                  // d -> c
};

struct MorSolveResult {
  std::optional<RepMor> particular;
  std::vector<RepMor> kernel;  // kernel of the full system (still morphisms)
};

static MorSolveResult solve_mor_system(const Rep& x, const Rep& y,
                                       const std::vector<MorEquation>& eqs) {
  FieldPrime f = x.alg->field;
  auto off = flat_offsets(x, y);
  std::size_t ncols = off.back();
  Mat sys = hom_constraints(x, y);
  Mat rhs(f, sys.rows, 1);
  for (const auto& eq : eqs) {
    const Rep& d = eq.pre ? eq.pre->src : x;
    const Rep& c = eq.post ? eq.post->tgt : y;
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
      std::size_t nr = static_cast<std::size_t>(c.dims[v]) * d.dims[v];
      Mat block(f, nr, ncols);
      Mat bvec(f, nr, 1);
      std::size_t row = 0;
      for (int i = 0; i < c.dims[v]; ++i)
        for (int j = 0; j < d.dims[v]; ++j) {
          for (int k = 0; k < y.dims[v]; ++k)
            for (int l = 0; l < x.dims[v]; ++l) {
              felt a = eq.post ? eq.post->maps[v].at(i, k) : (i == k ? 1u : 0u);
              if (a == 0) continue;
              felt b = eq.pre ? eq.pre->maps[v].at(l, j) : (l == j ? 1u : 0u);
              if (b == 0) continue;
              std::size_t idx = off[v] + static_cast<std::size_t>(k) * x.dims[v] + l;
              block.set(row, idx, f.add(block.at(row, idx), f.mul(a, b)));
            }
          bvec.set(row, 0, eq.rhs.maps[v].at(i, j));
          ++row;
        }
      sys = vstack(sys, block);
      rhs = vstack(rhs, bvec);
    }
  }
  MorSolveResult out;
  auto sol = solve(sys, rhs);
  if (sol) out.particular = unflatten(x, y, *sol);
  Mat kb = kernel_basis(sys);
  for (std::size_t j = 0; j < kb.cols; ++j) out.kernel.push_back(unflatten(x, y, kb.col(j)));
  return out;
}

// mediated access for other translation units
std::optional<RepMor> solve_lift(const Rep& x, const Rep& y,
                                 const std::optional<RepMor>& post,
                                 const std::optional<RepMor>& pre, const RepMor& rhs,
                                 std::vector<RepMor>* kernel_out) {
  MorSolveResult r = solve_mor_system(x, y, {MorEquation{post, pre, rhs}});
  if (kernel_out) *kernel_out = r.kernel;
  return r.particular;
}

Envelope injective_envelope(const Rep& x) {
  const BoundAlgebra& alg = *x.alg;
  SubObject soc = socle(x);
  std::vector<Rep> summands;
  std::vector<std::pair<int, int>> copy_of;  // (vertex, copy)
  for (int v = 0; v < alg.quiver.nv; ++v)
    for (int k = 0; k < soc.rep.dims[v]; ++k) {
      summands.push_back(inj(alg, v));
      copy_of.emplace_back(v, k);
    }
  SumObject sum = direct_sum(alg, summands);

  // socle line of inj(v) at vertex v
  std::vector<Mat> line(alg.quiver.nv);
  for (int v = 0; v < alg.quiver.nv; ++v) {
    bool needed = soc.rep.dims[v] > 0;
    if (!needed) continue;
    SubObject s = socle(inj(alg, v));
    if (s.rep.total() != 1 || s.rep.dims[v] != 1)
      throw std::logic_error("injective at a vertex must have simple socle");
    line[v] = s.incl.maps[v];  // dims x 1
  }

  RepMor j = zero_mor(soc.rep, sum.rep);
  for (std::size_t c = 0; c < summands.size(); ++c) {
    auto [v, k] = copy_of[c];
    Mat colv = mat_mul(sum.in[c].maps[v], line[v]);  // sum fiber at v, 1 column
    for (std::size_t i = 0; i < colv.rows; ++i)
      j.maps[v].set(i, k, j.maps[v].f.add(j.maps[v].at(i, k), colv.at(i, 0)));
  }
  check_mor(j);

  auto psi = solve_lift(x, sum.rep, std::nullopt, std::optional<RepMor>(soc.incl), j, nullptr);
  if (!psi) throw std::logic_error("injective envelope lifting system inconsistent");
  check_mor(*psi);
  if (!is_mono(*psi)) throw std::logic_error("injective envelope embedding not mono");
  QuotObject cz = cokernel(*psi);
  return {sum.rep, *psi, cz.rep, cz.proj, cz.sections};
}

Cover projective_cover(const Rep& x) {
  const BoundAlgebra& alg = *x.alg;
  QuotObject tp = top(x);
  std::vector<Rep> summands;
  std::vector<std::pair<int, int>> copy_of;
  for (int v = 0; v < alg.quiver.nv; ++v)
    for (int k = 0; k < tp.rep.dims[v]; ++k) {
      summands.push_back(proj(alg, v));
      copy_of.emplace_back(v, k);
    }
  SumObject sum = direct_sum(alg, summands);

  // top functional of proj(v) at vertex v
  std::vector<Mat> func(alg.quiver.nv);
  for (int v = 0; v < alg.quiver.nv; ++v) {
    if (tp.rep.dims[v] == 0) continue;
    QuotObject t = top(proj(alg, v));
    if (t.rep.total() != 1 || t.rep.dims[v] != 1)
      throw std::logic_error("projective at a vertex must have simple top");
    func[v] = t.proj.maps[v];  // 1 x dims
  }

  RepMor qmor = zero_mor(sum.rep, tp.rep);
  for (std::size_t c = 0; c < summands.size(); ++c) {
    auto [v, k] = copy_of[c];
    Mat rowv = mat_mul(func[v], sum.out[c].maps[v]);  // 1 x sum fiber at v
    for (std::size_t jc = 0; jc < rowv.cols; ++jc)
      qmor.maps[v].set(k, jc, qmor.maps[v].f.add(qmor.maps[v].at(k, jc), rowv.at(0, jc)));
  }
  check_mor(qmor);

  auto phi = solve_lift(sum.rep, x, std::optional<RepMor>(tp.proj), std::nullopt, qmor, nullptr);
  if (!phi) throw std::logic_error("projective cover lifting system inconsistent");
  check_mor(*phi);
  if (!is_epi(*phi)) throw std::logic_error("projective cover map not epi");
  SubObject k = kernel(*phi);
  return {sum.rep, *phi, k.rep, k.incl};
}

Rep cosyzygy(const Rep& x) { return injective_envelope(x).cosyz; }
Rep syzygy(const Rep& x) { return projective_cover(x).syz; }

Ext1 ext1(const Rep& x, const Rep& y) {
  if (x.alg != y.alg) throw std::invalid_argument("algebra mismatch");
  Cover cv = projective_cover(x);
  std::vector<RepMor> hp = hom_basis(cv.cover, y);
  std::vector<RepMor> hs = hom_basis(cv.syz, y);
  FieldPrime f = x.alg->field;
  std::size_t fd = flat_dim(cv.syz, y);
  Mat img(f, fd, 0);
  for (const auto& psi : hp) img = hstack(img, flatten(compose(psi, cv.incl)));
  Mat cands(f, fd, 0);
  for (const auto& eta : hs) cands = hstack(cands, flatten(eta));
  std::vector<std::size_t> chosen = extend_basis(column_space_basis(img), cands);
  Ext1 out;
  out.dim = chosen.size();
  for (std::size_t i : chosen) out.cocycles.push_back(hs[i]);
  return out;
}

void check_ses(const Ses& s) {
  check_mor(s.mono);
  check_mor(s.epi);
  if (!(s.mono.tgt == s.epi.src)) throw std::invalid_argument("ses middle mismatch");
  if (!compose(s.epi, s.mono).is_zero()) throw std::invalid_argument("ses composite nonzero");
  if (!is_mono(s.mono)) throw std::invalid_argument("ses left map not mono");
  if (!is_epi(s.epi)) throw std::invalid_argument("ses right map not epi");
  for (std::size_t v = 0; v < s.mono.maps.size(); ++v)
    if (s.mono.src.dims[v] + s.epi.tgt.dims[v] != s.mono.tgt.dims[v])
      throw std::invalid_argument("ses dimensions do not add up");
  // im(mono) <= ker(epi) with equal dimensions => exact at the middle
}

bool ses_valid(const Ses& s) {
  try {
    check_ses(s);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace qc
