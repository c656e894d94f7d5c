#include "qc/mat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qc {

FieldPrime::FieldPrime(felt prime) : p(prime) {
  if (prime < 2) throw std::invalid_argument("field characteristic must be >= 2");
  for (felt d = 2; d * d <= prime; ++d)
    if (prime % d == 0) throw std::invalid_argument("field characteristic must be prime");
}

felt FieldPrime::inv(felt a) const {
  a %= p;
  if (a == 0) throw std::invalid_argument("inverse of zero");
  // extended Euclid
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return reduce(t);
}

Mat Mat::identity(FieldPrime f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::from_rows(FieldPrime f, std::size_t r, std::size_t c,
                   const std::vector<std::vector<int>>& rws) {
  if (rws.size() != r) throw std::invalid_argument("row count mismatch");
  Mat m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rws[i].size() != c) throw std::invalid_argument("column count mismatch");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rws[i][j]);
  }
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(e.begin(), e.end(), [](felt x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (rows != cols) return false;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Mat Mat::col(std::size_t j) const {
  Mat c(f, rows, 1);
  for (std::size_t i = 0; i < rows; ++i) c.set(i, 0, at(i, j));
  return c;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols; ++j) os << at(i, j) << (j + 1 < cols ? "," : "");
    os << "]";
  }
  os << "]";
  return os.str();
}

static void require_same_shape(const Mat& a, const Mat& b) {
  if (a.f != b.f || a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix shape mismatch");
}

Mat mat_add(const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  Mat r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.f.add(a.e[i], b.e[i]);
  return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  require_same_shape(a, b);
  Mat r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.f.sub(a.e[i], b.e[i]);
  return r;
}

Mat mat_neg(const Mat& a) {
  Mat r = a;
  for (auto& x : r.e) x = a.f.neg(x);
  return r;
}

Mat mat_scale(const Mat& a, felt c) {
  Mat r = a;
  for (auto& x : r.e) x = a.f.mul(x, c);
  return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.f != b.f || a.cols != b.rows) throw std::invalid_argument("matrix product shape mismatch");
  Mat r(a.f, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      felt aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        r.e[i * r.cols + j] = a.f.add(r.e[i * r.cols + j], a.f.mul(aik, b.at(k, j)));
    }
  return r;
}

Mat transpose(const Mat& a) {
  Mat r(a.f, a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) r.set(j, i, a.at(i, j));
  return r;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.f != b.f || a.rows != b.rows) throw std::invalid_argument("hstack row mismatch");
  Mat r(a.f, a.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) r.set(i, j, a.at(i, j));
    for (std::size_t j = 0; j < b.cols; ++j) r.set(i, a.cols + j, b.at(i, j));
  }
  return r;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.f != b.f || a.cols != b.cols) throw std::invalid_argument("vstack column mismatch");
  Mat r(a.f, a.rows + b.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) r.set(i, j, a.at(i, j));
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < b.cols; ++j) r.set(a.rows + i, j, b.at(i, j));
  return r;
}

Mat hstack_all(FieldPrime f, std::size_t rows, const std::vector<Mat>& ms) {
  Mat r(f, rows, 0);
  for (const auto& m : ms) r = hstack(r, m);
  return r;
}

Mat block_diag(FieldPrime f, const std::vector<Mat>& ms) {
  std::size_t rs = 0, cs = 0;
  for (const auto& m : ms) { rs += m.rows; cs += m.cols; }
  Mat r(f, rs, cs);
  std::size_t ro = 0, co = 0;
  for (const auto& m : ms) {
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) r.set(ro + i, co + j, m.at(i, j));
    ro += m.rows;
    co += m.cols;
  }
  return r;
}

Mat mat_pow(const Mat& a, std::size_t n) {
  if (a.rows != a.cols) throw std::invalid_argument("power of non-square matrix");
  Mat r = Mat::identity(a.f, a.rows);
  Mat base = a;
  while (n) {
    if (n & 1) r = mat_mul(r, base);
    n >>= 1;
    if (n) base = mat_mul(base, base);
  }
  return r;
}

RrefResult rref(const Mat& a) {
  Mat r = a;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r.cols && lead < r.rows; ++col) {
    std::size_t piv = lead;
    while (piv < r.rows && r.at(piv, col) == 0) ++piv;
    if (piv == r.rows) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < r.cols; ++j)
        std::swap(r.e[lead * r.cols + j], r.e[piv * r.cols + j]);
    felt s = r.f.inv(r.at(lead, col));
    for (std::size_t j = 0; j < r.cols; ++j) r.set(lead, j, r.f.mul(r.at(lead, j), s));
    for (std::size_t i = 0; i < r.rows; ++i) {
      if (i == lead) continue;
      felt c = r.at(i, col);
      if (c == 0) continue;
      for (std::size_t j = 0; j < r.cols; ++j)
        r.set(i, j, r.f.sub(r.at(i, j), r.f.mul(c, r.at(lead, j))));
    }
    pivots.push_back(col);
    ++lead;
  }
  return {r, pivots};
}

std::size_t rank(const Mat& a) { return rref(a).pivots.size(); }

Mat kernel_basis(const Mat& a) {
  RrefResult rr = rref(a);
  std::vector<bool> is_pivot(a.cols, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < a.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(a.f, a.cols, free_cols.size());
  for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
    std::size_t fc = free_cols[idx];
    k.set(fc, idx, 1);
    for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
      k.set(rr.pivots[pi], idx, a.f.neg(rr.m.at(pi, fc)));
  }
  return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.f != b.f || a.rows != b.rows) throw std::invalid_argument("solve row mismatch");
  RrefResult rr = rref(hstack(a, b));
  for (std::size_t c : rr.pivots)
    if (c >= a.cols) return std::nullopt;
  Mat x(a.f, a.cols, b.cols);
  for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
    for (std::size_t j = 0; j < b.cols; ++j)
      x.set(rr.pivots[pi], j, rr.m.at(pi, a.cols + j));
  return x;
}

std::optional<Mat> inverse(const Mat& a) {
  if (a.rows != a.cols) return std::nullopt;
  auto x = solve(a, Mat::identity(a.f, a.rows));
  if (!x) return std::nullopt;
  if (!mat_mul(a, *x).is_identity() || !mat_mul(*x, a).is_identity()) return std::nullopt;
  return x;
}

Mat column_space_basis(const Mat& a) {
  RrefResult rr = rref(transpose(a));
  Mat rowsp(a.f, rr.pivots.size(), a.rows);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < a.rows; ++j) rowsp.set(i, j, rr.m.at(i, j));
  return transpose(rowsp);
}

Mat subspace_sum(const std::vector<Mat>& bases) {
  if (bases.empty()) throw std::invalid_argument("subspace_sum of empty list (ambient unknown)");
  Mat all = bases.front();
  for (std::size_t i = 1; i < bases.size(); ++i) all = hstack(all, bases[i]);
  return column_space_basis(all);
}

bool subspace_contains(const Mat& basis, const Mat& v) {
  return solve(basis, v).has_value();
}

bool subspace_equal(const Mat& a, const Mat& b) {
  return column_space_basis(a) == column_space_basis(b);
}

std::vector<std::size_t> extend_basis(const Mat& sub, const Mat& cands) {
  if (sub.rows != cands.rows) throw std::invalid_argument("extend_basis row mismatch");
  RrefResult rr = rref(hstack(sub, cands));
  std::vector<std::size_t> chosen;
  for (std::size_t c : rr.pivots)
    if (c >= sub.cols) chosen.push_back(c - sub.cols);
  return chosen;
}

QuotientMaps quotient_maps(const Mat& basis, std::size_t ambient_dim) {
  if (basis.rows != ambient_dim) throw std::invalid_argument("quotient_maps ambient mismatch");
  Mat cb = column_space_basis(basis);
  std::size_t r = cb.cols;
  RrefResult rr = rref(transpose(cb));
  std::vector<bool> bound(ambient_dim, false);
  for (std::size_t c : rr.pivots) bound[c] = true;
  Mat comp(basis.f, ambient_dim, ambient_dim - r);
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!bound[c]) comp.set(c, k++, 1);
  auto minv = inverse(hstack(cb, comp));
  if (!minv) throw std::logic_error("quotient_maps: complement construction failed");
  Mat proj(basis.f, ambient_dim - r, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim - r; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) proj.set(i, j, minv->at(r + i, j));
  return {proj, comp};
}

bool next_tuple(std::vector<felt>& t, felt p) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (++t[i] < p) return true;
    t[i] = 0;
  }
  return false;
}

std::size_t pow_capped(felt p, std::size_t k, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > cap) return cap + 1;
    v *= p;
  }
  return v > cap ? cap + 1 : v;
}

}  // namespace qc
