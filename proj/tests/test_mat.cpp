#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qc/mat.hpp"

using namespace qc;

namespace {

const FieldPrime F2(2);
const FieldPrime F3(3);

// enumerate every r x c matrix over F_p (use only for tiny shapes)
template <typename Fn>
void for_each_matrix(FieldPrime f, std::size_t r, std::size_t c, Fn&& fn) {
  std::vector<felt> t(r * c, 0);
  do {
    Mat m(f, r, c);
    m.e = t;
    fn(m);
  } while (next_tuple(t, f.p));
}

// all vectors in the column span, by exhaustive coefficient enumeration
std::set<std::vector<felt>> span_of(const Mat& basis) {
  std::set<std::vector<felt>> out;
  std::vector<felt> t(basis.cols, 0);
  do {
    Mat v(basis.f, basis.rows, 1);
    for (std::size_t j = 0; j < basis.cols; ++j)
      for (std::size_t i = 0; i < basis.rows; ++i)
        v.set(i, 0, v.f.add(v.at(i, 0), v.f.mul(t[j], basis.at(i, j))));
    out.insert(v.e);
  } while (next_tuple(t, basis.f.p));
  return out;
}

}  // namespace

TEST_CASE("field arithmetic") {
  CHECK(F2.add(1, 1) == 0);
  CHECK(F3.inv(2) == 2);
  CHECK(FieldPrime(5).inv(3) == 2);
  CHECK(F3.neg(0) == 0);
  CHECK(F3.reduce(-1) == 2);
  CHECK_THROWS(FieldPrime(4));
  CHECK_THROWS(FieldPrime(1));
}

TEST_CASE("rref frozen examples") {
  Mat id2 = Mat::identity(F2, 2);
  auto r1 = rref(id2);
  CHECK(r1.m == id2);
  CHECK(r1.pivots == std::vector<std::size_t>{0, 1});

  Mat z3(F2, 3, 3);
  auto r2 = rref(z3);
  CHECK(r2.m == z3);
  CHECK(r2.pivots.empty());

  Mat a = Mat::from_rows(F2, 2, 2, {{1, 1}, {1, 1}});
  auto r3 = rref(a);
  CHECK(r3.m == Mat::from_rows(F2, 2, 2, {{1, 1}, {0, 0}}));
  CHECK(r3.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel_basis frozen examples") {
  CHECK(kernel_basis(Mat::identity(F2, 3)).cols == 0);

  Mat to_zero(F2, 0, 2);  // zero map F_2^2 -> 0
  Mat k = kernel_basis(to_zero);
  CHECK(k.cols == 2);
  CHECK(k.rows == 2);
  CHECK(rank(k) == 2);

  Mat row = Mat::from_rows(F2, 1, 2, {{1, 1}});
  Mat k2 = kernel_basis(row);
  CHECK(k2.cols == 1);
  CHECK(k2 == Mat::from_rows(F2, 2, 1, {{1}, {1}}));
}

TEST_CASE("solve frozen examples") {
  Mat b = Mat::from_rows(F2, 2, 1, {{1}, {0}});
  auto x = solve(Mat::identity(F2, 2), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  CHECK_FALSE(solve(Mat(F2, 1, 1), Mat::from_rows(F2, 1, 1, {{1}})).has_value());

  Mat a = Mat::from_rows(F2, 2, 2, {{1, 1}, {0, 1}});
  Mat rhs = Mat::from_rows(F2, 2, 1, {{0}, {1}});
  auto x2 = solve(a, rhs);
  REQUIRE(x2.has_value());
  CHECK(*x2 == Mat::from_rows(F2, 2, 1, {{1}, {1}}));
  // oracle: the unique solution among all 4 candidates
  int solutions = 0;
  for_each_matrix(F2, 2, 1, [&](const Mat& cand) {
    if (mat_mul(a, cand) == rhs) {
      ++solutions;
      CHECK(cand == *x2);
    }
  });
  CHECK(solutions == 1);

  CHECK_THROWS(solve(Mat(F2, 2, 2), Mat(F2, 3, 1)));
}

TEST_CASE("subspace_sum frozen examples") {
  Mat e1 = Mat::from_rows(F2, 2, 1, {{1}, {0}});
  Mat e2 = Mat::from_rows(F2, 2, 1, {{0}, {1}});
  CHECK(subspace_sum({e1, e2}).cols == 2);

  Mat none(F2, 2, 0);
  CHECK(subspace_sum({none, none}).cols == 0);

  Mat v1 = Mat::from_rows(F2, 2, 1, {{1}, {1}});
  CHECK(subspace_sum({v1, e2}).cols == 2);

  CHECK_THROWS(subspace_sum({e1, Mat(F2, 3, 1)}));
}

TEST_CASE("subspace_contains frozen examples") {
  Mat e1 = Mat::from_rows(F2, 2, 1, {{1}, {0}});
  CHECK(subspace_contains(e1, Mat(F2, 2, 1)));
  CHECK_FALSE(subspace_contains(e1, Mat::from_rows(F2, 2, 1, {{0}, {1}})));
  Mat b = Mat::from_rows(F2, 2, 2, {{1, 0}, {1, 1}});
  CHECK(subspace_contains(b, e1));  // (1,0) = (1,1) + (0,1)
}

TEST_CASE("rref is idempotent and rank-preserving on all 3x3 over F_2") {
  for_each_matrix(F2, 3, 3, [](const Mat& m) {
    auto r = rref(m);
    CHECK(rank(r.m) == rank(m));
    CHECK(rref(r.m).m == r.m);
    for (std::size_t i = 1; i < r.pivots.size(); ++i) CHECK(r.pivots[i - 1] < r.pivots[i]);
  });
}

TEST_CASE("rank-nullity on all 2x3 over F_3") {
  for_each_matrix(F3, 2, 3, [](const Mat& m) {
    Mat k = kernel_basis(m);
    CHECK(m.cols == rank(m) + k.cols);
    CHECK(mat_mul(m, k).is_zero());
    CHECK(rank(k) == k.cols);
  });
}

TEST_CASE("subspace_contains agrees with exhaustive span enumeration") {
  for_each_matrix(F2, 3, 2, [](const Mat& basis) {
    auto span = span_of(basis);
    for_each_matrix(F2, 3, 1, [&](const Mat& v) {
      CHECK(subspace_contains(basis, v) == (span.count(v.e) > 0));
    });
  });
}

TEST_CASE("column_space_basis is canonical") {
  Mat a = Mat::from_rows(F2, 3, 3, {{1, 0, 1}, {1, 1, 0}, {0, 1, 1}});
  Mat b = Mat::from_rows(F2, 3, 2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(subspace_equal(a, b));
  CHECK(column_space_basis(a) == column_space_basis(b));
}

TEST_CASE("quotient_maps splits the ambient space") {
  for_each_matrix(F2, 3, 2, [](const Mat& basis) {
    auto qm = quotient_maps(basis, 3);
    CHECK(mat_mul(qm.proj, basis).is_zero());
    CHECK(mat_mul(qm.proj, qm.section).is_identity());
    CHECK(qm.proj.rows == 3 - rank(basis));
  });
  auto full = quotient_maps(Mat::identity(F3, 2), 2);
  CHECK(full.proj.rows == 0);
  auto none = quotient_maps(Mat(F3, 2, 0), 2);
  CHECK(none.proj.rows == 2);
  CHECK(none.proj.is_identity());
}

TEST_CASE("inverse and power") {
  Mat a = Mat::from_rows(F3, 2, 2, {{1, 1}, {0, 1}});
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(mat_mul(a, *inv).is_identity());
  CHECK_FALSE(inverse(Mat::from_rows(F2, 2, 2, {{1, 1}, {1, 1}})).has_value());
  CHECK(mat_pow(a, 3) == mat_mul(a, mat_mul(a, a)));
  CHECK(mat_pow(a, 0).is_identity());
}

TEST_CASE("zero-dimensional shapes are first-class") {
  Mat a(F2, 0, 3);
  Mat b(F2, 3, 0);
  CHECK(mat_mul(a, Mat(F2, 3, 2)).rows == 0);
  CHECK(mat_mul(b, Mat(F2, 0, 4)).cols == 4);
  CHECK(kernel_basis(a).cols == 3);
  CHECK(kernel_basis(b).cols == 0);
  auto s = solve(a, Mat(F2, 0, 2));
  REQUIRE(s.has_value());
  CHECK(s->rows == 3);
  CHECK(rank(b) == 0);
}

TEST_CASE("extend_basis picks a complement") {
  Mat sub = Mat::from_rows(F2, 3, 1, {{1}, {1}, {0}});
  Mat cands = Mat::from_rows(F2, 3, 3, {{1, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  auto chosen = extend_basis(sub, cands);
  CHECK(chosen == std::vector<std::size_t>{1, 2});
}

TEST_CASE("pow_capped saturates") {
  CHECK(pow_capped(2, 3, 100) == 8);
  CHECK(pow_capped(2, 20, 4096) == 4097);
  CHECK(pow_capped(3, 0, 1) == 1);
}
