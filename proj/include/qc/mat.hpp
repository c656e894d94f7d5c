#pragma once

// Exact dense linear algebra over a prime field F_p.
// All values are immutable after construction and every operation is a pure
// function; 0xN and Nx0 matrices are legal and stand for maps to/from the
// zero space.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qc {

using felt = std::uint32_t;

struct FieldPrime {
  felt p = 2;

  FieldPrime() = default;
  explicit FieldPrime(felt prime);

  felt reduce(long long v) const {
    long long m = v % static_cast<long long>(p);
    return static_cast<felt>(m < 0 ? m + p : m);
  }
  felt add(felt a, felt b) const { return (a + b) % p; }
  felt sub(felt a, felt b) const { return (a + p - b % p) % p; }
  felt neg(felt a) const { return a % p == 0 ? 0 : p - a % p; }
  felt mul(felt a, felt b) const {
    return static_cast<felt>((static_cast<std::uint64_t>(a) * b) % p);
  }
  felt inv(felt a) const;

  bool operator==(const FieldPrime& o) const { return p == o.p; }
  bool operator!=(const FieldPrime& o) const { return p != o.p; }
};

struct Mat {
  FieldPrime f;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<felt> e;  // row-major, entries reduced to 0..p-1

  Mat() = default;
  Mat(FieldPrime fld, std::size_t r, std::size_t c)
      : f(fld), rows(r), cols(c), e(r * c, 0) {}

  static Mat identity(FieldPrime f, std::size_t n);
  // Convenience constructor; entries may be negative and are reduced mod p.
  static Mat from_rows(FieldPrime f, std::size_t r, std::size_t c,
                       const std::vector<std::vector<int>>& rws);

  felt at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
  void set(std::size_t i, std::size_t j, long long v) { e[i * cols + j] = f.reduce(v); }

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Mat& o) const {
    return f == o.f && rows == o.rows && cols == o.cols && e == o.e;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat col(std::size_t j) const;
  std::string str() const;
};

Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_neg(const Mat& a);
Mat mat_scale(const Mat& a, felt c);
Mat mat_mul(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat hstack_all(FieldPrime f, std::size_t rows, const std::vector<Mat>& ms);
Mat block_diag(FieldPrime f, const std::vector<Mat>& ms);
// a^n for square a, n >= 0
Mat mat_pow(const Mat& a, std::size_t n);

struct RrefResult {
  Mat m;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

RrefResult rref(const Mat& a);
std::size_t rank(const Mat& a);

// Columns form a basis of the null space { v : a v = 0 }, in canonical
// (free-coordinate ascending) order.
Mat kernel_basis(const Mat& a);

// Particular solution of a x = b with free variables set to zero, or nullopt
// when the system is inconsistent. b may have several columns.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& a);

// Canonical basis of the column span (unique RREF-of-row-space form), so two
// subspaces are equal iff their canonical bases compare equal.
Mat column_space_basis(const Mat& a);

// Basis of the span of all input columns; bases must share the row count.
Mat subspace_sum(const std::vector<Mat>& bases);

// True iff every column of v lies in the column span of basis.
bool subspace_contains(const Mat& basis, const Mat& v);
bool subspace_equal(const Mat& a, const Mat& b);

// Indices of candidate columns that extend span(sub) to span(sub|cands),
// selected greedily left to right.
std::vector<std::size_t> extend_basis(const Mat& sub, const Mat& cands);

// For a subspace S = span(basis) of F^d, a projection F^d -> F^(d-r) with
// kernel exactly S together with a linear section of it. proj * basis = 0 and
// proj * section = identity.
struct QuotientMaps {
  Mat proj;
  Mat section;
};
QuotientMaps quotient_maps(const Mat& basis, std::size_t ambient_dim);

// Odometer over tuples in F_p^k: returns false once the all-zero tuple comes
// back around. Start from the all-zero tuple.
bool next_tuple(std::vector<felt>& t, felt p);

// min(p^k, cap + 1) without overflow; > cap means the enumeration is partial.
std::size_t pow_capped(felt p, std::size_t k, std::size_t cap);

}  // namespace qc
