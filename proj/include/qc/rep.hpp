#pragma once

// Objects and morphisms of the category of finite-dimensional modules over a
// bound quiver algebra: hom spaces, kernels/cokernels, envelopes/covers,
// syzygies, Ext^1 and Krull-Schmidt decomposition. Everything is exact over
// F_p and deterministic; bounded searches report "undecided" instead of
// guessing.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qc/algebra.hpp"
#include "qc/mat.hpp"

namespace qc {

struct UndecidedError : std::runtime_error {
  explicit UndecidedError(const std::string& what) : std::runtime_error(what) {}
};

struct Rep {
  const BoundAlgebra* alg = nullptr;
  std::vector<int> dims;   // per vertex
  std::vector<Mat> mats;   // per arrow: dims[tgt] x dims[src]

  int total() const;
  bool is_zero() const;
  bool operator==(const Rep& o) const;
  std::string key() const;  // canonical content serialization
};

Rep make_rep(const BoundAlgebra& alg, std::vector<int> dims, std::vector<Mat> mats);
Rep zero_rep(const BoundAlgebra& alg);
void check_rep(const Rep& r);
bool rep_satisfies_relations(const Rep& r);
Mat eval_path(const Rep& r, const Path& p);

Rep simple(const BoundAlgebra& alg, int vertex);
Rep proj(const BoundAlgebra& alg, int vertex);
Rep inj(const BoundAlgebra& alg, int vertex);

struct RepMor {
  Rep src, tgt;
  std::vector<Mat> maps;  // per vertex: tgt.dims[v] x src.dims[v]

  bool is_zero() const;
  bool operator==(const RepMor& o) const;
};

RepMor zero_mor(const Rep& x, const Rep& y);
RepMor identity_mor(const Rep& x);
RepMor compose(const RepMor& g, const RepMor& f);  // g after f
RepMor mor_add(const RepMor& a, const RepMor& b);
RepMor mor_sub(const RepMor& a, const RepMor& b);
RepMor mor_neg(const RepMor& a);
RepMor mor_scale(const RepMor& a, felt c);
void check_mor(const RepMor& m);
bool mor_commutes(const RepMor& m);
bool is_mono(const RepMor& m);
bool is_epi(const RepMor& m);

std::size_t flat_dim(const Rep& x, const Rep& y);
Mat flatten(const RepMor& m);  // column vector
RepMor unflatten(const Rep& x, const Rep& y, const Mat& column);

// Basis of the intertwiner space, in canonical free-coordinate order.
std::vector<RepMor> hom_basis(const Rep& x, const Rep& y);
std::size_t hom_dim(const Rep& x, const Rep& y);

struct SubObject {
  Rep rep;
  RepMor incl;
};
struct QuotObject {
  Rep rep;
  RepMor proj;
  std::vector<Mat> sections;  // vertexwise linear sections of proj
};
struct ImageObject {
  Rep rep;
  RepMor incl;  // into the target of the morphism
  RepMor onto;  // from the source
};

SubObject kernel(const RepMor& f);
QuotObject cokernel(const RepMor& f);
ImageObject image(const RepMor& f);

struct SumObject {
  Rep rep;
  std::vector<RepMor> in;   // injections
  std::vector<RepMor> out;  // projections
};
SumObject direct_sum(const BoundAlgebra& alg, const std::vector<Rep>& xs);

struct SearchLimits {
  std::size_t combo_cap = 4096;   // max field-combination enumeration size
  std::size_t summand_bound = 3;  // max summands in add-closure searches
};

enum class Tri { Yes, No, Undecided };

struct IsoResult {
  Tri status = Tri::No;
  std::optional<RepMor> witness;
};
IsoResult is_iso(const Rep& x, const Rep& y, const SearchLimits& lim = {});

// Fitting-lemma peeling; parts are returned with multiplicities grouped via
// is_iso. Throws UndecidedError when the endomorphism enumeration is capped.
std::vector<std::pair<Rep, int>> decompose(const Rep& x, const SearchLimits& lim = {});

SubObject socle(const Rep& x);
QuotObject top(const Rep& x);

struct Envelope {
  Rep env;
  RepMor embed;                // x -> env, mono
  Rep cosyz;                   // env / x
  RepMor quot;                 // env -> cosyz
  std::vector<Mat> sections;   // vertexwise sections of quot
};
Envelope injective_envelope(const Rep& x);

struct Cover {
  Rep cover;
  RepMor onto;  // cover -> x, epi
  Rep syz;
  RepMor incl;  // syz -> cover
};
Cover projective_cover(const Rep& x);

Rep cosyzygy(const Rep& x);
Rep syzygy(const Rep& x);

struct Ext1 {
  std::size_t dim = 0;
  std::vector<RepMor> cocycles;  // representatives in Hom(syzygy(x), y)
};
Ext1 ext1(const Rep& x, const Rep& y);

struct Ses {
  RepMor mono;  // X -> Y
  RepMor epi;   // Y -> Z
};
void check_ses(const Ses& s);
bool ses_valid(const Ses& s);

// Particular solution psi: x -> y of the lifting problem
// post o psi o pre = rhs (absent factors mean identity), with psi constrained
// to be a morphism; free variables are zero. kernel_out, when non-null,
// receives a basis of the solution space of the homogeneous system.
std::optional<RepMor> solve_lift(const Rep& x, const Rep& y,
                                 const std::optional<RepMor>& post,
                                 const std::optional<RepMor>& pre, const RepMor& rhs,
                                 std::vector<RepMor>* kernel_out);

}  // namespace qc
