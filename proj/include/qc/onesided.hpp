#pragma once

// Quotient categories and one-sided triangulated structure on them: stable
// categories modulo injectives (right triangles, shift = cosyzygy) or modulo
// projectives (left triangles, shift = syzygy), factorization ideals, cones
// and fibers, rotations, fills, and the pseudo(co)kernel and iterated
// quotient instance checks.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qc/check.hpp"
#include "qc/rep.hpp"

namespace qc {

// Additive closure "add" of finitely many generators; the zero subcategory is
// the empty generator list.
struct SubcatSpec {
  std::vector<Rep> gens;
};

// A morphism considered modulo the ideal of a quotient category. Plain data;
// coset arithmetic lives on QuotCategory.
struct QuotMor {
  RepMor rep;
};

struct RightTriangle {
  QuotMor u, v, w;  // U -> V -> W -> Sigma U
};

struct LeftTriangle {
  QuotMor x, y, z;  // Omega Z -> X -> Y -> Z
};

struct QuotHom {
  std::size_t dim = 0;              // dim Hom / ideal
  std::vector<RepMor> transversal;  // coset representatives, deterministic
  Mat trans_cols;                   // the same, flattened as columns
  Mat factor;                       // flattened basis of the ideal subspace
};

// flattened basis of { f : x -> y factoring through add of the generators };
// factoring through the additive closure equals factoring through a finite
// direct sum, which the sum of composite images captures exactly
Mat factor_through(const std::vector<Rep>& gens, const Rep& x, const Rep& y);

enum class StableKind { InjStable, ProjStable, General };

class QuotCategory {
 public:
  static QuotCategory injective_stable(const BoundAlgebra& alg, std::vector<Rep> universe);
  static QuotCategory projective_stable(const BoundAlgebra& alg, std::vector<Rep> universe);
  static QuotCategory general(const BoundAlgebra& alg, std::vector<Rep> universe,
                              SubcatSpec ideal);

  const BoundAlgebra& algebra() const { return *alg_; }
  StableKind kind() const { return kind_; }
  const std::vector<Rep>& universe() const { return universe_; }
  const SubcatSpec& ideal() const { return ideal_; }

  // flattened basis of { f : x -> y factoring through add(ideal) }
  Mat factor_subspace(const Rep& x, const Rep& y) const;

  QuotHom quot_hom(const Rep& x, const Rep& y) const;

  bool coset_zero(const RepMor& f) const;
  bool coset_equal(const RepMor& f, const RepMor& g) const;
  // coordinates of f over qh.transversal (qh must belong to (f.src, f.tgt))
  std::vector<felt> coset_coords(const QuotHom& qh, const RepMor& f) const;

  // cached envelope/cover assignments making the shifts functors on the nose
  const Envelope& envelope(const Rep& x) const;
  const Cover& cover(const Rep& x) const;

  Rep sigma(const Rep& x) const;
  Rep omega(const Rep& x) const;
  RepMor sigma_mor(const RepMor& f) const;  // InjStable only
  RepMor omega_mor(const RepMor& f) const;  // ProjStable only

 private:
  const BoundAlgebra* alg_ = nullptr;
  StableKind kind_ = StableKind::General;
  std::vector<Rep> universe_;
  SubcatSpec ideal_;
  mutable std::map<std::string, Envelope> env_cache_;
  mutable std::map<std::string, Cover> cover_cache_;
  mutable std::map<std::string, Mat> factor_cache_;
};

// triangle construction (Inj/ProjStable contexts)
RightTriangle triangle_from_ses(const QuotCategory& q, const Ses& s);
LeftTriangle left_triangle_from_ses(const QuotCategory& q, const Ses& s);

struct ConeData {
  RightTriangle tri;
  Ses ses;  // 0 -> X -> Y + I_X -> Z -> 0, the pushout form
};
ConeData cone_data(const QuotCategory& q, const QuotMor& f);
RightTriangle cone(const QuotCategory& q, const QuotMor& f);
LeftTriangle fiber(const QuotCategory& q, const QuotMor& z);

struct MalformedTriangle : std::runtime_error {
  explicit MalformedTriangle(const std::string& w) : std::runtime_error(w) {}
};

// Canonical short exact sequence 0 -> X -> Y + I_X -> Z' -> 0 realizing a
// right triangle, with Z' verified isomorphic to the triangle's third object
// in the quotient. Throws MalformedTriangle when the verification fails.
Ses ses_from_triangle(const QuotCategory& q, const RightTriangle& t);

bool validate_right_triangle(const QuotCategory& q, const RightTriangle& t,
                             std::string* why = nullptr);
bool validate_left_triangle(const QuotCategory& q, const LeftTriangle& t,
                            std::string* why = nullptr);

RightTriangle rotate(const QuotCategory& q, const RightTriangle& t);
LeftTriangle rotate(const QuotCategory& q, const LeftTriangle& t);

// (f, g) with g u = u' f: solve for the filler h making both squares commute
// in the quotient; nullopt = inconsistent instance.
std::optional<QuotMor> fill_right(const QuotCategory& q, const RightTriangle& t,
                                  const RightTriangle& t2, const QuotMor& f, const QuotMor& g);
// (g, h) with h z = z' g: solve for f on the left side.
std::optional<QuotMor> fill_left(const QuotCategory& q, const LeftTriangle& t,
                                 const LeftTriangle& t2, const QuotMor& g, const QuotMor& h);

// contravariant exactness of a right triangle against every test object
CheckResult pseudocokernel_check(const QuotCategory& q, const RightTriangle& t,
                                 const std::vector<Rep>& test_objects);
// covariant exactness of a left triangle against every test object
CheckResult pseudokernel_check(const QuotCategory& q, const LeftTriangle& t,
                               const std::vector<Rep>& test_objects);

// dim Hom_(A/C)/(B/C)(x, y) == dim Hom_(A/B)(x, y) on all universe pairs,
// with the canonical map realized on transversals and checked bijective.
// Requires C contained in add(B).
CheckResult iterated_quotient_check(const BoundAlgebra& alg, const std::vector<Rep>& universe,
                                    const SubcatSpec& b, const SubcatSpec& c,
                                    const SearchLimits& lim = {});

// bounded search for an isomorphism in the quotient category
struct QuotIso {
  Tri status = Tri::No;
  std::optional<RepMor> map;      // a -> b
  std::optional<RepMor> inverse;  // b -> a
};
QuotIso quot_iso(const QuotCategory& q, const Rep& a, const Rep& b, const SearchLimits& lim = {});

inline bool stably_zero(const QuotCategory& q, const Rep& x) {
  return q.coset_zero(identity_mor(x));
}

// one-instance octahedral compatibility probe on a composable pair
CheckResult octahedron_spot_check(const QuotCategory& q, const QuotMor& u, const QuotMor& uprime);

// add-closure membership with decomposition witnesses
class AddClosure {
 public:
  AddClosure(const BoundAlgebra& alg, const SubcatSpec& spec, const SearchLimits& lim = {});
  Tri contains(const Rep& x) const;
  const std::vector<Rep>& indecomposables() const { return indecs_; }

 private:
  const BoundAlgebra* alg_;
  SearchLimits lim_;
  std::vector<Rep> indecs_;
};

}  // namespace qc
