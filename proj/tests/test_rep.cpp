#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures_common.hpp"
#include "oracles.hpp"
#include "qc/rep.hpp"

using namespace qc;
using qctest::make_a2;
using qctest::make_n3;
using qctest::oracle_ext_dim;
using qctest::oracle_hom_dim;

TEST_CASE("hom spaces over n3") {
  BoundAlgebra alg = make_n3();
  Rep s0 = simple(alg, 0), s1 = simple(alg, 1);
  CHECK(hom_dim(s0, s0) == 1);
  CHECK(hom_dim(s0, s1) == 0);
  // the only nonzero map between distinct projectives sends top to socle,
  // so it lives in Hom(P1, P0); the reverse space is zero
  CHECK(hom_dim(proj(alg, 1), proj(alg, 0)) == 1);
  CHECK(hom_dim(proj(alg, 0), proj(alg, 1)) == 0);
}

TEST_CASE("hom dims against the exhaustive oracle") {
  BoundAlgebra alg = make_n3();
  std::vector<Rep> objs = {simple(alg, 0), simple(alg, 1), simple(alg, 2),
                           proj(alg, 0), proj(alg, 1), proj(alg, 2)};
  for (const auto& x : objs)
    for (const auto& y : objs) CHECK(hom_dim(x, y) == oracle_hom_dim(x, y));
}

TEST_CASE("projectives and injectives represent evaluation") {
  BoundAlgebra alg = make_n3();
  std::vector<Rep> objs = {simple(alg, 0), proj(alg, 1), direct_sum(alg, {simple(alg, 2), proj(alg, 0)}).rep};
  for (const auto& x : objs)
    for (int v = 0; v < 3; ++v) {
      CHECK(static_cast<int>(hom_dim(proj(alg, v), x)) == x.dims[v]);
      CHECK(static_cast<int>(hom_dim(x, inj(alg, v))) == x.dims[v]);
    }
}

TEST_CASE("kernel cokernel image basics") {
  BoundAlgebra alg = make_n3();
  Rep p0 = proj(alg, 0), s0 = simple(alg, 0);
  CHECK(kernel(identity_mor(p0)).rep.is_zero());
  Rep y = simple(alg, 1);
  RepMor z = zero_mor(p0, y);
  QuotObject ck = cokernel(z);
  CHECK(ck.rep == y);
  CHECK(ck.proj.maps[1].is_identity());

  // cover epi proj(0) -> S0 has kernel S1
  QuotObject t = top(p0);
  CHECK(t.rep.dims == std::vector<int>{1, 0, 0});
  SubObject k = kernel(t.proj);
  CHECK(is_iso(k.rep, simple(alg, 1)).status == Tri::Yes);

  ImageObject im = image(t.proj);
  CHECK(is_iso(im.rep, s0).status == Tri::Yes);
  for (std::size_t v = 0; v < 3; ++v)
    CHECK(p0.dims[v] == k.rep.dims[v] + im.rep.dims[v]);
}

TEST_CASE("direct sums") {
  BoundAlgebra alg = make_n3();
  CHECK(direct_sum(alg, {}).rep.is_zero());
  Rep s0 = simple(alg, 0);
  SumObject one = direct_sum(alg, {s0});
  CHECK(is_iso(one.rep, s0).status == Tri::Yes);
  SumObject two = direct_sum(alg, {s0, proj(alg, 0)});
  CHECK(two.rep.dims == std::vector<int>{2, 1, 0});
  // biproduct identities
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      RepMor c = compose(two.out[i], two.in[j]);
      CHECK(c.is_zero() == (i != j));
      if (i == j)
        for (const auto& m : c.maps) CHECK(m.is_identity());
    }
}

TEST_CASE("is_iso") {
  BoundAlgebra alg = make_n3();
  Rep s0 = simple(alg, 0);
  auto self = is_iso(s0, s0);
  CHECK(self.status == Tri::Yes);
  CHECK(self.witness->maps[0].is_identity());
  CHECK(is_iso(s0, simple(alg, 1)).status == Tri::No);
  CHECK(is_iso(inj(alg, 0), proj(alg, 2)).status == Tri::Yes);
  CHECK(is_iso(zero_rep(alg), zero_rep(alg)).status == Tri::Yes);
  // same dimension vector but not isomorphic
  Rep s0s1 = direct_sum(alg, {simple(alg, 0), simple(alg, 1)}).rep;
  CHECK(is_iso(proj(alg, 0), s0s1).status == Tri::No);
}

TEST_CASE("decompose") {
  BoundAlgebra alg = make_n3();
  Rep s0 = simple(alg, 0);
  auto one = decompose(s0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].second == 1);

  auto twice = decompose(direct_sum(alg, {s0, s0}).rep);
  REQUIRE(twice.size() == 1);
  CHECK(twice[0].second == 2);
  CHECK(is_iso(twice[0].first, s0).status == Tri::Yes);

  auto mix = decompose(direct_sum(alg, {proj(alg, 0), simple(alg, 2)}).rep);
  CHECK(mix.size() == 2);

  CHECK(decompose(zero_rep(alg)).empty());

  // partition property: the parts sum back to the input
  Rep big = direct_sum(alg, {proj(alg, 1), simple(alg, 0), simple(alg, 0)}).rep;
  auto parts = decompose(big);
  std::vector<Rep> expand;
  for (const auto& [r, m] : parts)
    for (int i = 0; i < m; ++i) expand.push_back(r);
  CHECK(is_iso(direct_sum(alg, expand).rep, big).status == Tri::Yes);
}

TEST_CASE("socle and top over n3") {
  BoundAlgebra alg = make_n3();
  Rep s1 = simple(alg, 1);
  CHECK(socle(s1).rep == s1);
  CHECK(is_iso(socle(proj(alg, 0)).rep, simple(alg, 1)).status == Tri::Yes);
  CHECK(is_iso(top(proj(alg, 0)).rep, simple(alg, 0)).status == Tri::Yes);
}

TEST_CASE("injective envelopes") {
  BoundAlgebra alg = make_n3();
  Rep i1 = inj(alg, 1);
  Envelope e = injective_envelope(i1);
  CHECK(is_iso(e.env, i1).status == Tri::Yes);
  CHECK(e.cosyz.is_zero());

  Envelope es = injective_envelope(simple(alg, 0));
  CHECK(is_iso(es.env, proj(alg, 2)).status == Tri::Yes);  // inj(0) = proj(2)
  CHECK(is_mono(es.embed));

  Envelope ez = injective_envelope(zero_rep(alg));
  CHECK(ez.env.is_zero());
  CHECK(ez.cosyz.is_zero());
}

TEST_CASE("projective covers") {
  BoundAlgebra alg = make_n3();
  Cover cp = projective_cover(proj(alg, 1));
  CHECK(is_iso(cp.cover, proj(alg, 1)).status == Tri::Yes);
  CHECK(cp.syz.is_zero());

  Cover cs = projective_cover(simple(alg, 0));
  CHECK(is_iso(cs.cover, proj(alg, 0)).status == Tri::Yes);
  CHECK(is_epi(cs.onto));

  Cover cz = projective_cover(zero_rep(alg));
  CHECK(cz.cover.is_zero());
}

TEST_CASE("syzygy and cosyzygy over n3") {
  BoundAlgebra alg = make_n3();
  for (int v = 0; v < 3; ++v) CHECK(cosyzygy(inj(alg, v)).is_zero());
  for (int v = 0; v < 3; ++v) CHECK(syzygy(proj(alg, v)).is_zero());
  CHECK(is_iso(cosyzygy(simple(alg, 0)), simple(alg, 2)).status == Tri::Yes);
  CHECK(is_iso(syzygy(simple(alg, 0)), simple(alg, 1)).status == Tri::Yes);
}

TEST_CASE("ext1") {
  BoundAlgebra n3 = make_n3();
  for (int v = 0; v < 3; ++v) {
    CHECK(ext1(proj(n3, v), simple(n3, 0)).dim == 0);
    CHECK(ext1(proj(n3, v), proj(n3, 1)).dim == 0);
  }
  CHECK(ext1(simple(n3, 0), simple(n3, 0)).dim == 0);
  CHECK(ext1(simple(n3, 0), simple(n3, 1)).dim == 1);  // from 0->S1->P0->S0->0

  BoundAlgebra a2 = make_a2();
  Ext1 e = ext1(simple(a2, 0), simple(a2, 1));
  CHECK(e.dim == 1);
  CHECK(e.cocycles.size() == 1);
}

TEST_CASE("ext1 against the cocycle-enumeration oracle") {
  BoundAlgebra alg = make_n3();
  std::vector<Rep> objs = {simple(alg, 0), simple(alg, 1), simple(alg, 2),
                           proj(alg, 0), proj(alg, 1), proj(alg, 2)};
  for (const auto& x : objs)
    for (const auto& y : objs) CHECK(ext1(x, y).dim == oracle_ext_dim(x, y));
}

TEST_CASE("rank-nullity for morphisms") {
  BoundAlgebra alg = make_n3();
  Rep p0 = proj(alg, 0), p1 = proj(alg, 1);
  for (const auto& f : hom_basis(p0, p1)) {
    SubObject k = kernel(f);
    ImageObject im = image(f);
    for (int v = 0; v < 3; ++v) CHECK(p0.dims[v] == k.rep.dims[v] + im.rep.dims[v]);
  }
}

TEST_CASE("ses validation") {
  BoundAlgebra alg = make_n3();
  Rep p0 = proj(alg, 0);
  QuotObject t = top(p0);
  SubObject k = kernel(t.proj);
  Ses s{k.incl, t.proj};
  CHECK(ses_valid(s));
  Ses bad{k.incl, zero_mor(p0, t.rep)};
  CHECK_FALSE(ses_valid(bad));
}

TEST_CASE("invalid representations are rejected") {
  BoundAlgebra alg = make_n3();
  // arrow composite ba nonzero violates the radical-square-zero relation
  std::vector<int> dims{1, 1, 1};
  std::vector<Mat> mats{Mat::identity(alg.field, 1), Mat::identity(alg.field, 1),
                        Mat(alg.field, 1, 1)};
  CHECK_THROWS(make_rep(alg, dims, mats));
}
