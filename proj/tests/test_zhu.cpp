#include "doctest.h"
#include "voa/zhu.hpp"

using namespace voa;

namespace {

Fixture adjoint(const Rat& depth) {
  return Fixture(VoaKind::Heisenberg, ModuleDesc::adjoint(), depth);
}

}  // namespace

TEST_CASE("delta_i convention") {
  CHECK(delta_i(0, 0, 2) == 1);
  CHECK(delta_i(0, 1, 2) == 0);
  CHECK(delta_i(1, 1, 2) == 1);
  CHECK(delta_i(0, 2, 2) == 1);  // r = T always gives 1
  CHECK(delta_i(1, 2, 2) == 1);
}

TEST_CASE("index arithmetic n = l + i/T") {
  CHECK(ZhuIndex::untwisted(3).n() == Rat(3));
  CHECK((ZhuIndex{0, 1, 2}.n()) == Rat(1) / 2);
  CHECK((ZhuIndex{1, 1, 2}.n()) == Rat(3) / 2);
}

TEST_CASE("h circ_0 h and h star_0 h in the untwisted algebra") {
  Fixture adj = adjoint(Rat(6));
  GradedVector h = adj.heisenberg_h();
  ZhuIndex idx0 = ZhuIndex::untwisted(0);

  // h *_0 h = h_{-1}h + h_0 h = 2 omega.
  CHECK(star(adj, h, h, idx0, false) == adj.omega().scaled(Rat(2)));

  // h circ_0 h = h_{-2}h + h_{-1}h = alpha(-2)alpha(-1)1 + 2 omega.
  GradedVector expect = adj.v_basis_vector(3, 1);  // partition [2,1]
  expect += adj.omega().scaled(Rat(2));
  CHECK(circ(adj, h, h, idx0, false) == expect);
}

TEST_CASE("the vacuum is a unit and circ kills nothing through it") {
  Fixture adj = adjoint(Rat(10));
  for (long n = 0; n <= 2; ++n) {
    ZhuIndex idx = ZhuIndex::untwisted(n);
    for (int wt = 0; wt <= 3; ++wt)
      for (int i = 0; i < adj.v_dim(wt); ++i) {
        GradedVector v = adj.v_basis_vector(wt, i);
        CHECK(star(adj, adj.vacuum(), v, idx, false) == v);
        CHECK(circ(adj, adj.vacuum(), v, idx, false).is_zero());
      }
  }
}

TEST_CASE("star at index 0 matches the independent classical formula") {
  Fixture adj = adjoint(Rat(9));
  ZhuIndex idx0 = ZhuIndex::untwisted(0);
  for (int wu = 0; wu <= 4; ++wu)
    for (int iu = 0; iu < adj.v_dim(wu); ++iu)
      for (int wv = 0; wv <= 4; ++wv)
        for (int iv = 0; iv < adj.v_dim(wv); ++iv) {
          GradedVector u = adj.v_basis_vector(wu, iu);
          GradedVector v = adj.v_basis_vector(wv, iv);
          CHECK(star(adj, u, v, idx0, false) == classical_product(adj, u, v));
        }
}

TEST_CASE("twisted products with T = 1 reduce to the untwisted formulas") {
  Fixture adj = adjoint(Rat(7));
  for (long n = 0; n <= 1; ++n) {
    ZhuIndex idx{n, 0, 1};
    for (int wu = 0; wu <= 2; ++wu)
      for (int iu = 0; iu < adj.v_dim(wu); ++iu)
        for (int wv = 0; wv <= 2; ++wv)
          for (int iv = 0; iv < adj.v_dim(wv); ++iv) {
            GradedVector u = adj.v_basis_vector(wu, iu);
            GradedVector v = adj.v_basis_vector(wv, iv);
            CHECK(circ(adj, u, v, idx, true) == circ(adj, u, v, idx, false));
            CHECK(star(adj, u, v, idx, true) == star(adj, u, v, idx, false));
          }
  }
}

TEST_CASE("twisted circ of the odd generator uses half-integer binomials") {
  Fixture adj = adjoint(Rat(6));
  ZhuIndex idx{0, 0, 2};
  GradedVector h = adj.heisenberg_h();
  // h has sector 1: Res_z Y(h,z)h (1+z)^{1/2} / z
  //   = h_{-1}h + binom(1/2,2) h_1 h = 2 omega - (1/8) 1.
  GradedVector expect = adj.omega().scaled(Rat(2)) - adj.vacuum().scaled(Rat(1) / 8);
  CHECK(circ(adj, h, h, idx, true) == expect);
  // Odd-sector star products vanish identically.
  CHECK(star(adj, h, h, idx, true).is_zero());
  CHECK(star(adj, h, adj.omega(), idx, true).is_zero());
}

TEST_CASE("build_zhu refuses an undersized adjoint window") {
  Fixture adj = adjoint(Rat(5));
  TruncationWindow w{3, Rat(4), 3};  // needs depth 2(P+1)+1 = 9
  CHECK_THROWS_AS(build_zhu(adj, ZhuIndex::untwisted(0), false, w), WindowExceeded);
}

TEST_CASE("untwisted A_0 at D = 3 has four classes and passes all checks") {
  TruncationWindow w{3, Rat(4), 3};
  Fixture adj = adjoint(Rat(9));
  TruncatedZhuAlgebra A = build_zhu(adj, ZhuIndex::untwisted(0), false, w);
  CHECK(A.stabilized);
  CHECK(!A.certified);
  CHECK(A.class_count() == 4);
  // The class of a reduces to the zero coset exactly for O-members.
  GradedVector h = adj.heisenberg_h();
  GradedVector member = circ(adj, h, h, A.idx, false);
  Vec red = A.reduce(member);
  for (const Rat& c : red) CHECK(c == Rat(0));

  Fixture mod(VoaKind::Heisenberg, ModuleDesc::fock(Rat(1)), Rat(4));
  std::vector<const Fixture*> mods{&mod};
  ZhuPropertyReport rep = verify_zhu_properties(A, adj, mods);
  CHECK(rep.verdict == Verdict::Holds);
  CHECK(rep.associativity);
  CHECK(rep.identity);
  CHECK(rep.centrality);
  CHECK(rep.surjection);
  CHECK(rep.rep_zero);
  CHECK(rep.rep_hom);
}

TEST_CASE("untwisted A_1 at D = 3 passes with a wider generator sweep") {
  TruncationWindow w{3, Rat(4), 4};
  Fixture adj = adjoint(Rat(13));
  TruncatedZhuAlgebra A = build_zhu(adj, ZhuIndex::untwisted(1), false, w);
  CHECK(A.stabilized);
  Fixture mod(VoaKind::Heisenberg, ModuleDesc::fock(Rat(1)), Rat(4));
  std::vector<const Fixture*> mods{&mod};
  CHECK(verify_zhu_properties(A, adj, mods).verdict == Verdict::Holds);
}

TEST_CASE("twisted algebras at n = 0, 1/2, 1 pass against the twisted module") {
  Fixture mod(VoaKind::Heisenberg, ModuleDesc::twisted_fock(), Rat(4));
  std::vector<const Fixture*> mods{&mod};
  struct Run {
    ZhuIndex idx;
    int P;
    int classes;
  };
  for (const Run& run : {Run{{0, 0, 2}, 3, 1}, Run{{0, 1, 2}, 3, 2}, Run{{1, 0, 2}, 4, 2}}) {
    TruncationWindow w{3, Rat(4), run.P};
    Fixture adj = adjoint(Rat(2 * (w.P + 1) + 2 * run.idx.l + 3));
    TruncatedZhuAlgebra A = build_zhu(adj, run.idx, true, w);
    CHECK(A.stabilized);
    CHECK(A.class_count() == run.classes);
    CHECK(verify_zhu_properties(A, adj, mods).verdict == Verdict::Holds);
  }
}
