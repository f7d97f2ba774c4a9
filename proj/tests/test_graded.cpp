#include "doctest.h"
#include "voa/graded.hpp"

using namespace voa;

TEST_CASE("graded vector arithmetic prunes zero rows") {
  GradedVector a, b;
  a.add_term(Rat(1), 0, 2, Rat(3));
  b.add_term(Rat(1), 0, 2, Rat(-3));
  b.add_term(Rat(2), 1, 3, Rat(1));
  GradedVector s = a + b;
  CHECK(s.row_if(Rat(1)) == nullptr);
  REQUIRE(s.row_if(Rat(2)) != nullptr);
  CHECK((*s.row_if(Rat(2)))[1] == Rat(1));
  CHECK((a - a).is_zero());
  CHECK(a.scaled(Rat(0)).is_zero());
}

TEST_CASE("axpy accumulates exactly") {
  GradedVector a, b;
  a.add_term(Rat(0), 0, 1, Rat(1) / 3);
  b.add_term(Rat(0), 0, 1, Rat(1) / 6);
  a.axpy(Rat(4), b);
  CHECK((*a.row_if(Rat(0)))[0] == Rat(1));
}

TEST_CASE("space layout flattens by increasing degree") {
  SpaceLayout layout({{Rat(0), 1}, {Rat(1) / 2, 1}, {Rat(1), 2}});
  CHECK(layout.total_dim() == 4);
  CHECK(layout.offset_of(Rat(0)) == 0);
  CHECK(layout.offset_of(Rat(1) / 2) == 1);
  CHECK(layout.offset_of(Rat(1)) == 2);
  CHECK_THROWS_AS(layout.offset_of(Rat(2)), WindowExceeded);

  GradedVector v;
  v.add_term(Rat(1), 1, 2, Rat(5));
  v.add_term(Rat(0), 0, 1, Rat(-1));
  Vec flat = layout.flatten(v);
  CHECK(flat == Vec{Rat(-1), Rat(0), Rat(0), Rat(5)});
  CHECK(layout.unflatten(flat) == v);
}

TEST_CASE("degree maps compose with shift bookkeeping") {
  // f: degree 0 -> degree 1, multiply by 2; g: degree 1 -> degree 1, by 3.
  DegreeMap f{Rat(1), {}};
  Matrix m01(1, 1);
  m01.at(0, 0) = Rat(2);
  f.blocks[Rat(0)] = m01;
  DegreeMap g{Rat(0), {}};
  Matrix m11(1, 1);
  m11.at(0, 0) = Rat(3);
  g.blocks[Rat(1)] = m11;

  GradedVector v;
  v.add_term(Rat(0), 0, 1, Rat(1));
  GradedVector img = g.compose(f).apply(v);
  REQUIRE(img.row_if(Rat(1)) != nullptr);
  CHECK((*img.row_if(Rat(1)))[0] == Rat(6));
  CHECK(g.compose(f).shift == Rat(1));
}

TEST_CASE("flatten_on places operator blocks in layout order") {
  SpaceLayout layout({{Rat(0), 1}, {Rat(1), 1}});
  DegreeMap f{Rat(0), {}};
  Matrix a(1, 1), b(1, 1);
  a.at(0, 0) = Rat(2);
  b.at(0, 0) = Rat(7);
  f.blocks[Rat(0)] = a;
  f.blocks[Rat(1)] = b;
  CHECK(f.flatten_on(layout) == Vec{Rat(2), Rat(7)});
}
