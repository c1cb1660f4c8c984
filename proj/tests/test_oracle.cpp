// test_oracle.cpp — discrete configuration spaces: census, H1, pi1.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "braidcx/complex.hpp"
#include "braidcx/oracle.hpp"
#include "braidcx/presentation.hpp"

using namespace braidcx::oracle;
using braidcx::core::Complex;
using braidcx::linalg::AbelianInvariants;
using braidcx::linalg::Int;

namespace {

Complex cx(const std::string& text) { return Complex::parse(text); }

// Star with k legs around a central vertex.
std::string star(long k) {
  std::string s;
  for (long i = 1; i <= k; ++i) s += "c l" + std::to_string(i) + "\n";
  return s;
}

// Two hubs joined by k length-2 paths (simplicial model of k parallel arcs).
std::string theta(long k) {
  std::string s;
  for (long i = 1; i <= k; ++i) {
    s += "a m" + std::to_string(i) + "\n";
    s += "b m" + std::to_string(i) + "\n";
  }
  return s;
}

std::string complete_graph(long k) {
  std::string s;
  for (long i = 1; i <= k; ++i)
    for (long j = i + 1; j <= k; ++j)
      s += "v" + std::to_string(i) + " v" + std::to_string(j) + "\n";
  return s;
}

const char* kPath4 = "a b\nb c\nc d\n";
const char* kTriangle = "a b\nb c\na c\n";
const char* kFigureEight = "a b\nb c\na c\na d\nd e\na e\n";
const char* kK33 =
    "u1 w1\nu1 w2\nu1 w3\n"
    "u2 w1\nu2 w2\nu2 w3\n"
    "u3 w1\nu3 w2\nu3 w3\n";

AbelianInvariants free_abelian(long r) {
  AbelianInvariants a;
  a.free_rank = r;
  return a;
}

}  // namespace

TEST_CASE("graph model from a complex") {
  GraphModel g = GraphModel::from_complex(cx(kPath4));
  CHECK(g.nv() == 4);
  CHECK(g.ne() == 3);
  // Vertices are numbered in label order.
  CHECK(g.names == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(g.edges == std::vector<std::pair<long, long>>{{0, 1}, {1, 2}, {2, 3}});

  CHECK_THROWS(GraphModel::from_complex(cx("a b c\n")));      // dim 2
  CHECK_THROWS(GraphModel::from_complex(cx("a b\nc d\n")));   // disconnected
}

TEST_CASE("subdivision for n strands") {
  GraphModel edge = GraphModel::from_complex(cx("a b\n"));
  GraphModel s2 = subdivide_for(edge, 2);
  CHECK(s2.nv() == 4);  // a, two midpoints, b
  CHECK(s2.ne() == 3);

  GraphModel k5 = GraphModel::from_complex(cx(complete_graph(5)));
  GraphModel k5s = subdivide_for(k5, 2);
  CHECK(k5s.nv() == 25);
  CHECK(k5s.ne() == 30);

  GraphModel s1 = subdivide_for(edge, 1);
  CHECK(s1.nv() == 3);
  CHECK(s1.ne() == 2);
}

TEST_CASE("two points on a path: a single square") {
  GraphModel g = GraphModel::from_complex(cx(kPath4));
  CubeComplex c = build_udc(g, 2);
  CHECK(c.count(0) == 6);  // all vertex pairs
  CHECK(c.count(1) == 6);  // vertex x disjoint edge
  CHECK(c.count(2) == 1);  // the two disjoint edges
  CHECK(c.euler() == 1);
  CHECK(c.components() == 1);
  CHECK(cube_h1(c).is_trivial());
}

TEST_CASE("two points on a 3-leg star: a hexagon") {
  GraphModel g = GraphModel::from_complex(cx(star(3)));
  CubeComplex c = build_udc(g, 2);
  CHECK(c.count(0) == 6);
  CHECK(c.count(1) == 6);
  CHECK(c.count(2) == 0);  // every edge pair shares the center
  CHECK(c.euler() == 0);
  CHECK(c.components() == 1);
  CHECK(cube_h1(c) == free_abelian(1));
}

TEST_CASE("one point recovers the graph") {
  Complex theta3 = cx(theta(3));
  CHECK(braid_h1_oracle(theta3, 1) == theta3.h1_space());
  CHECK(braid_h1_oracle(theta3, 1) == free_abelian(2));
  GraphModel g = subdivide_for(GraphModel::from_complex(theta3), 1);
  CubeComplex c = build_udc(g, 1);
  CHECK(c.count(0) == g.nv());
  CHECK(c.count(1) == g.ne());
}

TEST_CASE("two strands on star graphs") {
  CHECK(braid_h1_oracle(cx(star(3)), 2) == free_abelian(1));
  CHECK(braid_h1_oracle(cx(star(4)), 2) == free_abelian(3));
  CHECK(braid_h1_oracle(cx(star(5)), 2) == free_abelian(6));
}

TEST_CASE("two strands on circles and parallel-arc graphs") {
  CHECK(braid_h1_oracle(cx(kTriangle), 2) == free_abelian(1));
  CHECK(braid_h1_oracle(cx(theta(3)), 2) == free_abelian(3));
  CHECK(braid_h1_oracle(cx(theta(4)), 2) == free_abelian(6));
}

TEST_CASE("three strands") {
  CHECK(braid_h1_oracle(cx(star(3)), 3) == free_abelian(3));
  CHECK(braid_h1_oracle(cx(kFigureEight), 3) == free_abelian(6));
}

TEST_CASE("two strands on planar and nonplanar complete-type graphs") {
  CHECK(braid_h1_oracle(cx(kFigureEight), 2) == free_abelian(4));
  CHECK(braid_h1_oracle(cx(complete_graph(4)), 2) == free_abelian(4));

  AbelianInvariants k5 = braid_h1_oracle(cx(complete_graph(5)), 2);
  CHECK(k5.free_rank == 6);
  CHECK(k5.torsion == std::vector<Int>{2});

  AbelianInvariants k33 = braid_h1_oracle(cx(kK33), 2);
  CHECK(k33.free_rank == 4);
  CHECK(k33.torsion == std::vector<Int>{2});
}

TEST_CASE("extra subdivision does not change the answer") {
  for (const std::string& text :
       {star(3), theta(3), std::string(complete_graph(4))}) {
    Complex x = cx(text);
    Complex finer = x.subdivide_all_edges();
    CHECK(braid_h1_oracle(x, 2) == braid_h1_oracle(finer, 2));
  }
}

TEST_CASE("spanning-tree presentation abelianizes to cellular H1") {
  for (const std::string& text :
       {std::string(kPath4), star(3), theta(3), std::string(kFigureEight)}) {
    GraphModel g = subdivide_for(GraphModel::from_complex(cx(text)), 2);
    CubeComplex c = build_udc(g, 2);
    auto p = cube_pi1(c);
    p.validate();
    CHECK(p.abelian_invariants() == cube_h1(c));
  }
}

TEST_CASE("hexagon pi1 is one free generator") {
  GraphModel g = GraphModel::from_complex(cx(star(3)));
  CubeComplex c = build_udc(g, 2);
  auto p = cube_pi1(c);
  CHECK(p.generators.size() == 1);
  CHECK(p.relators.empty());
}

TEST_CASE("cell budget is enforced") {
  GraphModel g = subdivide_for(GraphModel::from_complex(cx(complete_graph(5))), 2);
  CHECK_THROWS_AS(build_udc(g, 2, 100), std::runtime_error);
}
