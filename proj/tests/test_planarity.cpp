// test_planarity.cpp — Kuratowski witnesses, disjoint path counts, and the
// flat-embeddability decision for graphs and 2-complexes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "braidcx/complex.hpp"
#include "braidcx/decomp.hpp"
#include "braidcx/planarity.hpp"

using namespace braidcx::planarity;
using braidcx::core::Complex;
using braidcx::core::Simplex;
using braidcx::core::VertexId;

namespace {

Complex cx(const std::string& text) { return Complex::parse(text); }

Complex complete(const std::vector<std::string>& labels) {
  Complex g;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      g.add_simplex_labels({labels[i], labels[j]});
  return g;
}

Complex k5() { return complete({"a", "b", "c", "d", "e"}); }

Complex k33() {
  Complex g;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      g.add_simplex_labels({"x" + std::to_string(i), "y" + std::to_string(j)});
  return g;
}

// k-leg star with center c and tips t1..tk.
Complex star(int k) {
  std::string s;
  for (int i = 1; i <= k; ++i) s += "c t" + std::to_string(i) + "\n";
  return cx(s);
}

// Two hubs joined by k subdivided strands.
Complex theta(int k) {
  std::string s;
  for (int i = 1; i <= k; ++i) {
    s += "u m" + std::to_string(i) + "\n";
    s += "m" + std::to_string(i) + " w\n";
  }
  return cx(s);
}

Complex wheel(int k) {
  Complex g;
  for (int i = 1; i <= k; ++i) {
    g.add_simplex_labels({"h", "r" + std::to_string(i)});
    g.add_simplex_labels(
        {"r" + std::to_string(i), "r" + std::to_string(i % k + 1)});
  }
  return g;
}

Complex petersen() {
  Complex g;
  for (int i = 0; i < 5; ++i) {
    auto p = [](int j) { return "p" + std::to_string(j % 5); };
    auto q = [](int j) { return "q" + std::to_string(j % 5); };
    g.add_simplex_labels({p(i), p(i + 1)});
    g.add_simplex_labels({q(i), q(i + 2)});
    g.add_simplex_labels({p(i), q(i)});
  }
  return g;
}

Complex cube_q3() {
  Complex g;
  for (int i = 0; i < 8; ++i)
    for (int b = 0; b < 3; ++b) {
      int j = i ^ (1 << b);
      if (i < j)
        g.add_simplex_labels(
            {"c" + std::to_string(i), "c" + std::to_string(j)});
    }
  return g;
}

const char* kFig8 = "w a\na b\nb w\nw c\nc d\nd w\n";

// Cone over a square: a disk with boundary a1-a2-a3-a4.
const char* kDisk = "e a1 a2\ne a2 a3\ne a3 a4\ne a4 a1\n";
// The disk plus a whisker at its interior cone point.
const char* kS0 = "e a1 a2\ne a2 a3\ne a3 a4\ne a4 a1\ne w\n";

Complex octahedron() {
  return cx(
      "n e1 e2\nn e2 e3\nn e3 e4\nn e4 e1\n"
      "s e1 e2\ns e2 e3\ns e3 e4\ns e4 e1\n");
}

Complex mobius() {
  return cx("v1 v2 v3\nv2 v3 v4\nv3 v4 v5\nv4 v5 v1\nv5 v1 v2\n");
}

Complex torus7() {
  std::string s;
  for (int i = 0; i < 7; ++i) {
    auto v = [](int j) { return "v" + std::to_string(j % 7); };
    s += v(i) + " " + v(i + 1) + " " + v(i + 3) + "\n";
    s += v(i) + " " + v(i + 2) + " " + v(i + 3) + "\n";
  }
  return cx(s);
}

// Triangulated annulus: outer square a0..a3, inner square b0..b3.
Complex annulus() {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    auto a = [](int j) { return "a" + std::to_string(j % 4); };
    auto b = [](int j) { return "b" + std::to_string(j % 4); };
    s += a(i) + " " + a(i + 1) + " " + b(i) + "\n";
    s += a(i + 1) + " " + b(i) + " " + b(i + 1) + "\n";
  }
  return cx(s);
}

// Every simplex of w, read through labels, is a simplex of x.
bool contains_by_labels(const Complex& x, const Complex& w) {
  for (const Simplex& s : w.simplices()) {
    Simplex t;
    for (VertexId v : s) {
      if (!x.has_label(w.label(v))) return false;
      t.push_back(x.id_of(w.label(v)));
    }
    std::sort(t.begin(), t.end());
    if (!x.contains(t)) return false;
  }
  return true;
}

std::map<long, int> degree_census(const Complex& g) {
  std::map<long, int> c;
  for (VertexId v : g.vertices()) c[g.degree(v)]++;
  return c;
}

// Minimum over non-adjacent vertex pairs of the disjoint-path count, with a
// large sentinel when every pair is adjacent.
long min_connectivity(const Complex& g) {
  long best = 1000;
  auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.contains(Simplex{vs[i], vs[j]})) continue;
      best = std::min(best, max_disjoint_paths(g, vs[i], vs[j], 8));
    }
  return best;
}

}  // namespace

TEST_CASE("kuratowski finds the classics") {
  auto w5 = find_kuratowski(k5());
  REQUIRE(w5.has_value());
  CHECK(w5->kind == "K5-subdivision");
  CHECK(w5->subgraph == k5());

  auto w33 = find_kuratowski(k33());
  REQUIRE(w33.has_value());
  CHECK(w33->kind == "K33-subdivision");
  CHECK(w33->subgraph == k33());

  auto wp = find_kuratowski(petersen());
  REQUIRE(wp.has_value());
  CHECK(wp->kind == "K33-subdivision");  // max degree 3 rules K5 out
  CHECK(contains_by_labels(petersen(), wp->subgraph));
  auto census = degree_census(wp->subgraph);
  CHECK(census[3] == 6);
  CHECK(wp->subgraph.euler() == -3);
}

TEST_CASE("kuratowski on subdivisions and near misses") {
  Complex sd5 = k5().subdivide_all_edges();
  auto w5 = find_kuratowski(sd5);
  REQUIRE(w5.has_value());
  CHECK(w5->kind == "K5-subdivision");
  CHECK(contains_by_labels(sd5, w5->subgraph));
  auto c5 = degree_census(w5->subgraph);
  CHECK(c5[4] == 5);
  CHECK(c5[2] == 10);
  CHECK(w5->subgraph.euler() == -5);
  CHECK(w5->subgraph.connected());

  Complex sd33 = k33().subdivide_all_edges();
  auto w33 = find_kuratowski(sd33);
  REQUIRE(w33.has_value());
  CHECK(w33->kind == "K33-subdivision");
  CHECK(contains_by_labels(sd33, w33->subgraph));
  auto c33 = degree_census(w33->subgraph);
  CHECK(c33[3] == 6);
  CHECK(w33->subgraph.euler() == -3);

  // One subdivided edge keeps the obstruction.
  Complex g5 = k5();
  g5 = g5.subdivide_edge(Simplex{g5.id_of("a"), g5.id_of("b")});
  auto w5b = find_kuratowski(g5);
  REQUIRE(w5b.has_value());
  CHECK(w5b->kind == "K5-subdivision");
  CHECK(contains_by_labels(g5, w5b->subgraph));

  // Dropping one edge from either classic leaves a planar graph.
  Complex k5minus;
  std::vector<std::string> vs5{"a", "b", "c", "d", "e"};
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (!(vs5[i] == "d" && vs5[j] == "e"))
        k5minus.add_simplex_labels({vs5[i], vs5[j]});
  CHECK(graph_planar(k5minus));

  Complex k33minus;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (!(i == 1 && j == 1))
        k33minus.add_simplex_labels(
            {"x" + std::to_string(i), "y" + std::to_string(j)});
  CHECK(graph_planar(k33minus));
}

TEST_CASE("kuratowski ignores planar graphs") {
  CHECK_FALSE(find_kuratowski(complete({"a", "b", "c", "d"})).has_value());
  CHECK_FALSE(find_kuratowski(star(5)).has_value());
  CHECK_FALSE(find_kuratowski(theta(4)).has_value());
  CHECK_FALSE(find_kuratowski(cx(kFig8)).has_value());
  CHECK_FALSE(find_kuratowski(wheel(6)).has_value());
  CHECK_FALSE(find_kuratowski(cube_q3()).has_value());
  CHECK(graph_planar(wheel(8)));
  // Larger planar skeletons must be decided without an exhaustive sweep.
  CHECK(graph_planar(annulus().barycentric_subdivide()));
  CHECK(graph_planar(cx(kDisk).barycentric_subdivide().barycentric_subdivide()));

  Complex k6 = complete({"a", "b", "c", "d", "e", "f"});
  CHECK_FALSE(graph_planar(k6));
  auto w6 = find_kuratowski(k6);
  REQUIRE(w6.has_value());
  CHECK(contains_by_labels(k6, w6->subgraph));
}

TEST_CASE("max disjoint paths counts") {
  Complex path = cx("a b\nb c\n");
  CHECK(max_disjoint_paths(path, path.id_of("a"), path.id_of("c"), 8) == 1);

  Complex c6 = cx("c1 c2\nc2 c3\nc3 c4\nc4 c5\nc5 c6\nc6 c1\n");
  CHECK(max_disjoint_paths(c6, c6.id_of("c1"), c6.id_of("c4"), 8) == 2);
  CHECK(max_disjoint_paths(c6, c6.id_of("c1"), c6.id_of("c2"), 8) == 2);

  Complex g4 = complete({"a", "b", "c", "d"});
  CHECK(max_disjoint_paths(g4, g4.id_of("a"), g4.id_of("c"), 8) == 3);

  Complex g5 = k5();
  CHECK(max_disjoint_paths(g5, g5.id_of("a"), g5.id_of("e"), 8) == 4);
  CHECK(max_disjoint_paths(g5, g5.id_of("a"), g5.id_of("e"), 2) == 2);

  Complex t4 = theta(4);
  CHECK(max_disjoint_paths(t4, t4.id_of("u"), t4.id_of("w"), 8) == 4);

  Complex f8 = cx(kFig8);
  CHECK(max_disjoint_paths(f8, f8.id_of("a"), f8.id_of("c"), 8) == 1);

  Complex s3 = star(3);
  CHECK(max_disjoint_paths(s3, s3.id_of("t1"), s3.id_of("t2"), 8) == 1);

  CHECK_THROWS_AS(max_disjoint_paths(s3, s3.id_of("c"), s3.id_of("c"), 8),
                  guard_failed);
  CHECK_THROWS_AS(max_disjoint_paths(s3, s3.id_of("c"), 999, 8), guard_failed);
}

TEST_CASE("disjoint paths match the cut search") {
  // On graphs of minimum degree three every cut is nontrivial, so the
  // path counts and the cut search must tell the same story.
  Complex shared_vertex;
  for (auto l : {"a", "b", "c"}) {
    shared_vertex.add_simplex_labels({"s", l});
  }
  for (auto l : {"d", "e", "f"}) shared_vertex.add_simplex_labels({"s", l});
  for (auto [p, q] : std::vector<std::pair<std::string, std::string>>{
           {"a", "b"}, {"a", "c"}, {"b", "c"}, {"d", "e"}, {"d", "f"},
           {"e", "f"}})
    shared_vertex.add_simplex_labels({p, q});

  Complex shared_edge = complete({"a", "b", "c", "d"});
  for (auto l : {"e", "f"}) {
    shared_edge.add_simplex_labels({"a", l});
    shared_edge.add_simplex_labels({"b", l});
  }
  shared_edge.add_simplex_labels({"e", "f"});

  std::vector<std::pair<std::string, Complex>> samples{
      {"k4", complete({"a", "b", "c", "d"})},
      {"k5", k5()},
      {"k33", k33()},
      {"cube", cube_q3()},
      {"two k4 at a vertex", shared_vertex},
      {"two k4 at an edge", shared_edge}};

  std::map<std::string, long> expected{
      {"k4", 1000}, {"k5", 1000}, {"k33", 3}, {"cube", 3},
      {"two k4 at a vertex", 1}, {"two k4 at an edge", 2}};

  for (auto& [name, g] : samples) {
    CAPTURE(name);
    long mc = min_connectivity(g);
    CHECK(mc == expected[name]);
    bool has_cut_vertex = false;
    for (const auto& c : braidcx::decomp::find_cuts(g, 1))
      if (!c.trivial) has_cut_vertex = true;
    CHECK(has_cut_vertex == (mc == 1));
    CHECK(braidcx::decomp::is_vertex_k_connected(g, 2) == (mc >= 2));
    CHECK(braidcx::decomp::is_vertex_k_connected(g, 3) == (mc >= 3));
  }
}

TEST_CASE("flat complexes are planar") {
  for (const Complex& x : {
           cx(kDisk),                        // disk
           annulus(),                        // annulus
           cx(std::string(kDisk) + "h a1\nh a3\n"),  // disk plus outside arc
           cx(std::string(kDisk) + "a1 w\n"),        // boundary whisker
           cx(std::string("a0 a2\n") + [] {          // annulus plus outer chord
             std::string s;
             for (int i = 0; i < 4; ++i) {
               auto a = [](int j) { return "a" + std::to_string(j % 4); };
               auto b = [](int j) { return "b" + std::to_string(j % 4); };
               s += a(i) + " " + a(i + 1) + " " + b(i) + "\n";
               s += a(i + 1) + " " + b(i) + " " + b(i + 1) + "\n";
             }
             return s;
           }()),
       }) {
    PlanarityResult r = planar(x);
    CHECK(r.planar);
    CHECK_FALSE(r.has_witness);
  }

  // Whiskers on both boundary circles of the annulus.
  Complex aw = annulus();
  aw.add_simplex_labels({"a0", "w1"});
  aw.add_simplex_labels({"b0", "w2"});
  CHECK(planar(aw).planar);

  // Two disks sharing one boundary vertex.
  Complex dd = cx(std::string(kDisk) +
                  "f a1 b2\nf b2 b3\nf b3 b4\nf b4 a1\n");
  CHECK(planar(dd).planar);

  // Graphs go through the same entry point.
  CHECK(planar(cx(kFig8)).planar);
  CHECK(planar(theta(4)).planar);
  CHECK(planar(star(6)).planar);
}

TEST_CASE("obstructed complexes are rejected") {
  PlanarityResult m = planar(mobius());
  CHECK_FALSE(m.planar);
  CHECK(m.has_witness);  // the 1-skeleton is K5
  CHECK(m.witness_kind == "K5-subdivision");
  CHECK(contains_by_labels(mobius(), m.witness));

  PlanarityResult t = planar(torus7());
  CHECK_FALSE(t.planar);
  CHECK(t.has_witness);  // the 1-skeleton is K7
  CHECK(contains_by_labels(torus7(), t.witness));

  PlanarityResult o = planar(octahedron());
  CHECK_FALSE(o.planar);
  CHECK_FALSE(o.has_witness);  // the skeleton alone is planar
  CHECK(o.evidence.find("closed") != std::string::npos);

  PlanarityResult s = planar(cx(kS0));
  CHECK_FALSE(s.planar);
  CHECK_FALSE(s.has_witness);
  CHECK(s.evidence.find("link of vertex") != std::string::npos);

  PlanarityResult b = planar(cx("u v p1\nu v p2\nu v p3\n"));
  CHECK_FALSE(b.planar);
  CHECK(b.evidence.find("lies in 3 faces") != std::string::npos);

  // A strand joining the two disk centers pinches both links.
  PlanarityResult w = planar(cx(
      "e1 a1 a2\ne1 a2 a3\ne1 a3 a4\ne1 a4 a1\n"
      "e2 b1 b2\ne2 b2 b3\ne2 b3 b4\ne2 b4 b1\n"
      "e1 s\ns e2\n"));
  CHECK_FALSE(w.planar);
  CHECK(w.evidence.find("link of vertex") != std::string::npos);

  // Two disks sharing their interior cone point.
  PlanarityResult dd = planar(cx(
      "e a1 a2\ne a2 a3\ne a3 a4\ne a4 a1\n"
      "e b1 b2\ne b2 b3\ne b3 b4\ne b4 b1\n"));
  CHECK_FALSE(dd.planar);
  CHECK(dd.evidence.find("link of vertex e") != std::string::npos);

  // A bridge from the outer to the inner boundary of the annulus.
  Complex ab = annulus();
  ab.add_simplex_labels({"a0", "b2"});
  PlanarityResult r = planar(ab);
  CHECK_FALSE(r.planar);
  CHECK(r.evidence.find("two boundary circles") != std::string::npos);
  if (r.has_witness) CHECK(contains_by_labels(ab, r.witness));

  // Nonplanar graphs through the same entry point.
  PlanarityResult g = planar(k5());
  CHECK_FALSE(g.planar);
  CHECK(g.has_witness);
  CHECK(g.witness_kind == "K5-subdivision");
  CHECK(planar(petersen()).witness_kind == "K33-subdivision");
}

TEST_CASE("planarity guards") {
  CHECK_THROWS_AS(planar(Complex{}), guard_failed);
  CHECK_THROWS_AS(planar(cx("a b\nc d\n")), guard_failed);
  CHECK_THROWS_AS(planar(cx("a b c d\n")), guard_failed);

  // A band whose two ends meet at a single vertex pinches the sheet.
  Complex pinched = cx("v a c\na c d\na b d\nb d v\n");
  CHECK_THROWS_AS(planar(pinched), guard_failed);
}

TEST_CASE("planarity survives barycentric subdivision") {
  CHECK(planar(cx(kDisk).barycentric_subdivide()).planar);
  CHECK(planar(annulus().barycentric_subdivide()).planar);
  CHECK_FALSE(planar(mobius().barycentric_subdivide()).planar);
  CHECK_FALSE(planar(cx(kS0).barycentric_subdivide()).planar);
}
