// test_decomp.cpp — closures, sums, cuts, decomposition trees, elementary
// classification, and surface recognition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidcx/complex.hpp"
#include "braidcx/decomp.hpp"

using namespace braidcx::decomp;
using braidcx::core::Complex;
using braidcx::core::PointClass;
using braidcx::core::VertexId;

namespace {

Complex cx(const std::string& text) { return Complex::parse(text); }

// k-leg star with center c and tips t1..tk.
Complex star(int k) {
  std::string s;
  for (int i = 1; i <= k; ++i) s += "c t" + std::to_string(i) + "\n";
  return cx(s);
}

// Closure of the star along all tips: two hubs joined by k strands.
Complex theta(int k) {
  Complex t = star(k);
  return closure(t, t.boundary_vertices());
}

const char* kFig8 = "w a\na b\nb w\nw c\nc d\nd w\n";
const char* kHTree = "v w\nv p1\nv p2\nw p3\nw p4\n";
const char* kK4 = "a b\na c\na d\nb c\nb d\nc d\n";

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

Complex projective_plane6() {
  return cx(
      "v1 v2 v3\nv2 v3 v4\nv3 v4 v5\nv4 v5 v1\nv5 v1 v2\n"
      "c v1 v3\nc v3 v5\nc v5 v2\nc v2 v4\nc v4 v1\n");
}

Complex torus7() {
  std::string s;
  for (int i = 0; i < 7; ++i) {
    auto v = [&](int j) { return "v" + std::to_string(j % 7); };
    s += v(i) + " " + v(i + 1) + " " + v(i + 3) + "\n";
    s += v(i) + " " + v(i + 2) + " " + v(i + 3) + "\n";
  }
  return cx(s);
}

Complex annulus() {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    auto a = [&](int j) { return "a" + std::to_string(j % 4); };
    auto b = [&](int j) { return "b" + std::to_string(j % 4); };
    s += a(i) + " " + a(i + 1) + " " + b(i) + "\n";
    s += a(i + 1) + " " + b(i) + " " + b(i + 1) + "\n";
  }
  return cx(s);
}

// Two disks joined by a strand between their interior cone points.
Complex wedge_two_disks() {
  return cx(
      "e1 a1 a2\ne1 a2 a3\ne1 a3 a4\ne1 a4 a1\n"
      "e2 b1 b2\ne2 b2 b3\ne2 b3 b4\ne2 b4 b1\n"
      "e1 s\ns e2\n");
}

std::map<PointClass, long> census(const Complex& x) {
  std::map<PointClass, long> out;
  for (VertexId v : x.vertices()) out[x.classify_vertex(v)]++;
  return out;
}

// Rebuild x with labels substituted through ren (identity when absent).
Complex renamed(const Complex& x, const std::map<std::string, std::string>& ren) {
  Complex out;
  for (const auto& s : x.maximal_simplices()) {
    std::vector<std::string> labs;
    for (VertexId v : s) {
      std::string l = x.label(v);
      auto it = ren.find(l);
      labs.push_back(it == ren.end() ? l : it->second);
    }
    out.add_simplex_labels(labs);
  }
  return out;
}

// x with every star edge of the vertex labelled v subdivided twice — the
// shape a connected sum with a theta leaves behind at the marked vertex.
Complex star_subdivided_twice(const Complex& x, const std::string& v) {
  Complex out = x;
  std::vector<std::string> nbrs;
  for (VertexId u : x.link({x.id_of(v)}).vertices()) nbrs.push_back(x.label(u));
  for (const std::string& u : nbrs) {
    std::string mid;
    out = out.subdivide_edge(
        {std::min(out.id_of(v), out.id_of(u)), std::max(out.id_of(v), out.id_of(u))},
        &mid);
    out = out.subdivide_edge(
        {std::min(out.id_of(v), out.id_of(mid)),
         std::max(out.id_of(v), out.id_of(mid))});
  }
  return out;
}

void collect_leaves(const DecompositionNode& nd,
                    std::vector<const DecompositionNode*>& out) {
  if (nd.is_leaf()) out.push_back(&nd);
  for (const auto& c : nd.children) collect_leaves(c, out);
}

long branch_measure(const Complex& x) {
  if (x.is_graph()) {
    long n = 0;
    for (VertexId v : x.vertices())
      if (x.degree(v) >= 3) n++;
    return n;
  }
  return static_cast<long>(x.branch_vertices().size());
}

}  // namespace

TEST_CASE("closure basics") {
  // Closing the star along all tips gives two hubs joined by k strands.
  Complex t3 = star(3);
  Complex th = closure(t3, t3.boundary_vertices());
  CHECK(th.vertex_count() == 5);
  CHECK(th.count_cells(1) == 6);
  CHECK(th.euler() == -1);
  CHECK(th.h1_space().free_rank == 2);
  long val3 = 0;
  for (VertexId v : th.vertices())
    if (th.degree(v) == 3) val3++;
  CHECK(val3 == 2);

  // An arc closed along both endpoints is a circle.
  Complex arc = cx("a b\n");
  Complex circ = closure(arc, arc.boundary_vertices());
  CHECK(circ.is_circle());
  CHECK(circ.vertex_count() == 3);

  // Closing a path at a single endpoint just extends it.
  Complex path = cx("a b\n");
  Complex ext = closure(path, {path.id_of("b")});
  CHECK(ext.is_interval());

  // Only boundary vertices may be closed along.
  Complex disk = cx(kDisk);
  CHECK_THROWS_AS(closure(disk, {disk.id_of("e")}), guard_failed);
  Complex edge = cx("a b\n");
  CHECK_THROWS_AS(closure(edge, {edge.id_of("a"), edge.id_of("a")}),
                  guard_failed);
}

TEST_CASE("unwrap and round trip") {
  Complex t3 = star(3);
  Complex th = theta(3);  // vertices c, t1..t3, hub

  // Unwrapping the fresh hub recovers the original star exactly, and
  // re-closing along the marked vertices recovers the theta exactly.
  auto [base, marked] = unwrap(th, th.id_of("hub"));
  CHECK(base == t3);
  std::vector<std::string> labs;
  for (VertexId v : marked) labs.push_back(base.label(v));
  CHECK(labs == std::vector<std::string>{"t1", "t2", "t3"});
  CHECK(closure(base, marked) == th);

  // Unwrapping the other hub gives the same complex up to one label.
  auto [base2, marked2] = unwrap(th, th.id_of("c"));
  Complex rebuilt = closure(base2, marked2);
  CHECK(renamed(rebuilt, {{"hub'", "c"}}) == th);

  // A circle unwraps to an arc at any vertex.
  Complex circ = cx("a b\nb c\nc a\n");
  auto [arc, ends] = unwrap(circ, circ.id_of("a"));
  CHECK(arc.is_interval());
  CHECK(ends.size() == 2);

  // The figure-eight's 4-valent vertex is a cut, not an unwrap point.
  Complex f8 = cx(kFig8);
  CHECK_THROWS_AS(unwrap(f8, f8.id_of("w")), guard_failed);

  // A disk's interior vertex has a circle link, not a leg star.
  Complex disk = cx(kDisk);
  CHECK_THROWS_AS(unwrap(disk, disk.id_of("e")), guard_failed);
}

TEST_CASE("ordered_star") {
  Complex f8 = cx(kFig8);
  OrderedVertex ov = ordered_star(f8, f8.id_of("a"));
  CHECK(ov.ordering.size() == 2);
  CHECK(f8.label(ov.ordering[0]) == "b");  // ascending label order
  CHECK(f8.label(ov.ordering[1]) == "w");

  Complex disk = cx(kDisk);
  CHECK_THROWS_AS(ordered_star(disk, disk.id_of("e")), guard_failed);
}

TEST_CASE("connected sums") {
  // Theta is idempotent: the sum of two copies along hubs is a theta with
  // longer strands.
  Complex th = theta(3);
  Complex s = connected_sum(th, ordered_star(th, th.id_of("hub")), th,
                            ordered_star(th, th.id_of("hub")));
  CHECK(s.connected());
  CHECK(s.euler() == -1);
  CHECK(s.h1_space().free_rank == 2);
  CHECK(s.h1_space().torsion.empty());
  long val3 = 0, val2 = 0;
  for (VertexId v : s.vertices()) {
    if (s.degree(v) == 3) val3++;
    if (s.degree(v) == 2) val2++;
  }
  CHECK(val3 == 2);
  CHECK(val3 + val2 == static_cast<long>(s.vertex_count()));

  // Two arcs joined at endpoints form one arc (boundary wedge, k = 1).
  Complex e1 = cx("a b\n"), e2 = cx("c d\n");
  Complex wedge = connected_sum(e1, ordered_star(e1, e1.id_of("b")), e2,
                                ordered_star(e2, e2.id_of("c")));
  CHECK(wedge.is_interval());

  // Mismatched valencies are refused.
  Complex th2 = theta(2);
  CHECK_THROWS_AS(connected_sum(th, ordered_star(th, th.id_of("hub")), th2,
                                ordered_star(th2, th2.id_of("hub"))),
                  guard_failed);

  // A tree's center has a disconnected deletion, so it is not summable.
  Complex t3 = star(3);
  CHECK_THROWS_AS(connected_sum(t3, ordered_star(t3, t3.id_of("c")), t3,
                                ordered_star(t3, t3.id_of("c"))),
                  guard_failed);
}

TEST_CASE("connected-sum identity law") {
  // Summing with a theta at a strand vertex leaves the complex unchanged
  // up to subdividing that vertex's star edges twice.
  Complex f8 = cx(kFig8);
  Complex th2 = theta(2);
  OrderedVertex va = ordered_star(f8, f8.id_of("a"));
  Complex s = connected_sum(f8, va, th2, ordered_star(th2, th2.id_of("hub")));
  Complex model = star_subdivided_twice(f8, "a");
  CHECK(s.euler() == f8.euler());
  CHECK(s.h1_space() == f8.h1_space());
  CHECK(census(s) == census(model));

  // Any ordering on the theta side works.
  OrderedVertex rev;
  rev.vertex = th2.id_of("hub");
  rev.ordering = {th2.id_of("t2"), th2.id_of("t1")};
  Complex s2 = connected_sum(f8, va, th2, rev);
  CHECK(s2.euler() == f8.euler());
  CHECK(s2.h1_space() == f8.h1_space());
  CHECK(census(s2) == census(model));

  // Dimension-2 case: the disk-with-whisker summed with a 1-theta at its
  // whisker tip keeps its branched shape.
  Complex s0 = cx(kS0);
  Complex t1 = cx("z t\n");
  Complex th1 = closure(t1, {t1.id_of("t")});  // path z-t-hub
  Complex s3 = connected_sum(s0, ordered_star(s0, s0.id_of("w")), th1,
                             ordered_star(th1, th1.id_of("hub")));
  CHECK(s3.euler() == s0.euler());
  CHECK(s3.h1_space() == s0.h1_space());
  CHECK(census(s3) == census(star_subdivided_twice(s0, "w")));
}

TEST_CASE("find_cuts") {
  // Figure-eight: the 4-valent vertex is the unique nontrivial 1-cut.
  Complex f8 = cx(kFig8);
  auto cuts = find_cuts(f8, 1);
  REQUIRE(cuts.size() == 1);
  CHECK(f8.label(cuts[0].vertices[0]) == "w");
  CHECK_FALSE(cuts[0].trivial);
  CHECK(find_cuts(f8, 2).empty());  // only one valency-3+ vertex

  // Theta: no 1-cut, one nontrivial 2-cut at the hub pair.
  Complex th = theta(3);
  CHECK(find_cuts(th, 1).empty());
  auto cuts2 = find_cuts(th, 2);
  REQUIRE(cuts2.size() == 1);
  CHECK(th.label(cuts2[0].vertices[0]) == "c");
  CHECK(th.label(cuts2[0].vertices[1]) == "hub");
  CHECK_FALSE(cuts2[0].trivial);

  // A star's center is a nontrivial 1-cut.
  Complex t4 = star(4);
  auto cuts3 = find_cuts(t4, 1);
  REQUIRE(cuts3.size() == 1);
  CHECK(t4.label(cuts3[0].vertices[0]) == "c");
  CHECK_FALSE(cuts3[0].trivial);

  // A disk closed along two boundary vertices has a trivial 2-cut there.
  Complex disk = cx(kDisk);
  Complex d2 = closure(disk, {disk.id_of("a1"), disk.id_of("a3")});
  CHECK(find_cuts(d2, 1).empty());
  auto cuts4 = find_cuts(d2, 2);
  REQUIRE(cuts4.size() == 1);
  CHECK(cuts4[0].trivial);

  // A whisker at a disk boundary vertex is a trivial 1-cut.
  Complex bw = cx("e a1 a2\ne a2 a3\ne a3 a4\ne a4 a1\na1 w\n");
  auto cuts5 = find_cuts(bw, 1);
  REQUIRE(cuts5.size() == 1);
  CHECK(bw.label(cuts5[0].vertices[0]) == "a1");
  CHECK(cuts5[0].trivial);

  // A whisker at the disk's interior is a NONtrivial 1-cut: the whisker
  // cannot be absorbed, the complex is genuinely branched there.
  Complex s0 = cx(kS0);
  auto cuts6 = find_cuts(s0, 1);
  REQUIRE(cuts6.size() == 1);
  CHECK(s0.label(cuts6[0].vertices[0]) == "e");
  CHECK_FALSE(cuts6[0].trivial);

  CHECK_THROWS_AS(find_cuts(f8, 3), guard_failed);
  // Non-simple input is refused.
  CHECK_THROWS_AS(find_cuts(cx("w a1 a2\nw b1 b2\n"), 1), guard_failed);
}

TEST_CASE("vertex connectivity") {
  Complex t3 = star(3);
  CHECK(is_vertex_k_connected(t3, 1));
  CHECK_FALSE(is_vertex_k_connected(t3, 2));

  Complex th = theta(3);
  CHECK(is_vertex_k_connected(th, 2));
  CHECK_FALSE(is_vertex_k_connected(th, 3));

  Complex k4 = cx(kK4);
  CHECK(is_vertex_k_connected(k4, 3));
  Complex k5 = cx("a b\na c\na d\na e\nb c\nb d\nb e\nc d\nc e\nd e\n");
  CHECK(is_vertex_k_connected(k5, 3));

  Complex s0 = cx(kS0);
  CHECK_FALSE(is_vertex_k_connected(s0, 2));

  // Trivial cuts do not count against connectivity.
  Complex disk = cx(kDisk);
  Complex d2 = closure(disk, {disk.id_of("a1"), disk.id_of("a3")});
  CHECK(is_vertex_k_connected(d2, 3));

  CHECK_THROWS_AS(is_vertex_k_connected(th, 4), guard_failed);
}

TEST_CASE("decompose graphs") {
  // Figure-eight: one-cut at the 4-valent vertex, two circle leaves.
  Complex f8 = cx(kFig8);
  DecompositionTree t = decompose(f8);
  CHECK(t.top.kind == DecompositionNode::Kind::OneCut);
  CHECK(t.top.cut == std::vector<std::string>{"w"});
  CHECK(t.top.k == 4);
  CHECK(t.top.m == 2);
  REQUIRE(t.top.children.size() == 2);
  for (const auto& c : t.top.children) {
    CHECK(c.is_leaf());
    CHECK(c.rule == LeafRule::Circle);
    CHECK(c.piece.is_circle());
  }

  // Theta: two-cut at the hub pair, three circle leaves, no direct edge.
  DecompositionTree tt = decompose(theta(3));
  CHECK(tt.top.kind == DecompositionNode::Kind::TwoCut);
  CHECK(tt.top.m == 3);
  CHECK(tt.top.direct_mids.empty());
  REQUIRE(tt.top.children.size() == 3);
  for (const auto& c : tt.top.children) CHECK(c.rule == LeafRule::Circle);

  // A theta with one unsubdivided strand: the direct edge is subdivided
  // so it can become its own part.
  Complex tc = cx("u w\nu a\na w\nu b\nb w\n");
  DecompositionTree t3 = decompose(tc);
  CHECK(t3.top.kind == DecompositionNode::Kind::TwoCut);
  CHECK(t3.top.m == 3);
  CHECK(t3.top.direct_mids.size() == 1);
  REQUIRE(t3.top.children.size() == 3);
  for (const auto& c : t3.top.children) CHECK(c.rule == LeafRule::Circle);

  // A star is already elementary.
  DecompositionTree ts = decompose(star(5));
  CHECK(ts.top.is_leaf());
  CHECK(ts.top.rule == LeafRule::TreeStar);
  CHECK(ts.top.info.k == 5);
  CHECK(ts.top.piece == star(5));

  // A subdivided star sheds its leg midpoints one contraction at a time.
  Complex sub = cx("c m1\nm1 t1\nc m2\nm2 t2\nc m3\nm3 t3\n");
  DecompositionTree tsub = decompose(sub);
  int closures = 0;
  const DecompositionNode* nd = &tsub.top;
  while (nd->kind == DecompositionNode::Kind::Closure) {
    closures++;
    REQUIRE(nd->children.size() == 1);
    nd = &nd->children[0];
  }
  CHECK(closures == 3);
  CHECK(nd->is_leaf());
  CHECK(nd->rule == LeafRule::TreeStar);
  CHECK(nd->info.k == 3);

  // H-tree: one-cut at the lesser-labelled center, then two edge leaves
  // and one star leaf.
  DecompositionTree th = decompose(cx(kHTree));
  CHECK(th.top.kind == DecompositionNode::Kind::OneCut);
  CHECK(th.top.cut == std::vector<std::string>{"v"});
  CHECK(th.top.k == 3);
  CHECK(th.top.m == 3);
  std::vector<const DecompositionNode*> leaves;
  collect_leaves(th.top, leaves);
  REQUIRE(leaves.size() == 3);
  CHECK(leaves[0]->rule == LeafRule::Trivial);
  CHECK(leaves[1]->rule == LeafRule::Trivial);
  CHECK(leaves[2]->rule == LeafRule::TreeStar);
  CHECK(leaves[2]->info.k == 3);

  // Cycles and complete graphs are leaves outright.
  CHECK(decompose(cx("a b\nb c\nc a\n")).top.rule == LeafRule::Circle);
  CHECK(decompose(cx(kK4)).top.rule == LeafRule::Block);
  Complex k33 = cx("a x\na y\na z\nb x\nb y\nb z\nc x\nc y\nc z\n");
  CHECK(decompose(k33).top.rule == LeafRule::Block);

  // Guards.
  CHECK_THROWS_AS(decompose(cx("a b\nc d\n")), guard_failed);       // disconnected
  CHECK_THROWS_AS(decompose(cx("w a1 a2\nw b1 b2\n")), guard_failed);  // not simple
  CHECK_THROWS_AS(decompose(cx("a b c d\n")), guard_failed);        // dim 3
}

TEST_CASE("decompose dimension-2 pieces") {
  // The disk-with-interior-whisker admits no split at all: its branch
  // vertex has a circle in its link, and tearing there would be unsound.
  DecompositionTree t = decompose(cx(kS0));
  CHECK(t.top.is_leaf());
  CHECK(t.top.rule == LeafRule::BranchedPiece);

  // Two disks joined by a strand split at the strand midpoint (a valency-2
  // cut!) into two whiskered disks.
  DecompositionTree tw = decompose(wedge_two_disks());
  CHECK(tw.top.kind == DecompositionNode::Kind::OneCut);
  CHECK(tw.top.cut == std::vector<std::string>{"s"});
  CHECK(tw.top.k == 2);
  CHECK(tw.top.m == 2);
  REQUIRE(tw.top.children.size() == 2);
  for (const auto& c : tw.top.children) {
    CHECK(c.is_leaf());
    CHECK(c.rule == LeafRule::BranchedPiece);
  }

  // A whisker at a disk's boundary contracts away as a trivial closure.
  Complex bw = cx("e a1 a2\ne a2 a3\ne a3 a4\ne a4 a1\na1 w\n");
  DecompositionTree tb = decompose(bw);
  CHECK(tb.top.kind == DecompositionNode::Kind::Closure);
  REQUIRE(tb.top.children.size() == 1);
  const auto& leaf = tb.top.children[0];
  CHECK(leaf.rule == LeafRule::SurfacePiece);
  CHECK(leaf.info.kind == ElementaryKind::Surface);
  CHECK(leaf.info.orientable);
  CHECK(leaf.info.genus == 0);
  CHECK(leaf.info.boundary_count == 1);

  // A pure surface is a single leaf.
  DecompositionTree to = decompose(octahedron());
  CHECK(to.top.is_leaf());
  CHECK(to.top.rule == LeafRule::SurfacePiece);
  CHECK(to.top.info.genus == 0);
  CHECK(to.top.info.boundary_count == 0);

  // The closed disk (2-closure) stays in one piece: its cut pair has
  // 1-dimensional links, splitting there is not available, and the piece
  // is a vertex-3-connected block.
  Complex disk = cx(kDisk);
  Complex d2 = closure(disk, {disk.id_of("a1"), disk.id_of("a3")});
  DecompositionTree td = decompose(d2);
  CHECK(td.top.is_leaf());
  CHECK(td.top.rule == LeafRule::BranchedPiece);
}

TEST_CASE("recomposition") {
  // Label-exact for pure cut trees.
  for (const char* src : {kFig8, kHTree, kK4}) {
    Complex x = cx(src);
    CHECK(recompose(decompose(x).top) == x);
  }
  Complex th = theta(3);
  CHECK(recompose(decompose(th).top) == th);
  Complex tc = cx("u w\nu a\na w\nu b\nb w\n");  // direct-edge two-cut
  CHECK(recompose(decompose(tc).top) == tc);
  Complex wd = wedge_two_disks();
  CHECK(recompose(decompose(wd).top) == wd);

  // Closure nodes reattach a fresh whisker: homeomorphic, same counts.
  for (Complex x : {cx("c m1\nm1 t1\nc m2\nm2 t2\nc m3\nm3 t3\n"),
                    cx("e a1 a2\ne a2 a3\ne a3 a4\ne a4 a1\na1 w\n")}) {
    Complex r = recompose(decompose(x).top);
    CHECK(r.euler() == x.euler());
    CHECK(r.h1_space() == x.h1_space());
    CHECK(census(r) == census(x));
    CHECK(r.vertex_count() == x.vertex_count());
  }
}

TEST_CASE("splits shrink the pieces") {
  // Each split strictly decreases the first Betti number or the number of
  // branch vertices of every part.
  std::vector<Complex> samples = {cx(kFig8), theta(3), theta(4),
                                  cx("u w\nu a\na w\nu b\nb w\n"), cx(kHTree),
                                  wedge_two_disks()};
  std::function<void(const DecompositionNode&)> walk =
      [&](const DecompositionNode& nd) {
        if (nd.kind == DecompositionNode::Kind::OneCut ||
            nd.kind == DecompositionNode::Kind::TwoCut) {
          Complex parent = recompose(nd);
          long pb = parent.h1_space().free_rank;
          long pbr = branch_measure(parent);
          for (const auto& c : nd.children) {
            Complex child = recompose(c);
            long cb = child.h1_space().free_rank;
            long cbr = branch_measure(child);
            CHECK((cb < pb || cbr < pbr));
          }
        }
        for (const auto& c : nd.children) walk(c);
      };
  for (const Complex& x : samples) walk(decompose(x).top);
}

TEST_CASE("classify_elementary") {
  ElementaryInfo i1 = classify_elementary(cx("v\n"));
  CHECK(i1.kind == ElementaryKind::TreeStar);
  CHECK(i1.k == 1);
  ElementaryInfo i2 = classify_elementary(cx("a b\n"));
  CHECK(i2.kind == ElementaryKind::TreeStar);
  CHECK(i2.k == 2);
  ElementaryInfo i5 = classify_elementary(star(5));
  CHECK(i5.kind == ElementaryKind::TreeStar);
  CHECK(i5.k == 5);

  CHECK(classify_elementary(cx("a b\nb c\nc a\n")).kind ==
        ElementaryKind::Circle);

  ElementaryInfo oc = classify_elementary(octahedron());
  CHECK(oc.kind == ElementaryKind::Surface);
  CHECK(oc.orientable);
  CHECK(oc.genus == 0);
  CHECK(oc.boundary_count == 0);

  ElementaryInfo mo = classify_elementary(mobius());
  CHECK(mo.kind == ElementaryKind::Surface);
  CHECK_FALSE(mo.orientable);
  CHECK(mo.genus == 1);
  CHECK(mo.boundary_count == 1);

  ElementaryInfo an = classify_elementary(annulus());
  CHECK(an.kind == ElementaryKind::Surface);
  CHECK(an.orientable);
  CHECK(an.genus == 0);
  CHECK(an.boundary_count == 2);

  ElementaryInfo tr = classify_elementary(torus7());
  CHECK(tr.kind == ElementaryKind::Surface);
  CHECK(tr.orientable);
  CHECK(tr.genus == 1);
  CHECK(tr.boundary_count == 0);

  CHECK(classify_elementary(cx(kS0)).kind == ElementaryKind::BranchedSurface);

  // Non-elementary inputs are refused.
  CHECK_THROWS_AS(classify_elementary(cx(kHTree)), guard_failed);   // 2 branch vertices
  CHECK_THROWS_AS(classify_elementary(cx(kK4)), guard_failed);      // graph with cycles
  CHECK_THROWS_AS(classify_elementary(cx(kFig8)), guard_failed);
  CHECK_THROWS_AS(classify_elementary(theta(3)), guard_failed);
  // A disk with a boundary whisker is a closure of the disk.
  CHECK_THROWS_AS(
      classify_elementary(cx("e a1 a2\ne a2 a3\ne a3 a4\ne a4 a1\na1 w\n")),
      guard_failed);
}

TEST_CASE("surface recognition") {
  CHECK(is_surface(octahedron()));
  CHECK(is_surface(mobius()));
  CHECK(is_surface(cx(kDisk)));
  CHECK(is_surface(torus7()));
  CHECK(is_surface(projective_plane6()));
  CHECK_FALSE(is_surface(cx(kS0)));
  CHECK_FALSE(is_surface(cx(kK4)));

  CHECK(surface_orientable(octahedron()));
  CHECK(surface_orientable(annulus()));
  CHECK(surface_orientable(torus7()));
  CHECK_FALSE(surface_orientable(mobius()));
  CHECK_FALSE(surface_orientable(projective_plane6()));

  CHECK(surface_boundary_count(cx(kDisk)) == 1);
  CHECK(surface_boundary_count(annulus()) == 2);
  CHECK(surface_boundary_count(mobius()) == 1);
  CHECK(surface_boundary_count(octahedron()) == 0);

  CHECK(is_two_sphere_complex(octahedron()));
  CHECK_FALSE(is_two_sphere_complex(torus7()));
  CHECK_FALSE(is_two_sphere_complex(projective_plane6()));
  CHECK_FALSE(is_two_sphere_complex(cx(kDisk)));

  CHECK(is_projective_plane_complex(projective_plane6()));
  CHECK_FALSE(is_projective_plane_complex(octahedron()));
  CHECK_FALSE(is_projective_plane_complex(mobius()));
}

TEST_CASE("tree rendering") {
  DecompositionTree t = decompose(cx(kFig8));
  std::string s = t.str();
  CHECK(s.find("one-cut v=w k=4 m=2") != std::string::npos);
  CHECK(s.find("leaf circle") != std::string::npos);

  auto j = nlohmann::json::parse(t.json_string());
  CHECK(j["tree"]["kind"] == "one-cut");
  CHECK(j["tree"]["k"] == 4);
  CHECK(j["tree"]["m"] == 2);
  CHECK(j["tree"]["children"].size() == 2);
  CHECK(j["tree"]["children"][0]["kind"] == "leaf");
}
