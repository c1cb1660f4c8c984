// decomp.cpp — cuts, closures, connected sums, and decomposition trees.

#include "braidcx/decomp.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace braidcx::decomp {

using core::Complex;
using core::PointClass;
using core::Simplex;
using core::VertexId;

namespace {

// The closed star of v is a k-leg star: v meets edges only, at least one.
bool star_is_leg_star(const Complex& x, VertexId v) {
  Complex lk = x.link({v});
  return !lk.empty() && lk.dim() <= 0;
}

std::vector<VertexId> link_vertex_list(const Complex& x, VertexId v) {
  return x.link({v}).vertices();
}

void sort_by_label(const Complex& x, std::vector<VertexId>& vs) {
  std::sort(vs.begin(), vs.end(), [&](VertexId a, VertexId b) {
    return x.label(a) < x.label(b);
  });
}

std::vector<std::string> labels_of(const Complex& x,
                                   const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(x.label(v));
  return out;
}

void append_cells(Complex& out, const Complex& src) {
  for (const Simplex& s : src.maximal_simplices()) {
    std::vector<std::string> labs;
    for (VertexId v : s) labs.push_back(src.label(v));
    out.add_simplex_labels(labs);
  }
}

// Deletion components, ordered by least vertex label.
std::vector<Complex> parts_of_deletion(const Complex& x,
                                       const std::vector<VertexId>& vs) {
  Complex del = x.deletion(vs);
  std::vector<Complex> comps = del.components();
  std::sort(comps.begin(), comps.end(), [](const Complex& a, const Complex& b) {
    auto va = a.vertices(), vb = b.vertices();
    std::string la, lb;
    for (VertexId v : va) la = la.empty() ? a.label(v) : std::min(la, a.label(v));
    for (VertexId v : vb) lb = lb.empty() ? b.label(v) : std::min(lb, b.label(v));
    return la < lb;
  });
  return comps;
}

// Is x literally a closure along vs?  True iff some deleted component is a
// lone cone vertex joined to exactly vs, every vᵢ has valency 2, and its
// link minus the cone vertex is a point or an arc.
bool cut_is_trivial_at(const Complex& x, const std::vector<VertexId>& vs,
                       VertexId* out_cone = nullptr) {
  std::vector<VertexId> sorted_vs = vs;
  std::sort(sorted_vs.begin(), sorted_vs.end());
  Complex del = x.deletion(vs);
  std::vector<VertexId> cones;
  for (const Complex& comp : del.components()) {
    auto verts = comp.vertices();
    if (verts.size() != 1) continue;
    VertexId c = verts[0];
    if (!star_is_leg_star(x, c)) continue;
    auto nbrs = link_vertex_list(x, c);
    std::sort(nbrs.begin(), nbrs.end());
    if (nbrs != sorted_vs) continue;
    // The closure's base complex is x minus the cone; it must be connected
    // for "x is a closure along vs" to make sense.
    if (!x.deletion({c}).connected()) continue;
    bool ok = true;
    for (VertexId v : vs) {
      if (x.valency(v) != 2) {
        ok = false;
        break;
      }
      Complex rest = x.link({v}).deletion({c});
      if (!(rest.is_point() || rest.is_interval())) {
        ok = false;
        break;
      }
    }
    if (ok) cones.push_back(c);
  }
  if (cones.empty()) return false;
  if (out_cone) {
    sort_by_label(x, cones);
    *out_cone = cones[0];
  }
  return true;
}

// Vertices where a split is sound: 0-dimensional link, at least two legs.
std::vector<VertexId> split_candidates(const Complex& x) {
  std::vector<VertexId> out;
  for (VertexId v : x.vertices())
    if (x.degree(v) >= 2 && star_is_leg_star(x, v)) out.push_back(v);
  sort_by_label(x, out);
  return out;
}

bool is_tree(const Complex& x) {
  return x.is_graph() && x.connected() &&
         x.count_cells(1) + 1 == x.vertex_count();
}

// Branch vertices of a tree in the graph sense (three or more legs).
std::vector<VertexId> tree_branch_vertices(const Complex& x) {
  std::vector<VertexId> out;
  for (VertexId v : x.vertices())
    if (x.degree(v) >= 3) out.push_back(v);
  return out;
}

ElementaryInfo surface_info(const Complex& x) {
  ElementaryInfo info;
  info.kind = ElementaryKind::Surface;
  info.orientable = surface_orientable(x);
  info.boundary_count = surface_boundary_count(x);
  long chi = x.euler();
  if (info.orientable)
    info.genus = (2 - info.boundary_count - chi) / 2;
  else
    info.genus = 2 - info.boundary_count - chi;
  return info;
}

DecompositionNode leaf_node(const Complex& x) {
  DecompositionNode nd;
  nd.kind = DecompositionNode::Kind::Leaf;
  nd.piece = x;
  if (x.is_point() || x.is_interval()) {
    nd.rule = LeafRule::Trivial;
    nd.info.kind = ElementaryKind::TreeStar;
    nd.info.k = x.is_point() ? 1 : 2;
  } else if (x.is_circle()) {
    nd.rule = LeafRule::Circle;
    nd.info.kind = ElementaryKind::Circle;
  } else if (is_tree(x) && tree_branch_vertices(x).size() == 1) {
    nd.rule = LeafRule::TreeStar;
    nd.info.kind = ElementaryKind::TreeStar;
    nd.info.k = x.degree(tree_branch_vertices(x)[0]);
  } else if (x.is_graph()) {
    nd.rule = LeafRule::Block;
  } else if (is_surface(x)) {
    nd.rule = LeafRule::SurfacePiece;
    nd.info = surface_info(x);
  } else {
    nd.rule = LeafRule::BranchedPiece;
    nd.info.kind = ElementaryKind::BranchedSurface;
  }
  return nd;
}

DecompositionNode build_tree(const Complex& x);

// Split at a single vertex whose star is a leg star: each deleted component
// gets a fresh hub wired to the neighbours of v it contains.
DecompositionNode split_one_vertex(const Complex& x, VertexId v) {
  DecompositionNode nd;
  nd.kind = DecompositionNode::Kind::OneCut;
  nd.cut = {x.label(v)};
  nd.k = x.degree(v);
  auto nbrs = link_vertex_list(x, v);
  std::set<VertexId> nbr_set(nbrs.begin(), nbrs.end());
  std::vector<Complex> comps = parts_of_deletion(x, {v});
  nd.m = static_cast<long>(comps.size());
  for (const Complex& comp : comps) {
    std::vector<VertexId> attach;
    for (VertexId u : comp.vertices())
      if (nbr_set.count(u)) attach.push_back(u);
    sort_by_label(comp, attach);
    Complex child = comp;
    std::string hub = child.fresh_label("hub");
    for (VertexId a : attach) child.add_simplex_labels({hub, comp.label(a)});
    nd.attach_one.push_back(labels_of(comp, attach));
    nd.hubs_one.push_back(hub);
    nd.children.push_back(build_tree(child));
  }
  return nd;
}

// Split at a pair: each deleted component gets two fresh hubs standing in
// for the cut vertices plus the hub-to-hub strand.  A direct edge between
// the cut vertices is subdivided first so it becomes its own component.
DecompositionNode split_two_vertices(const Complex& x0, VertexId a0,
                                     VertexId b0) {
  DecompositionNode nd;
  nd.kind = DecompositionNode::Kind::TwoCut;
  nd.cut = {x0.label(a0), x0.label(b0)};
  Complex x = x0;
  Simplex direct{std::min(a0, b0), std::max(a0, b0)};
  if (x0.contains(direct)) {
    std::string mid;
    x = x0.subdivide_edge(direct, &mid);
    nd.direct_mids.push_back(mid);
  }
  VertexId a = x.id_of(x0.label(a0)), b = x.id_of(x0.label(b0));
  auto na = link_vertex_list(x, a), nb = link_vertex_list(x, b);
  std::set<VertexId> na_set(na.begin(), na.end()), nb_set(nb.begin(), nb.end());
  std::vector<Complex> comps = parts_of_deletion(x, {a, b});
  nd.m = static_cast<long>(comps.size());
  for (const Complex& comp : comps) {
    std::vector<VertexId> attach_a, attach_b;
    for (VertexId u : comp.vertices()) {
      if (na_set.count(u)) attach_a.push_back(u);
      if (nb_set.count(u)) attach_b.push_back(u);
    }
    sort_by_label(comp, attach_a);
    sort_by_label(comp, attach_b);
    if (attach_a.empty() || attach_b.empty())
      throw std::logic_error(
          "two-vertex split reached a part touching only one cut vertex");
    Complex child = comp;
    std::string hub_a = child.fresh_label("hub");
    for (VertexId u : attach_a) child.add_simplex_labels({hub_a, comp.label(u)});
    std::string hub_b = child.fresh_label("hub");
    for (VertexId u : attach_b) child.add_simplex_labels({hub_b, comp.label(u)});
    child.add_simplex_labels({hub_a, hub_b});
    nd.attach_one.push_back(labels_of(comp, attach_a));
    nd.attach_two.push_back(labels_of(comp, attach_b));
    nd.hubs_one.push_back(hub_a);
    nd.hubs_two.push_back(hub_b);
    nd.children.push_back(build_tree(child));
  }
  return nd;
}

DecompositionNode build_tree(const Complex& x) {
  // Homeomorphism-type leaves first, so arcs and circles never shed their
  // subdivision vertices one contraction at a time.
  if (x.is_point() || x.is_interval() || x.is_circle()) return leaf_node(x);

  // Contract trivial one-vertex cuts (the complex is a closure there; the
  // cut vertex merges into its cone tip, shortening whiskers).
  {
    std::vector<VertexId> verts = x.vertices();
    sort_by_label(x, verts);
    for (VertexId v : verts) {
      if (x.valency(v) != 2) continue;
      VertexId cone = 0;
      if (!cut_is_trivial_at(x, {v}, &cone)) continue;
      auto contracted = reduce::contract_edge(
          x, Simplex{std::min(v, cone), std::max(v, cone)});
      DecompositionNode nd;
      nd.kind = DecompositionNode::Kind::Closure;
      nd.cut = {x.label(v), x.label(cone)};
      nd.k = 1;
      nd.m = 1;
      nd.children.push_back(build_tree(contracted.first));
      return nd;
    }
  }

  if (is_tree(x) && tree_branch_vertices(x).size() <= 1) return leaf_node(x);

  std::vector<VertexId> cands = split_candidates(x);
  for (VertexId v : cands)
    if (!x.deletion({v}).connected()) return split_one_vertex(x, v);
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (!x.deletion({cands[i], cands[j]}).connected())
        return split_two_vertices(x, cands[i], cands[j]);

  return leaf_node(x);
}

std::string rule_name(LeafRule r) {
  switch (r) {
    case LeafRule::Trivial: return "trivial";
    case LeafRule::Circle: return "circle";
    case LeafRule::TreeStar: return "tree-star";
    case LeafRule::SurfacePiece: return "surface";
    case LeafRule::BranchedPiece: return "branched-surface";
    case LeafRule::Block: return "block";
  }
  return "?";
}

nlohmann::json node_json(const DecompositionNode& nd) {
  nlohmann::json j;
  switch (nd.kind) {
    case DecompositionNode::Kind::Leaf:
      j["kind"] = "leaf";
      j["rule"] = rule_name(nd.rule);
      if (nd.rule != LeafRule::Trivial && nd.rule != LeafRule::Block)
        j["class"] = nd.info.str();
      j["vertices"] = nd.piece.vertex_count();
      j["cells"] = nd.piece.canonical_string();
      return j;
    case DecompositionNode::Kind::Closure:
      j["kind"] = "closure";
      break;
    case DecompositionNode::Kind::OneCut:
      j["kind"] = "one-cut";
      j["k"] = nd.k;
      break;
    case DecompositionNode::Kind::TwoCut:
      j["kind"] = "two-cut";
      break;
  }
  j["cut"] = nd.cut;
  j["m"] = nd.m;
  if (!nd.attach_one.empty()) j["attach_first"] = nd.attach_one;
  if (!nd.attach_two.empty()) j["attach_second"] = nd.attach_two;
  if (!nd.direct_mids.empty()) j["subdivided_strands"] = nd.direct_mids;
  j["children"] = nlohmann::json::array();
  for (const auto& c : nd.children) j["children"].push_back(node_json(c));
  return j;
}

}  // namespace

std::string ElementaryInfo::str() const {
  std::ostringstream os;
  switch (kind) {
    case ElementaryKind::TreeStar:
      os << "tree-star k=" << k;
      break;
    case ElementaryKind::Circle:
      os << "circle";
      break;
    case ElementaryKind::Surface:
      os << "surface " << (orientable ? "orientable" : "nonorientable")
         << " genus=" << genus << " boundaries=" << boundary_count;
      break;
    case ElementaryKind::BranchedSurface:
      os << "branched-surface";
      break;
  }
  return os.str();
}

std::string DecompositionNode::str(int indent) const {
  std::ostringstream os;
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  os << pad;
  switch (kind) {
    case Kind::Leaf:
      os << "leaf " << rule_name(rule);
      if (rule == LeafRule::TreeStar) os << " k=" << info.k;
      if (rule == LeafRule::SurfacePiece) os << " [" << info.str() << "]";
      os << " (" << piece.vertex_count() << " vertices)";
      break;
    case Kind::Closure:
      os << "trivial-closure contracted=" << cut[0] << " tip=" << cut[1];
      break;
    case Kind::OneCut:
      os << "one-cut v=" << cut[0] << " k=" << k << " m=" << m;
      break;
    case Kind::TwoCut:
      os << "two-cut v=" << cut[0] << "," << cut[1] << " m=" << m;
      break;
  }
  os << "\n";
  for (const auto& c : children) os << c.str(indent + 1);
  return os.str();
}

std::string DecompositionTree::json_string() const {
  nlohmann::json j;
  j["root_cells"] = root.canonical_string();
  j["tree"] = node_json(top);
  return j.dump(2);
}

Complex closure(const Complex& x, const std::vector<VertexId>& vs) {
  if (!x.connected()) throw guard_failed("closure: complex must be connected");
  if (vs.empty()) throw guard_failed("closure: no vertices given");
  std::set<VertexId> seen(vs.begin(), vs.end());
  if (seen.size() != vs.size())
    throw guard_failed("closure: repeated vertex");
  auto bdry = x.boundary_vertices();
  std::set<VertexId> bset(bdry.begin(), bdry.end());
  for (VertexId v : vs)
    if (!bset.count(v))
      throw guard_failed("closure: vertex " + x.label(v) +
                         " is not a boundary point");
  // Rebuild from the cells so stale label-table entries (e.g. from an
  // earlier deletion) do not steal the hub's name.
  Complex out;
  append_cells(out, x);
  std::string hub = out.fresh_label("hub");
  for (VertexId v : vs) out.add_simplex_labels({hub, x.label(v)});
  return out;
}

std::pair<Complex, std::vector<VertexId>> unwrap(const Complex& x,
                                                 VertexId v) {
  if (!star_is_leg_star(x, v))
    throw guard_failed("unwrap: closed star of " + x.label(v) +
                       " is not a k-leg star");
  Complex del = x.deletion({v});
  if (!del.connected())
    throw guard_failed("unwrap: deletion of " + x.label(v) +
                       " is disconnected (the vertex is a cut)");
  std::vector<VertexId> marked = link_vertex_list(x, v);
  sort_by_label(x, marked);
  return {del, marked};
}

OrderedVertex ordered_star(const Complex& x, VertexId v) {
  if (!star_is_leg_star(x, v))
    throw guard_failed("ordered_star: closed star of " + x.label(v) +
                       " is not a k-leg star");
  OrderedVertex ov;
  ov.vertex = v;
  ov.ordering = link_vertex_list(x, v);
  sort_by_label(x, ov.ordering);
  return ov;
}

Complex connected_sum(const Complex& x, const OrderedVertex& v,
                      const Complex& y, const OrderedVertex& w) {
  if (v.ordering.size() != w.ordering.size())
    throw guard_failed("connected_sum: ordering lengths differ");
  for (const auto& [cx, ov] : {std::pair{&x, &v}, std::pair{&y, &w}}) {
    if (!star_is_leg_star(*cx, ov->vertex))
      throw guard_failed("connected_sum: closed star is not a k-leg star");
    auto lk = link_vertex_list(*cx, ov->vertex);
    std::set<VertexId> ls(lk.begin(), lk.end());
    std::set<VertexId> os(ov->ordering.begin(), ov->ordering.end());
    if (ls != os || ov->ordering.size() != lk.size())
      throw guard_failed("connected_sum: ordering is not a permutation of the link");
  }
  Complex xd = x.deletion({v.vertex});
  Complex yd = y.deletion({w.vertex});
  if (!xd.connected() || !yd.connected())
    throw guard_failed("connected_sum: a deleted side is disconnected");

  Complex out;
  append_cells(out, xd);
  // Right side labels that collide with the left get primes appended.
  std::set<std::string> taken;
  for (VertexId u : xd.vertices()) taken.insert(xd.label(u));
  std::map<std::string, std::string> ren;
  std::vector<VertexId> yverts = yd.vertices();
  sort_by_label(yd, yverts);
  for (VertexId u : yverts) {
    std::string cand = yd.label(u);
    while (taken.count(cand)) cand += "'";
    ren[yd.label(u)] = cand;
    taken.insert(cand);
  }
  for (const Simplex& s : yd.maximal_simplices()) {
    std::vector<std::string> labs;
    for (VertexId u : s) labs.push_back(ren.at(yd.label(u)));
    out.add_simplex_labels(labs);
  }
  for (std::size_t i = 0; i < v.ordering.size(); ++i) {
    std::string mid = out.fresh_label("s");
    out.add_simplex_labels({x.label(v.ordering[i]), mid});
    out.add_simplex_labels({mid, ren.at(y.label(w.ordering[i]))});
  }
  return out;
}

std::vector<CutSet> find_cuts(const Complex& x, long k) {
  if (k != 1 && k != 2) throw guard_failed("find_cuts: k must be 1 or 2");
  if (!x.connected() || x.dim() > 2)
    throw guard_failed("find_cuts: connected complex of dim <= 2 required");
  if (!x.is_simple()) throw guard_failed("find_cuts: simple complex required");
  std::vector<VertexId> cand;
  if (x.is_graph()) {
    for (VertexId v : x.vertices())
      if (x.degree(v) >= 3) cand.push_back(v);
  } else {
    cand = x.branch_vertices();
  }
  sort_by_label(x, cand);
  std::vector<CutSet> out;
  auto consider = [&](std::vector<VertexId> vs) {
    if (x.deletion(vs).connected()) return;
    CutSet cs;
    cs.vertices = vs;
    cs.trivial = cut_is_trivial_at(x, vs);
    out.push_back(std::move(cs));
  };
  if (k == 1) {
    for (VertexId v : cand) consider({v});
  } else {
    for (std::size_t i = 0; i < cand.size(); ++i)
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        consider({cand[i], cand[j]});
  }
  return out;
}

bool is_vertex_k_connected(const Complex& x, long k) {
  if (k < 1 || k > 3)
    throw guard_failed("is_vertex_k_connected: only k <= 3 is supported");
  for (long j = 1; j < k; ++j)
    for (const CutSet& cs : find_cuts(x, j))
      if (!cs.trivial) return false;
  return true;
}

DecompositionTree decompose(const Complex& x) {
  if (x.empty() || !x.connected())
    throw guard_failed("decompose: nonempty connected complex required");
  if (x.dim() > 2) throw guard_failed("decompose: dimension must be <= 2");
  if (!x.is_simple()) throw guard_failed("decompose: simple complex required");
  DecompositionTree t;
  t.root = x;
  t.top = build_tree(x);
  return t;
}

Complex recompose(const DecompositionNode& nd) {
  switch (nd.kind) {
    case DecompositionNode::Kind::Leaf:
      return nd.piece;
    case DecompositionNode::Kind::Closure: {
      // The contraction merged the cut vertex into its tip; reattaching a
      // whisker at the tip restores the homeomorphism type.
      Complex y = recompose(nd.children[0]);
      std::string fresh = y.has_label(nd.cut[0]) ? y.fresh_label(nd.cut[0])
                                                 : nd.cut[0];
      y.add_simplex_labels({nd.cut[1], fresh});
      return y;
    }
    case DecompositionNode::Kind::OneCut: {
      Complex out;
      for (std::size_t i = 0; i < nd.children.size(); ++i) {
        Complex r = recompose(nd.children[i]);
        r = r.deletion({r.id_of(nd.hubs_one[i])});
        append_cells(out, r);
        for (const std::string& a : nd.attach_one[i])
          out.add_simplex_labels({nd.cut[0], a});
      }
      return out;
    }
    case DecompositionNode::Kind::TwoCut: {
      Complex out;
      for (std::size_t i = 0; i < nd.children.size(); ++i) {
        Complex r = recompose(nd.children[i]);
        r = r.deletion({r.id_of(nd.hubs_one[i]), r.id_of(nd.hubs_two[i])});
        append_cells(out, r);
        for (const std::string& a : nd.attach_one[i])
          out.add_simplex_labels({nd.cut[0], a});
        for (const std::string& a : nd.attach_two[i])
          out.add_simplex_labels({nd.cut[1], a});
      }
      // Undo the strand subdivisions: drop each midpoint, restore the edge.
      for (const std::string& mid : nd.direct_mids) {
        out = out.deletion({out.id_of(mid)});
        out.add_simplex_labels({nd.cut[0], nd.cut[1]});
      }
      return out;
    }
  }
  throw std::logic_error("recompose: unreachable");
}

ElementaryInfo classify_elementary(const Complex& x) {
  if (x.empty() || !x.connected())
    throw guard_failed("classify_elementary: nonempty connected complex required");
  if (x.dim() > 2)
    throw guard_failed("classify_elementary: dimension must be <= 2");
  ElementaryInfo info;
  if (x.is_point() || x.is_interval()) {
    info.kind = ElementaryKind::TreeStar;
    info.k = x.is_point() ? 1 : 2;
    return info;
  }
  if (x.is_circle()) {
    info.kind = ElementaryKind::Circle;
    return info;
  }
  if (x.is_graph()) {
    if (!is_tree(x))
      throw guard_failed(
          "classify_elementary: graph with cycles is not elementary");
    auto branches = tree_branch_vertices(x);
    if (branches.size() != 1)
      throw guard_failed(
          "classify_elementary: tree with several branch vertices");
    info.kind = ElementaryKind::TreeStar;
    info.k = x.degree(branches[0]);
    return info;
  }
  if (!x.is_simple())
    throw guard_failed("classify_elementary: simple complex required");
  for (VertexId v : x.vertices())
    if (x.valency(v) == 2 && cut_is_trivial_at(x, {v}))
      throw guard_failed("classify_elementary: complex is a closure at " +
                         x.label(v));
  for (VertexId v : split_candidates(x))
    if (!x.deletion({v}).connected())
      throw guard_failed("classify_elementary: complex splits at " +
                         x.label(v));
  auto cands = split_candidates(x);
  for (std::size_t i = 0; i < cands.size(); ++i)
    for (std::size_t j = i + 1; j < cands.size(); ++j)
      if (!x.deletion({cands[i], cands[j]}).connected())
        throw guard_failed("classify_elementary: complex splits at a pair");
  if (is_surface(x)) return surface_info(x);
  info.kind = ElementaryKind::BranchedSurface;
  return info;
}

bool is_surface(const Complex& x) {
  if (x.dim() != 2 || !x.connected()) return false;
  for (VertexId v : x.vertices())
    if (x.classify_vertex(v) == PointClass::Branch) return false;
  return true;
}

bool surface_orientable(const Complex& x) {
  // Orient triangles consistently: neighbours across a shared edge must
  // induce opposite signs on it.  Signs are relative to ascending vertex
  // order, under which the faces of (u<v<w) get +(v,w), -(u,w), +(u,v).
  std::vector<Simplex> tris;
  for (const Simplex& s : x.simplices())
    if (s.size() == 3) tris.push_back(s);
  std::map<Simplex, std::vector<std::size_t>> by_edge;
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const Simplex& s = tris[t];
    by_edge[{s[0], s[1]}].push_back(t);
    by_edge[{s[0], s[2]}].push_back(t);
    by_edge[{s[1], s[2]}].push_back(t);
  }
  auto edge_sign = [](const Simplex& tri, const Simplex& e) {
    return e == Simplex{tri[0], tri[2]} ? -1 : 1;
  };
  std::vector<int> sign(tris.size(), 0);
  for (std::size_t seed = 0; seed < tris.size(); ++seed) {
    if (sign[seed]) continue;
    sign[seed] = 1;
    std::queue<std::size_t> q;
    q.push(seed);
    while (!q.empty()) {
      std::size_t t = q.front();
      q.pop();
      const Simplex& s = tris[t];
      for (const Simplex& e :
           {Simplex{s[0], s[1]}, Simplex{s[0], s[2]}, Simplex{s[1], s[2]}}) {
        for (std::size_t u : by_edge[e]) {
          if (u == t) continue;
          int want = -sign[t] * edge_sign(tris[t], e) * edge_sign(tris[u], e);
          if (sign[u] == 0) {
            sign[u] = want;
            q.push(u);
          } else if (sign[u] != want) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

long surface_boundary_count(const Complex& x) {
  std::map<Simplex, long> tri_count;
  for (const Simplex& s : x.simplices())
    if (s.size() == 3) {
      tri_count[{s[0], s[1]}]++;
      tri_count[{s[0], s[2]}]++;
      tri_count[{s[1], s[2]}]++;
    }
  Complex bdry;
  for (const Simplex& s : x.simplices())
    if (s.size() == 2) {
      auto it = tri_count.find(s);
      if (it != tri_count.end() && it->second == 1)
        bdry.add_simplex_labels({x.label(s[0]), x.label(s[1])});
    }
  return bdry.empty() ? 0 : bdry.component_count();
}

bool is_two_sphere_complex(const Complex& x) {
  return is_surface(x) && surface_boundary_count(x) == 0 &&
         surface_orientable(x) && x.euler() == 2;
}

bool is_projective_plane_complex(const Complex& x) {
  return is_surface(x) && surface_boundary_count(x) == 0 &&
         !surface_orientable(x) && x.euler() == 1;
}

}  // namespace braidcx::decomp
