// homology.cpp — first homology of braid groups, folded over decompositions.
//
// h1_braid prepares the complex (simplify, then give every bare edge a
// midpoint so joining strands expose their cut points), decomposes it at
// one- and two-vertex cuts, and folds leaf values back up the tree.  Every
// step lands in a certificate that can refold itself.

#include "braidcx/homology.hpp"

#include <json.hpp>

#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "braidcx/planarity.hpp"
#include "braidcx/presentation.hpp"

namespace braidcx::homology {

namespace {

long binom2(long m) { return m * (m - 1) / 2; }

void refuse_sphere_like(const core::Complex& x, const std::string& where) {
  if (decomp::is_two_sphere_complex(x))
    throw excluded_case(where + ": the two-sphere is outside this pipeline");
  if (decomp::is_projective_plane_complex(x))
    throw excluded_case(where +
                        ": the projective plane is outside this pipeline");
}

// Subdivide every edge that lies in no triangle.  A strand joining two
// two-dimensional pieces then has an interior midpoint where the cut search
// can act; midpoints on strands that need no cut are contracted right back
// during decomposition.
core::Complex subdivide_bare_edges(const core::Complex& x) {
  std::vector<std::pair<std::string, std::string>> bare;
  for (const auto& e : x.simplices()) {
    if (e.size() != 2) continue;
    bool covered = false;
    for (const auto& t : x.simplices()) {
      if (t.size() != 3) continue;
      long hit = 0;
      for (core::VertexId v : t)
        if (v == e[0] || v == e[1]) ++hit;
      if (hit == 2) {
        covered = true;
        break;
      }
    }
    if (!covered) bare.emplace_back(x.label(e[0]), x.label(e[1]));
  }
  core::Complex cur = x;
  for (const auto& [a, b] : bare)
    cur = cur.subdivide_edge(cur.simplex_of({a, b}));
  return cur;
}

// Classical two-connectivity: at least three vertices, connected, and no
// vertex whose plain deletion disconnects the rest.  Deliberately stricter
// than the decomposition's cut search, which sets aside closure-shaped cuts:
// a star's hub only splits off single tips, yet braid invariants over stars
// still grow with the strand count, so the two-strand reduction must not
// fire there.
bool graph_biconnected(const core::Complex& x) {
  std::vector<core::VertexId> vs = x.vertices();
  if (vs.size() < 3) return false;
  std::map<core::VertexId, std::vector<core::VertexId>> adj;
  for (const auto& s : x.simplices()) {
    if (s.size() != 2) continue;
    adj[s[0]].push_back(s[1]);
    adj[s[1]].push_back(s[0]);
  }
  for (core::VertexId cut : vs) {
    core::VertexId start = vs[0] == cut ? vs[1] : vs[0];
    std::set<core::VertexId> seen = {start};
    std::vector<core::VertexId> queue = {start};
    while (!queue.empty()) {
      core::VertexId v = queue.back();
      queue.pop_back();
      for (core::VertexId w : adj[v])
        if (w != cut && seen.insert(w).second) queue.push_back(w);
    }
    if (seen.size() + 1 != vs.size()) return false;
  }
  return true;
}

// Classical vertex-3-connectivity of the 1-skeleton: at least four vertices
// and no pair whose plain deletion disconnects the rest.  The cut search is
// no substitute here: it sets aside closure-shaped cuts, so it would wave
// through stars and theta shapes whose braid invariants this formula does
// not describe.
bool skeleton_three_connected(const core::Complex& x) {
  std::vector<core::VertexId> vs = x.vertices();
  if (vs.size() < 4) return false;
  std::map<core::VertexId, std::vector<core::VertexId>> adj;
  for (const auto& s : x.simplices()) {
    if (s.size() != 2) continue;
    adj[s[0]].push_back(s[1]);
    adj[s[1]].push_back(s[0]);
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      core::VertexId a = vs[i], b = vs[j];
      core::VertexId start = 0;
      bool found = false;
      for (core::VertexId v : vs)
        if (v != a && v != b) {
          start = v;
          found = true;
          break;
        }
      if (!found) return false;
      std::set<core::VertexId> seen = {start};
      std::vector<core::VertexId> queue = {start};
      while (!queue.empty()) {
        core::VertexId v = queue.back();
        queue.pop_back();
        for (core::VertexId w : adj[v])
          if (w != a && w != b && seen.insert(w).second) queue.push_back(w);
      }
      if (seen.size() + 2 != vs.size()) return false;
    }
  }
  return true;
}

CertNode fold(const decomp::DecompositionNode& node, long n);

CertNode fold_leaf(const decomp::DecompositionNode& node, long n) {
  CertNode out;
  out.n = n;
  switch (node.rule) {
    case decomp::LeafRule::Trivial:
      out.rule = "leaf-trivial";
      out.detail = "point or interval";
      out.value = {};
      return out;
    case decomp::LeafRule::Circle:
      out.rule = "leaf-circle";
      out.detail = node.info.str();
      out.value = h1_elementary(node.piece, node.info, n);
      return out;
    case decomp::LeafRule::TreeStar:
      out.rule = "leaf-tree-star";
      out.k = node.info.k;
      out.r = presentation::rank_r(n, node.info.k, node.info.k);
      out.detail = node.info.str();
      out.value = h1_elementary(node.piece, node.info, n);
      return out;
    case decomp::LeafRule::SurfacePiece:
    case decomp::LeafRule::BranchedPiece: {
      out.rule = node.rule == decomp::LeafRule::SurfacePiece ? "leaf-surface"
                                                             : "leaf-branched";
      bool flat = planarity::planar(node.piece).planar;
      out.detail = node.info.str() + (flat ? ", planar" : ", nonplanar");
      out.value = h1_elementary(node.piece, node.info, n);
      return out;
    }
    case decomp::LeafRule::Block: {
      out.rule = "leaf-block";
      bool flat = planarity::planar(node.piece).planar;
      out.detail = flat ? "three-connected block, planar"
                        : "three-connected block, nonplanar";
      out.value = h1_three_connected(node.piece, n);
      return out;
    }
  }
  throw guard_failed("h1_braid: unknown leaf rule");
}

CertNode fold(const decomp::DecompositionNode& node, long n) {
  using Kind = decomp::DecompositionNode::Kind;
  switch (node.kind) {
    case Kind::Leaf:
      return fold_leaf(node, n);
    case Kind::Closure: {
      CertNode out;
      out.rule = "smoothing";
      out.n = n;
      out.detail = "contracted " + node.cut.at(0) + " toward " +
                   node.cut.at(1) + ", value unchanged";
      out.children.push_back(fold(node.children.at(0), n));
      out.value = out.children.front().value;
      return out;
    }
    case Kind::OneCut: {
      CertNode out;
      out.rule = "one-cut";
      out.n = n;
      out.k = node.k;
      out.m = node.m;
      out.r = presentation::rank_r(n, node.k, node.m);
      out.detail = "cut at " + node.cut.at(0);
      std::vector<AbelianInvariants> parts;
      for (const auto& child : node.children) {
        out.children.push_back(fold(child, n));
        parts.push_back(out.children.back().value);
      }
      out.value = split_one_cut(parts, n, node.k, node.m);
      return out;
    }
    case Kind::TwoCut: {
      CertNode out;
      out.rule = "two-cut";
      out.n = n;
      out.m = node.m;
      out.r = binom2(node.m);
      out.detail = "cut at " + node.cut.at(0) + ", " + node.cut.at(1);
      std::vector<AbelianInvariants> parts;
      for (const auto& child : node.children) {
        out.children.push_back(fold(child, n));
        parts.push_back(out.children.back().value);
      }
      out.value = split_two_cut(parts, node.m);
      return out;
    }
  }
  throw guard_failed("h1_braid: unknown node kind");
}

void node_json(const CertNode& node, nlohmann::json& out) {
  out["rule"] = node.rule;
  out["n"] = node.n;
  if (node.k != 0) out["k"] = node.k;
  if (node.m != 0) out["m"] = node.m;
  if (node.r != 0) out["r"] = node.r;
  if (!node.detail.empty()) out["detail"] = node.detail;
  out["value"] = node.value.str();
  out["free_rank"] = node.value.free_rank;
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& t : node.value.torsion) torsion.push_back(t.get_str());
  out["torsion"] = torsion;
  if (!node.children.empty()) {
    nlohmann::json kids = nlohmann::json::array();
    for (const auto& child : node.children) {
      nlohmann::json k;
      node_json(child, k);
      kids.push_back(std::move(k));
    }
    out["children"] = std::move(kids);
  }
}

bool recheck_node(const CertNode& node) {
  for (const auto& child : node.children)
    if (!recheck_node(child)) return false;
  std::vector<AbelianInvariants> parts;
  for (const auto& child : node.children) parts.push_back(child.value);

  if (node.rule == "one-cut")
    return node.r == presentation::rank_r(node.n, node.k, node.m) &&
           node.value == split_one_cut(parts, node.n, node.k, node.m);
  if (node.rule == "two-cut")
    return node.r == binom2(node.m) &&
           node.value == split_two_cut(parts, node.m);
  if (node.rule == "smoothing" || node.rule == "biconn")
    return parts.size() == 1 && node.value == parts.front();
  if (node.rule == "leaf-trivial")
    return node.children.empty() && node.value.is_trivial();
  if (node.rule == "leaf-circle")
    return node.children.empty() &&
           node.value == AbelianInvariants{1, {}};
  if (node.rule == "leaf-tree-star")
    return node.children.empty() &&
           node.r == presentation::rank_r(node.n, node.k, node.k) &&
           node.value == AbelianInvariants{node.r, {}};
  if (node.rule == "leaf-surface" || node.rule == "leaf-branched" ||
      node.rule == "leaf-block" || node.rule == "space")
    return node.children.empty();  // evaluated from the piece, taken as read
  return false;
}

}  // namespace

AbelianInvariants h1_elementary(const core::Complex& x,
                                const decomp::ElementaryInfo& info, long n) {
  if (n < 2)
    throw guard_failed("h1_elementary: at least two strands required");
  switch (info.kind) {
    case decomp::ElementaryKind::TreeStar:
      return {presentation::rank_r(n, info.k, info.k), {}};
    case decomp::ElementaryKind::Circle:
      return {1, {}};
    case decomp::ElementaryKind::Surface:
    case decomp::ElementaryKind::BranchedSurface:
      break;
  }
  refuse_sphere_like(x, "h1_elementary");
  AbelianInvariants h1 = x.h1_space();
  if (planarity::planar(x).planar) return h1.plus({1, {}});
  return h1.plus({0, {2}});
}

AbelianInvariants split_one_cut(const std::vector<AbelianInvariants>& parts,
                                long n, long k, long m) {
  if (m < 2) throw guard_failed("split_one_cut: a cut needs at least 2 parts");
  if (static_cast<long>(parts.size()) != m)
    throw guard_failed("split_one_cut: part count does not match m");
  if (n < 2)
    throw guard_failed("split_one_cut: at least two strands required");
  AbelianInvariants out{presentation::rank_r(n, k, m), {}};
  for (const auto& part : parts) out = out.plus(part);
  return out;
}

AbelianInvariants split_two_cut(const std::vector<AbelianInvariants>& parts,
                                long m) {
  if (m < 2) throw guard_failed("split_two_cut: a cut needs at least 2 parts");
  if (static_cast<long>(parts.size()) != m)
    throw guard_failed("split_two_cut: part count does not match m");
  AbelianInvariants combined{binom2(m), {}};
  for (const auto& part : parts) combined = combined.plus(part);
  if (combined.free_rank < m)
    throw guard_failed(
        "split_two_cut: combined free rank below the part count");
  return {combined.free_rank - m, combined.torsion};
}

AbelianInvariants h1_three_connected(const core::Complex& x, long n) {
  if (n < 2)
    throw guard_failed("h1_three_connected: at least two strands required");
  if (!x.is_simple())
    throw guard_failed("h1_three_connected: simple complex required");
  if (!skeleton_three_connected(x))
    throw guard_failed("h1_three_connected: vertex-3-connected required");
  refuse_sphere_like(x, "h1_three_connected");
  AbelianInvariants h1 = x.h1_space();
  if (planarity::planar(x).planar) return h1.plus({1, {}});
  return h1.plus({0, {2}});
}

AbelianInvariants h1_closure_combine(const AbelianInvariants& h1_x, long k) {
  if (k < 1) throw guard_failed("h1_closure_combine: k must be positive");
  return h1_x.plus({k - 1, {}});
}

std::string CertNode::str(int indent) const {
  std::ostringstream os;
  os << std::string(indent, ' ') << rule;
  if (k != 0) os << " k=" << k;
  if (m != 0) os << " m=" << m;
  if (r != 0) os << " r=" << r;
  if (!detail.empty()) os << " (" << detail << ")";
  os << " -> " << value.str() << "\n";
  for (const auto& child : children) os << child.str(indent + 2);
  return os.str();
}

std::string H1Certificate::str() const {
  std::ostringstream os;
  os << "H1 of the braid group on " << n << " strands: " << result.str()
     << "\n";
  os << top.str(0);
  return os.str();
}

std::string H1Certificate::json_string() const {
  nlohmann::json j;
  std::ostringstream fp;
  fp << std::hex << fingerprint;
  j["fingerprint"] = fp.str();
  j["n"] = n;
  j["result"] = result.str();
  j["free_rank"] = result.free_rank;
  nlohmann::json torsion = nlohmann::json::array();
  for (const auto& t : result.torsion) torsion.push_back(t.get_str());
  j["torsion"] = torsion;
  j["tree"] = tree;
  nlohmann::json topj;
  node_json(top, topj);
  j["certificate"] = std::move(topj);
  return j.dump(2);
}

bool H1Certificate::recheck() const {
  return recheck_node(top) && result == top.value;
}

H1Certificate h1_braid(const core::Complex& x, long n) {
  if (n < 1) throw guard_failed("h1_braid: at least one strand required");
  if (x.empty()) throw guard_failed("h1_braid: empty complex");
  if (x.component_count() != 1)
    throw guard_failed("h1_braid: connected complex required");
  refuse_sphere_like(x, "h1_braid");

  auto [y, log] = reduce::simplify(x);
  refuse_sphere_like(y, "h1_braid");

  H1Certificate cert;
  cert.fingerprint = x.fingerprint();
  cert.n = n;

  if (n == 1) {
    CertNode node;
    node.rule = "space";
    node.n = 1;
    node.detail = "one strand: first homology of the space itself";
    node.value = y.h1_space();
    cert.top = std::move(node);
    cert.result = cert.top.value;
    return cert;
  }

  // Graphs always expose their joints as branch vertices; only strands
  // between two-dimensional pieces need a midpoint added.
  core::Complex z = y.is_graph() ? y : subdivide_bare_edges(y);
  decomp::DecompositionTree tree = decomp::decompose(z);
  cert.tree = tree.str();

  if (z.is_graph() && n > 2 && graph_biconnected(z)) {
    CertNode inner = fold(tree.top, 2);
    CertNode node;
    node.rule = "biconn";
    node.n = n;
    node.detail = "graph without an articulation vertex: value agrees with "
                  "the two-strand group";
    node.value = inner.value;
    node.children.push_back(std::move(inner));
    cert.top = std::move(node);
  } else {
    cert.top = fold(tree.top, n);
  }
  cert.result = cert.top.value;
  return cert;
}

}  // namespace braidcx::homology
