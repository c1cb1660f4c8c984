// planarity.cpp — Kuratowski search, disjoint paths, and flat embeddability.

#include "braidcx/planarity.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "braidcx/decomp.hpp"

namespace braidcx::planarity {

namespace {

using core::Complex;
using core::Simplex;
using core::VertexId;

using Adjacency = std::map<VertexId, std::vector<VertexId>>;

Adjacency adjacency(const Complex& x) {
  Adjacency adj;
  for (VertexId v : x.vertices()) adj[v];
  for (const Simplex& s : x.simplices()) {
    if (s.size() != 2) continue;
    adj[s[0]].push_back(s[1]);
    adj[s[1]].push_back(s[0]);
  }
  for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

// Internally vertex-disjoint u-w paths by augmentation on the split graph
// (v_in -> v_out with capacity 1), counting up to limit.
long flow_disjoint(const Adjacency& adj, VertexId u, VertexId w, long limit) {
  std::map<VertexId, long> index;
  for (const auto& [v, nb] : adj) index[v] = static_cast<long>(index.size());
  auto in_node = [&](VertexId v) { return 2 * index.at(v); };
  auto out_node = [&](VertexId v) { return 2 * index.at(v) + 1; };
  std::map<long, std::map<long, long>> cap;
  for (const auto& [v, nb] : adj) {
    cap[in_node(v)][out_node(v)] = (v == u || v == w) ? limit + 1 : 1;
    for (VertexId t : nb) {
      cap[out_node(v)][in_node(t)] = 1;
      cap[out_node(t)][in_node(v)] = 1;
    }
  }
  long source = out_node(u), sink = in_node(w);
  long flow = 0;
  while (flow < limit) {
    std::map<long, long> parent;
    parent[source] = source;
    std::queue<long> q;
    q.push(source);
    while (!q.empty() && !parent.count(sink)) {
      long a = q.front();
      q.pop();
      for (const auto& [b, c] : cap[a]) {
        if (c <= 0 || parent.count(b)) continue;
        parent[b] = a;
        q.push(b);
      }
    }
    if (!parent.count(sink)) break;
    for (long at = sink; at != source; at = parent[at]) {
      cap[parent[at]][at] -= 1;
      cap[at][parent[at]] += 1;
    }
    ++flow;
  }
  return flow;
}

// Biconnected components of the graph, each as its own adjacency (classic
// lowpoint DFS with an edge stack).  A subdivided K5 or K33 is 2-connected,
// so the search can run block by block.
struct BlockFinder {
  const Adjacency& adj;
  std::map<VertexId, long> num, low;
  long counter = 0;
  std::vector<std::pair<VertexId, VertexId>> stack;
  std::vector<Adjacency> blocks;

  explicit BlockFinder(const Adjacency& a) : adj(a) {
    for (const auto& [v, nb] : adj)
      if (!num.count(v)) dfs(v, v, false);
  }

  void take_block(const std::pair<VertexId, VertexId>& top) {
    Adjacency blk;
    while (true) {
      auto e = stack.back();
      stack.pop_back();
      blk[e.first].push_back(e.second);
      blk[e.second].push_back(e.first);
      if (e == top) break;
    }
    for (auto& [v, nb] : blk) std::sort(nb.begin(), nb.end());
    blocks.push_back(std::move(blk));
  }

  void dfs(VertexId v, VertexId parent, bool has_parent) {
    num[v] = low[v] = counter++;
    for (VertexId u : adj.at(v)) {
      if (!num.count(u)) {
        stack.emplace_back(v, u);
        dfs(u, v, true);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= num[v]) take_block({v, u});
      } else if ((!has_parent || u != parent) && num[u] < num[v]) {
        stack.emplace_back(v, u);
        low[v] = std::min(low[v], num[u]);
      }
    }
  }
};

// Any cycle of a graph in which every vertex has degree >= 2, as a cyclic
// vertex sequence (tree path closed by the first back edge found).
struct CycleFinder {
  const Adjacency& adj;
  std::map<VertexId, VertexId> parent;
  std::set<VertexId> visited;
  std::vector<VertexId> cycle;

  bool dfs(VertexId v, VertexId par, bool has_par) {
    visited.insert(v);
    for (VertexId u : adj.at(v)) {
      if (has_par && u == par) continue;
      if (!visited.count(u)) {
        parent[u] = v;
        if (dfs(u, v, true)) return true;
      } else {
        cycle.push_back(v);
        for (VertexId t = v; t != u; t = parent.at(t)) cycle.push_back(parent.at(t));
        return true;
      }
    }
    return false;
  }
};

// Planarity decision for one biconnected block by iterative face embedding:
// grow an embedded subgraph from a cycle, and at each step place a fragment
// into a face containing all its attachments, splitting the face along a
// path of the fragment.  A fragment admitting no face kills the embedding;
// fragments with a unique admissible face are placed first.
bool dmp_planar(const Adjacency& blk) {
  std::size_t edge_count = 0;
  for (const auto& [v, nb] : blk) edge_count += nb.size();
  edge_count /= 2;
  if (edge_count < 9) return true;  // too small for K5 or K33

  CycleFinder cf{blk, {}, {}, {}};
  cf.dfs(blk.begin()->first, blk.begin()->first, false);
  std::vector<std::vector<VertexId>> faces{cf.cycle, cf.cycle};
  std::set<VertexId> embedded(cf.cycle.begin(), cf.cycle.end());
  std::set<std::pair<VertexId, VertexId>> embedded_edges;
  for (std::size_t i = 0; i < cf.cycle.size(); ++i)
    embedded_edges.insert(std::minmax(cf.cycle[i], cf.cycle[(i + 1) % cf.cycle.size()]));

  struct Fragment {
    std::set<VertexId> attachments;
    std::vector<VertexId> inside;  // empty for a chord
    std::vector<long> admissible;
  };

  while (true) {
    std::vector<Fragment> fragments;
    for (const auto& [v, nb] : blk)
      for (VertexId u : nb)
        if (v < u && embedded.count(v) && embedded.count(u) &&
            !embedded_edges.count({v, u}))
          fragments.push_back({{v, u}, {}, {}});
    std::set<VertexId> seen;
    for (const auto& [v, nb] : blk) {
      if (embedded.count(v) || seen.count(v)) continue;
      Fragment f;
      std::queue<VertexId> q;
      q.push(v);
      seen.insert(v);
      while (!q.empty()) {
        VertexId a = q.front();
        q.pop();
        f.inside.push_back(a);
        for (VertexId u : blk.at(a)) {
          if (embedded.count(u)) {
            f.attachments.insert(u);
          } else if (!seen.count(u)) {
            seen.insert(u);
            q.push(u);
          }
        }
      }
      fragments.push_back(std::move(f));
    }
    if (fragments.empty()) return true;

    for (Fragment& f : fragments) {
      for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        std::set<VertexId> fv(faces[fi].begin(), faces[fi].end());
        bool ok = true;
        for (VertexId a : f.attachments)
          if (!fv.count(a)) {
            ok = false;
            break;
          }
        if (ok) f.admissible.push_back(static_cast<long>(fi));
      }
      if (f.admissible.empty()) return false;
    }
    std::size_t pick = 0;
    for (std::size_t i = 0; i < fragments.size(); ++i)
      if (fragments[i].admissible.size() == 1) {
        pick = i;
        break;
      }
    const Fragment& f = fragments[pick];
    std::size_t fi = static_cast<std::size_t>(f.admissible.front());

    // A path across the fragment between two distinct attachments.
    std::vector<VertexId> path;
    if (f.inside.empty()) {
      path = {*f.attachments.begin(), *std::next(f.attachments.begin())};
    } else {
      VertexId a = *f.attachments.begin();
      std::set<VertexId> comp(f.inside.begin(), f.inside.end());
      std::map<VertexId, VertexId> par;
      std::queue<VertexId> q;
      for (VertexId u : blk.at(a))
        if (comp.count(u) && !par.count(u)) {
          par[u] = a;
          q.push(u);
        }
      while (!q.empty() && path.empty()) {
        VertexId w = q.front();
        q.pop();
        for (VertexId u : blk.at(w)) {
          if (embedded.count(u) && u != a) {
            std::vector<VertexId> rev{u, w};
            for (VertexId t = w; par.at(t) != a; t = par.at(t))
              rev.push_back(par.at(t));
            rev.push_back(a);
            std::reverse(rev.begin(), rev.end());
            path = std::move(rev);
            break;
          }
          if (comp.count(u) && !par.count(u)) {
            par[u] = w;
            q.push(u);
          }
        }
      }
    }

    for (VertexId v : path) embedded.insert(v);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      embedded_edges.insert(std::minmax(path[i], path[i + 1]));

    std::vector<VertexId> face = faces[fi];
    auto pos = [&](VertexId v) {
      return static_cast<std::size_t>(
          std::find(face.begin(), face.end(), v) - face.begin());
    };
    std::size_t ia = pos(path.front()), ib = pos(path.back());
    std::vector<VertexId> f1, f2;
    for (std::size_t i = ia;; i = (i + 1) % face.size()) {
      f1.push_back(face[i]);
      if (i == ib) break;
    }
    for (std::size_t i = ib;; i = (i + 1) % face.size()) {
      f2.push_back(face[i]);
      if (i == ia) break;
    }
    for (long i = static_cast<long>(path.size()) - 2; i >= 1; --i)
      f1.push_back(path[static_cast<std::size_t>(i)]);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
    faces.erase(faces.begin() + static_cast<long>(fi));
    faces.push_back(std::move(f1));
    faces.push_back(std::move(f2));
  }
}

// Backtracking search for internally disjoint simple paths joining the given
// branch-vertex pairs.  Branch vertices may not appear inside any path, and
// the interiors of accepted paths block later ones.
struct PathSystem {
  const Adjacency& adj;
  std::set<VertexId> branch;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::set<VertexId> used;
  std::vector<std::vector<VertexId>> paths;

  bool solve(std::size_t idx) {
    if (idx == pairs.size()) return true;
    std::vector<VertexId> path{pairs[idx].first};
    std::set<VertexId> on_path{pairs[idx].first};
    return extend(path, on_path, pairs[idx].second, idx);
  }

  bool extend(std::vector<VertexId>& path, std::set<VertexId>& on_path,
              VertexId goal, std::size_t idx) {
    auto it = adj.find(path.back());
    if (it == adj.end()) return false;
    for (VertexId u : it->second) {
      if (u == goal) {
        for (std::size_t i = 1; i < path.size(); ++i) used.insert(path[i]);
        path.push_back(goal);
        paths.push_back(path);
        if (solve(idx + 1)) return true;
        paths.pop_back();
        path.pop_back();
        for (std::size_t i = 1; i < path.size(); ++i) used.erase(path[i]);
        continue;
      }
      if (branch.count(u) || used.count(u) || on_path.count(u)) continue;
      path.push_back(u);
      on_path.insert(u);
      if (extend(path, on_path, goal, idx)) return true;
      path.pop_back();
      on_path.erase(u);
    }
    return false;
  }
};

KuratowskiWitness witness_from_paths(
    const Complex& x, const std::vector<std::vector<VertexId>>& paths,
    std::string kind) {
  Complex w;
  for (const auto& p : paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      w.add_simplex_labels({x.label(p[i]), x.label(p[i + 1])});
  return {std::move(w), std::move(kind)};
}

// Calls f with each k-subset of {0..n-1}; stops early when f returns true.
template <class F>
bool for_each_combination(long n, long k, F f) {
  if (k > n || k < 0) return false;
  std::vector<long> idx(k);
  for (long i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    long i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (long j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Connectivity prefilter: the branch pairs of a subdivided K5 (K33) are
// joined by 4 (3) internally disjoint paths, so a candidate set failing
// that cannot carry a subdivision.  Memoised per block.
struct PairConnectivity {
  const Adjacency& adj;
  std::map<std::pair<VertexId, VertexId>, long> memo;

  long operator()(VertexId a, VertexId b) {
    auto key = std::minmax(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long k = flow_disjoint(adj, key.first, key.second, 4);
    memo[key] = k;
    return k;
  }
};

// Candidates of degree >= min_deg, highest degree first (real subdivisions
// tend to sit on the high-degree vertices, so hits come early).
std::vector<VertexId> candidates(const Adjacency& adj, std::size_t min_deg) {
  std::vector<VertexId> c;
  for (const auto& [v, nb] : adj)
    if (nb.size() >= min_deg) c.push_back(v);
  std::stable_sort(c.begin(), c.end(), [&](VertexId a, VertexId b) {
    return adj.at(a).size() > adj.at(b).size();
  });
  return c;
}

std::optional<KuratowskiWitness> k5_search(const Complex& x, const Adjacency& adj,
                                           PairConnectivity& conn) {
  auto cands = candidates(adj, 4);
  std::optional<KuratowskiWitness> found;
  for_each_combination(
      static_cast<long>(cands.size()), 5, [&](const std::vector<long>& idx) {
        std::vector<VertexId> b(5);
        for (int i = 0; i < 5; ++i) b[i] = cands[idx[i]];
        for (int i = 0; i < 5; ++i)
          for (int j = i + 1; j < 5; ++j)
            if (conn(b[i], b[j]) < 4) return false;
        PathSystem ps{adj, {b.begin(), b.end()}, {}, {}, {}};
        for (int i = 0; i < 5; ++i)
          for (int j = i + 1; j < 5; ++j) ps.pairs.emplace_back(b[i], b[j]);
        if (!ps.solve(0)) return false;
        found = witness_from_paths(x, ps.paths, "K5-subdivision");
        return true;
      });
  return found;
}

std::optional<KuratowskiWitness> k33_search(const Complex& x, const Adjacency& adj,
                                            PairConnectivity& conn) {
  auto cands = candidates(adj, 3);
  std::optional<KuratowskiWitness> found;
  for_each_combination(
      static_cast<long>(cands.size()), 6, [&](const std::vector<long>& idx) {
        std::vector<VertexId> b(6);
        for (int i = 0; i < 6; ++i) b[i] = cands[idx[i]];
        // Splits into two sides of three; the first chosen vertex always
        // sits on side A, so each split is tried once.
        return for_each_combination(5, 2, [&](const std::vector<long>& pick) {
          std::vector<VertexId> a{b[0], b[1 + pick[0]], b[1 + pick[1]]}, c;
          for (int i = 1; i < 6; ++i)
            if (i != 1 + pick[0] && i != 1 + pick[1]) c.push_back(b[i]);
          for (VertexId va : a)
            for (VertexId vc : c)
              if (conn(va, vc) < 3) return false;
          PathSystem ps{adj, {b.begin(), b.end()}, {}, {}, {}};
          for (VertexId va : a)
            for (VertexId vc : c) ps.pairs.emplace_back(va, vc);
          if (!ps.solve(0)) return false;
          found = witness_from_paths(x, ps.paths, "K33-subdivision");
          return true;
        });
      });
  return found;
}

PlanarityResult planar_yes() { return {true, false, {}, "", ""}; }

PlanarityResult nonplanar_evidence(std::string why) {
  PlanarityResult r;
  r.planar = false;
  r.has_witness = false;
  r.witness_kind = "evidence";
  r.evidence = std::move(why);
  return r;
}

PlanarityResult from_kuratowski(const Complex& x) {
  if (graph_planar(x)) return planar_yes();
  auto kw = find_kuratowski(x);
  if (!kw) return nonplanar_evidence("nonplanar graph skeleton");
  return {false, true, std::move(kw->subgraph), std::move(kw->kind), ""};
}

// Every simplex of w, read by labels, is a simplex of x.
bool witness_inside(const Complex& x, const Complex& w) {
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

PlanarityResult planar_impl(const Complex& x) {
  if (x.dim() <= 1) return from_kuratowski(x);

  // Local tests: in the plane an edge borders at most two filled triangles,
  // and a vertex whose link contains a circle can carry nothing else.
  std::vector<Simplex> triangles;
  std::map<Simplex, long> edge_tri_count;
  for (const Simplex& s : x.simplices()) {
    if (s.size() != 3) continue;
    triangles.push_back(s);
    edge_tri_count[{s[0], s[1]}]++;
    edge_tri_count[{s[0], s[2]}]++;
    edge_tri_count[{s[1], s[2]}]++;
  }
  for (const auto& [e, c] : edge_tri_count) {
    if (c <= 2) continue;
    std::ostringstream why;
    why << "edge " << x.label(e[0]) << "," << x.label(e[1]) << " lies in " << c
        << " faces";
    return nonplanar_evidence(why.str());
  }
  for (VertexId v : x.vertices()) {
    Complex l = x.link({v});
    if (l.empty() || l.dim() <= 0) continue;
    long circles = 0;
    bool bad = false;
    auto comps = l.components();
    for (const Complex& c : comps) {
      if (c.is_circle())
        ++circles;
      else if (!c.is_point() && !c.is_interval())
        bad = true;
    }
    if (bad || circles > 1 || (circles == 1 && comps.size() > 1))
      return nonplanar_evidence("link of vertex " + x.label(v) +
                                " is not a circle or disjoint arcs");
  }

  // The sheet containing the least triangle: triangles connected through
  // shared (necessarily two-sided) edges.
  std::map<Simplex, std::vector<std::size_t>> edge_tris;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const Simplex& t = triangles[i];
    edge_tris[{t[0], t[1]}].push_back(i);
    edge_tris[{t[0], t[2]}].push_back(i);
    edge_tris[{t[1], t[2]}].push_back(i);
  }
  std::vector<char> in_sheet(triangles.size(), 0);
  std::queue<std::size_t> bfs;
  bfs.push(0);
  in_sheet[0] = 1;
  while (!bfs.empty()) {
    std::size_t i = bfs.front();
    bfs.pop();
    const Simplex& t = triangles[i];
    for (const Simplex& e :
         {Simplex{t[0], t[1]}, Simplex{t[0], t[2]}, Simplex{t[1], t[2]}})
      for (std::size_t j : edge_tris[e])
        if (!in_sheet[j]) {
          in_sheet[j] = 1;
          bfs.push(j);
        }
  }

  Complex sheet;                    // fresh copy for the surface machinery
  std::set<Simplex> sheet_cells;    // the same cells as simplices of x
  std::map<Simplex, long> sheet_edge_count;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    if (!in_sheet[i]) continue;
    const Simplex& t = triangles[i];
    sheet.add_simplex_labels({x.label(t[0]), x.label(t[1]), x.label(t[2])});
    sheet_cells.insert(t);
    for (const Simplex& e :
         {Simplex{t[0], t[1]}, Simplex{t[0], t[2]}, Simplex{t[1], t[2]}}) {
      sheet_cells.insert(e);
      sheet_edge_count[e]++;
    }
    for (VertexId v : t) sheet_cells.insert(Simplex{v});
  }

  if (!decomp::is_surface(sheet))
    throw guard_failed("planar: sheet pinched at a vertex is not supported");
  if (!decomp::surface_orientable(sheet))
    return nonplanar_evidence("nonorientable sheet");
  long chi = sheet.euler();
  long b = decomp::surface_boundary_count(sheet);
  if (b == 0) return nonplanar_evidence("closed surface sheet");
  if (2 - b - chi != 0) return nonplanar_evidence("sheet of positive genus");

  // Boundary circles of the sheet, as a circle index per vertex.
  std::map<VertexId, std::vector<VertexId>> badj;
  for (const auto& [e, c] : sheet_edge_count) {
    if (c != 1) continue;
    badj[e[0]].push_back(e[1]);
    badj[e[1]].push_back(e[0]);
  }
  std::map<VertexId, long> circle_of;
  long n_circles = 0;
  for (const auto& [v, nb] : badj) {
    if (circle_of.count(v)) continue;
    std::queue<VertexId> q;
    q.push(v);
    circle_of[v] = n_circles;
    while (!q.empty()) {
      VertexId a = q.front();
      q.pop();
      for (VertexId u : badj[a])
        if (!circle_of.count(u)) {
          circle_of[u] = n_circles;
          q.push(u);
        }
    }
    ++n_circles;
  }

  // Everything outside the sheet, in one complex; components may share the
  // sheet's boundary vertices (two whiskers at one rim vertex live in the
  // same complement disk).
  Complex outside;
  bool any_outside = false;
  for (const Simplex& s : x.simplices()) {
    if (sheet_cells.count(s)) continue;
    std::vector<std::string> labels;
    for (VertexId v : s) labels.push_back(x.label(v));
    outside.add_simplex_labels(labels);
    any_outside = true;
  }
  if (!any_outside) return planar_yes();

  auto pieces = outside.components();
  std::vector<long> attach(pieces.size(), -1);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::set<long> att;
    for (VertexId v : pieces[i].vertices()) {
      VertexId xv = x.id_of(pieces[i].label(v));
      auto it = circle_of.find(xv);
      if (it != circle_of.end()) att.insert(it->second);
    }
    if (att.size() >= 2)
      return nonplanar_evidence(
          "a piece meets two boundary circles of one sheet");
    if (att.empty())
      return nonplanar_evidence("a piece misses the sheet boundary");
    attach[i] = *att.begin();
  }

  // Per circle: the circle, its pieces, and an apex standing for the solid
  // sheet behind the circle must embed together in the complement disk.
  for (long ci = 0; ci < n_circles; ++ci) {
    Complex sub;
    std::vector<std::string> rim;
    for (const auto& [e, c] : sheet_edge_count)
      if (c == 1 && circle_of[e[0]] == ci)
        sub.add_simplex_labels({x.label(e[0]), x.label(e[1])});
    for (const auto& [v, circ] : circle_of)
      if (circ == ci) rim.push_back(x.label(v));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (attach[i] != ci) continue;
      for (const Simplex& s : pieces[i].maximal_simplices()) {
        std::vector<std::string> labels;
        for (VertexId v : s) labels.push_back(pieces[i].label(v));
        sub.add_simplex_labels(labels);
      }
    }
    std::string apex = sub.fresh_label("apex");
    for (const std::string& r : rim) sub.add_simplex_labels({apex, r});
    PlanarityResult res = planar_impl(sub);
    if (!res.planar) {
      if (res.has_witness && witness_inside(x, res.witness)) return res;
      return nonplanar_evidence(
          res.evidence.empty()
              ? "attachments of a boundary circle do not fit in its complement disk"
              : res.evidence);
    }
  }
  return planar_yes();
}

}  // namespace

std::optional<KuratowskiWitness> find_kuratowski(const Complex& x) {
  Adjacency adj = adjacency(x);
  BlockFinder bf(adj);
  for (const Adjacency& blk : bf.blocks) {
    std::size_t edge_count = 0;
    for (const auto& [v, nb] : blk) edge_count += nb.size();
    edge_count /= 2;
    if (blk.size() < 5 || edge_count < 9) continue;
    // Decide first: the exhaustive search only runs on blocks that are
    // known to carry a subdivision, where it terminates quickly.
    if (dmp_planar(blk)) continue;
    PairConnectivity conn{blk, {}};
    if (edge_count >= 10)
      if (auto w = k5_search(x, blk, conn)) return w;
    if (blk.size() >= 6)
      if (auto w = k33_search(x, blk, conn)) return w;
  }
  return std::nullopt;
}

bool graph_planar(const Complex& x) {
  Adjacency adj = adjacency(x);
  BlockFinder bf(adj);
  for (const Adjacency& blk : bf.blocks)
    if (!dmp_planar(blk)) return false;
  return true;
}

long max_disjoint_paths(const Complex& x, VertexId u, VertexId w, long limit) {
  if (u == w)
    throw guard_failed("max_disjoint_paths: distinct vertices required");
  Adjacency adj = adjacency(x);
  if (!adj.count(u) || !adj.count(w))
    throw guard_failed("max_disjoint_paths: vertex not in complex");
  return flow_disjoint(adj, u, w, limit);
}

PlanarityResult planar(const Complex& x) {
  if (x.empty()) throw guard_failed("planar: nonempty complex required");
  if (!x.connected()) throw guard_failed("planar: connected complex required");
  if (x.dim() > 2) throw guard_failed("planar: dimension <= 2 required");
  PlanarityResult r = planar_impl(x);
  if (!r.planar && !r.has_witness) {
    // The obstruction may still show as a graph inside the 1-skeleton,
    // which makes a better certificate than prose.
    if (auto kw = find_kuratowski(x)) {
      r.has_witness = true;
      r.witness = std::move(kw->subgraph);
      r.witness_kind = std::move(kw->kind);
    }
  }
  return r;
}

}  // namespace braidcx::planarity
