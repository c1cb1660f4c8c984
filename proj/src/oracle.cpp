// oracle.cpp — discrete configuration spaces of graphs, cellular H1 and pi1.

#include "braidcx/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace braidcx::oracle {

using core::Complex;
using linalg::AbelianInvariants;
using linalg::SparseIntMat;

GraphModel GraphModel::from_complex(const Complex& x) {
  if (x.dim() > 1) throw std::runtime_error("graph model requires dim <= 1");
  if (x.empty()) throw std::runtime_error("graph model of an empty complex");
  if (!x.connected()) throw std::runtime_error("graph model requires a connected complex");
  // Number vertices in label order.
  std::vector<std::string> labs;
  for (auto v : x.vertices()) labs.push_back(x.label(v));
  std::sort(labs.begin(), labs.end());
  std::map<std::string, long> index;
  for (long i = 0; i < static_cast<long>(labs.size()); ++i) index[labs[i]] = i;
  GraphModel g;
  g.names = labs;
  for (const auto& s : x.simplices()) {
    if (s.size() != 2) continue;
    long a = index.at(x.label(s[0]));
    long b = index.at(x.label(s[1]));
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

GraphModel subdivide_for(const GraphModel& g, long n) {
  if (n < 1) throw std::runtime_error("subdivide_for requires n >= 1");
  GraphModel out;
  out.names = g.names;
  for (const auto& [u, v] : g.edges) {
    long prev = u;
    for (long i = 1; i <= n; ++i) {
      long mid = out.nv();
      out.names.push_back(g.names[u] + "|" + g.names[v] + "|" + std::to_string(i));
      out.edges.emplace_back(std::min(prev, mid), std::max(prev, mid));
      prev = mid;
    }
    out.edges.emplace_back(std::min(prev, v), std::max(prev, v));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

// ---------------------------------------------------------------------------

std::size_t CubeComplex::total_cells() const {
  std::size_t t = 0;
  for (const auto& layer : cells) t += layer.size();
  return t;
}

long CubeComplex::count(long d) const {
  if (d < 0 || d >= static_cast<long>(cells.size())) return 0;
  return static_cast<long>(cells[d].size());
}

long CubeComplex::euler() const {
  long chi = 0;
  for (long d = 0; d < static_cast<long>(cells.size()); ++d)
    chi += (d % 2 == 0) ? count(d) : -count(d);
  return chi;
}

long CubeComplex::cell_index(long d, const std::vector<long>& cell) const {
  if (d < 0 || d >= static_cast<long>(cells.size())) return -1;
  const auto& layer = cells[d];
  auto it = std::lower_bound(layer.begin(), layer.end(), cell);
  if (it == layer.end() || *it != cell) return -1;
  return static_cast<long>(it - layer.begin());
}

std::vector<long> CubeComplex::corner(const std::vector<long>& cell,
                                      const std::vector<bool>& heads) const {
  const long nv = graph.nv();
  std::vector<long> out;
  out.reserve(cell.size());
  std::size_t ei = 0;
  for (long item : cell) {
    if (item < nv) {
      out.push_back(item);
    } else {
      const auto& e = graph.edges[item - nv];
      out.push_back(heads[ei] ? e.second : e.first);
      ++ei;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Signed codimension-1 faces of a cell: replacing edge item e_i (i-th edge
// in item order) by its head carries sign (-1)^{i-1}, by its tail the
// opposite sign.
std::vector<std::pair<std::vector<long>, int>> signed_faces(
    const GraphModel& g, const std::vector<long>& cell) {
  const long nv = g.nv();
  std::vector<std::pair<std::vector<long>, int>> out;
  long ei = 0;
  for (std::size_t p = 0; p < cell.size(); ++p) {
    if (cell[p] < nv) continue;
    const auto& e = g.edges[cell[p] - nv];
    int sign = (ei % 2 == 0) ? 1 : -1;
    for (int head = 0; head < 2; ++head) {
      std::vector<long> face = cell;
      face[p] = head ? e.second : e.first;
      std::sort(face.begin(), face.end());
      out.emplace_back(std::move(face), head ? sign : -sign);
    }
    ++ei;
  }
  return out;
}

}  // namespace

SparseIntMat CubeComplex::boundary(long d) const {
  SparseIntMat m(count(d - 1), count(d));
  if (d < 1 || d > dim()) return m;
  for (long j = 0; j < count(d); ++j) {
    for (auto& [face, sign] : signed_faces(graph, cells[d][j])) {
      long row = cell_index(d - 1, face);
      if (row < 0) throw std::logic_error("boundary face missing from complex");
      m.add(row, j, sign);
    }
  }
  return m;
}

long CubeComplex::components() const {
  long n0 = count(0);
  std::vector<long> parent(n0);
  std::iota(parent.begin(), parent.end(), 0l);
  std::function<long(long)> find = [&](long a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (long j = 0; j < count(1); ++j) {
    const auto& cell = cells[1][j];
    long a = cell_index(0, corner(cell, {false}));
    long b = cell_index(0, corner(cell, {true}));
    parent[find(a)] = find(b);
  }
  std::set<long> roots;
  for (long v = 0; v < n0; ++v) roots.insert(find(v));
  return static_cast<long>(roots.size());
}

CubeComplex build_udc(const GraphModel& g, long n, std::size_t cell_limit) {
  if (n < 1) throw std::runtime_error("build_udc requires n >= 1");
  CubeComplex c;
  c.n = n;
  c.graph = g;
  const long nv = g.nv(), ne = g.ne();
  const long max_dim = std::min(n, ne);
  c.cells.assign(max_dim + 1, {});

  // An item is a vertex (0..nv-1) or an edge (nv..nv+ne-1).  Two items are
  // compatible when their closed cells are disjoint.
  auto compatible = [&](long a, long b) {
    if (a > b) std::swap(a, b);
    if (b < nv) return a != b;
    const auto& eb = g.edges[b - nv];
    if (a < nv) return a != eb.first && a != eb.second;
    const auto& ea = g.edges[a - nv];
    return ea.first != eb.first && ea.first != eb.second &&
           ea.second != eb.first && ea.second != eb.second;
  };

  std::size_t total = 0;
  std::vector<long> chosen;
  long edges_chosen = 0;
  // Lexicographic DFS over ascending item ids keeps every layer sorted.
  std::function<void(long)> extend = [&](long from) {
    if (static_cast<long>(chosen.size()) == n) {
      if (++total > cell_limit)
        throw std::runtime_error("cell budget exceeded (limit " +
                                 std::to_string(cell_limit) + ")");
      c.cells[edges_chosen].push_back(chosen);
      return;
    }
    long room = n - static_cast<long>(chosen.size());
    for (long item = from; item <= nv + ne - room; ++item) {
      bool ok = true;
      for (long prev : chosen)
        if (!compatible(prev, item)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(item);
      if (item >= nv) ++edges_chosen;
      extend(item + 1);
      if (item >= nv) --edges_chosen;
      chosen.pop_back();
    }
  };
  extend(0);

  // Boundary-squared must vanish cell by cell.
  for (long d = 2; d <= c.dim(); ++d) {
    for (const auto& cell : c.cells[d]) {
      std::map<std::vector<long>, long> acc;
      for (auto& [face, s1] : signed_faces(g, cell))
        for (auto& [ff, s2] : signed_faces(g, face)) acc[ff] += s1 * s2;
      for (auto& [ff, coeff] : acc)
        if (coeff != 0)
          throw std::logic_error("boundary squared is nonzero");
    }
  }

  return c;
}

AbelianInvariants cube_h1(const CubeComplex& c) {
  SparseIntMat d1 = c.boundary(1);
  SparseIntMat d2 = c.boundary(2);
  return linalg::h1_from_boundaries(d1, d2);
}

presentation::GroupPresentation cube_pi1(const CubeComplex& c) {
  using presentation::GeneratorSymbol;
  using presentation::GroupPresentation;
  using presentation::Letter;
  using presentation::Word;
  if (c.components() != 1)
    throw std::runtime_error("cube_pi1 requires a connected complex");

  const long n0 = c.count(0), n1 = c.count(1);
  // Spanning tree by BFS over the 1-skeleton.
  std::vector<long> tail(n1), head(n1);
  std::vector<std::vector<std::pair<long, long>>> adj(n0);  // (other, edge)
  for (long j = 0; j < n1; ++j) {
    tail[j] = c.cell_index(0, c.corner(c.cells[1][j], {false}));
    head[j] = c.cell_index(0, c.corner(c.cells[1][j], {true}));
    adj[tail[j]].push_back({head[j], j});
    adj[head[j]].push_back({tail[j], j});
  }
  std::vector<bool> in_tree(n1, false), seen(n0, false);
  std::vector<long> queue{0};
  seen[0] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    long v = queue[qi];
    for (auto [w, j] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      in_tree[j] = true;
      queue.push_back(w);
    }
  }

  GroupPresentation p;
  std::vector<long> gen_of_edge(n1, -1);
  for (long j = 0; j < n1; ++j) {
    if (in_tree[j]) continue;
    gen_of_edge[j] = static_cast<long>(p.generators.size());
    p.generators.push_back(GeneratorSymbol::free("x" + std::to_string(j)));
  }

  // Square relator: bottom, right, then the inverses of top and left.
  auto letter_of = [&](long j, int exp) -> std::vector<Letter> {
    if (gen_of_edge[j] < 0) return {};
    return {Letter{p.generators[gen_of_edge[j]], exp}};
  };
  for (long j = 0; j < c.count(2); ++j) {
    const auto& sq = c.cells[2][j];
    // Edge cells of the square: keep one edge item, pin the other at its
    // tail or head.  `which` counts edge items in item order.
    auto edge_cell = [&](int which, bool other_at_head) {
      std::vector<long> cell;
      const long nv = c.graph.nv();
      std::size_t ei = 0;
      for (long item : sq) {
        if (item < nv) {
          cell.push_back(item);
        } else {
          bool keep = (ei == static_cast<std::size_t>(which));
          if (keep) {
            cell.push_back(item);
          } else {
            const auto& e = c.graph.edges[item - nv];
            cell.push_back(other_at_head ? e.second : e.first);
          }
          ++ei;
        }
      }
      std::sort(cell.begin(), cell.end());
      return c.cell_index(1, cell);
    };
    long bottom = edge_cell(0, false);  // first edge varies, second at tail
    long right = edge_cell(1, true);    // second varies, first at head
    long top = edge_cell(0, true);      // first varies, second at head
    long left = edge_cell(1, false);    // second varies, first at tail
    Word w;
    for (const auto& l : letter_of(bottom, 1)) w.push_back(l);
    for (const auto& l : letter_of(right, 1)) w.push_back(l);
    for (const auto& l : letter_of(top, -1)) w.push_back(l);
    for (const auto& l : letter_of(left, -1)) w.push_back(l);
    w = presentation::free_reduce(std::move(w));
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

AbelianInvariants braid_h1_oracle(const Complex& x, long n,
                                  std::size_t cell_limit) {
  GraphModel g = subdivide_for(GraphModel::from_complex(x), n);
  CubeComplex c = build_udc(g, n, cell_limit);
  if (c.components() != 1)
    throw std::runtime_error("discrete configuration space is disconnected");
  return cube_h1(c);
}

}  // namespace braidcx::oracle
