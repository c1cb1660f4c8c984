// complex.cpp — simplicial complex storage and local/global queries.

#include "braidcx/complex.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidcx::core {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// construction and parsing

VertexId Complex::intern(const std::string& label) {
  auto it = ids_.find(label);
  if (it != ids_.end()) return it->second;
  VertexId id = static_cast<VertexId>(labels_.size());
  labels_.push_back(label);
  ids_.emplace(label, id);
  return id;
}

void Complex::add_closed(const Simplex& s) {
  // Insert s together with all nonempty faces.
  std::size_t n = s.size();
  for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) f.push_back(s[i]);
    cells_.insert(std::move(f));
  }
}

void Complex::add_simplex(Simplex s) {
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::runtime_error("simplex has a repeated vertex");
  if (s.empty()) throw std::runtime_error("empty simplex");
  add_closed(s);
}

void Complex::add_simplex_labels(const std::vector<std::string>& labels) {
  Simplex s;
  s.reserve(labels.size());
  for (const auto& l : labels) s.push_back(intern(l));
  add_simplex(std::move(s));
}

Complex Complex::from_maximal(const std::vector<std::vector<std::string>>& maximal) {
  // Pre-intern the sorted label set so ids are stable under reordering input.
  std::set<std::string> all;
  for (const auto& line : maximal)
    for (const auto& l : line) all.insert(l);
  Complex x;
  for (const auto& l : all) x.intern(l);
  for (const auto& line : maximal) x.add_simplex_labels(line);
  return x;
}

Complex Complex::parse(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (toks.empty()) continue;
    std::set<std::string> uniq(toks.begin(), toks.end());
    if (uniq.size() != toks.size())
      throw std::runtime_error("repeated label in simplex: " + raw);
    lines.push_back(std::move(toks));
  }
  if (lines.empty()) throw std::runtime_error("no simplices in input");
  return from_maximal(lines);
}

Complex Complex::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

std::string Complex::fresh_label(const std::string& base) const {
  std::string cand = base;
  while (ids_.count(cand)) cand += '\'';
  return cand;
}

// ---------------------------------------------------------------------------
// basics

long Complex::dim() const {
  long d = -1;
  for (const auto& s : cells_) d = std::max(d, static_cast<long>(s.size()) - 1);
  return d;
}

std::vector<Simplex> Complex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (const auto& s : cells_) {
    bool maximal = true;
    // A simplex is non-maximal iff some coface with one extra vertex exists.
    for (const auto& t : cells_) {
      if (t.size() != s.size() + 1) continue;
      if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

std::size_t Complex::count_cells(long d) const {
  std::size_t n = 0;
  for (const auto& s : cells_)
    if (static_cast<long>(s.size()) == d + 1) ++n;
  return n;
}

long Complex::euler() const {
  long chi = 0;
  for (const auto& s : cells_) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

std::vector<VertexId> Complex::vertices() const {
  std::vector<VertexId> out;
  for (const auto& s : cells_)
    if (s.size() == 1) out.push_back(s[0]);
  return out;
}

std::size_t Complex::vertex_count() const { return count_cells(0); }

const std::string& Complex::label(VertexId v) const {
  if (v >= labels_.size()) throw std::runtime_error("bad vertex id");
  return labels_[v];
}

VertexId Complex::id_of(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) throw std::runtime_error("no vertex labelled " + label);
  return it->second;
}

Simplex Complex::simplex_of(const std::vector<std::string>& labels) const {
  Simplex s;
  for (const auto& l : labels) s.push_back(id_of(l));
  std::sort(s.begin(), s.end());
  return s;
}

std::string Complex::canonical_string() const {
  std::vector<std::string> lines;
  for (const auto& s : maximal_simplices()) {
    std::vector<std::string> labs;
    for (VertexId v : s) labs.push_back(labels_[v]);
    std::sort(labs.begin(), labs.end());
    std::string line;
    for (std::size_t i = 0; i < labs.size(); ++i) {
      if (i) line += ' ';
      line += labs[i];
    }
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::uint64_t Complex::fingerprint() const { return fnv1a64(canonical_string()); }

// ---------------------------------------------------------------------------
// subcomplexes and local structure

Complex Complex::induced(const std::vector<VertexId>& verts) const {
  std::set<VertexId> keep(verts.begin(), verts.end());
  Complex out;
  out.labels_ = labels_;
  out.ids_ = ids_;
  for (const auto& s : cells_) {
    bool ok = true;
    for (VertexId v : s)
      if (!keep.count(v)) {
        ok = false;
        break;
      }
    if (ok) out.cells_.insert(s);
  }
  return out;
}

Complex Complex::link(const Simplex& s) const {
  Complex out;
  out.labels_ = labels_;
  out.ids_ = ids_;
  for (const auto& t : cells_) {
    // t must be disjoint from s and t ∪ s a cell.
    Simplex u;
    std::set_intersection(t.begin(), t.end(), s.begin(), s.end(),
                          std::back_inserter(u));
    if (!u.empty()) continue;
    Simplex joined;
    std::set_union(t.begin(), t.end(), s.begin(), s.end(),
                   std::back_inserter(joined));
    if (cells_.count(joined)) out.cells_.insert(t);
  }
  return out;
}

Complex Complex::closed_star(const Simplex& s) const {
  Complex out;
  out.labels_ = labels_;
  out.ids_ = ids_;
  for (const auto& t : cells_) {
    if (std::includes(t.begin(), t.end(), s.begin(), s.end()))
      out.add_closed(t);
  }
  return out;
}

Complex Complex::deletion(const std::vector<VertexId>& K) const {
  std::set<VertexId> drop(K.begin(), K.end());
  Complex out;
  out.labels_ = labels_;
  out.ids_ = ids_;
  for (const auto& s : cells_) {
    bool hit = false;
    for (VertexId v : s)
      if (drop.count(v)) {
        hit = true;
        break;
      }
    if (!hit) out.cells_.insert(s);
  }
  return out;
}

long Complex::valency(VertexId v) const { return link({v}).component_count(); }

long Complex::degree(VertexId v) const {
  long d = 0;
  for (const auto& s : cells_)
    if (s.size() == 2 && (s[0] == v || s[1] == v)) ++d;
  return d;
}

PointClass Complex::classify_vertex(VertexId v) const {
  Complex lk = link({v});
  std::size_t nv = lk.vertex_count();
  std::size_t ne = lk.count_cells(1);
  if (lk.dim() >= 2)
    return PointClass::Branch;  // vertex of a 3-cell; never interior/boundary here
  if (ne == 0) {
    if (nv == 2) return PointClass::Interior;  // two points
    if (nv == 1) return PointClass::Boundary;  // one point
    return PointClass::Branch;                 // 0, or 3+ points
  }
  if (!lk.connected()) return PointClass::Branch;
  if (lk.is_circle()) return PointClass::Interior;
  if (lk.is_interval()) return PointClass::Boundary;
  return PointClass::Branch;
}

bool Complex::is_edge(const Simplex& c) const {
  if (c.size() != 2 || !cells_.count(c)) return false;
  for (const auto& t : cells_) {
    if (t.size() != 3) continue;
    if (std::includes(t.begin(), t.end(), c.begin(), c.end())) return false;
  }
  return true;
}

std::vector<VertexId> Complex::boundary_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : vertices())
    if (classify_vertex(v) == PointClass::Boundary) out.push_back(v);
  return out;
}

std::vector<VertexId> Complex::branch_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v : vertices())
    if (classify_vertex(v) == PointClass::Branch) out.push_back(v);
  return out;
}

bool Complex::is_simple(std::vector<VertexId>* offenders) const {
  bool ok = true;
  for (VertexId v : vertices()) {
    Complex lk = link({v});
    bool good;
    if (lk.count_cells(1) == 0) {
      good = true;  // 0-dimensional link
    } else {
      long comps = lk.component_count();
      if (comps == 1) {
        good = true;
      } else if (comps == 2) {
        // connected plus exactly one isolated point
        long isolated = 0;
        for (VertexId w : lk.vertices())
          if (lk.degree(w) == 0 && lk.link({w}).empty()) ++isolated;
        good = (isolated == 1);
      } else {
        good = false;
      }
    }
    if (!good) {
      ok = false;
      if (offenders) offenders->push_back(v);
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------
// global structure

std::vector<long> Complex::vertex_component_ids() const {
  std::vector<long> comp(labels_.size(), -1);
  // Union-find over vertices joined by edges; higher cells add nothing new.
  std::vector<VertexId> parent(labels_.size());
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<VertexId(VertexId)> find = [&](VertexId a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (const auto& s : cells_)
    if (s.size() == 2) parent[find(s[0])] = find(s[1]);
  long next = 0;
  std::map<VertexId, long> roots;
  for (VertexId v : vertices()) {
    VertexId r = find(v);
    auto it = roots.find(r);
    if (it == roots.end()) it = roots.emplace(r, next++).first;
    comp[v] = it->second;
  }
  return comp;
}

long Complex::component_count() const {
  auto comp = vertex_component_ids();
  long m = -1;
  for (long c : comp) m = std::max(m, c);
  return m + 1;
}

bool Complex::connected() const { return component_count() == 1; }

std::vector<Complex> Complex::components() const {
  auto comp = vertex_component_ids();
  long n = component_count();
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (auto& c : out) {
    c.labels_ = labels_;
    c.ids_ = ids_;
  }
  for (const auto& s : cells_) out[static_cast<std::size_t>(comp[s[0]])].cells_.insert(s);
  return out;
}

linalg::AbelianInvariants Complex::h1_space() const {
  if (dim() > 2) throw std::runtime_error("h1_space requires dim <= 2");
  // Index 0-,1-,2-cells.
  std::map<Simplex, long> v_idx, e_idx, t_idx;
  for (const auto& s : cells_) {
    if (s.size() == 1) v_idx.emplace(s, static_cast<long>(v_idx.size()));
    else if (s.size() == 2) e_idx.emplace(s, static_cast<long>(e_idx.size()));
    else if (s.size() == 3) t_idx.emplace(s, static_cast<long>(t_idx.size()));
  }
  linalg::SparseIntMat d1(static_cast<long>(v_idx.size()),
                          static_cast<long>(e_idx.size()));
  for (const auto& [e, j] : e_idx) {
    d1.add(v_idx.at({e[1]}), j, 1);
    d1.add(v_idx.at({e[0]}), j, -1);
  }
  linalg::SparseIntMat d2(static_cast<long>(e_idx.size()),
                          static_cast<long>(t_idx.size()));
  for (const auto& [t, j] : t_idx) {
    d2.add(e_idx.at({t[1], t[2]}), j, 1);
    d2.add(e_idx.at({t[0], t[2]}), j, -1);
    d2.add(e_idx.at({t[0], t[1]}), j, 1);
  }
  return linalg::h1_from_boundaries(d1, d2);
}

// ---------------------------------------------------------------------------
// subdivision

Complex Complex::barycentric_subdivide() const {
  Complex out;
  // One vertex per simplex; labels name the simplex they subdivide.
  std::map<Simplex, std::string> bary;
  for (const auto& s : cells_) {
    std::vector<std::string> labs;
    for (VertexId v : s) labs.push_back(labels_[v]);
    std::sort(labs.begin(), labs.end());
    std::string name = labs[0];
    for (std::size_t i = 1; i < labs.size(); ++i) name += "." + labs[i];
    bary[s] = name;
  }
  for (const auto& [s, name] : bary) out.intern(name);
  // Simplices of the subdivision = chains s0 ⊂ s1 ⊂ ... (proper inclusions).
  std::function<void(const Simplex&, std::vector<std::string>&)> extend =
      [&](const Simplex& top, std::vector<std::string>& chain) {
        chain.push_back(bary.at(top));
        out.add_simplex_labels(chain);
        // proper faces of top
        std::size_t n = top.size();
        for (std::size_t mask = 1; mask + 1 < (1ull << n); ++mask) {
          Simplex f;
          for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) f.push_back(top[i]);
          extend(f, chain);
        }
        chain.pop_back();
      };
  for (const auto& s : maximal_simplices()) {
    std::vector<std::string> chain;
    extend(s, chain);
  }
  return out;
}

Complex Complex::subdivide_edge(const Simplex& e, std::string* out_mid) const {
  if (e.size() != 2 || !cells_.count(e))
    throw std::runtime_error("subdivide_edge: not an edge of the complex");
  if (dim() > 2) throw std::runtime_error("subdivide_edge: dim > 2 unsupported");
  std::string mid = fresh_label(labels_[e[0]] + "-" + labels_[e[1]]);
  if (out_mid) *out_mid = mid;
  std::vector<std::vector<std::string>> lines;
  auto lab = [&](const Simplex& s) {
    std::vector<std::string> ls;
    for (VertexId v : s) ls.push_back(labels_[v]);
    return ls;
  };
  for (const auto& s : maximal_simplices()) {
    bool has = std::includes(s.begin(), s.end(), e.begin(), e.end());
    if (!has) {
      lines.push_back(lab(s));
      continue;
    }
    if (s.size() == 2) {
      lines.push_back({labels_[e[0]], mid});
      lines.push_back({mid, labels_[e[1]]});
    } else {  // triangle {u, v, w} with e = {u, v}
      VertexId w = 0;
      for (VertexId x : s)
        if (x != e[0] && x != e[1]) w = x;
      lines.push_back({labels_[e[0]], mid, labels_[w]});
      lines.push_back({mid, labels_[e[1]], labels_[w]});
    }
  }
  return from_maximal(lines);
}

Complex Complex::subdivide_all_edges() const {
  // Subdivide every edge of the *input* once.  Collect edges first since
  // each step renames the complex.
  std::vector<std::vector<std::string>> edges;
  for (const auto& s : cells_)
    if (s.size() == 2) edges.push_back({labels_[s[0]], labels_[s[1]]});
  Complex cur = *this;
  for (const auto& e : edges) cur = cur.subdivide_edge(cur.simplex_of(e));
  return cur;
}

Complex Complex::two_skeleton() const {
  Complex out;
  out.labels_ = labels_;
  out.ids_ = ids_;
  for (const auto& s : cells_)
    if (s.size() <= 3) out.cells_.insert(s);
  return out;
}

// ---------------------------------------------------------------------------
// small homeomorphism tests

bool Complex::is_point() const {
  return count_cells(0) == 1 && cells_.size() == 1;
}

bool Complex::is_interval() const {
  if (!is_graph() || empty() || !connected()) return false;
  std::size_t nv = count_cells(0), ne = count_cells(1);
  if (ne == 0 || nv != ne + 1) return false;
  long deg1 = 0;
  for (VertexId v : vertices()) {
    long d = degree(v);
    if (d > 2) return false;
    if (d == 1) ++deg1;
  }
  return deg1 == 2;
}

bool Complex::is_circle() const {
  if (!is_graph() || empty() || !connected()) return false;
  std::size_t nv = count_cells(0), ne = count_cells(1);
  if (nv != ne || nv < 3) return false;
  for (VertexId v : vertices())
    if (degree(v) != 2) return false;
  return true;
}

}  // namespace braidcx::core
