// reduce.cpp — modification moves, the simplification loop, and replay.

#include "braidcx/reduce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace braidcx::reduce {

using core::Complex;
using core::Simplex;
using core::VertexId;

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t parse_hex64(const std::string& s) {
  return std::stoull(s, nullptr, 16);
}

const char* kind_token(Move::Kind k) {
  switch (k) {
    case Move::Kind::TwoSkeleton: return "two_skeleton";
    case Move::Kind::CapOffSphere: return "cap_off_sphere";
    case Move::Kind::AttachTwoCell: return "attach_two_cell";
    case Move::Kind::ContractEdge: return "contract_edge";
    case Move::Kind::UncontractEdge: return "uncontract_edge";
  }
  return "?";
}

Move::Kind kind_of_token(const std::string& t) {
  if (t == "two_skeleton") return Move::Kind::TwoSkeleton;
  if (t == "cap_off_sphere") return Move::Kind::CapOffSphere;
  if (t == "attach_two_cell") return Move::Kind::AttachTwoCell;
  if (t == "contract_edge") return Move::Kind::ContractEdge;
  if (t == "uncontract_edge") return Move::Kind::UncontractEdge;
  throw std::runtime_error("unknown move kind: " + t);
}

std::vector<std::vector<std::string>> maximal_labels(const Complex& x) {
  std::vector<std::vector<std::string>> out;
  for (const Simplex& m : x.maximal_simplices()) {
    std::vector<std::string> labs;
    for (VertexId v : m) labs.push_back(x.label(v));
    out.push_back(std::move(labs));
  }
  return out;
}

// Cells of s as comma-joined label tokens, canonically ordered.
std::vector<std::string> cell_tokens(const Complex& s) {
  std::vector<std::string> toks;
  for (const Simplex& m : s.maximal_simplices()) {
    std::vector<std::string> labs;
    for (VertexId v : m) labs.push_back(s.label(v));
    std::sort(labs.begin(), labs.end());
    std::string t;
    for (std::size_t i = 0; i < labs.size(); ++i) {
      if (i) t += ",";
      t += labs[i];
    }
    toks.push_back(std::move(t));
  }
  std::sort(toks.begin(), toks.end());
  return toks;
}

Complex complex_of_cell_tokens(const std::vector<std::string>& toks) {
  std::vector<std::vector<std::string>> cells;
  for (const std::string& t : toks) {
    std::vector<std::string> labs;
    std::string cur;
    for (char ch : t) {
      if (ch == ',') {
        labs.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    labs.push_back(cur);
    cells.push_back(std::move(labs));
  }
  return Complex::from_maximal(cells);
}

// Closed connected 2-manifold with sphere Euler characteristic.
bool is_two_sphere(const Complex& s) {
  if (s.dim() != 2 || !s.connected() || s.euler() != 2) return false;
  std::map<Simplex, long> edge_count;
  for (const Simplex& c : s.simplices()) {
    if (c.size() != 3) continue;
    for (int drop = 0; drop < 3; ++drop) {
      Simplex e;
      for (int p = 0; p < 3; ++p)
        if (p != drop) e.push_back(c[p]);
      ++edge_count[e];
    }
  }
  for (const Simplex& c : s.simplices())
    if (c.size() == 2 && edge_count[c] != 2) return false;
  for (VertexId v : s.vertices())
    if (!s.link({v}).is_circle()) return false;
  return true;
}

}  // namespace

// --- move log plumbing ------------------------------------------------------

std::string Move::str() const {
  std::string s = kind_token(kind);
  for (const std::string& p : payload) s += " " + p;
  s += " -> " + hex64(result_fingerprint);
  return s;
}

Move Move::parse(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  if (toks.size() < 3 || toks[toks.size() - 2] != "->")
    throw std::runtime_error("malformed move line: " + line);
  Move m;
  m.kind = kind_of_token(toks[0]);
  m.payload.assign(toks.begin() + 1, toks.end() - 2);
  m.result_fingerprint = parse_hex64(toks.back());
  return m;
}

std::string MoveLog::str() const {
  std::string s = "initial " + hex64(initial_fingerprint) + "\n";
  for (const Move& m : moves) s += m.str() + "\n";
  s += "final " + hex64(final_fingerprint) + "\n";
  return s;
}

MoveLog MoveLog::parse(const std::string& text) {
  MoveLog log;
  std::istringstream in(text);
  std::string line;
  bool saw_initial = false, saw_final = false;
  while (std::getline(in, line)) {
    std::istringstream probe(line);
    std::string first;
    if (!(probe >> first)) continue;  // blank
    if (first == "initial") {
      std::string fp;
      probe >> fp;
      log.initial_fingerprint = parse_hex64(fp);
      saw_initial = true;
    } else if (first == "final") {
      std::string fp;
      probe >> fp;
      log.final_fingerprint = parse_hex64(fp);
      saw_final = true;
    } else {
      log.moves.push_back(Move::parse(line));
    }
  }
  if (!saw_initial || !saw_final)
    throw std::runtime_error("move log needs initial and final lines");
  return log;
}

// --- the moves ---------------------------------------------------------------

std::vector<std::vector<VertexId>> link_graph_components(const Complex& x,
                                                         VertexId w) {
  Complex lk = x.link({w});
  std::vector<std::vector<VertexId>> out;
  std::vector<std::pair<std::string, std::vector<VertexId>>> keyed;
  for (const Complex& comp : lk.components()) {
    if (comp.count_cells(1) == 0) continue;  // isolated point
    std::vector<VertexId> verts;
    std::string least;
    for (VertexId v : comp.vertices()) {
      const std::string& lab = comp.label(v);
      if (least.empty() || lab < least) least = lab;
      verts.push_back(x.id_of(lab));
    }
    std::sort(verts.begin(), verts.end());
    keyed.emplace_back(least, std::move(verts));
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [least, verts] : keyed) out.push_back(std::move(verts));
  return out;
}

std::pair<Complex, Move> two_skeleton(const Complex& x) {
  auto maximal = x.maximal_simplices();
  if (maximal.size() == 1 && maximal[0].size() == 4)
    throw excluded_case(
        "the 2-skeleton of a solid tetrahedron is a sphere; no braid "
        "equivalence holds");
  Complex y = x.two_skeleton();
  Move m;
  m.kind = Move::Kind::TwoSkeleton;
  m.result_fingerprint = y.fingerprint();
  return {std::move(y), std::move(m)};
}

std::pair<Complex, Move> contract_edge(const Complex& x, const Simplex& e) {
  if (e.size() != 2 || !x.contains(e))
    throw guard_failed("contract_edge: not an edge of the complex");
  if (!x.is_edge(e))
    throw guard_failed("contract_edge: a 2-cell contains the edge");

  // Try the lesser-labelled endpoint as the vanishing vertex first.
  VertexId a = e[0], b = e[1];
  if (x.label(b) < x.label(a)) std::swap(a, b);
  std::string why;
  for (auto [v, w] : {std::pair{a, b}, std::pair{b, a}}) {
    Complex lk = x.link({v});
    std::vector<Complex> comps = lk.components();
    if (comps.size() != 2) {
      why = "link of the vanishing endpoint must be a connected graph plus a point";
      continue;
    }
    const std::string& wlab = x.label(w);
    long point_side = -1;
    for (int c = 0; c < 2; ++c)
      if (comps[c].vertex_count() == 1 && comps[c].has_label(wlab)) point_side = c;
    if (point_side < 0) {
      why = "the other endpoint is not an isolated point of the link";
      continue;
    }
    const Complex& gamma = comps[1 - point_side];
    if (gamma.is_circle()) {
      auto bdry = x.boundary_vertices();
      if (std::find(bdry.begin(), bdry.end(), w) != bdry.end()) {
        why = "the link is a circle but the kept endpoint is a boundary point";
        continue;
      }
    }

    // Merge v into w.
    const std::string vlab = x.label(v);
    std::vector<std::vector<std::string>> cells;
    for (auto labs : maximal_labels(x)) {
      for (std::string& l : labs)
        if (l == vlab) l = wlab;
      std::sort(labs.begin(), labs.end());
      labs.erase(std::unique(labs.begin(), labs.end()), labs.end());
      cells.push_back(std::move(labs));
    }
    Complex y = Complex::from_maximal(cells);
    Move m;
    m.kind = Move::Kind::ContractEdge;
    m.payload = {vlab, wlab};
    m.result_fingerprint = y.fingerprint();
    return {std::move(y), std::move(m)};
  }
  throw guard_failed("contract_edge: " + why);
}

std::pair<Complex, Move> uncontract_vertex(const Complex& x, VertexId w,
                                           long component_choice) {
  std::vector<VertexId> offenders;
  x.is_simple(&offenders);
  if (std::find(offenders.begin(), offenders.end(), w) == offenders.end())
    throw guard_failed("uncontract_vertex: vertex is simple");
  auto comps = link_graph_components(x, w);
  if (component_choice < 0 ||
      component_choice >= static_cast<long>(comps.size()))
    throw guard_failed("uncontract_vertex: no such link component");

  const std::string wlab = x.label(w);
  std::set<std::string> gamma;
  std::string least;
  for (VertexId v : comps[component_choice]) {
    const std::string& lab = x.label(v);
    if (least.empty() || lab < least) least = lab;
    gamma.insert(lab);
  }
  const std::string vlab =
      x.fresh_label(wlab + "_" + std::to_string(component_choice));

  std::vector<std::vector<std::string>> cells;
  for (auto labs : maximal_labels(x)) {
    bool has_w = std::find(labs.begin(), labs.end(), wlab) != labs.end();
    if (has_w && labs.size() >= 2) {
      bool rest_in_gamma = true;
      for (const std::string& l : labs)
        if (l != wlab && !gamma.count(l)) rest_in_gamma = false;
      if (rest_in_gamma)
        for (std::string& l : labs)
          if (l == wlab) l = vlab;
    }
    cells.push_back(std::move(labs));
  }
  cells.push_back({vlab, wlab});
  Complex y = Complex::from_maximal(cells);
  Move m;
  m.kind = Move::Kind::UncontractEdge;
  m.payload = {vlab, wlab, least};
  m.result_fingerprint = y.fingerprint();
  return {std::move(y), std::move(m)};
}

std::pair<Complex, Move> cap_off_sphere(const Complex& x, const Complex& s,
                                        long k) {
  // s must sit inside x.
  for (const auto& labs : maximal_labels(s)) {
    for (const std::string& l : labs)
      if (!x.has_label(l))
        throw guard_failed("cap_off_sphere: attaching set is not a subcomplex");
    if (!x.contains(x.simplex_of(labs)))
      throw guard_failed("cap_off_sphere: attaching set is not a subcomplex");
  }

  if (k == 2) {
    if (!s.is_circle())
      throw guard_failed("cap_off_sphere: attaching set is not a circle");

    // Region-grow the 2-cells of x across edges not on s; accept a region
    // that forms a disk whose boundary is exactly s and whose interior
    // holds a branch point of x.
    std::set<Simplex> s_edges;
    for (const Simplex& c : s.simplices())
      if (c.size() == 2)
        s_edges.insert(x.simplex_of({s.label(c[0]), s.label(c[1])}));
    std::vector<Simplex> tris;
    for (const Simplex& c : x.simplices())
      if (c.size() == 3) tris.push_back(c);
    std::map<Simplex, std::vector<long>> by_edge;
    for (long t = 0; t < static_cast<long>(tris.size()); ++t)
      for (int drop = 0; drop < 3; ++drop) {
        Simplex e;
        for (int p = 0; p < 3; ++p)
          if (p != drop) e.push_back(tris[t][p]);
        by_edge[e].push_back(t);
      }

    std::set<std::string> s_verts;
    for (VertexId v : s.vertices()) s_verts.insert(s.label(v));
    std::set<VertexId> branch;
    for (VertexId v : x.branch_vertices()) branch.insert(v);

    std::vector<bool> used(tris.size(), false);
    for (long seed = 0; seed < static_cast<long>(tris.size()); ++seed) {
      if (used[seed]) continue;
      // Grow the region containing the seed.
      std::vector<long> region{seed};
      used[seed] = true;
      for (std::size_t qi = 0; qi < region.size(); ++qi)
        for (int drop = 0; drop < 3; ++drop) {
          Simplex e;
          for (int p = 0; p < 3; ++p)
            if (p != drop) e.push_back(tris[region[qi]][p]);
          if (s_edges.count(e)) continue;
          for (long other : by_edge[e])
            if (!used[other]) {
              used[other] = true;
              region.push_back(other);
            }
        }

      // Disk test: every edge on at most two region triangles, boundary
      // edges exactly s, Euler characteristic 1, no pinched vertices.
      std::map<Simplex, long> count;
      for (long t : region)
        for (int drop = 0; drop < 3; ++drop) {
          Simplex e;
          for (int p = 0; p < 3; ++p)
            if (p != drop) e.push_back(tris[t][p]);
          ++count[e];
        }
      bool ok = true;
      std::set<Simplex> boundary;
      for (auto& [e, c] : count) {
        if (c > 2) ok = false;
        if (c == 1) boundary.insert(e);
      }
      if (!ok || boundary != s_edges) continue;
      std::vector<std::vector<std::string>> cells;
      for (long t : region) {
        std::vector<std::string> labs;
        for (VertexId v : tris[t]) labs.push_back(x.label(v));
        cells.push_back(std::move(labs));
      }
      Complex disk = Complex::from_maximal(cells);
      if (disk.euler() != 1) continue;
      bool pinched = false;
      for (VertexId v : disk.vertices())
        if (!disk.link({v}).connected()) pinched = true;
      if (pinched) continue;
      bool has_branch = false;
      for (VertexId v : disk.vertices())
        if (!s_verts.count(disk.label(v)) && branch.count(x.id_of(disk.label(v))))
          has_branch = true;
      if (!has_branch) continue;

      // Attach the 2-cell as a cone over s with a fresh apex.
      std::string apex = x.fresh_label("cap");
      std::vector<std::vector<std::string>> out = maximal_labels(x);
      for (const Simplex& c : s.simplices())
        if (c.size() == 2)
          out.push_back({apex, s.label(c[0]), s.label(c[1])});
      Complex y = Complex::from_maximal(out);
      Move m;
      m.kind = Move::Kind::AttachTwoCell;
      m.payload = cell_tokens(s);
      m.result_fingerprint = y.fingerprint();
      return {std::move(y), std::move(m)};
    }
    throw guard_failed(
        "cap_off_sphere: the circle bounds no disk with a branch point inside");
  }

  if (k == 3) {
    if (!is_two_sphere(s))
      throw guard_failed("cap_off_sphere: attaching set is not a sphere");
    if (is_two_sphere(x))
      throw guard_failed("cap_off_sphere: the whole complex is a sphere");
    // A cone over s is a ball bounded by s; capping it off is excluded.
    std::vector<std::string> extra;
    for (VertexId v : x.vertices())
      if (!s.has_label(x.label(v))) extra.push_back(x.label(v));
    if (extra.size() == 1) {
      std::vector<std::vector<std::string>> cone;
      for (const auto& labs : maximal_labels(s)) {
        std::vector<std::string> cell = labs;
        cell.push_back(extra[0]);
        cone.push_back(std::move(cell));
      }
      if (Complex::from_maximal(cone) == x)
        throw guard_failed("cap_off_sphere: capping a ball along its boundary");
    }
    std::string apex = x.fresh_label("cap");
    std::vector<std::vector<std::string>> out = maximal_labels(x);
    for (const auto& labs : maximal_labels(s)) {
      if (labs.size() != 3) continue;
      std::vector<std::string> cell = labs;
      cell.push_back(apex);
      out.push_back(std::move(cell));
    }
    Complex y = Complex::from_maximal(out);
    Move m;
    m.kind = Move::Kind::CapOffSphere;
    m.payload = cell_tokens(s);
    m.result_fingerprint = y.fingerprint();
    return {std::move(y), std::move(m)};
  }

  throw guard_failed("cap_off_sphere: only 2- and 3-dimensional caps are supported");
}

std::pair<Complex, MoveLog> simplify(const Complex& x) {
  if (!x.connected()) throw guard_failed("simplify: complex must be connected");
  MoveLog log;
  log.initial_fingerprint = x.fingerprint();

  auto [cur, mv] = two_skeleton(x);
  log.moves.push_back(mv);

  for (;;) {
    std::vector<VertexId> offenders;
    if (cur.is_simple(&offenders)) break;
    VertexId w = offenders[0];
    std::string least = cur.label(w);
    for (VertexId v : offenders)
      if (cur.label(v) < least) {
        least = cur.label(v);
        w = v;
      }
    auto [next, move] = uncontract_vertex(cur, w, 0);
    log.moves.push_back(move);
    cur = std::move(next);
  }

  log.final_fingerprint = cur.fingerprint();
  return {std::move(cur), std::move(log)};
}

core::Complex replay(const Complex& initial, const MoveLog& log) {
  if (initial.fingerprint() != log.initial_fingerprint)
    throw std::runtime_error("replay: initial fingerprint mismatch");
  Complex cur = initial;
  for (std::size_t i = 0; i < log.moves.size(); ++i) {
    const Move& m = log.moves[i];
    Complex next;
    switch (m.kind) {
      case Move::Kind::TwoSkeleton:
        next = two_skeleton(cur).first;
        break;
      case Move::Kind::ContractEdge: {
        if (m.payload.size() != 2)
          throw std::runtime_error("replay: bad contract payload");
        next = contract_edge(cur, cur.simplex_of({m.payload[0], m.payload[1]}))
                   .first;
        break;
      }
      case Move::Kind::UncontractEdge: {
        if (m.payload.size() != 3)
          throw std::runtime_error("replay: bad uncontract payload");
        VertexId w = cur.id_of(m.payload[1]);
        auto comps = link_graph_components(cur, w);
        long choice = -1;
        for (long c = 0; c < static_cast<long>(comps.size()); ++c) {
          std::string least = cur.label(comps[c][0]);
          for (VertexId v : comps[c])
            if (cur.label(v) < least) least = cur.label(v);
          if (least == m.payload[2]) choice = c;
        }
        if (choice < 0)
          throw std::runtime_error("replay: link component not found");
        next = uncontract_vertex(cur, w, choice).first;
        break;
      }
      case Move::Kind::AttachTwoCell:
        next = cap_off_sphere(cur, complex_of_cell_tokens(m.payload), 2).first;
        break;
      case Move::Kind::CapOffSphere:
        next = cap_off_sphere(cur, complex_of_cell_tokens(m.payload), 3).first;
        break;
    }
    if (next.fingerprint() != m.result_fingerprint)
      throw std::runtime_error("replay: fingerprint mismatch at step " +
                               std::to_string(i + 1));
    cur = std::move(next);
  }
  if (cur.fingerprint() != log.final_fingerprint)
    throw std::runtime_error("replay: final fingerprint mismatch");
  return cur;
}

}  // namespace braidcx::reduce
