// complex.hpp — finite simplicial complexes with labelled vertices.
//
// A complex is stored as a face-closed set of simplices over interned vertex
// labels.  The file format is one maximal simplex per line (whitespace-
// separated labels, '#' comments).  Most operations here are the local/global
// queries the rest of the library is built on: links, stars, deletions,
// point classification, subdivision, and 1-dimensional homology.

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "braidcx/snf.hpp"

namespace braidcx::core {

using VertexId = std::uint32_t;
// Vertices sorted ascending, no repeats.
using Simplex = std::vector<VertexId>;

// Point classes at a vertex, decided by the homeomorphism type of its link:
// two points or a circle -> Interior, one point or an arc -> Boundary,
// anything else -> Branch.
enum class PointClass { Interior, Boundary, Branch };

class Complex {
 public:
  Complex() = default;

  // Parse the text format.  Throws std::runtime_error on malformed input
  // (repeated label inside one simplex, empty file).  Vertex ids are
  // assigned in sorted label order so parsing is deterministic.
  static Complex parse(const std::string& text);
  static Complex parse_file(const std::string& path);
  static Complex from_maximal(const std::vector<std::vector<std::string>>& maximal);

  // --- construction ---------------------------------------------------
  VertexId intern(const std::string& label);  // get-or-create a vertex id
  void add_simplex(Simplex s);                // inserts s and all faces
  void add_simplex_labels(const std::vector<std::string>& labels);
  // First of base, base', base'', ... that is not a label yet.
  std::string fresh_label(const std::string& base) const;

  // --- basics ----------------------------------------------------------
  bool empty() const { return cells_.empty(); }
  long dim() const;
  const std::set<Simplex>& simplices() const { return cells_; }
  std::vector<Simplex> maximal_simplices() const;
  bool contains(const Simplex& s) const { return cells_.count(s) != 0; }
  std::size_t count_cells(long d) const;
  long euler() const;
  std::vector<VertexId> vertices() const;
  std::size_t vertex_count() const;

  const std::string& label(VertexId v) const;
  bool has_label(const std::string& s) const { return ids_.count(s) != 0; }
  VertexId id_of(const std::string& label) const;  // throws if absent
  Simplex simplex_of(const std::vector<std::string>& labels) const;

  // Canonical text: maximal simplices as sorted label lines, lines sorted.
  // Equal strings <=> equal labelled complexes, independent of id history.
  std::string canonical_string() const;
  std::uint64_t fingerprint() const;  // FNV-1a over canonical_string

  bool operator==(const Complex& o) const {
    return canonical_string() == o.canonical_string();
  }

  // --- subcomplexes and local structure ---------------------------------
  // Full subcomplex on a vertex subset.
  Complex induced(const std::vector<VertexId>& verts) const;
  // lk(s): all t disjoint from s with t ∪ s a simplex.  Labels carry over.
  Complex link(const Simplex& s) const;
  // Closure of every simplex containing s.
  Complex closed_star(const Simplex& s) const;
  // All simplices disjoint from the vertex set K.
  Complex deletion(const std::vector<VertexId>& K) const;

  long valency(VertexId v) const;  // number of link components
  PointClass classify_vertex(VertexId v) const;
  bool is_edge(const Simplex& c) const;  // 1-simplex in no 2-simplex
  std::vector<VertexId> boundary_vertices() const;
  std::vector<VertexId> branch_vertices() const;
  // Simple: every vertex link is connected, connected plus one isolated
  // point, or has no edges at all.  Offending vertices reported if asked.
  bool is_simple(std::vector<VertexId>* offenders = nullptr) const;

  // --- global structure --------------------------------------------------
  long component_count() const;
  // Component index per vertex id (dense ids only; unused ids get -1).
  std::vector<long> vertex_component_ids() const;
  bool connected() const;
  std::vector<Complex> components() const;
  linalg::AbelianInvariants h1_space() const;  // requires dim <= 2

  // --- subdivision ---------------------------------------------------------
  Complex barycentric_subdivide() const;
  // Stellar subdivision of one edge (splits incident triangles too).
  // Returns the new complex and, if out_mid, the label of the midpoint.
  Complex subdivide_edge(const Simplex& e, std::string* out_mid = nullptr) const;
  Complex subdivide_all_edges() const;  // one midpoint in every current edge
  Complex two_skeleton() const;

  // --- small homeomorphism tests (graphs) ---------------------------------
  bool is_graph() const { return dim() <= 1; }
  bool is_point() const;
  bool is_interval() const;  // homeomorphic to a closed arc
  bool is_circle() const;

  // Degree of v in the 1-skeleton (count of edges at v).
  long degree(VertexId v) const;

 private:
  std::set<Simplex> cells_;
  std::vector<std::string> labels_;         // id -> label
  std::map<std::string, VertexId> ids_;     // label -> id

  void add_closed(const Simplex& s);        // insert s and faces, no checks
};

// FNV-1a 64-bit, used for complex fingerprints and move logs.
std::uint64_t fnv1a64(const std::string& s);

}  // namespace braidcx::core
