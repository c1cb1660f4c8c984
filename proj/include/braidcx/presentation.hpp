// presentation.hpp — finite group presentations and the tree families.
//
// Words are sequences of (symbol, ±1).  The concrete presentations built
// here are the two-strand groups of leaf-labelled trees, their closures,
// and the union of two tree closures, plus the rank formulas they satisfy.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidcx/complex.hpp"
#include "braidcx/snf.hpp"

namespace braidcx::presentation {

struct GeneratorSymbol {
  enum class Family { S, SPrime, T, U, Free };
  Family family = Family::Free;
  long i = 0, j = 0;  // S/SPrime use (i, j); T/U use i
  std::string name;   // Free only

  static GeneratorSymbol s(long i, long j) { return {Family::S, i, j, ""}; }
  static GeneratorSymbol s_prime(long i, long j) { return {Family::SPrime, i, j, ""}; }
  static GeneratorSymbol t(long i) { return {Family::T, i, 0, ""}; }
  static GeneratorSymbol u(long i) { return {Family::U, i, 0, ""}; }
  static GeneratorSymbol free(std::string n) { return {Family::Free, 0, 0, std::move(n)}; }

  std::string str() const;
  auto operator<=>(const GeneratorSymbol&) const = default;
};

// One letter g^{+1} or g^{-1}.
struct Letter {
  GeneratorSymbol sym;
  int exp = 1;  // +1 or -1
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word inverse(const Word& w);
std::string word_str(const Word& w);

struct GroupPresentation {
  std::vector<GeneratorSymbol> generators;
  std::vector<Word> relators;

  // Throws if a relator uses a symbol missing from the generator list.
  void validate() const;
  long generator_index(const GeneratorSymbol& g) const;  // -1 if absent

  // Exponent-sum matrix: rows = relators, columns = generators.
  linalg::DenseMat abelianize() const;
  // Invariants of the abelianised group Z^gens / relator rows.
  linalg::AbelianInvariants abelian_invariants() const;

  // Drop generators defined by a length-2 relator g = h^{+-1} (and empty
  // relators).  Keeps the group, shrinks the table.
  GroupPresentation eliminate_trivial_generators() const;

  std::string str() const;  // < g1, g2, ... | w1, w2, ... >
};

// --- rank formulas --------------------------------------------------------

// r(n, nu, mu) = (nu-2)*C(n+mu-2, n-1) - C(n+mu-2, n) - (nu-mu-1)
long rank_r(long n, long nu, long mu);
long binom(long n, long k);

// --- leaf-labelled trees ---------------------------------------------------

// A tree with its leaves labelled 1..k; leaf 1 is the basepoint.
struct LeafLabelledTree {
  core::Complex tree;
  std::vector<core::VertexId> leaf;  // leaf[i-1] = vertex carrying label i

  // leaf_order gives the vertex labels of the leaves in label order 1..k.
  LeafLabelledTree(core::Complex t, const std::vector<std::string>& leaf_order);
  long k() const { return static_cast<long>(leaf.size()); }
};

// Sum over vertices of C(val-1, 2).
long tree_r2(const LeafLabelledTree& t);

// Classes of the pairs {(i,j) : 2 <= i < j <= k} under the tree relation:
// two pairs are identified when their centers agree and their legs point
// into the same components of the split tree — in the same order (the
// generators are then equal) or swapped (then inverse to each other).
struct PairClasses {
  struct Member {
    std::pair<long, long> rep;  // class representative (lex-least pair)
    int sign = 1;               // +1 aligned with rep, -1 swapped
  };
  std::map<std::pair<long, long>, Member> members;
  long class_count = 0;
};
PairClasses pair_classes(const LeafLabelledTree& t);

// B_2 of the tree: generators S(i,j), one relator per non-representative
// pair.  Free of rank tree_r2(t).
GroupPresentation tree_b2(const LeafLabelledTree& t);

// B_2 of the closure of the tree along all leaves: tree_b2 plus free
// stable letters T(2)..T(k).
GroupPresentation tree_closure_b2(const LeafLabelledTree& t);

// B_2 of the union of two tree closures glued hub-to-hub along k strands.
// The second tree's leaf labelling encodes the gluing matchup.
GroupPresentation twotrees_b2(const LeafLabelledTree& t, const LeafLabelledTree& t2);

// Presentation of B_n of a closure along k boundary points of one boundary
// component: base presentation plus stable letters T(2)..T(k) commuting
// with the listed B_{n-1} generators.
GroupPresentation closure_presentation_boundary(
    const GroupPresentation& base,
    const std::vector<GeneratorSymbol>& bn1_generators, long k);

}  // namespace braidcx::presentation
