// presentation.cpp — group presentations, tree pair classes, rank formulas.

#include "braidcx/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace braidcx::presentation {

std::string GeneratorSymbol::str() const {
  switch (family) {
    case Family::S:
      return "s_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    case Family::SPrime:
      return "s'_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    case Family::T:
      return "t_" + std::to_string(i);
    case Family::U:
      return "u_" + std::to_string(i);
    case Family::Free:
      return name;
  }
  return name;
}

Word free_reduce(Word w) {
  Word out;
  for (const Letter& l : w) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().sym == l.sym && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->sym, -it->exp});
  return out;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p) s += " ";
    s += w[p].sym.str();
    if (w[p].exp != 1) s += "^" + std::to_string(w[p].exp);
  }
  return s;
}

void GroupPresentation::validate() const {
  std::set<GeneratorSymbol> known(generators.begin(), generators.end());
  if (known.size() != generators.size())
    throw std::runtime_error("presentation lists a generator twice");
  for (const Word& r : relators)
    for (const Letter& l : r) {
      if (l.exp != 1 && l.exp != -1)
        throw std::runtime_error("letter exponent must be +1 or -1");
      if (!known.count(l.sym))
        throw std::runtime_error("relator uses unknown symbol " + l.sym.str());
    }
}

long GroupPresentation::generator_index(const GeneratorSymbol& g) const {
  for (std::size_t p = 0; p < generators.size(); ++p)
    if (generators[p] == g) return static_cast<long>(p);
  return -1;
}

linalg::DenseMat GroupPresentation::abelianize() const {
  std::map<GeneratorSymbol, long> index;
  for (std::size_t p = 0; p < generators.size(); ++p)
    index[generators[p]] = static_cast<long>(p);
  linalg::DenseMat m(static_cast<long>(relators.size()),
                     static_cast<long>(generators.size()));
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (const Letter& l : relators[r]) {
      auto it = index.find(l.sym);
      if (it == index.end())
        throw std::runtime_error("relator uses unknown symbol " + l.sym.str());
      m.at(static_cast<long>(r), it->second) += l.exp;
    }
  return m;
}

linalg::AbelianInvariants GroupPresentation::abelian_invariants() const {
  std::map<GeneratorSymbol, long> index;
  for (std::size_t p = 0; p < generators.size(); ++p)
    index[generators[p]] = static_cast<long>(p);
  // Columns span the relator subgroup of Z^generators.
  linalg::SparseIntMat m(static_cast<long>(generators.size()),
                         static_cast<long>(relators.size()));
  for (std::size_t r = 0; r < relators.size(); ++r)
    for (const Letter& l : relators[r]) {
      auto it = index.find(l.sym);
      if (it == index.end())
        throw std::runtime_error("relator uses unknown symbol " + l.sym.str());
      m.add(it->second, static_cast<long>(r), l.exp);
    }
  return linalg::cokernel_invariants(m, static_cast<long>(generators.size()));
}

GroupPresentation GroupPresentation::eliminate_trivial_generators() const {
  GroupPresentation p = *this;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Word& r : p.relators) r = free_reduce(std::move(r));
    p.relators.erase(
        std::remove_if(p.relators.begin(), p.relators.end(),
                       [](const Word& w) { return w.empty(); }),
        p.relators.end());

    auto drop_generator = [&](const GeneratorSymbol& g) {
      p.generators.erase(std::remove(p.generators.begin(), p.generators.end(), g),
                         p.generators.end());
    };

    for (std::size_t r = 0; r < p.relators.size() && !changed; ++r) {
      const Word& w = p.relators[r];
      if (w.size() == 1) {
        // g = 1: drop the generator and erase it from every relator.
        GeneratorSymbol g = w[0].sym;
        p.relators.erase(p.relators.begin() + static_cast<long>(r));
        drop_generator(g);
        for (Word& other : p.relators) {
          Word kept;
          for (const Letter& l : other)
            if (!(l.sym == g)) kept.push_back(l);
          other = std::move(kept);
        }
        changed = true;
      } else if (w.size() == 2 && !(w[0].sym == w[1].sym)) {
        // a^e b^f = 1: eliminate the larger symbol, substituting a power of
        // the smaller.  (victim, x) -> (kept, -e*f*x).
        Letter a = w[0], b = w[1];
        if (b.sym < a.sym) std::swap(a, b);
        GeneratorSymbol victim = b.sym, kept = a.sym;
        int mult = -a.exp * b.exp;
        p.relators.erase(p.relators.begin() + static_cast<long>(r));
        drop_generator(victim);
        for (Word& other : p.relators)
          for (Letter& l : other)
            if (l.sym == victim) l = Letter{kept, mult * l.exp};
        changed = true;
      }
    }
  }
  return p;
}

std::string GroupPresentation::str() const {
  std::string s = "< ";
  for (std::size_t p = 0; p < generators.size(); ++p) {
    if (p) s += ", ";
    s += generators[p].str();
  }
  s += " | ";
  for (std::size_t p = 0; p < relators.size(); ++p) {
    if (p) s += ", ";
    s += word_str(relators[p]);
  }
  s += " >";
  return s;
}

// --- rank formulas ----------------------------------------------------------

long binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long rank_r(long n, long nu, long mu) {
  if (n < 1 || mu < 1 || nu < mu)
    throw std::invalid_argument("rank_r requires n >= 1 and nu >= mu >= 1");
  return (nu - 2) * binom(n + mu - 2, n - 1) - binom(n + mu - 2, n) -
         (nu - mu - 1);
}

// --- leaf-labelled trees ----------------------------------------------------

LeafLabelledTree::LeafLabelledTree(core::Complex t,
                                   const std::vector<std::string>& leaf_order)
    : tree(std::move(t)) {
  if (tree.empty()) throw std::runtime_error("leaf-labelled tree is empty");
  if (tree.dim() > 1)
    throw std::runtime_error("leaf-labelled tree must be 1-dimensional");
  if (!tree.connected())
    throw std::runtime_error("leaf-labelled tree must be connected");
  long nv = static_cast<long>(tree.count_cells(0));
  long ne = static_cast<long>(tree.count_cells(1));
  if (ne != nv - 1) throw std::runtime_error("leaf-labelled tree must be acyclic");
  std::set<std::string> leaves;
  for (auto v : tree.vertices())
    if (tree.degree(v) <= 1) leaves.insert(tree.label(v));
  std::set<std::string> given(leaf_order.begin(), leaf_order.end());
  if (given.size() != leaf_order.size() || given != leaves)
    throw std::runtime_error("leaf labelling must list every leaf exactly once");
  for (const std::string& lab : leaf_order) leaf.push_back(tree.id_of(lab));
}

long tree_r2(const LeafLabelledTree& t) {
  long sum = 0;
  for (auto v : t.tree.vertices()) sum += binom(t.tree.valency(v) - 1, 2);
  return sum;
}

PairClasses pair_classes(const LeafLabelledTree& t) {
  PairClasses out;
  const long k = t.k();
  if (k < 3) return out;

  // Parent pointers from the basepoint leaf (label 1).
  const auto& tr = t.tree;
  std::map<core::VertexId, std::vector<core::VertexId>> adj;
  for (const auto& s : tr.simplices()) {
    if (s.size() != 2) continue;
    adj[s[0]].push_back(s[1]);
    adj[s[1]].push_back(s[0]);
  }
  std::map<core::VertexId, core::VertexId> parent;
  std::vector<core::VertexId> queue{t.leaf[0]};
  parent[t.leaf[0]] = t.leaf[0];
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    core::VertexId v = queue[qi];
    for (core::VertexId w : adj[v])
      if (!parent.count(w)) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  auto path_to = [&](core::VertexId v) {
    std::vector<core::VertexId> path{v};
    while (parent.at(v) != v) {
      v = parent.at(v);
      path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  std::vector<std::vector<core::VertexId>> paths(k + 1);
  for (long i = 1; i <= k; ++i) paths[i] = path_to(t.leaf[i - 1]);

  // Component ids of the split tree, per center, keyed by vertex label.
  std::map<core::VertexId, std::map<std::string, long>> comp_cache;
  auto comp_of = [&](core::VertexId center, core::VertexId v) {
    auto it = comp_cache.find(center);
    if (it == comp_cache.end()) {
      core::Complex del = tr.deletion({center});
      std::vector<long> ids = del.vertex_component_ids();
      std::map<std::string, long> by_label;
      for (auto w : del.vertices()) by_label[del.label(w)] = ids[w];
      it = comp_cache.emplace(center, std::move(by_label)).first;
    }
    return it->second.at(tr.label(v));
  };

  // Group pairs by (center, unordered component pair); a member whose
  // ordered components match the representative's is aligned (+1), the
  // swapped orientation is the inverse (-1).
  struct ClassData {
    std::pair<long, long> rep;
    std::pair<long, long> rep_comps;
  };
  std::map<std::tuple<core::VertexId, long, long>, ClassData> classes;
  for (long i = 2; i <= k; ++i)
    for (long j = i + 1; j <= k; ++j) {
      const auto& pi = paths[i];
      const auto& pj = paths[j];
      std::size_t d = 0;
      while (d < pi.size() && d < pj.size() && pi[d] == pj[d]) ++d;
      core::VertexId center = pi[d - 1];
      long ci = comp_of(center, t.leaf[i - 1]);
      long cj = comp_of(center, t.leaf[j - 1]);
      std::tuple<core::VertexId, long, long> key{center, std::min(ci, cj),
                                                 std::max(ci, cj)};
      auto it = classes.find(key);
      if (it == classes.end()) {
        classes.emplace(key, ClassData{{i, j}, {ci, cj}});
        out.members[{i, j}] = PairClasses::Member{{i, j}, 1};
      } else {
        int sign = (std::pair<long, long>{ci, cj} == it->second.rep_comps) ? 1 : -1;
        out.members[{i, j}] = PairClasses::Member{it->second.rep, sign};
      }
    }
  out.class_count = static_cast<long>(classes.size());
  return out;
}

GroupPresentation tree_b2(const LeafLabelledTree& t) {
  if (t.k() < 2) throw std::runtime_error("tree_b2 requires at least 2 leaves");
  GroupPresentation p;
  const long k = t.k();
  for (long i = 2; i <= k; ++i)
    for (long j = i + 1; j <= k; ++j)
      p.generators.push_back(GeneratorSymbol::s(i, j));
  PairClasses pc = pair_classes(t);
  for (long i = 2; i <= k; ++i)
    for (long j = i + 1; j <= k; ++j) {
      const auto& m = pc.members.at({i, j});
      if (m.rep == std::pair<long, long>{i, j}) continue;
      // Aligned member equals the representative; swapped is its inverse.
      Word w{Letter{GeneratorSymbol::s(i, j), 1},
             Letter{GeneratorSymbol::s(m.rep.first, m.rep.second),
                    m.sign == 1 ? -1 : 1}};
      p.relators.push_back(std::move(w));
    }
  return p;
}

GroupPresentation tree_closure_b2(const LeafLabelledTree& t) {
  GroupPresentation p = tree_b2(t);
  for (long i = 2; i <= t.k(); ++i)
    p.generators.push_back(GeneratorSymbol::t(i));
  return p;
}

GroupPresentation twotrees_b2(const LeafLabelledTree& t,
                              const LeafLabelledTree& t2) {
  if (t.k() != t2.k())
    throw std::runtime_error("the two trees must have matching leaf labels");
  const long k = t.k();
  if (k < 2) throw std::runtime_error("twotrees_b2 requires at least 2 leaves");
  GroupPresentation p;
  for (long i = 2; i <= k; ++i)
    for (long j = i + 1; j <= k; ++j)
      p.generators.push_back(GeneratorSymbol::s(i, j));
  for (long i = 2; i <= k; ++i)
    for (long j = i + 1; j <= k; ++j)
      p.generators.push_back(GeneratorSymbol::s_prime(i, j));
  for (long i = 2; i <= k; ++i) p.generators.push_back(GeneratorSymbol::t(i));

  // Conjugation family: s'_{i,j} t_j^{-1} t_i^{-1} s_{i,j} t_j t_i.
  for (long i = 2; i <= k; ++i)
    for (long j = i + 1; j <= k; ++j) {
      Word w{Letter{GeneratorSymbol::s_prime(i, j), 1},
             Letter{GeneratorSymbol::t(j), -1},
             Letter{GeneratorSymbol::t(i), -1},
             Letter{GeneratorSymbol::s(i, j), 1},
             Letter{GeneratorSymbol::t(j), 1},
             Letter{GeneratorSymbol::t(i), 1}};
      p.relators.push_back(std::move(w));
    }

  // Identifications inside each tree.
  auto add_merges = [&](const LeafLabelledTree& tt, bool primed) {
    PairClasses pc = pair_classes(tt);
    for (long i = 2; i <= k; ++i)
      for (long j = i + 1; j <= k; ++j) {
        const auto& m = pc.members.at({i, j});
        if (m.rep == std::pair<long, long>{i, j}) continue;
        auto sym = [&](long a, long b) {
          return primed ? GeneratorSymbol::s_prime(a, b) : GeneratorSymbol::s(a, b);
        };
        Word w{Letter{sym(i, j), 1},
               Letter{sym(m.rep.first, m.rep.second), m.sign == 1 ? -1 : 1}};
        p.relators.push_back(std::move(w));
      }
  };
  add_merges(t, false);
  add_merges(t2, true);
  return p;
}

GroupPresentation closure_presentation_boundary(
    const GroupPresentation& base,
    const std::vector<GeneratorSymbol>& bn1_generators, long k) {
  if (k < 1) throw std::runtime_error("closure requires k >= 1");
  GroupPresentation p = base;
  for (long i = 2; i <= k; ++i) p.generators.push_back(GeneratorSymbol::t(i));
  for (long i = 2; i <= k; ++i)
    for (const GeneratorSymbol& g : bn1_generators) {
      Word w{Letter{g, 1}, Letter{GeneratorSymbol::t(i), 1}, Letter{g, -1},
             Letter{GeneratorSymbol::t(i), -1}};
      p.relators.push_back(std::move(w));
    }
  return p;
}

}  // namespace braidcx::presentation
