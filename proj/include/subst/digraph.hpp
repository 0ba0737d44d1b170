#pragma once

#include <vector>

#include "subst/morphism.hpp"

namespace subst {

// Strongly connected components; `members` lists components in reverse
// topological order (every edge leaving a component points to a component
// with a smaller index).
struct SccResult {
  std::vector<int> comp;                     // vertex -> component id
  std::vector<std::vector<int>> members;     // id -> sorted vertices
  std::vector<std::vector<int>> successors;  // condensation edges, deduplicated
  std::vector<bool> trivial;                 // single vertex without self-loop
};

SccResult tarjan_scc(const std::vector<std::vector<int>>& adj);

// Occurrence digraph: a -> b iff b occurs in image(a). Requires an
// endomorphism.
std::vector<std::vector<int>> occurrence_adjacency(const Morphism& m);

// gcd of the cycle lengths of a strongly connected component (0 for trivial
// components), computed from BFS level differences.
int scc_period(const std::vector<std::vector<int>>& adj, const std::vector<int>& members);

}  // namespace subst
