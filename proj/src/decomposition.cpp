#include "subst/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "subst/digraph.hpp"

namespace subst {

namespace {

std::vector<std::vector<int>> adjacency_of_support(const BoolMatrix& m) {
  // Edge a -> b iff entry (b, a) is set (b occurs in the image of a).
  std::vector<std::vector<int>> adj(m.size());
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b)
      if (m(b, a)) adj[a].push_back(b);
  return adj;
}

// lcm of the periods of the non-trivial components of the occurrence digraph.
int class_lcm(const Substitution& s) {
  auto adj = occurrence_adjacency(s.morphism());
  auto scc = tarjan_scc(adj);
  long p = 1;
  for (size_t c = 0; c < scc.members.size(); ++c) {
    int h = scc_period(adj, scc.members[c]);
    if (h >= 1) p = std::lcm(p, (long)h);
    if (p > 1000000) throw domain_error("class period lcm unreasonably large");
  }
  return static_cast<int>(p);
}

struct Partition {
  int p = 1;
  std::vector<std::vector<Letter>> parts;  // ordered, principal last
  int q = 0;
  std::vector<int> part_of;
};

// Parts are the strongly connected classes of the digraph of M^p, ordered
// topologically (sources first, ties by smallest letter), sinks last.
Partition class_partition(const Substitution& s) {
  Partition out;
  out.p = class_lcm(s);
  BoolMatrix support = BoolMatrix::support_of(abelianization(s));
  BoolMatrix sup_p = support.power(out.p);
  auto adj = adjacency_of_support(sup_p);
  auto scc = tarjan_scc(adj);
  const int k = static_cast<int>(scc.members.size());

  std::vector<bool> sink(k, true);
  std::vector<std::vector<int>> succ(k), pred(k);
  for (int c = 0; c < k; ++c)
    for (int t : scc.successors[c]) {
      sink[c] = false;
      succ[c].push_back(t);
      pred[t].push_back(c);
    }

  // Kahn topological order with smallest-letter tie-breaking.
  auto smallest = [&](int c) { return scc.members[c][0]; };
  std::vector<int> indegree(k);
  for (int c = 0; c < k; ++c) indegree[c] = static_cast<int>(pred[c].size());
  auto cmp = [&](int a, int b) { return smallest(a) > smallest(b); };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> ready(cmp);
  for (int c = 0; c < k; ++c)
    if (indegree[c] == 0) ready.push(c);
  std::vector<int> topo;
  while (!ready.empty()) {
    int c = ready.top();
    ready.pop();
    topo.push_back(c);
    for (int t : succ[c])
      if (--indegree[t] == 0) ready.push(t);
  }
  if ((int)topo.size() != k) throw domain_error("condensation is not acyclic");

  std::vector<int> order;
  for (int c : topo)
    if (!sink[c]) order.push_back(c);
  out.q = static_cast<int>(order.size());
  for (int c : topo)
    if (sink[c]) order.push_back(c);

  out.part_of.assign(s.alphabet().size(), -1);
  for (size_t i = 0; i < order.size(); ++i) {
    out.parts.push_back(scc.members[order[i]]);
    for (Letter a : scc.members[order[i]]) out.part_of[a] = static_cast<int>(i);
  }
  return out;
}

// First letter of sigma^k(a) that belongs to the given part, or -1.
// reach[m][b] holds the bitmask of parts reachable from b in exactly m steps.
Letter first_in_part(const Substitution& s, const std::vector<std::vector<uint32_t>>& reach,
                     const std::vector<int>& part_of, int part, Letter a, int k) {
  Letter cur = a;
  for (int m = k; m >= 1; --m) {
    Letter next = -1;
    for (Letter b : s.image(cur).letters)
      if (reach[m - 1][b] & (uint32_t(1) << part)) {
        next = b;
        break;
      }
    if (next == -1) return -1;
    cur = next;
  }
  return part_of[cur] == part ? cur : -1;
}

}  // namespace

int ComponentDecomposition::part_of(Letter a) const {
  for (size_t i = 0; i < parts.size(); ++i)
    for (Letter b : parts[i])
      if (b == a) return static_cast<int>(i);
  return -1;
}

ComponentDecomposition decompose(const Substitution& s) {
  for (Letter a = 0; a < s.alphabet().size(); ++a)
    if (s.image(a).empty())
      throw domain_error("decompose: erasing substitution (zero column for " +
                         s.alphabet().token(a) + ")");
  Partition partition = class_partition(s);
  ComponentDecomposition d;
  d.p = partition.p;
  d.parts = partition.parts;
  d.q = partition.q;
  d.power_matrix = abelianization(s).power(d.p);
  for (const auto& part : d.parts) {
    IntMatrix block = d.power_matrix.submatrix(part, part);
    bool is_zero = block.is_zero();
    bool is_primitive = !is_zero && primitivity_index(BoolMatrix::support_of(block)) > 0;
    if (!is_zero && !is_primitive)
      throw domain_error("decompose: non-primitive non-zero diagonal block");
    d.zero.push_back(is_zero);
    d.primitive.push_back(is_primitive);
    d.blocks.push_back(std::move(block));
    for (Letter a : part) d.permutation.push_back(a);
  }
  return d;
}

bool check_decomposition_certificate(const ComponentDecomposition& d) {
  const int l = static_cast<int>(d.parts.size());
  if (d.q > l - 1) return false;
  std::vector<int> part_of;
  int n = 0;
  for (const auto& part : d.parts) n += static_cast<int>(part.size());
  part_of.assign(n, -1);
  for (int i = 0; i < l; ++i)
    for (Letter a : d.parts[i]) part_of[a] = i;

  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) {
      if (d.power_matrix(row, col) == 0) continue;
      int cp = part_of[col], rp = part_of[row];
      if (rp < cp) return false;                     // above the block diagonal
      if (cp >= d.q && rp != cp) return false;       // principal columns are diagonal
    }
  // Every non-principal part feeds some strictly later part.
  for (int i = 0; i < d.q; ++i) {
    bool feeds = false;
    for (Letter a : d.parts[i])
      for (int row = 0; row < n && !feeds; ++row)
        if (d.power_matrix(row, a) != 0 && part_of[row] > i) feeds = true;
    if (!feeds) return false;
  }
  // Diagonal flags.
  for (int i = 0; i < l; ++i) {
    if (d.zero[i] != d.blocks[i].is_zero()) return false;
    if (!d.zero[i]) {
      long idx = primitivity_index(BoolMatrix::support_of(d.blocks[i]));
      long bound = long(d.blocks[i].rows() - 1) * (d.blocks[i].rows() - 1) + 1;
      if (!d.primitive[i] || idx < 1 || idx > bound) return false;
    }
    if (i >= d.q && d.zero[i]) return false;  // principal blocks are primitive
  }
  return true;
}

int condition_c_exponent(const Substitution& s, int budget) {
  Partition partition = class_partition(s);
  const int L = partition.p;
  const int nparts = static_cast<int>(partition.parts.size());
  if (nparts > 31) throw domain_error("condition_c_exponent: too many parts");
  const int n = s.alphabet().size();
  BoolMatrix support = BoolMatrix::support_of(abelianization(s));

  // reach[m][b]: parts reachable from b in exactly m steps.
  std::vector<std::vector<uint32_t>> reach;
  reach.emplace_back(n, 0);
  for (Letter b = 0; b < n; ++b) reach[0][b] = uint32_t(1) << partition.part_of[b];
  auto extend_reach = [&](int upto) {
    while ((int)reach.size() <= upto) {
      const auto& prev = reach.back();
      std::vector<uint32_t> next(n, 0);
      for (Letter b = 0; b < n; ++b)
        for (Letter c : s.image(b).letters) next[b] |= prev[c];
      reach.push_back(std::move(next));
    }
  };

  BoolMatrix step = support.power(L);
  BoolMatrix acc = step;
  for (int mult = 1; mult <= budget; ++mult, acc = acc * step) {
    const int k = L * mult;
    // C2: each class block of support^k zero or all-positive.
    bool ok = true;
    for (const auto& part : partition.parts) {
      bool any = false, all = true;
      for (Letter a : part)
        for (Letter b : part) {
          bool v = acc(b, a);
          any = any || v;
          all = all && v;
        }
      if (any && !all) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // C3: every non-zero block has a letter whose projected image starts
    // with that letter.
    extend_reach(k);
    for (int i = 0; i < nparts && ok; ++i) {
      const auto& part = partition.parts[i];
      bool any = false;
      for (Letter a : part)
        for (Letter b : part) any = any || acc(b, a);
      if (!any) continue;
      bool found = false;
      for (Letter a : part)
        if (first_in_part(s, reach, partition.part_of, i, a, k) == a) {
          found = true;
          break;
        }
      ok = found;
    }
    if (ok) return k;
  }
  throw budget_exhausted("condition_c_exponent: no power found within budget");
}

std::vector<SubSubstitution> sub_substitutions(const Substitution& s) {
  ComponentDecomposition d = decompose(s);
  std::vector<SubSubstitution> out;
  for (size_t i = 0; i < d.parts.size(); ++i) {
    const auto& part = d.parts[i];
    const IntMatrix& block = d.blocks[i];
    if (d.zero[i]) continue;
    if (block.rows() == 1 && block(0, 0) == 1) continue;  // [1] blocks excluded

    std::vector<std::string> tokens;
    for (Letter a : part) tokens.push_back(s.alphabet().token(a));
    Alphabet alphabet(tokens);
    std::vector<int> position(s.alphabet().size(), -1);
    for (size_t j = 0; j < part.size(); ++j) position[part[j]] = static_cast<int>(j);

    std::vector<Word> images;
    for (Letter a : part) {
      Word image = iterate(s, a, d.p);
      Word projected;
      for (Letter b : image.letters)
        if (position[b] >= 0) projected.append(position[b]);
      images.push_back(std::move(projected));
    }
    out.push_back(SubSubstitution{static_cast<int>(i), static_cast<int>(i) >= d.q,
                                  Substitution::from_morphism(Morphism(alphabet, alphabet, images)),
                                  spectral_radius(block)});
  }
  return out;
}

GoodnessVerdict is_good(const Substitution& s) {
  ComponentDecomposition d = decompose(s);
  GoodnessVerdict verdict;
  verdict.p = d.p;
  verdict.theta = spectral_radius(abelianization(s));
  AlgebraicReal theta_p = verdict.theta.pow(d.p);
  for (auto& sub : sub_substitutions(s)) {
    if (!sub.main) continue;
    if (sub.eigenvalue.compare(theta_p) == 0) {
      verdict.good = true;
      verdict.witness_theta = sub.eigenvalue.nth_root(d.p);
      verdict.witness = std::move(sub);
      return verdict;
    }
  }
  return verdict;
}

std::vector<Letter> letters_infinitely_often(const Substitution& s, Letter seed) {
  auto seeds = fixed_point_seeds(s);
  if (std::find(seeds.begin(), seeds.end(), seed) == seeds.end())
    throw domain_error("letter " + s.alphabet().token(seed) + " is not a fixed-point seed");
  const int n = s.alphabet().size();
  if (n > 63) throw domain_error("letters_infinitely_often: alphabet too large");

  auto letters_of = [&](const Word& w) {
    uint64_t m = 0;
    for (Letter b : w.letters) m |= uint64_t(1) << b;
    return m;
  };
  uint64_t state = 0;  // letters of w where sigma(seed) = seed w
  {
    const Word& img = s.image(seed);
    for (size_t i = 1; i < img.size(); ++i) state |= uint64_t(1) << img[i];
  }
  // S_{k+1} = letters of sigma(S_k); the subset sequence is eventually
  // periodic, and a letter recurs infinitely often iff it lies in some set
  // of the cycle.
  std::map<uint64_t, int> seen{{state, 0}};
  std::vector<uint64_t> history{state};
  while (true) {
    uint64_t next = 0;
    for (Letter b = 0; b < n; ++b)
      if (state & (uint64_t(1) << b)) next |= letters_of(s.image(b));
    auto [it, inserted] = seen.emplace(next, (int)history.size());
    if (!inserted) {
      uint64_t cycle_union = 0;
      for (size_t i = it->second; i < history.size(); ++i) cycle_union |= history[i];
      cycle_union |= next;
      std::vector<Letter> out;
      for (Letter b = 0; b < n; ++b)
        if (cycle_union & (uint64_t(1) << b)) out.push_back(b);
      return out;
    }
    history.push_back(next);
    state = next;
  }
}

}  // namespace subst
