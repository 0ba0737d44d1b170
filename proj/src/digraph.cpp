#include "subst/digraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace subst {

SccResult tarjan_scc(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  SccResult r;
  r.comp.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int v;
    size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, e] = frames.back();
      if (e < adj[v].size()) {
        int w = adj[v][e++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          std::vector<int> scc;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            r.comp[w] = static_cast<int>(r.members.size());
            scc.push_back(w);
            if (w == v) break;
          }
          std::sort(scc.begin(), scc.end());
          r.members.push_back(std::move(scc));
        }
        int finished = v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
      }
    }
  }

  const int k = static_cast<int>(r.members.size());
  r.successors.assign(k, {});
  r.trivial.assign(k, false);
  for (int v = 0; v < n; ++v)
    for (int w : adj[v])
      if (r.comp[v] != r.comp[w]) r.successors[r.comp[v]].push_back(r.comp[w]);
  for (int c = 0; c < k; ++c) {
    auto& s = r.successors[c];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (r.members[c].size() == 1) {
      int v = r.members[c][0];
      r.trivial[c] = std::find(adj[v].begin(), adj[v].end(), v) == adj[v].end();
    }
  }
  return r;
}

std::vector<std::vector<int>> occurrence_adjacency(const Morphism& m) {
  if (m.source() != m.target()) throw domain_error("occurrence digraph needs source == target");
  std::vector<std::vector<int>> adj(m.source().size());
  for (Letter a = 0; a < m.source().size(); ++a) {
    std::vector<char> seen(m.target().size(), 0);
    for (Letter b : m.image(a).letters)
      if (!seen[b]) {
        seen[b] = 1;
        adj[a].push_back(b);
      }
  }
  return adj;
}

int scc_period(const std::vector<std::vector<int>>& adj, const std::vector<int>& members) {
  if (members.size() == 1) {
    int v = members[0];
    bool self = std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
    return self ? 1 : 0;
  }
  std::vector<char> in_comp(adj.size(), 0);
  for (int v : members) in_comp[v] = 1;
  std::vector<int> level(adj.size(), -1);
  std::deque<int> queue{members[0]};
  level[members[0]] = 0;
  int g = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v]) {
      if (!in_comp[w]) continue;
      if (level[w] == -1) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      } else {
        g = std::gcd(g, std::abs(level[v] + 1 - level[w]));
      }
    }
  }
  return g == 0 ? 1 : g;
}

}  // namespace subst
