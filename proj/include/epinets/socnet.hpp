#pragma once

// Classical network layer: undirected simple tie networks, degree /
// betweenness / eigenvector centrality, and maximal-clique enumeration.

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "epinets/core.hpp"

namespace epinets {

enum class TieKind { Collaboration, Interaction, Friendship };

inline std::string to_string(TieKind k) {
  switch (k) {
    case TieKind::Collaboration: return "collaboration";
    case TieKind::Interaction: return "interaction";
    case TieKind::Friendship: return "friendship";
  }
  return "?";
}

inline TieKind tie_kind_from_string(const std::string& s) {
  if (s == "collaboration") return TieKind::Collaboration;
  if (s == "interaction") return TieKind::Interaction;
  if (s == "friendship") return TieKind::Friendship;
  throw SchemaError("unknown tie network kind '" + s + "'");
}

// Undirected simple graph over agents for one relation kind.
class TieNetwork {
 public:
  explicit TieNetwork(TieKind kind = TieKind::Interaction) : kind_(kind) {}

  TieKind kind() const { return kind_; }

  void add_node(const AgentId& a) {
    if (a.empty()) throw SchemaError("network node name must not be empty");
    nodes_.insert(a);
  }

  void add_edge(const AgentId& a, const AgentId& b) {
    if (a == b) throw SchemaError("self-loop on '" + a + "' not allowed");
    if (!nodes_.count(a)) throw SchemaError("unknown network node '" + a + "'");
    if (!nodes_.count(b)) throw SchemaError("unknown network node '" + b + "'");
    edges_.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
  }

  bool has_edge(const AgentId& a, const AgentId& b) const {
    return edges_.count(a < b ? std::make_pair(a, b) : std::make_pair(b, a)) > 0;
  }

  const std::set<AgentId>& nodes() const { return nodes_; }
  const std::set<std::pair<AgentId, AgentId>>& edges() const { return edges_; }

  std::set<AgentId> neighbors(const AgentId& a) const {
    std::set<AgentId> out;
    for (const auto& [u, v] : edges_) {
      if (u == a) out.insert(v);
      if (v == a) out.insert(u);
    }
    return out;
  }

 private:
  TieKind kind_;
  std::set<AgentId> nodes_;
  std::set<std::pair<AgentId, AgentId>> edges_;  // first < second
};

namespace detail {

// Node list in sorted order plus adjacency lists by index.
struct IndexedGraph {
  std::vector<AgentId> names;
  std::vector<std::vector<int>> adj;

  explicit IndexedGraph(const TieNetwork& net) {
    names.assign(net.nodes().begin(), net.nodes().end());
    std::map<AgentId, int> index;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
    adj.resize(names.size());
    for (const auto& [u, v] : net.edges()) {
      adj[index.at(u)].push_back(index.at(v));
      adj[index.at(v)].push_back(index.at(u));
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
  }

  int size() const { return static_cast<int>(names.size()); }

  // Connected components, largest first; equal sizes ordered by their
  // lexicographically smallest sorted node list.
  std::vector<std::vector<int>> components() const {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(names.size(), false);
    for (int s = 0; s < size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> comp;
      std::deque<int> queue{s};
      seen[s] = true;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        comp.push_back(u);
        for (int v : adj[u])
          if (!seen[v]) {
            seen[v] = true;
            queue.push_back(v);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;  // indices follow sorted names, so this is lexicographic
    });
    return comps;
  }
};

}  // namespace detail

// Incident-edge count per node.
inline std::map<AgentId, int> degree_centrality(const TieNetwork& net) {
  std::map<AgentId, int> deg;
  for (const auto& n : net.nodes()) deg[n] = 0;
  for (const auto& [u, v] : net.edges()) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

// Unnormalized shortest-path betweenness with endpoints excluded: for each
// node v the sum over unordered pairs {s,t} of the fraction of s-t
// geodesics through v. Brandes' accumulation, halved for undirectedness.
inline std::map<AgentId, double> betweenness_centrality(const TieNetwork& net) {
  detail::IndexedGraph g(net);
  const int n = g.size();
  std::vector<double> bc(n, 0.0);
  for (int s = 0; s < n; ++s) {
    std::vector<int> order;
    std::vector<std::vector<int>> pred(n);
    std::vector<double> sigma(n, 0.0);
    std::vector<int> dist(n, -1);
    sigma[s] = 1.0;
    dist[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      order.push_back(u);
      for (int v : g.adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
        if (dist[v] == dist[u] + 1) {
          sigma[v] += sigma[u];
          pred[v].push_back(u);
        }
      }
    }
    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int w = *it;
      for (int u : pred[w]) delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  std::map<AgentId, double> out;
  for (int i = 0; i < n; ++i) out[g.names[i]] = bc[i] / 2.0;
  return out;
}

// Principal eigenvector of the adjacency matrix on the largest connected
// component (ties broken by lexicographically smallest node set), zeros
// elsewhere, normalized to unit Euclidean norm. Power iteration on A + I;
// the shift leaves eigenvectors unchanged and prevents sign oscillation on
// bipartite components.
inline std::map<AgentId, double> eigenvector_centrality(const TieNetwork& net,
                                                        double tolerance = 1e-9,
                                                        int max_iterations = 10000) {
  if (net.nodes().empty()) throw EvalError("eigenvector centrality needs a non-empty network");
  detail::IndexedGraph g(net);
  const std::vector<int> comp = g.components().front();
  std::vector<int> pos(g.size(), -1);
  for (int i = 0; i < static_cast<int>(comp.size()); ++i) pos[comp[i]] = i;

  const std::size_t m = comp.size();
  std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(m)));
  std::vector<double> y(m);
  bool converged = false;
  for (int iter = 0; iter < max_iterations && !converged; ++iter) {
    for (std::size_t i = 0; i < m; ++i) {
      double acc = x[i];  // identity shift
      for (int v : g.adj[comp[i]]) acc += x[pos[v]];
      y[i] = acc;
    }
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    double diff = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      y[i] /= norm;
      diff = std::max(diff, std::abs(y[i] - x[i]));
    }
    x.swap(y);
    converged = diff < tolerance;
  }
  if (!converged)
    throw EvalError("eigenvector centrality did not converge within " +
                    std::to_string(max_iterations) + " iterations");
  std::map<AgentId, double> out;
  for (const auto& name : g.names) out[name] = 0.0;
  for (std::size_t i = 0; i < m; ++i) out[g.names[comp[i]]] = x[i];
  return out;
}

// All maximal cliques of size >= 2, each sorted, the collection sorted
// lexicographically. Bron-Kerbosch with pivoting.
inline std::vector<std::vector<AgentId>> maximal_cliques(const TieNetwork& net) {
  detail::IndexedGraph g(net);
  const int n = g.size();
  std::vector<std::set<int>> adj(n);
  for (int u = 0; u < n; ++u) adj[u] = {g.adj[u].begin(), g.adj[u].end()};

  std::vector<std::vector<int>> found;
  std::vector<int> r;
  auto expand = [&](auto&& self, std::set<int> p, std::set<int> x) -> void {
    if (p.empty() && x.empty()) {
      if (r.size() >= 2) found.push_back(r);
      return;
    }
    // pivot: vertex of P ∪ X with most neighbors in P
    int pivot = -1;
    std::size_t best = 0;
    for (const auto& cand : {p, x})
      for (int u : cand) {
        std::size_t k = 0;
        for (int v : p)
          if (adj[u].count(v)) ++k;
        if (pivot < 0 || k > best) {
          pivot = u;
          best = k;
        }
      }
    std::vector<int> candidates;
    for (int u : p)
      if (!adj[pivot].count(u)) candidates.push_back(u);
    for (int u : candidates) {
      std::set<int> np, nx;
      for (int v : p)
        if (adj[u].count(v)) np.insert(v);
      for (int v : x)
        if (adj[u].count(v)) nx.insert(v);
      r.push_back(u);
      self(self, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(u);
      x.insert(u);
    }
  };
  std::set<int> p0;
  for (int i = 0; i < n; ++i) p0.insert(i);
  expand(expand, std::move(p0), {});

  std::vector<std::vector<AgentId>> out;
  for (auto& c : found) {
    std::sort(c.begin(), c.end());
    std::vector<AgentId> clique;
    for (int i : c) clique.push_back(g.names[i]);
    out.push_back(std::move(clique));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace epinets
