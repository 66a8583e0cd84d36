#pragma once

// Test-only reference implementations and random generators. Everything
// here recomputes results by routes independent of the library's own
// algorithms: direct recursion for the evaluator, exhaustive geodesic
// enumeration for betweenness, a Jacobi eigensolver for eigenvector
// centrality, subset enumeration for cliques.

#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "epinets/collective.hpp"
#include "epinets/core.hpp"
#include "epinets/formula.hpp"
#include "epinets/socnet.hpp"

namespace oracles {

using namespace epinets;

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  int upto(int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(gen); }
  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(gen) < p; }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[upto(static_cast<int>(v.size()))];
  }
};

// ---------------------------------------------------------------------------
// Random terms and epinets

inline QueryFormula random_query(Rng& rng, const std::vector<AgentId>& agents,
                                 const std::vector<PropId>& props, int depth) {
  if (depth <= 0 || rng.chance(0.25))
    return qf::literal(rng.pick(props), rng.chance(0.5) ? Sign::Positive : Sign::Negative);
  switch (rng.upto(4)) {
    case 0:
      return QueryFormula::negation(random_query(rng, agents, props, depth - 1));
    case 1:
      return QueryFormula::belief(rng.pick(agents), random_query(rng, agents, props, depth - 1));
    case 2:
      return QueryFormula::knowledge(rng.pick(agents),
                                     random_query(rng, agents, props, depth - 1));
    default: {
      std::vector<QueryFormula> parts;
      int n = 2 + rng.upto(2);
      for (int i = 0; i < n; ++i)
        parts.push_back(random_query(rng, agents, props, depth - 1));
      return QueryFormula::conjunction(std::move(parts));
    }
  }
}

// Random storage-form assertion body of bounded Bel depth.
inline BeliefFormula random_belief_body(Rng& rng, const std::vector<AgentId>& agents,
                                        const std::vector<PropId>& props, int depth) {
  if (depth <= 0 || rng.chance(0.3))
    return bf::literal(rng.pick(props), rng.chance(0.5) ? Sign::Positive : Sign::Negative);
  BeliefFormula inner = bf::belief(rng.pick(agents),
                                   random_belief_body(rng, agents, props, depth - 1));
  return rng.chance(0.2) ? bf::negation(inner) : inner;
}

inline BeliefFormula random_assertion(Rng& rng, const std::vector<AgentId>& agents,
                                      const std::vector<PropId>& props, int depth) {
  return bf::belief(rng.pick(agents), random_belief_body(rng, agents, props, depth - 1));
}

inline Epinet random_epinet(Rng& rng, const std::vector<AgentId>& agents,
                            const std::vector<PropId>& props, int max_nesting,
                            int max_assertions) {
  Epinet net;
  for (const auto& a : agents) net.add_agent(a);
  for (const auto& p : props)
    net.add_proposition({p, p, rng.chance(0.5) ? Truth::True : Truth::False, std::nullopt});
  int n = rng.upto(max_assertions + 1);
  for (int i = 0; i < n; ++i)
    net.assert_belief(random_assertion(rng, agents, props, 1 + rng.upto(max_nesting)));
  return net;
}

// ---------------------------------------------------------------------------
// Direct-recursive evaluator: Know(A, f) := eval(Bel(A, f)) && eval(f),
// belief bodies flattened locally, no global rewrite pass.

inline std::optional<std::vector<BeliefFormula>> storable_bodies(const QueryFormula& f);

inline std::optional<std::vector<BeliefFormula>> storable_negation(const QueryFormula& f) {
  switch (f.kind()) {
    case QueryFormula::Kind::Lit:
      return std::vector<BeliefFormula>{bf::literal(f.as_literal().negated())};
    case QueryFormula::Kind::Not:
      return storable_bodies(f.body());
    case QueryFormula::Kind::Know:
      return storable_negation(QueryFormula::belief(f.agent(), f.body()));
    case QueryFormula::Kind::Bel: {
      auto inner = storable_bodies(f.body());
      if (!inner || inner->size() != 1) return std::nullopt;  // no stored disjunction
      return std::vector<BeliefFormula>{
          BeliefFormula::negation(bf::belief(f.agent(), inner->front()))};
    }
    case QueryFormula::Kind::And:
      return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<std::vector<BeliefFormula>> storable_bodies(const QueryFormula& f) {
  switch (f.kind()) {
    case QueryFormula::Kind::Lit:
      return std::vector<BeliefFormula>{bf::literal(f.as_literal())};
    case QueryFormula::Kind::And: {
      std::vector<BeliefFormula> out;
      for (const auto& p : f.parts()) {
        auto sub = storable_bodies(p);
        if (!sub) return std::nullopt;
        out.insert(out.end(), sub->begin(), sub->end());
      }
      return out;
    }
    case QueryFormula::Kind::Bel: {
      auto inner = storable_bodies(f.body());
      if (!inner) return std::nullopt;
      std::vector<BeliefFormula> out;
      for (auto& b : *inner) out.push_back(bf::belief(f.agent(), std::move(b)));
      return out;
    }
    case QueryFormula::Kind::Know: {
      auto attributed = storable_bodies(QueryFormula::belief(f.agent(), f.body()));
      auto factual = storable_bodies(f.body());
      if (!attributed || !factual) return std::nullopt;
      attributed->insert(attributed->end(), factual->begin(), factual->end());
      return attributed;
    }
    case QueryFormula::Kind::Not:
      return storable_negation(f.body());
  }
  return std::nullopt;
}

inline bool ref_believes(const Epinet& net, const AgentId& agent, const QueryFormula& body) {
  switch (body.kind()) {
    case QueryFormula::Kind::And: {
      for (const auto& p : body.parts())
        if (!ref_believes(net, agent, p)) return false;
      return true;
    }
    case QueryFormula::Kind::Know:
      return ref_believes(net, agent, QueryFormula::belief(body.agent(), body.body())) &&
             ref_believes(net, agent, body.body());
    default: {
      auto bodies = storable_bodies(body);
      if (!bodies) return false;
      for (const auto& b : *bodies)
        if (!net.holds_assertion(bf::belief(agent, b))) return false;
      return true;
    }
  }
}

inline bool ref_evaluate(const Epinet& net, const QueryFormula& f) {
  switch (f.kind()) {
    case QueryFormula::Kind::Lit: {
      Truth t = net.literal_truth(f.as_literal());
      if (t == Truth::Unknown) throw EvalError("unknown truth");
      return t == Truth::True;
    }
    case QueryFormula::Kind::Not:
      return !ref_evaluate(net, f.body());
    case QueryFormula::Kind::And: {
      for (const auto& p : f.parts())
        if (!ref_evaluate(net, p)) return false;
      return true;
    }
    case QueryFormula::Kind::Bel:
      return ref_believes(net, f.agent(), f.body());
    case QueryFormula::Kind::Know:
      return ref_believes(net, f.agent(), f.body()) && ref_evaluate(net, f.body());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Random graphs and graph oracles

inline TieNetwork random_graph(Rng& rng, int n, double edge_p,
                               TieKind kind = TieKind::Interaction) {
  TieNetwork net(kind);
  std::vector<AgentId> names;
  for (int i = 0; i < n; ++i) {
    names.push_back("n" + std::to_string(i));
    net.add_node(names.back());
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(edge_p)) net.add_edge(names[i], names[j]);
  return net;
}

// Betweenness by exhaustive enumeration of all shortest paths (DFS over
// the BFS distance structure), feasible for n <= 8.
inline std::map<AgentId, double> brute_betweenness(const TieNetwork& net) {
  std::vector<AgentId> names(net.nodes().begin(), net.nodes().end());
  const int n = static_cast<int>(names.size());
  std::map<AgentId, int> index;
  for (int i = 0; i < n; ++i) index[names[i]] = i;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : net.edges()) {
    adj[index[u]].push_back(index[v]);
    adj[index[v]].push_back(index[u]);
  }

  std::map<AgentId, double> bc;
  for (const auto& a : names) bc[a] = 0.0;

  for (int s = 0; s < n; ++s) {
    // BFS distances from s
    std::vector<int> dist(n, -1);
    dist[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int v : adj[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    for (int t = s + 1; t < n; ++t) {
      if (dist[t] < 0) continue;  // different components contribute 0
      // enumerate all geodesics s->t
      std::vector<std::vector<int>> paths;
      std::vector<int> path{s};
      auto dfs = [&](auto&& self, int u) -> void {
        if (u == t) {
          paths.push_back(path);
          return;
        }
        for (int v : adj[u]) {
          if (dist[v] != dist[u] + 1 || dist[v] > dist[t]) continue;
          path.push_back(v);
          self(self, v);
          path.pop_back();
        }
      };
      dfs(dfs, s);
      if (paths.empty()) continue;
      std::vector<int> through(n, 0);
      for (const auto& p : paths)
        for (std::size_t i = 1; i + 1 < p.size(); ++i) ++through[p[i]];
      for (int v = 0; v < n; ++v)
        if (through[v])
          bc[names[v]] += static_cast<double>(through[v]) / static_cast<double>(paths.size());
    }
  }
  return bc;
}

// Principal eigenvector of a dense symmetric matrix via cyclic Jacobi
// rotations; returns the unit eigenvector of the largest eigenvalue.
inline std::vector<double> jacobi_principal_eigenvector(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-18) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1.0 / std::sqrt(t * t + 1);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (a[i][i] > a[best][best]) best = i;
  std::vector<double> vec(n);
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    vec[i] = v[i][best];
    norm += vec[i] * vec[i];
  }
  norm = std::sqrt(norm);
  double sign = 0.0;
  for (int i = 0; i < n; ++i) sign += vec[i];
  for (int i = 0; i < n; ++i) vec[i] = vec[i] / norm * (sign < 0 ? -1.0 : 1.0);
  return vec;
}

// Eigenvector-centrality oracle: dense eigensolver on the same largest
// component the library selects, zeros elsewhere.
inline std::map<AgentId, double> dense_eigenvector(const TieNetwork& net) {
  detail::IndexedGraph g(net);
  auto comp = g.components().front();
  const int m = static_cast<int>(comp.size());
  std::vector<int> pos(g.size(), -1);
  for (int i = 0; i < m; ++i) pos[comp[i]] = i;
  std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
  for (int i = 0; i < m; ++i)
    for (int v : g.adj[comp[i]])
      if (pos[v] >= 0) a[i][pos[v]] = 1.0;
  auto vec = jacobi_principal_eigenvector(std::move(a));
  std::map<AgentId, double> out;
  for (const auto& name : g.names) out[name] = 0.0;
  for (int i = 0; i < m; ++i) out[g.names[comp[i]]] = vec[i];
  return out;
}

// All maximal cliques of size >= 2 by checking every vertex subset.
inline std::vector<std::vector<AgentId>> brute_cliques(const TieNetwork& net) {
  std::vector<AgentId> names(net.nodes().begin(), net.nodes().end());
  const int n = static_cast<int>(names.size());
  auto connected = [&](int mask) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !net.has_edge(names[i], names[j]))
          return false;
    return true;
  };
  std::vector<std::vector<AgentId>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) < 2 || !connected(mask)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!(mask >> v & 1) && connected(mask | (1 << v))) maximal = false;
    if (!maximal) continue;
    std::vector<AgentId> clique;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) clique.push_back(names[i]);
    out.push_back(std::move(clique));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Near-commonality by literal chain enumeration through the reference
// evaluator.
inline int ref_nc_level(const Epinet& net, const Literal& p, const AgentId& a, const AgentId& b,
                        int cap) {
  for (int level = 1; level <= cap; ++level) {
    for (int start = 0; start < 2; ++start) {
      QueryFormula f = qf::literal(p);
      for (int i = level - 1; i >= 0; --i) {
        const AgentId& who = (i % 2 == 0) ? (start == 0 ? a : b) : (start == 0 ? b : a);
        f = QueryFormula::knowledge(who, f);
      }
      if (!ref_evaluate(net, f)) return level - 1;
    }
  }
  return cap;
}

}  // namespace oracles
