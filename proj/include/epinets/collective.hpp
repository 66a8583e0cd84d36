#pragma once

// Group-level epistemic measures: distribution, collective awareness,
// near-commonality chains, dyadic cohesion, mobilization barriers and
// focal-point salience.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "epinets/core.hpp"
#include "epinets/formula.hpp"
#include "epinets/states.hpp"

namespace epinets {

// Default bound on interactive-knowledge chain length; survey data never
// exceeds depth 3, and the sequence count grows as |G|*(|G|-1)^(n-1).
inline constexpr int kDefaultChainCap = 6;

struct GroupSpec {
  std::set<AgentId> members;
};

struct ThresholdProfile {
  std::map<AgentId, int> required;  // count of others that must mobilize first
};

enum class MobilizationMode { Strict, Credulous };

struct GroupCount {
  int count = 0;
  double fraction = 0.0;
};

namespace detail {

inline void require_group(const Epinet& net, const GroupSpec& g, std::size_t min_size) {
  if (g.members.size() < min_size)
    throw EvalError("group must have at least " + std::to_string(min_size) + " members");
  for (const auto& a : g.members) net.require_agent(a);
}

// Know chain over an agent sequence, innermost agent last:
// chain({A,B,A}, p) = Know(A, Know(B, Know(A, p))).
inline QueryFormula know_chain(const std::vector<AgentId>& seq, const Literal& p) {
  QueryFormula f = qf::literal(p);
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    f = QueryFormula::knowledge(*it, f);
  return f;
}

inline std::vector<AgentId> alternating(const AgentId& first, const AgentId& second, int length) {
  std::vector<AgentId> seq;
  for (int i = 0; i < length; ++i) seq.push_back(i % 2 == 0 ? first : second);
  return seq;
}

}  // namespace detail

// Spread of knowledge of p: members that know it, as count and fraction.
inline GroupCount distribution(const Epinet& net, const Literal& p, const GroupSpec& g) {
  detail::require_group(net, g, 1);
  detail::require_determinate(net, p);
  GroupCount r;
  for (const auto& a : g.members)
    if (evaluate(net, QueryFormula::knowledge(a, qf::literal(p)))) ++r.count;
  r.fraction = static_cast<double>(r.count) / static_cast<double>(g.members.size());
  return r;
}

// Members whose awareness of p reaches at least level n.
inline GroupCount collective_awareness(const Epinet& net, const Literal& p, const GroupSpec& g,
                                       int n) {
  if (n < 1) throw EvalError("awareness level must be >= 1");
  detail::require_group(net, g, 1);
  detail::require_determinate(net, p);
  GroupCount r;
  for (const auto& a : g.members)
    if (awareness_level(net, a, p) >= n) ++r.count;
  r.fraction = static_cast<double>(r.count) / static_cast<double>(g.members.size());
  return r;
}

// Largest n such that every alternating Know chain of length <= n, in both
// starting orders, holds. 0 when either agent fails to know p.
inline int nc_level_dyad(const Epinet& net, const Literal& p, const AgentId& a, const AgentId& b,
                         int cap = kDefaultChainCap) {
  net.require_agent(a);
  net.require_agent(b);
  if (a == b) throw EvalError("near-commonality is defined for distinct agents");
  detail::require_determinate(net, p);
  int level = 0;
  while (level < cap) {
    int len = level + 1;
    if (!evaluate(net, detail::know_chain(detail::alternating(a, b, len), p))) break;
    if (!evaluate(net, detail::know_chain(detail::alternating(b, a, len), p))) break;
    ++level;
  }
  return level;
}

// True iff every no-immediate-repeat agent sequence from g of length <= n
// yields a true Know chain about p. Vacuously true at n = 0.
inline bool group_nc_holds(const Epinet& net, const Literal& p, const GroupSpec& g, int n) {
  detail::require_group(net, g, 2);
  detail::require_determinate(net, p);
  std::vector<AgentId> seq;
  // DFS over sequences; prefix failures short-circuit whole subtrees.
  auto extend = [&](auto&& self, int remaining) -> bool {
    if (!seq.empty() && !evaluate(net, detail::know_chain(seq, p))) return false;
    if (remaining == 0) return true;
    for (const auto& a : g.members) {
      if (!seq.empty() && seq.back() == a) continue;
      seq.push_back(a);
      bool ok = self(self, remaining - 1);
      seq.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return extend(extend, n);
}

// Near-commonality capped at the paper's full cohesive-dyad condition.
inline int dyad_cohesion(const Epinet& net, const Literal& p, const AgentId& a,
                         const AgentId& b) {
  return nc_level_dyad(net, p, a, b, 3);
}

// Threshold minus the number of co-mobilizers the agent knows (strict) or
// believes (credulous) will mobilize with him. Negative means the agent is
// over-determined to mobilize. Conditional-mobilization propositions follow
// the reserved id pattern `mob:<other>|<agent>`.
inline int mobilization_barrier(const Epinet& net, const AgentId& agent, const GroupSpec& g,
                                const ThresholdProfile& thresholds, MobilizationMode mode) {
  detail::require_group(net, g, 1);
  net.require_agent(agent);
  auto it = thresholds.required.find(agent);
  if (it == thresholds.required.end())
    throw EvalError("no mobilization threshold for agent '" + agent + "'");
  const int theta = it->second;
  if (theta < 0 || theta > static_cast<int>(g.members.size()) - 1)
    throw EvalError("mobilization threshold for '" + agent + "' out of range");
  int known = 0;
  for (const auto& b : g.members) {
    if (b == agent) continue;
    PropId mob = "mob:" + b + "|" + agent;
    if (!net.has_proposition(mob))
      throw SchemaError("missing conditional-mobilization proposition '" + mob + "'");
    QueryFormula f = mode == MobilizationMode::Strict
                         ? QueryFormula::knowledge(agent, qf::literal(mob))
                         : QueryFormula::belief(agent, qf::literal(mob));
    if (evaluate(net, f)) ++known;
  }
  return theta - known;
}

struct FocalScore {
  Literal candidate;
  int depth = 0;             // deepest n with group-wide near-commonality
  double dyad3_fraction = 0; // share of dyads meeting the full cohesion condition
};

// Ranks candidate focal points by the group's interactive-knowledge depth,
// then by the fraction of fully cohesive dyads, ties broken by candidate id.
inline std::vector<FocalScore> focal_salience(const Epinet& net,
                                              const std::vector<Literal>& candidates,
                                              const GroupSpec& g,
                                              int cap = kDefaultChainCap) {
  if (candidates.empty()) throw EvalError("focal salience needs at least one candidate");
  detail::require_group(net, g, 2);
  std::vector<FocalScore> scores;
  for (const auto& c : candidates) {
    FocalScore s{c, 0, 0.0};
    while (s.depth < cap && group_nc_holds(net, c, g, s.depth + 1)) ++s.depth;
    int dyads = 0;
    int cohesive = 0;
    for (auto i = g.members.begin(); i != g.members.end(); ++i)
      for (auto j = std::next(i); j != g.members.end(); ++j) {
        ++dyads;
        if (dyad_cohesion(net, c, *i, *j) == 3) ++cohesive;
      }
    s.dyad3_fraction = dyads ? static_cast<double>(cohesive) / dyads : 0.0;
    scores.push_back(std::move(s));
  }
  std::sort(scores.begin(), scores.end(), [](const FocalScore& x, const FocalScore& y) {
    if (x.depth != y.depth) return x.depth > y.depth;
    if (x.dyad3_fraction != y.dyad3_fraction) return x.dyad3_fraction > y.dyad3_fraction;
    return x.candidate < y.candidate;
  });
  return scores;
}

}  // namespace epinets
