#pragma once

// Individual epistemic states of an (agent, literal) pair: knowledge with
// iterated awareness, unawareness, ignorance, oblivion, confidence, and
// the mere-belief case of believing a falsehood.

#include <string>

#include "epinets/core.hpp"
#include "epinets/formula.hpp"

namespace epinets {

enum class StateKind { Oblivion, Ignorance, AwarenessN, Unawareness, MereBelief, None };

struct EpistemicState {
  StateKind kind;
  int level = 0;  // awareness level; 1 for Unawareness, n >= 2 for AwarenessN

  friend bool operator==(const EpistemicState&, const EpistemicState&) = default;
};

inline std::string to_string(const EpistemicState& s) {
  switch (s.kind) {
    case StateKind::Oblivion: return "oblivion";
    case StateKind::Ignorance: return "ignorance";
    case StateKind::AwarenessN: return "awareness-" + std::to_string(s.level);
    case StateKind::Unawareness: return "knowledge+unawareness";
    case StateKind::MereBelief: return "mere-belief";
    case StateKind::None: return "none";
  }
  return "?";
}

namespace detail {

inline void require_determinate(const Epinet& net, const Literal& p) {
  if (net.literal_truth(p) == Truth::Unknown)
    throw EvalError("proposition '" + p.proposition + "' has unknown truth value");
}

}  // namespace detail

// Largest n with Know^n(agent, p) true, where Know^1 = Know(agent, p) and
// Know^(m+1) = Know(agent, Know^m). A chain of depth n needs an assertion
// of that nesting depth, so the agent's deepest assertion bounds the search.
inline int awareness_level(const Epinet& net, const AgentId& agent, const Literal& p) {
  net.require_agent(agent);
  detail::require_determinate(net, p);
  const int bound = net.max_assertion_depth(agent);
  int level = 0;
  QueryFormula chain = qf::literal(p);
  while (level < bound) {
    chain = QueryFormula::knowledge(agent, chain);
    if (!evaluate(net, chain)) break;
    ++level;
  }
  return level;
}

// Knows p without knowing that she knows it.
inline bool is_unaware(const Epinet& net, const AgentId& agent, const Literal& p) {
  return awareness_level(net, agent, p) == 1;
}

// Does not know p but knows that she does not know it.
inline bool is_ignorant(const Epinet& net, const AgentId& agent, const Literal& p) {
  net.require_agent(agent);
  detail::require_determinate(net, p);
  QueryFormula knows = QueryFormula::knowledge(agent, qf::literal(p));
  return evaluate(net, QueryFormula::negation(knows)) &&
         evaluate(net, QueryFormula::knowledge(agent, QueryFormula::negation(knows)));
}

// No epistemic contact at all: no assertion rooted at the agent mentions
// the proposition. Purely structural, so an unknown truth value is fine.
inline bool is_oblivious(const Epinet& net, const AgentId& agent, const Literal& p) {
  return !net.mentions(agent, p.proposition);
}

inline bool has_confidence(const Epinet& net, const AgentId& agent, const Literal& p) {
  return net.has_confidence(agent, p.proposition);
}

// Total classification. Precedence: oblivion, ignorance, awareness level
// n >= 2, then level 1 (knowledge held unaware), then belief in a false
// proposition, then none.
inline EpistemicState classify_state(const Epinet& net, const AgentId& agent, const Literal& p) {
  if (is_oblivious(net, agent, p)) return {StateKind::Oblivion};
  detail::require_determinate(net, p);
  if (is_ignorant(net, agent, p)) return {StateKind::Ignorance};
  int n = awareness_level(net, agent, p);
  if (n >= 2) return {StateKind::AwarenessN, n};
  if (n == 1) return {StateKind::Unawareness, 1};
  if (net.holds_assertion(bf::belief(agent, bf::literal(p))) &&
      net.literal_truth(p) == Truth::False)
    return {StateKind::MereBelief};
  return {StateKind::None};
}

}  // namespace epinets
