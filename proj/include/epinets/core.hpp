#pragma once

// Core data model for epistemic networks: agents, propositions with
// tri-state ground truth, and normalized nested-belief assertions.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace epinets {

using AgentId = std::string;
using PropId = std::string;

// Data/schema violations (bad input, unknown ids, malformed files).
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Computation failures (undetermined truth, non-convergence, degenerate groups).
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Truth { True, False, Unknown };

inline Truth negate(Truth t) {
  switch (t) {
    case Truth::True: return Truth::False;
    case Truth::False: return Truth::True;
    default: return Truth::Unknown;
  }
}

inline char truth_letter(Truth t) {
  switch (t) {
    case Truth::True: return 'T';
    case Truth::False: return 'F';
    default: return 'U';
  }
}

inline Truth truth_from_letter(char c) {
  switch (c) {
    case 'T': return Truth::True;
    case 'F': return Truth::False;
    case 'U': return Truth::Unknown;
    default: throw SchemaError(std::string("invalid truth letter '") + c + "'");
  }
}

enum class Sign { Positive, Negative };

// A proposition with a sign: `p` asserted or denied.
struct Literal {
  PropId proposition;
  Sign sign = Sign::Positive;

  Literal negated() const {
    return {proposition, sign == Sign::Positive ? Sign::Negative : Sign::Positive};
  }
  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal lit(PropId id, Sign sign = Sign::Positive) {
  return Literal{std::move(id), sign};
}

inline std::string format_literal(const Literal& l) {
  return (l.sign == Sign::Negative ? "!" : "") + l.proposition;
}

struct Proposition {
  PropId id;
  std::string statement;
  Truth truth = Truth::Unknown;
  std::optional<PropId> negation_of;
};

// Storage normal form for asserted beliefs:
//
//   f := Lit | Bel(agent, f) | Not(Bel(agent, f))
//
// Construction normalizes: Not(Not(f)) collapses to f and Not(Lit) folds
// into the literal's sign, so negation only ever wraps a Bel node and
// structurally equal formulas are semantically equal.
class BeliefFormula {
 public:
  enum class Kind { Lit, Not, Bel };

  static BeliefFormula literal(Literal l) {
    return BeliefFormula(std::make_shared<const Node>(Node{Kind::Lit, std::move(l), {}, {}}));
  }

  static BeliefFormula negation(BeliefFormula f) {
    switch (f.kind()) {
      case Kind::Lit: return literal(f.as_literal().negated());
      case Kind::Not: return f.body();
      case Kind::Bel:
        return BeliefFormula(
            std::make_shared<const Node>(Node{Kind::Not, {}, {}, std::move(f.node_)}));
    }
    throw std::logic_error("unreachable");
  }

  static BeliefFormula belief(AgentId agent, BeliefFormula body) {
    return BeliefFormula(std::make_shared<const Node>(
        Node{Kind::Bel, {}, std::move(agent), std::move(body.node_)}));
  }

  Kind kind() const { return node_->kind; }

  const Literal& as_literal() const {
    require(Kind::Lit);
    return node_->lit;
  }
  const AgentId& agent() const {
    require(Kind::Bel);
    return node_->agent;
  }
  // Child of a Not or Bel node.
  BeliefFormula body() const {
    if (kind() == Kind::Lit) throw std::logic_error("literal has no body");
    return BeliefFormula(node_->child);
  }

  bool bel_rooted() const { return kind() == Kind::Bel; }

  // Outermost believer of a Bel-rooted assertion.
  const AgentId& outer_believer() const { return agent(); }

  bool mentions(const PropId& prop) const {
    switch (kind()) {
      case Kind::Lit: return node_->lit.proposition == prop;
      default: return body().mentions(prop);
    }
  }

  // Maximum Bel-nesting depth.
  int depth() const {
    switch (kind()) {
      case Kind::Lit: return 0;
      case Kind::Not: return body().depth();
      case Kind::Bel: return 1 + body().depth();
    }
    return 0;
  }

  void collect_agents(std::set<AgentId>& out) const {
    if (kind() == Kind::Lit) return;
    if (kind() == Kind::Bel) out.insert(node_->agent);
    body().collect_agents(out);
  }
  void collect_propositions(std::set<PropId>& out) const {
    if (kind() == Kind::Lit) {
      out.insert(node_->lit.proposition);
      return;
    }
    body().collect_propositions(out);
  }

  friend bool operator==(const BeliefFormula& a, const BeliefFormula& b) {
    return a.compare(b) == 0;
  }
  friend bool operator<(const BeliefFormula& a, const BeliefFormula& b) {
    return a.compare(b) < 0;
  }

  int compare(const BeliefFormula& other) const {
    if (node_ == other.node_) return 0;
    if (kind() != other.kind()) return kind() < other.kind() ? -1 : 1;
    switch (kind()) {
      case Kind::Lit: {
        const auto& a = node_->lit;
        const auto& b = other.node_->lit;
        if (a == b) return 0;
        return a < b ? -1 : 1;
      }
      case Kind::Not:
        return body().compare(other.body());
      case Kind::Bel: {
        if (int c = node_->agent.compare(other.node_->agent)) return c < 0 ? -1 : 1;
        return body().compare(other.body());
      }
    }
    return 0;
  }

 private:
  struct Node {
    Kind kind;
    Literal lit;                        // Kind::Lit
    AgentId agent;                      // Kind::Bel
    std::shared_ptr<const Node> child;  // Kind::Not / Kind::Bel
  };

  explicit BeliefFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  void require(Kind k) const {
    if (kind() != k) throw std::logic_error("belief formula node kind mismatch");
  }

  std::shared_ptr<const Node> node_;
};

namespace bf {
inline BeliefFormula literal(Literal l) { return BeliefFormula::literal(std::move(l)); }
inline BeliefFormula literal(PropId id, Sign sign = Sign::Positive) {
  return BeliefFormula::literal(lit(std::move(id), sign));
}
inline BeliefFormula negation(BeliefFormula f) { return BeliefFormula::negation(std::move(f)); }
inline BeliefFormula belief(AgentId a, BeliefFormula body) {
  return BeliefFormula::belief(std::move(a), std::move(body));
}
}  // namespace bf

// An epistemic network: agents, propositions, asserted beliefs and
// confidence flags. Mutable while being built, read-only afterwards;
// all queries are const and safe to run concurrently.
class Epinet {
 public:
  void add_agent(const AgentId& name) {
    if (name.empty() || name.find_first_not_of(" \t\r\n") == std::string::npos)
      throw SchemaError("agent name must not be empty or whitespace-only");
    agents_.insert(name);
  }

  void add_proposition(const Proposition& p) {
    if (p.id.empty() || p.id.find_first_not_of(" \t\r\n") == std::string::npos)
      throw SchemaError("proposition id must not be empty or whitespace-only");
    if (propositions_.count(p.id))
      throw SchemaError("duplicate proposition id '" + p.id + "'");
    Proposition stored = p;
    stored.negation_of.reset();
    propositions_.emplace(p.id, std::move(stored));
    if (p.negation_of) link_negation(p.id, *p.negation_of);
  }

  // Declares two propositions to be each other's negation. Symmetric.
  void link_negation(const PropId& a, const PropId& b) {
    Proposition& pa = proposition_mut(a);
    Proposition& pb = proposition_mut(b);
    if (a == b) throw SchemaError("proposition '" + a + "' cannot negate itself");
    if ((pa.negation_of && *pa.negation_of != b) || (pb.negation_of && *pb.negation_of != a))
      throw SchemaError("conflicting negation link on '" + a + "'/'" + b + "'");
    if (pa.truth != Truth::Unknown && pb.truth != Truth::Unknown && pa.truth != negate(pb.truth))
      throw SchemaError("negation-linked propositions '" + a + "' and '" + b +
                        "' must have opposite truth values");
    pa.negation_of = b;
    pb.negation_of = a;
  }

  void assert_belief(const BeliefFormula& f) {
    if (!f.bel_rooted()) throw SchemaError("assertions must be Bel-rooted");
    validate_ids(f);
    assertions_.insert(f);
  }

  void add_confidence(const AgentId& agent, const PropId& prop) {
    require_agent(agent);
    require_proposition(prop);
    confidence_.insert({agent, prop});
  }

  bool has_agent(const AgentId& a) const { return agents_.count(a) > 0; }
  bool has_proposition(const PropId& p) const { return propositions_.count(p) > 0; }

  const Proposition& proposition(const PropId& id) const {
    auto it = propositions_.find(id);
    if (it == propositions_.end()) throw SchemaError("unknown proposition '" + id + "'");
    return it->second;
  }

  bool holds_assertion(const BeliefFormula& f) const {
    validate_ids(f);
    return assertions_.count(f) > 0;
  }

  // True iff some assertion whose outermost believer is `agent` contains
  // `prop` at any depth, under either sign.
  bool mentions(const AgentId& agent, const PropId& prop) const {
    require_agent(agent);
    require_proposition(prop);
    for (const auto& f : assertions_)
      if (f.outer_believer() == agent && f.mentions(prop)) return true;
    return false;
  }

  Truth literal_truth(const Literal& l) const {
    Truth t = proposition(l.proposition).truth;
    return l.sign == Sign::Negative ? negate(t) : t;
  }

  bool has_confidence(const AgentId& agent, const PropId& prop) const {
    require_agent(agent);
    require_proposition(prop);
    return confidence_.count({agent, prop}) > 0;
  }

  // Max Bel-nesting depth over assertions rooted at `agent`; bounds the
  // awareness and near-commonality chain searches.
  int max_assertion_depth(const AgentId& agent) const {
    int d = 0;
    for (const auto& f : assertions_)
      if (f.outer_believer() == agent) d = std::max(d, f.depth());
    return d;
  }

  int max_assertion_depth() const {
    int d = 0;
    for (const auto& f : assertions_) d = std::max(d, f.depth());
    return d;
  }

  const std::set<AgentId>& agents() const { return agents_; }
  const std::map<PropId, Proposition>& propositions() const { return propositions_; }
  const std::set<BeliefFormula>& assertions() const { return assertions_; }
  const std::set<std::pair<AgentId, PropId>>& confidence() const { return confidence_; }

  void require_agent(const AgentId& a) const {
    if (!has_agent(a)) throw SchemaError("unknown agent '" + a + "'");
  }
  void require_proposition(const PropId& p) const {
    if (!has_proposition(p)) throw SchemaError("unknown proposition '" + p + "'");
  }

 private:
  Proposition& proposition_mut(const PropId& id) {
    auto it = propositions_.find(id);
    if (it == propositions_.end()) throw SchemaError("unknown proposition '" + id + "'");
    return it->second;
  }

  void validate_ids(const BeliefFormula& f) const {
    std::set<AgentId> agents;
    std::set<PropId> props;
    f.collect_agents(agents);
    f.collect_propositions(props);
    for (const auto& a : agents) require_agent(a);
    for (const auto& p : props) require_proposition(p);
  }

  std::set<AgentId> agents_;
  std::map<PropId, Proposition> propositions_;
  std::set<BeliefFormula> assertions_;
  std::set<std::pair<AgentId, PropId>> confidence_;
};

}  // namespace epinets
