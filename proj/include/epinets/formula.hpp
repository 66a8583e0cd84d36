#pragma once

// Concrete syntax, parser, pretty-printer, k-elimination rewriter and
// closed-world evaluator for epistemic query formulas.
//
// Grammar:
//   Formula := Conj
//   Conj    := Unary ('&' Unary)*
//   Unary   := '~' Unary | Agent ('k'|'b') Unary | '(' Formula ')' | ['!'] PropId
//
// Modal chains associate rightward; '~' binds tighter than '&'. An
// identifier is any maximal run of characters outside "()&~!" and
// whitespace, so structured proposition ids like `mob:Ben|Abe` or
// `cent:2a=Eli` are single tokens. Whether an identifier starts a modal
// chain is decided by lookahead for a following bare `k` or `b`.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epinets/core.hpp"

namespace epinets {

struct ParseError : SchemaError {
  ParseError(const std::string& what, std::size_t position)
      : SchemaError(what + " at position " + std::to_string(position)), position(position) {}
  std::size_t position;
};

// Query language over an epinet. Adds Know and And on top of the
// storage forms; conjunctions are flattened, deduplicated and kept in
// sorted order so structurally equal terms print identically.
class QueryFormula {
 public:
  enum class Kind { Lit, Not, Bel, Know, And };

  static QueryFormula literal(Literal l) {
    return QueryFormula(std::make_shared<const Node>(Node{Kind::Lit, std::move(l), {}, {}, {}}));
  }
  static QueryFormula negation(QueryFormula f) {
    return QueryFormula(
        std::make_shared<const Node>(Node{Kind::Not, {}, {}, {std::move(f)}, {}}));
  }
  static QueryFormula belief(AgentId agent, QueryFormula body) {
    return QueryFormula(std::make_shared<const Node>(
        Node{Kind::Bel, {}, std::move(agent), {std::move(body)}, {}}));
  }
  static QueryFormula knowledge(AgentId agent, QueryFormula body) {
    return QueryFormula(std::make_shared<const Node>(
        Node{Kind::Know, {}, std::move(agent), {std::move(body)}, {}}));
  }

  // N-ary conjunction as an order-insensitive set: nested Ands are
  // flattened, duplicates dropped, parts sorted; a singleton collapses
  // to its only element.
  static QueryFormula conjunction(std::vector<QueryFormula> parts) {
    std::vector<QueryFormula> flat;
    for (auto& p : parts) {
      if (p.kind() == Kind::And)
        flat.insert(flat.end(), p.node_->parts.begin(), p.node_->parts.end());
      else
        flat.push_back(std::move(p));
    }
    if (flat.empty()) throw std::logic_error("empty conjunction");
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.size() == 1) return flat.front();
    return QueryFormula(
        std::make_shared<const Node>(Node{Kind::And, {}, {}, {}, std::move(flat)}));
  }
  static QueryFormula conjunction(QueryFormula a, QueryFormula b) {
    std::vector<QueryFormula> parts;
    parts.push_back(std::move(a));
    parts.push_back(std::move(b));
    return conjunction(std::move(parts));
  }

  Kind kind() const { return node_->kind; }

  const Literal& as_literal() const {
    require(Kind::Lit);
    return node_->lit;
  }
  const AgentId& agent() const {
    if (kind() != Kind::Bel && kind() != Kind::Know)
      throw std::logic_error("formula node has no agent");
    return node_->agent;
  }
  const QueryFormula& body() const {
    if (kind() != Kind::Not && kind() != Kind::Bel && kind() != Kind::Know)
      throw std::logic_error("formula node has no body");
    return node_->children.front();
  }
  const std::vector<QueryFormula>& parts() const {
    require(Kind::And);
    return node_->parts;
  }

  bool contains_know() const {
    switch (kind()) {
      case Kind::Lit: return false;
      case Kind::Know: return true;
      case Kind::And:
        for (const auto& p : node_->parts)
          if (p.contains_know()) return true;
        return false;
      default: return body().contains_know();
    }
  }

  void collect_agents(std::set<AgentId>& out) const {
    switch (kind()) {
      case Kind::Lit: return;
      case Kind::And:
        for (const auto& p : node_->parts) p.collect_agents(out);
        return;
      case Kind::Bel:
      case Kind::Know:
        out.insert(node_->agent);
        [[fallthrough]];
      case Kind::Not:
        body().collect_agents(out);
    }
  }
  void collect_propositions(std::set<PropId>& out) const {
    switch (kind()) {
      case Kind::Lit: out.insert(node_->lit.proposition); return;
      case Kind::And:
        for (const auto& p : node_->parts) p.collect_propositions(out);
        return;
      default: body().collect_propositions(out);
    }
  }

  int compare(const QueryFormula& other) const {
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
      case Kind::Bel:
      case Kind::Know: {
        if (int c = node_->agent.compare(other.node_->agent)) return c < 0 ? -1 : 1;
        return body().compare(other.body());
      }
      case Kind::And: {
        const auto& a = node_->parts;
        const auto& b = other.node_->parts;
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
          if (int c = a[i].compare(b[i])) return c;
        if (a.size() == b.size()) return 0;
        return a.size() < b.size() ? -1 : 1;
      }
    }
    return 0;
  }

  friend bool operator==(const QueryFormula& a, const QueryFormula& b) {
    return a.compare(b) == 0;
  }
  friend bool operator!=(const QueryFormula& a, const QueryFormula& b) {
    return a.compare(b) != 0;
  }
  friend bool operator<(const QueryFormula& a, const QueryFormula& b) {
    return a.compare(b) < 0;
  }

 private:
  struct Node {
    Kind kind;
    Literal lit;                        // Lit
    AgentId agent;                      // Bel / Know
    std::vector<QueryFormula> children; // Not / Bel / Know (single element)
    std::vector<QueryFormula> parts;    // And
  };

  explicit QueryFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  void require(Kind k) const {
    if (kind() != k) throw std::logic_error("query formula node kind mismatch");
  }

  std::shared_ptr<const Node> node_;
};

namespace qf {
inline QueryFormula literal(Literal l) { return QueryFormula::literal(std::move(l)); }
inline QueryFormula literal(PropId id, Sign sign = Sign::Positive) {
  return QueryFormula::literal(lit(std::move(id), sign));
}
inline QueryFormula negation(QueryFormula f) { return QueryFormula::negation(std::move(f)); }
inline QueryFormula belief(AgentId a, QueryFormula f) {
  return QueryFormula::belief(std::move(a), std::move(f));
}
inline QueryFormula knowledge(AgentId a, QueryFormula f) {
  return QueryFormula::knowledge(std::move(a), std::move(f));
}
inline QueryFormula conjunction(std::vector<QueryFormula> parts) {
  return QueryFormula::conjunction(std::move(parts));
}
}  // namespace qf

// ---------------------------------------------------------------------------
// Pretty-printer

namespace detail {

void format_conj(const QueryFormula& f, std::string& out);

inline void format_unary(const QueryFormula& f, std::string& out) {
  switch (f.kind()) {
    case QueryFormula::Kind::Lit: {
      const Literal& l = f.as_literal();
      if (l.sign == Sign::Negative) out += '!';
      out += l.proposition;
      return;
    }
    case QueryFormula::Kind::Not:
      out += '~';
      format_unary(f.body(), out);
      return;
    case QueryFormula::Kind::Bel:
    case QueryFormula::Kind::Know:
      out += f.agent();
      out += f.kind() == QueryFormula::Kind::Bel ? " b " : " k ";
      format_unary(f.body(), out);
      return;
    case QueryFormula::Kind::And:
      out += '(';
      format_conj(f, out);
      out += ')';
      return;
  }
}

inline void format_conj(const QueryFormula& f, std::string& out) {
  if (f.kind() != QueryFormula::Kind::And) {
    format_unary(f, out);
    return;
  }
  bool first = true;
  for (const auto& p : f.parts()) {
    if (!first) out += " & ";
    first = false;
    format_unary(p, out);
  }
}

}  // namespace detail

// Minimal-parenthesization text that re-parses to the same term:
// parentheses appear only around conjunctions in unary positions.
inline std::string format(const QueryFormula& f) {
  std::string out;
  detail::format_conj(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  QueryFormula parse_formula() {
    if (tok_.kind == Tok::End) throw ParseError("empty input", 0);
    QueryFormula f = parse_conj();
    if (tok_.kind != Tok::End)
      throw ParseError("unexpected trailing input '" + std::string(tok_.text) + "'", tok_.pos);
    return f;
  }

 private:
  struct Tok {
    enum Kind { Ident, Tilde, Amp, Bang, LParen, RParen, End } kind;
    std::string_view text;
    std::size_t pos;
  };

  QueryFormula parse_conj() {
    std::vector<QueryFormula> parts;
    parts.push_back(parse_unary());
    while (tok_.kind == Tok::Amp) {
      advance();
      parts.push_back(parse_unary());
    }
    return QueryFormula::conjunction(std::move(parts));
  }

  QueryFormula parse_unary() {
    switch (tok_.kind) {
      case Tok::Tilde:
        advance();
        return QueryFormula::negation(parse_unary());
      case Tok::Bang: {
        advance();
        if (tok_.kind != Tok::Ident)
          throw ParseError("expected proposition id after '!'", tok_.pos);
        PropId id(tok_.text);
        advance();
        return qf::literal(std::move(id), Sign::Negative);
      }
      case Tok::LParen: {
        advance();
        QueryFormula f = parse_conj();
        if (tok_.kind != Tok::RParen) throw ParseError("expected ')'", tok_.pos);
        advance();
        return f;
      }
      case Tok::Ident: {
        std::string name(tok_.text);
        advance();
        if (tok_.kind == Tok::Ident && (tok_.text == "k" || tok_.text == "b")) {
          bool know = tok_.text == "k";
          advance();
          QueryFormula body = parse_unary();
          return know ? QueryFormula::knowledge(std::move(name), std::move(body))
                      : QueryFormula::belief(std::move(name), std::move(body));
        }
        return qf::literal(std::move(name));
      }
      default:
        throw ParseError("expected formula", tok_.pos);
    }
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::End, {}, start};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok::Kind k) {
      ++pos_;
      tok_ = {k, text_.substr(start, 1), start};
    };
    switch (c) {
      case '~': single(Tok::Tilde); return;
      case '&': single(Tok::Amp); return;
      case '!': single(Tok::Bang); return;
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      default: break;
    }
    while (pos_ < text_.size()) {
      char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '~' || d == '&' || d == '!' ||
          d == '(' || d == ')')
        break;
      ++pos_;
    }
    tok_ = {Tok::Ident, text_.substr(start, pos_ - start), start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Tok tok_{Tok::End, {}, 0};
};

}  // namespace detail

inline QueryFormula parse(std::string_view text) {
  return detail::Parser(text).parse_formula();
}

// ---------------------------------------------------------------------------
// k-elimination
//
// Knowledge is derived, never stored: Know(A, f) asserts both that A
// believes f and that f holds, so at truth level
//
//   Know(A, f)      =>  And(Bel(A, f'), f')        with f' = eliminate_k(f)
//   Bel(A, f & g)   =>  And(Bel(A, f), Bel(A, g))  (belief distributes)
//
// Inside a belief body a Know attribution reduces to belief attribution:
// positively, Bel(A, Know(B, f)) => Bel(A, Bel(B, f)) & Bel(A, f); under
// negation the factive conjunct has no storable form (the store has no
// disjunction), so ~Know(B, f) inside a body reduces to ~Bel(B, f).
// Bodies that still contain a conjunction under negation are not
// representable as assertions and evaluate to false by membership.

namespace detail {

std::vector<QueryFormula> belief_bodies(const QueryFormula& f);

// Storable (or stuck) form of a negated belief body.
inline QueryFormula negated_body(const QueryFormula& f) {
  switch (f.kind()) {
    case QueryFormula::Kind::Lit:
      return qf::literal(f.as_literal().negated());
    case QueryFormula::Kind::Not:
      return QueryFormula::conjunction(belief_bodies(f.body()));
    case QueryFormula::Kind::Know:
      return negated_body(QueryFormula::belief(f.agent(), f.body()));
    case QueryFormula::Kind::Bel: {
      QueryFormula body = QueryFormula::conjunction(belief_bodies(f.body()));
      return QueryFormula::negation(QueryFormula::belief(f.agent(), body));
    }
    case QueryFormula::Kind::And: {
      std::vector<QueryFormula> parts;
      for (const auto& p : f.parts()) parts.push_back(QueryFormula::conjunction(belief_bodies(p)));
      return QueryFormula::negation(QueryFormula::conjunction(std::move(parts)));
    }
  }
  throw std::logic_error("unreachable");
}

// Conjunction of Know-free bodies equivalent to `f` in a positive belief
// position. Conjuncts that are not in the storage grammar (an And under a
// negation survives) later fail membership.
inline std::vector<QueryFormula> belief_bodies(const QueryFormula& f) {
  std::vector<QueryFormula> out;
  switch (f.kind()) {
    case QueryFormula::Kind::Lit:
      out.push_back(f);
      break;
    case QueryFormula::Kind::And:
      for (const auto& p : f.parts())
        for (auto& b : belief_bodies(p)) out.push_back(std::move(b));
      break;
    case QueryFormula::Kind::Bel:
      for (auto& b : belief_bodies(f.body()))
        out.push_back(QueryFormula::belief(f.agent(), std::move(b)));
      break;
    case QueryFormula::Kind::Know: {
      for (auto& b : belief_bodies(QueryFormula::belief(f.agent(), f.body())))
        out.push_back(std::move(b));
      for (auto& b : belief_bodies(f.body())) out.push_back(std::move(b));
      break;
    }
    case QueryFormula::Kind::Not:
      if (f.body().kind() == QueryFormula::Kind::Not) {
        for (auto& b : belief_bodies(f.body().body())) out.push_back(std::move(b));
      } else {
        out.push_back(negated_body(f.body()));
      }
      break;
  }
  return out;
}

// "A believes f" as a conjunction of membership atoms.
inline QueryFormula attribute_belief(const AgentId& agent, const QueryFormula& body) {
  std::vector<QueryFormula> atoms;
  for (auto& b : belief_bodies(body)) atoms.push_back(QueryFormula::belief(agent, std::move(b)));
  return QueryFormula::conjunction(std::move(atoms));
}

}  // namespace detail

// Rewrites a query into a Know-free formula over literals, negation,
// conjunction and membership-testable belief atoms.
inline QueryFormula eliminate_k(const QueryFormula& f) {
  switch (f.kind()) {
    case QueryFormula::Kind::Lit:
      return f;
    case QueryFormula::Kind::Not:
      return QueryFormula::negation(eliminate_k(f.body()));
    case QueryFormula::Kind::And: {
      std::vector<QueryFormula> parts;
      for (const auto& p : f.parts()) parts.push_back(eliminate_k(p));
      return QueryFormula::conjunction(std::move(parts));
    }
    case QueryFormula::Kind::Bel:
      return detail::attribute_belief(f.agent(), f.body());
    case QueryFormula::Kind::Know:
      return QueryFormula::conjunction(detail::attribute_belief(f.agent(), f.body()),
                                       eliminate_k(f.body()));
  }
  throw std::logic_error("unreachable");
}

// Conversion into the storage normal form; empty when the term falls
// outside the storable grammar.
inline std::optional<BeliefFormula> to_belief_formula(const QueryFormula& f) {
  switch (f.kind()) {
    case QueryFormula::Kind::Lit:
      return bf::literal(f.as_literal());
    case QueryFormula::Kind::Not: {
      auto inner = to_belief_formula(f.body());
      if (!inner) return std::nullopt;
      return BeliefFormula::negation(std::move(*inner));
    }
    case QueryFormula::Kind::Bel: {
      auto inner = to_belief_formula(f.body());
      if (!inner) return std::nullopt;
      return BeliefFormula::belief(f.agent(), std::move(*inner));
    }
    default:
      return std::nullopt;
  }
}

// Storage form lifted back into the query language.
inline QueryFormula to_query_formula(const BeliefFormula& f) {
  switch (f.kind()) {
    case BeliefFormula::Kind::Lit: return qf::literal(f.as_literal());
    case BeliefFormula::Kind::Not: return QueryFormula::negation(to_query_formula(f.body()));
    case BeliefFormula::Kind::Bel:
      return QueryFormula::belief(f.agent(), to_query_formula(f.body()));
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Evaluator

namespace detail {

inline bool evaluate_known_free(const Epinet& net, const QueryFormula& f) {
  switch (f.kind()) {
    case QueryFormula::Kind::Lit: {
      Truth t = net.literal_truth(f.as_literal());
      if (t == Truth::Unknown)
        throw EvalError("proposition '" + f.as_literal().proposition +
                        "' has unknown truth value");
      return t == Truth::True;
    }
    case QueryFormula::Kind::Not:
      return !evaluate_known_free(net, f.body());
    case QueryFormula::Kind::And: {
      for (const auto& p : f.parts())
        if (!evaluate_known_free(net, p)) return false;
      return true;
    }
    case QueryFormula::Kind::Bel: {
      auto stored = to_belief_formula(f);
      return stored && net.holds_assertion(*stored);
    }
    case QueryFormula::Kind::Know:
      throw std::logic_error("Know node after k-elimination");
  }
  return false;
}

}  // namespace detail

// Closed-world evaluation: k-eliminate, then literals read ground truth,
// belief atoms are membership tests against the assertion set, and
// negation is absence.
inline bool evaluate(const Epinet& net, const QueryFormula& f) {
  std::set<AgentId> agents;
  std::set<PropId> props;
  f.collect_agents(agents);
  f.collect_propositions(props);
  for (const auto& a : agents) net.require_agent(a);
  for (const auto& p : props) net.require_proposition(p);
  return detail::evaluate_known_free(net, eliminate_k(f));
}

inline bool evaluate(const Epinet& net, std::string_view text) {
  return evaluate(net, parse(text));
}

}  // namespace epinets
