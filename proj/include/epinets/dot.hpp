#pragma once

// Graphviz DOT export. Tie networks render as undirected graphs; epinets
// as digraphs with agents as ellipses, propositions as truth-labeled boxes
// and one edge per assertion from the outermost believer to the innermost
// proposition, higher orders carried as an ordinal edge label. Full chains
// live in the JSON export.

#include <string>
#include <vector>

#include "epinets/core.hpp"
#include "epinets/socnet.hpp"
#include "epinets/survey.hpp"

namespace epinets {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

// Innermost literal of a stored assertion, plus whether any negation
// occurs along the belief chain.
inline const Literal& innermost_literal(const BeliefFormula& f, bool& negated_chain) {
  if (f.kind() == BeliefFormula::Kind::Lit) return f.as_literal();
  if (f.kind() == BeliefFormula::Kind::Not) negated_chain = true;
  return innermost_literal(f.body(), negated_chain);
}

}  // namespace detail

inline std::string to_dot(const TieNetwork& net) {
  std::string out = "graph " + to_string(net.kind()) + " {\n";
  out += "  node [shape=ellipse];\n";
  for (const auto& n : net.nodes()) out += "  " + detail::dot_quote(n) + ";\n";
  for (const auto& [u, v] : net.edges())
    out += "  " + detail::dot_quote(u) + " -- " + detail::dot_quote(v) + ";\n";
  out += "}\n";
  return out;
}

inline std::string to_dot(const TieNetworks& nets) {
  return to_dot(nets.collaboration) + to_dot(nets.interaction) + to_dot(nets.friendship);
}

inline std::string to_dot(const Epinet& net) {
  std::string out = "digraph epinet {\n";
  for (const auto& a : net.agents())
    out += "  " + detail::dot_quote(a) + " [shape=ellipse];\n";
  for (const auto& [id, p] : net.propositions())
    out += "  " + detail::dot_quote(id) + " [shape=box, label=" +
           detail::dot_quote(id + " [" + truth_letter(p.truth) + "]") + "];\n";
  std::vector<std::string> edges;
  for (const auto& f : net.assertions()) {
    bool negated = false;
    const Literal& l = detail::innermost_literal(f, negated);
    std::string label;
    if (f.depth() > 1) label += std::to_string(f.depth());
    if (l.sign == Sign::Negative) label += "!";
    if (negated) label += "~";
    std::string edge =
        "  " + detail::dot_quote(f.outer_believer()) + " -> " + detail::dot_quote(l.proposition);
    if (!label.empty()) edge += " [label=" + detail::dot_quote(label) + "]";
    edges.push_back(edge + ";\n");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& e : edges) out += e;
  out += "}\n";
  return out;
}

}  // namespace epinets
