#pragma once

// The fake-CV interview fixture: Alice claims to have won a contest she
// did not win (q false, p its true negation), both privately know p, each
// holds second- and third-order beliefs about the other, Alice also
// believes her own claim held up (q) and is confident about it, and there
// is a side fact r (Bob's son won) that never enters Alice's assertions.

#include <string>

#include "epinets/core.hpp"

#ifndef EPINETS_DATA_DIR
#define EPINETS_DATA_DIR "data"
#endif

namespace fixtures {

inline epinets::Epinet fig1() {
  using namespace epinets;
  Epinet net;
  net.add_agent("Alice");
  net.add_agent("Bob");
  net.add_proposition({"q", "Alice won the engineering contest in year X", Truth::False, {}});
  net.add_proposition(
      {"p", "Alice did not win the engineering contest in year X", Truth::True, "q"});
  net.add_proposition({"r", "Bob's son won the engineering contest in year X", Truth::True, {}});

  auto B = [](const AgentId& a, BeliefFormula f) { return bf::belief(a, std::move(f)); };
  auto L = [](const PropId& p) { return bf::literal(p); };

  net.assert_belief(B("Alice", L("p")));
  net.assert_belief(B("Bob", L("p")));
  net.assert_belief(B("Alice", L("q")));
  net.assert_belief(B("Alice", B("Bob", L("q"))));
  net.assert_belief(B("Bob", B("Alice", L("p"))));
  net.assert_belief(B("Alice", B("Bob", B("Alice", L("q")))));
  net.assert_belief(B("Bob", B("Alice", B("Bob", L("p")))));
  net.assert_belief(B("Bob", L("r")));
  net.add_confidence("Alice", "q");
  return net;
}

inline std::string data_path(const std::string& name) {
  return std::string(EPINETS_DATA_DIR) + "/" + name;
}

}  // namespace fixtures
