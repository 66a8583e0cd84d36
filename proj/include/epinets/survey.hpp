#pragma once

// Questionnaire data model and compilation into tie networks, the issue
// epinet and the network-perception epinet.
//
// Mark semantics, uniform across questions: a respondent R with answer
// atom `base` who marks member M with
//   '1'  asserts  R b M b base          (M would answer the same)
//   '2'  asserts  R b M b R b base      (M knows R's answer) and, because
//        knowledge attribution rewrites through belief, R b R b base.
// Marks are independent; a '2' without a '1' is accepted as reported.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epinets/core.hpp"
#include "epinets/socnet.hpp"

namespace epinets {

// statement id -> true iff the keyed answer is 'T'
using AnswerKey = std::map<std::string, bool>;

struct Q1Entry {
  std::set<int> ties;        // statement numbers 1..4 reported true of the tie
  std::set<char> col_a;      // subset of {'1','2'}
};

struct SurveyResponse {
  AgentId respondent;
  // Relationship characterizations; disengaged from members not listed
  // (absent member = empty tie set). Absent entirely = question skipped.
  std::optional<std::map<AgentId, Q1Entry>> q1;
  std::map<std::string, AgentId> q2_answers;                          // 2a/2b/2c
  std::map<AgentId, std::map<std::string, std::set<char>>> q2_marks;  // member -> item
  std::map<std::string, bool> q3_answers;                             // statement -> answered 'T'
  std::map<AgentId, std::map<std::string, std::set<char>>> q3_marks;  // member -> statement
};

struct SurveyBundle {
  std::vector<AgentId> roster;
  std::vector<SurveyResponse> responses;

  const SurveyResponse* response(const AgentId& a) const {
    for (const auto& r : responses)
      if (r.respondent == a) return &r;
    return nullptr;
  }

  bool answered_q3(const AgentId& a, const std::string& stmt) const {
    const SurveyResponse* r = response(a);
    return r && r->q3_answers.count(stmt) > 0;
  }

  bool q3_answer(const AgentId& a, const std::string& stmt) const {
    const SurveyResponse* r = response(a);
    if (!r) throw EvalError("agent '" + a + "' did not respond");
    auto it = r->q3_answers.find(stmt);
    if (it == r->q3_answers.end())
      throw EvalError("agent '" + a + "' did not answer statement '" + stmt + "'");
    return it->second;
  }

  bool has_q3_mark(const AgentId& a, const AgentId& about, const std::string& stmt,
                   char mark) const {
    const SurveyResponse* r = response(a);
    if (!r) return false;
    auto m = r->q3_marks.find(about);
    if (m == r->q3_marks.end()) return false;
    auto s = m->second.find(stmt);
    return s != m->second.end() && s->second.count(mark) > 0;
  }

  // Statement ids answered by anyone, sorted.
  std::vector<std::string> statements() const {
    std::set<std::string> ids;
    for (const auto& r : responses)
      for (const auto& [s, a] : r.q3_answers) ids.insert(s);
    return {ids.begin(), ids.end()};
  }

  void validate() const {
    std::set<AgentId> names;
    for (const auto& a : roster) {
      if (a.empty() || a.find_first_not_of(" \t\r\n") == std::string::npos)
        throw SchemaError("roster names must not be empty or whitespace-only");
      if (!names.insert(a).second) throw SchemaError("duplicate roster name '" + a + "'");
    }
    if (roster.empty()) throw SchemaError("roster must not be empty");

    static const std::set<std::string> q2_items = {"2a", "2b", "2c"};
    std::set<AgentId> seen;
    for (const auto& r : responses) {
      const std::string where = "response of '" + r.respondent + "': ";
      if (!names.count(r.respondent))
        throw SchemaError("respondent '" + r.respondent + "' is not on the roster");
      if (!seen.insert(r.respondent).second)
        throw SchemaError("duplicate respondent '" + r.respondent + "'");

      if (r.q1) {
        for (const auto& [member, entry] : *r.q1) {
          require_member(names, r.respondent, member, where + "q1");
          for (int t : entry.ties)
            if (t < 1 || t > 4)
              throw SchemaError(where + "q1 tie statement number " + std::to_string(t) +
                                " out of range 1..4");
          require_marks(entry.col_a, where + "q1 column A");
        }
      }
      for (const auto& [item, answer] : r.q2_answers) {
        if (!q2_items.count(item)) throw SchemaError(where + "unknown q2 item '" + item + "'");
        if (!names.count(answer))
          throw SchemaError(where + "q2 answer '" + answer + "' is not on the roster");
      }
      for (const auto& [member, items] : r.q2_marks) {
        require_member(names, r.respondent, member, where + "q2 marks");
        for (const auto& [item, marks] : items) {
          if (!q2_items.count(item)) throw SchemaError(where + "unknown q2 item '" + item + "'");
          if (!r.q2_answers.count(item))
            throw SchemaError(where + "q2 mark for unanswered item '" + item + "'");
          require_marks(marks, where + "q2");
        }
      }
      for (const auto& [member, stmts] : r.q3_marks) {
        require_member(names, r.respondent, member, where + "q3 marks");
        for (const auto& [stmt, marks] : stmts) {
          if (!r.q3_answers.count(stmt))
            throw SchemaError(where + "q3 mark for unanswered statement '" + stmt + "'");
          require_marks(marks, where + "q3");
        }
      }
    }
  }

 private:
  static void require_member(const std::set<AgentId>& roster, const AgentId& self,
                             const AgentId& member, const std::string& where) {
    if (!roster.count(member))
      throw SchemaError(where + ": '" + member + "' is not on the roster");
    if (member == self)
      throw SchemaError(where + ": self-reference is not allowed");
  }
  static void require_marks(const std::set<char>& marks, const std::string& where) {
    for (char m : marks)
      if (m != '1' && m != '2')
        throw SchemaError(where + ": mark must be '1' or '2'");
  }
};

struct TieNetworks {
  TieNetwork collaboration{TieKind::Collaboration};
  TieNetwork interaction{TieKind::Interaction};
  TieNetwork friendship{TieKind::Friendship};

  const TieNetwork& by_kind(TieKind k) const {
    switch (k) {
      case TieKind::Collaboration: return collaboration;
      case TieKind::Interaction: return interaction;
      case TieKind::Friendship: return friendship;
    }
    throw std::logic_error("unreachable");
  }
};

// Compiles q1 tie reports into the three undirected networks. Statement 1
// yields a collaboration edge, 2 or 3 (weekly or daily) an interaction
// edge, 4 a friendship edge; directed reports are symmetrized by union.
inline TieNetworks build_networks(const SurveyBundle& bundle) {
  bundle.validate();
  TieNetworks nets;
  for (const auto& a : bundle.roster) {
    nets.collaboration.add_node(a);
    nets.interaction.add_node(a);
    nets.friendship.add_node(a);
  }
  for (const auto& r : bundle.responses) {
    if (!r.q1) continue;
    for (const auto& [member, entry] : *r.q1) {
      if (entry.ties.count(1)) nets.collaboration.add_edge(r.respondent, member);
      if (entry.ties.count(2) || entry.ties.count(3)) nets.interaction.add_edge(r.respondent, member);
      if (entry.ties.count(4)) nets.friendship.add_edge(r.respondent, member);
    }
  }
  return nets;
}

// Issue epinet from q3: first-order beliefs from answers, second- and
// third-order from the '1'/'2' marks, proposition truths from the key.
inline Epinet build_issue_epinet(const SurveyBundle& bundle, const AnswerKey& key) {
  bundle.validate();
  Epinet net;
  for (const auto& a : bundle.roster) net.add_agent(a);

  for (const auto& stmt : bundle.statements()) {
    auto it = key.find(stmt);
    if (it == key.end()) throw SchemaError("answer key has no entry for statement '" + stmt + "'");
    net.add_proposition({stmt, "survey statement " + stmt,
                         it->second ? Truth::True : Truth::False, std::nullopt});
  }

  for (const auto& r : bundle.responses) {
    for (const auto& [stmt, answer] : r.q3_answers) {
      BeliefFormula base = bf::literal(stmt, answer ? Sign::Positive : Sign::Negative);
      net.assert_belief(bf::belief(r.respondent, base));
      for (const auto& [member, stmts] : r.q3_marks) {
        auto ms = stmts.find(stmt);
        if (ms == stmts.end()) continue;
        if (ms->second.count('1'))
          net.assert_belief(bf::belief(r.respondent, bf::belief(member, base)));
        if (ms->second.count('2')) {
          net.assert_belief(
              bf::belief(r.respondent, bf::belief(member, bf::belief(r.respondent, base))));
          net.assert_belief(bf::belief(r.respondent, bf::belief(r.respondent, base)));
        }
      }
    }
  }
  return net;
}

namespace detail {

inline std::string tie_set_digits(const std::set<int>& ties) {
  if (ties.empty()) return "0";
  std::string s;
  for (int t : ties) s += static_cast<char>('0' + t);
  return s;
}

inline std::string rel_prop_id(const AgentId& reporter, const AgentId& member,
                               const std::set<int>& ties) {
  return "rel:" + reporter + "," + member + "=" + tie_set_digits(ties);
}

inline std::string cent_prop_id(const std::string& item, const AgentId& who) {
  return "cent:" + item + "=" + who;
}

// Agents attaining the maximum of a centrality map.
template <typename T>
std::set<AgentId> argmax_agents(const std::map<AgentId, T>& values) {
  std::set<AgentId> best;
  std::optional<T> top;
  for (const auto& [a, v] : values) {
    if (!top || v > *top) {
      top = v;
      best = {a};
    } else if (v == *top) {
      best.insert(a);
    }
  }
  return best;
}

}  // namespace detail

// Perception epinet from q1 column A and question 2. Tie-characterization
// atoms `rel:<R>,<M>=<set>` are true when the union of both parties'
// reports equals the claimed set, unknown when the other party's report is
// unavailable; centrality-answer atoms `cent:<item>=<agent>` are checked
// against the networks compiled by build_networks (2a: friendship degree,
// 2b: interaction betweenness, 2c: collaboration eigenvector).
inline Epinet build_perception_epinet(const SurveyBundle& bundle) {
  bundle.validate();
  TieNetworks nets = build_networks(bundle);
  Epinet net;
  for (const auto& a : bundle.roster) net.add_agent(a);

  std::map<std::string, std::set<AgentId>> central = {
      {"2a", detail::argmax_agents(degree_centrality(nets.friendship))},
      {"2b", detail::argmax_agents(betweenness_centrality(nets.interaction))},
      {"2c", detail::argmax_agents(eigenvector_centrality(nets.collaboration))},
  };

  auto ensure_prop = [&](const PropId& id, const std::string& text, Truth truth) {
    if (!net.has_proposition(id)) net.add_proposition({id, text, truth, std::nullopt});
  };

  for (const auto& r : bundle.responses) {
    if (!r.q1) continue;
    for (const auto& member : bundle.roster) {
      if (member == r.respondent) continue;
      auto entry_it = r.q1->find(member);
      const Q1Entry entry = entry_it == r.q1->end() ? Q1Entry{} : entry_it->second;
      PropId id = detail::rel_prop_id(r.respondent, member, entry.ties);

      Truth truth = Truth::Unknown;
      const SurveyResponse* other = bundle.response(member);
      if (other && other->q1) {
        std::set<int> fused = entry.ties;
        auto back = other->q1->find(r.respondent);
        if (back != other->q1->end())
          fused.insert(back->second.ties.begin(), back->second.ties.end());
        truth = fused == entry.ties ? Truth::True : Truth::False;
      }
      ensure_prop(id, "ties between " + r.respondent + " and " + member + " as reported by " +
                          r.respondent,
                  truth);
      BeliefFormula base = bf::literal(id);
      net.assert_belief(bf::belief(r.respondent, base));
      if (entry.col_a.count('1'))
        net.assert_belief(bf::belief(r.respondent, bf::belief(member, base)));
      if (entry.col_a.count('2')) {
        net.assert_belief(
            bf::belief(r.respondent, bf::belief(member, bf::belief(r.respondent, base))));
        net.assert_belief(bf::belief(r.respondent, bf::belief(r.respondent, base)));
      }
    }
  }

  for (const auto& r : bundle.responses) {
    for (const auto& [item, who] : r.q2_answers) {
      PropId id = detail::cent_prop_id(item, who);
      ensure_prop(id, "most central member per " + item + " is " + who,
                  central.at(item).count(who) ? Truth::True : Truth::False);
      BeliefFormula base = bf::literal(id);
      net.assert_belief(bf::belief(r.respondent, base));
      for (const auto& [member, items] : r.q2_marks) {
        auto mi = items.find(item);
        if (mi == items.end()) continue;
        if (mi->second.count('1'))
          net.assert_belief(bf::belief(r.respondent, bf::belief(member, base)));
        if (mi->second.count('2')) {
          net.assert_belief(
              bf::belief(r.respondent, bf::belief(member, bf::belief(r.respondent, base))));
          net.assert_belief(bf::belief(r.respondent, bf::belief(r.respondent, base)));
        }
      }
    }
  }
  return net;
}

}  // namespace epinets
