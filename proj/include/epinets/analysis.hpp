#pragma once

// Analytical pipelines: pairwise belief-match levels and group coherence,
// level-2/level-3 prediction accuracy, centrality-vs-knowledge correlation
// tables and clique-vs-network coherence tables with a binomial baseline.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epinets/socnet.hpp"
#include "epinets/survey.hpp"

namespace epinets {

// Absence semantics for unmarked members: no prediction at all, or a
// forced-binary prediction of disagreement.
enum class AbsenceMode { Default, ForcedBinary };

inline AbsenceMode absence_mode_from_string(const std::string& s) {
  if (s == "default") return AbsenceMode::Default;
  if (s == "forced-binary") return AbsenceMode::ForcedBinary;
  throw SchemaError("unknown absence mode '" + s + "'");
}

namespace detail {

// Sorts before accumulating so sums are invariant under agent relabeling
// (which permutes iteration order).
inline double stable_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double acc = 0.0;
  for (double v : values) acc += v;
  return acc;
}

inline std::optional<double> mean_defined(const std::vector<std::optional<double>>& cells) {
  std::vector<double> vals;
  for (const auto& c : cells)
    if (c) vals.push_back(*c);
  if (vals.empty()) return std::nullopt;
  const double n = static_cast<double>(vals.size());
  return stable_sum(std::move(vals)) / n;
}

}  // namespace detail

// Highest cumulative match level of a pair on a statement:
//   1  both give the same answer;
//   2  additionally each '1'-marked the other (mutual correct prediction);
//   3  additionally each '2'-marked the other, each such attribution being
//      confirmed by the other's '1' mark (already required at level 2).
// Absent marks are absent predictions and stop the ladder.
inline int pair_match_levels(const SurveyBundle& bundle, const AgentId& a, const AgentId& b,
                             const std::string& stmt) {
  if (a == b) throw EvalError("pair match needs two distinct agents");
  const bool answer_a = bundle.q3_answer(a, stmt);
  const bool answer_b = bundle.q3_answer(b, stmt);
  if (answer_a != answer_b) return 0;
  if (!(bundle.has_q3_mark(a, b, stmt, '1') && bundle.has_q3_mark(b, a, stmt, '1'))) return 1;
  if (!(bundle.has_q3_mark(a, b, stmt, '2') && bundle.has_q3_mark(b, a, stmt, '2'))) return 2;
  return 3;
}

// Mean of pair_match_levels/3 over unordered member pairs and statements.
// Pairs lacking an answer are skipped; empty when nothing is evaluable.
inline std::optional<double> coherence_cell(const SurveyBundle& bundle,
                                            const std::vector<AgentId>& members,
                                            const std::vector<std::string>& statements) {
  std::vector<double> scores;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      for (const auto& stmt : statements) {
        if (!bundle.answered_q3(members[i], stmt) || !bundle.answered_q3(members[j], stmt))
          continue;
        scores.push_back(pair_match_levels(bundle, members[i], members[j], stmt) / 3.0);
      }
  if (scores.empty()) return std::nullopt;
  auto n = scores.size();
  return detail::stable_sum(std::move(scores)) / static_cast<double>(n);
}

inline double coherence(const SurveyBundle& bundle, const std::vector<AgentId>& members,
                        const std::vector<std::string>& statements) {
  if (members.size() < 2) throw EvalError("coherence needs a group of at least two members");
  if (statements.empty()) throw EvalError("coherence needs at least one statement");
  auto cell = coherence_cell(bundle, members, statements);
  if (!cell) throw EvalError("no evaluable pairs in group");
  return *cell;
}

// Whether the agent's answer matches the key; empty if unanswered.
inline std::optional<double> level1_accuracy(const SurveyBundle& bundle, const AnswerKey& key,
                                             const AgentId& a, const std::string& stmt) {
  if (!bundle.answered_q3(a, stmt)) return std::nullopt;
  auto k = key.find(stmt);
  if (k == key.end()) throw SchemaError("answer key has no entry for statement '" + stmt + "'");
  return bundle.q3_answer(a, stmt) == k->second ? 1.0 : 0.0;
}

// Fraction of other agents whose answer the agent predicted correctly. A
// '1' mark predicts agreement; an unmarked member is skipped (default) or
// read as predicted disagreement (forced-binary). Members without an
// answer of their own are never evaluable.
inline std::optional<double> level2_accuracy(const SurveyBundle& bundle, const AgentId& a,
                                             const std::string& stmt, AbsenceMode mode) {
  if (!bundle.answered_q3(a, stmt)) return std::nullopt;
  const bool own = bundle.q3_answer(a, stmt);
  int evaluable = 0;
  int correct = 0;
  for (const auto& b : bundle.roster) {
    if (b == a || !bundle.answered_q3(b, stmt)) continue;
    const bool marked = bundle.has_q3_mark(a, b, stmt, '1');
    if (!marked && mode == AbsenceMode::Default) continue;
    ++evaluable;
    const bool predicted = marked ? own : !own;
    if (predicted == bundle.q3_answer(b, stmt)) ++correct;
  }
  if (evaluable == 0) return std::nullopt;
  return static_cast<double>(correct) / evaluable;
}

// Fraction of other agents for whom the agent correctly predicted whether
// they know the agent's own answer. Ground truth for "B knows A's answer"
// is B's '1' mark toward A together with matching answers; A's prediction
// is the '2' mark (or its absence under forced-binary).
inline std::optional<double> level3_accuracy(const SurveyBundle& bundle, const AgentId& a,
                                             const std::string& stmt, AbsenceMode mode) {
  if (!bundle.answered_q3(a, stmt)) return std::nullopt;
  const bool own = bundle.q3_answer(a, stmt);
  int evaluable = 0;
  int correct = 0;
  for (const auto& b : bundle.roster) {
    if (b == a) continue;
    const bool knows = bundle.has_q3_mark(b, a, stmt, '1') && bundle.answered_q3(b, stmt) &&
                       bundle.q3_answer(b, stmt) == own;
    const bool marked = bundle.has_q3_mark(a, b, stmt, '2');
    if (!marked && mode == AbsenceMode::Default) continue;
    ++evaluable;
    if (marked == knows) ++correct;
  }
  if (evaluable == 0) return std::nullopt;
  return static_cast<double>(correct) / evaluable;
}

// Sample product-moment correlation; empty for degenerate input (length
// below two or a constant vector), mirroring the "na" table cells.
inline std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw SchemaError("pearson needs vectors of equal length");
  const std::size_t n = x.size();
  if (n < 2) return std::nullopt;
  if (std::equal(x.begin() + 1, x.end(), x.begin()) ||
      std::equal(y.begin() + 1, y.end(), y.begin()))
    return std::nullopt;
  auto mean = [n](std::span<const double> v) {
    return detail::stable_sum({v.begin(), v.end()}) / static_cast<double>(n);
  };
  const double mx = mean(x);
  const double my = mean(y);
  std::vector<double> xy, xx, yy;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    xy.push_back(dx * dy);
    xx.push_back(dx * dx);
    yy.push_back(dy * dy);
  }
  const double denom =
      std::sqrt(detail::stable_sum(std::move(xx)) * detail::stable_sum(std::move(yy)));
  if (denom == 0.0) return std::nullopt;
  return detail::stable_sum(std::move(xy)) / denom;
}

// Expected level-1 pair agreement under a binomial model of answers:
// p^2 + (1-p)^2 with p the empirical fraction answering 'T', computed in
// the equivalent 1 - 2p(1-p) form which is exact at round decimals.
inline double binomial_baseline(const SurveyBundle& bundle, const std::string& stmt) {
  int total = 0;
  int trues = 0;
  for (const auto& r : bundle.responses) {
    auto it = r.q3_answers.find(stmt);
    if (it == r.q3_answers.end()) continue;
    ++total;
    if (it->second) ++trues;
  }
  if (total == 0) throw EvalError("no answers for statement '" + stmt + "'");
  const double p = static_cast<double>(trues) / total;
  return 1.0 - 2.0 * p * (1.0 - p);
}

// ---------------------------------------------------------------------------
// Report tables

// Per agent and statement: level-2 and level-3 prediction accuracy, plus
// per-agent means over the statements with defined values. Cells are
// empty exactly when no prediction was evaluable.
struct AccuracyTable {
  struct Row {
    AgentId agent;
    std::vector<std::optional<double>> level2;
    std::vector<std::optional<double>> level3;
    std::optional<double> level2_overall;
    std::optional<double> level3_overall;
  };
  std::vector<std::string> statements;
  std::vector<Row> rows;  // one per roster member, roster order
};

struct CorrelationTable {
  struct Row {
    TieKind network;
    std::string measure;  // betweenness / degree / eigenvector
    int level;            // 2 or 3
    std::vector<std::optional<double>> cells;  // one per statement
    std::optional<double> overall;
  };
  std::vector<std::string> statements;
  std::vector<Row> rows;
};

struct CoherenceTable {
  struct Row {
    std::string network;  // "all", "baseline" or a tie-network kind
    std::vector<AgentId> members;
    std::vector<std::optional<double>> cells;
    std::optional<double> overall;
    std::vector<std::optional<double>> delta;  // clique minus network
    std::optional<double> delta_overall;
  };
  std::vector<std::string> statements;
  std::vector<Row> rows;  // whole network first, baseline second, then cliques
};

namespace detail {

inline std::optional<double> centrality_accuracy_cell(
    const std::map<AgentId, double>& centrality,
    const std::map<AgentId, std::optional<double>>& accuracy) {
  std::vector<double> xs, ys;
  for (const auto& [agent, acc] : accuracy) {
    if (!acc) continue;
    xs.push_back(centrality.at(agent));
    ys.push_back(*acc);
  }
  return pearson(xs, ys);
}

}  // namespace detail

inline AccuracyTable accuracy_table(const SurveyBundle& bundle,
                                    const std::vector<std::string>& statements,
                                    AbsenceMode mode) {
  if (statements.empty()) throw SchemaError("statement list must not be empty");
  AccuracyTable table;
  table.statements = statements;
  for (const auto& a : bundle.roster) {
    AccuracyTable::Row row{a, {}, {}, {}, {}};
    for (const auto& s : statements) {
      row.level2.push_back(level2_accuracy(bundle, a, s, mode));
      row.level3.push_back(level3_accuracy(bundle, a, s, mode));
    }
    row.level2_overall = detail::mean_defined(row.level2);
    row.level3_overall = detail::mean_defined(row.level3);
    table.rows.push_back(std::move(row));
  }
  return table;
}

// Pearson correlation of each centrality measure with per-agent level-2 and
// level-3 accuracy, per statement plus an Overall column correlating the
// per-agent mean accuracies.
inline CorrelationTable centrality_knowledge_table(const SurveyBundle& bundle,
                                                   const TieNetworks& networks,
                                                   const std::vector<std::string>& statements,
                                                   AbsenceMode mode) {
  const AccuracyTable acc = accuracy_table(bundle, statements, mode);
  CorrelationTable table;
  table.statements = statements;

  for (TieKind kind : {TieKind::Collaboration, TieKind::Friendship, TieKind::Interaction}) {
    const TieNetwork& net = networks.by_kind(kind);
    std::map<std::string, std::map<AgentId, double>> measures;
    for (const auto& [a, d] : degree_centrality(net)) measures["degree"][a] = d;
    measures["betweenness"] = betweenness_centrality(net);
    measures["eigenvector"] = eigenvector_centrality(net);

    for (int level : {2, 3}) {
      for (const std::string measure : {"betweenness", "degree", "eigenvector"}) {
        CorrelationTable::Row row{kind, measure, level, {}, {}};
        for (std::size_t j = 0; j <= statements.size(); ++j) {
          std::map<AgentId, std::optional<double>> column;
          for (const auto& r : acc.rows) {
            const auto& cells = level == 2 ? r.level2 : r.level3;
            const auto& overall = level == 2 ? r.level2_overall : r.level3_overall;
            column[r.agent] = j < statements.size() ? cells[j] : overall;
          }
          auto cell = detail::centrality_accuracy_cell(measures.at(measure), column);
          if (j < statements.size())
            row.cells.push_back(cell);
          else
            row.overall = cell;
        }
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

// Coherence of every maximal clique of each network against whole-network
// coherence, with the per-statement binomial baseline.
inline CoherenceTable clique_coherence_table(const SurveyBundle& bundle,
                                             const TieNetworks& networks,
                                             const std::vector<std::string>& statements) {
  if (statements.empty()) throw SchemaError("statement list must not be empty");
  CoherenceTable table;
  table.statements = statements;

  CoherenceTable::Row all{"all", bundle.roster, {}, {}, {}, {}};
  for (const auto& s : statements) all.cells.push_back(coherence_cell(bundle, bundle.roster, {s}));
  all.overall = detail::mean_defined(all.cells);
  for (std::size_t i = 0; i < statements.size(); ++i) all.delta.push_back(0.0);
  all.delta_overall = 0.0;
  table.rows.push_back(all);

  CoherenceTable::Row base{"baseline", {}, {}, {}, {}, {}};
  for (const auto& s : statements) {
    std::optional<double> b;
    try {
      b = binomial_baseline(bundle, s);
    } catch (const EvalError&) {
    }
    base.cells.push_back(b);
    base.delta.push_back(std::nullopt);
  }
  base.overall = detail::mean_defined(base.cells);
  table.rows.push_back(std::move(base));

  for (TieKind kind : {TieKind::Collaboration, TieKind::Friendship, TieKind::Interaction}) {
    for (const auto& clique : maximal_cliques(networks.by_kind(kind))) {
      CoherenceTable::Row row{to_string(kind), clique, {}, {}, {}, {}};
      for (std::size_t i = 0; i < statements.size(); ++i) {
        auto c = coherence_cell(bundle, clique, {statements[i]});
        row.cells.push_back(c);
        if (c && all.cells[i])
          row.delta.push_back(*c - *all.cells[i]);
        else
          row.delta.push_back(std::nullopt);
      }
      row.overall = detail::mean_defined(row.cells);
      if (row.overall && all.overall)
        row.delta_overall = *row.overall - *all.overall;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// CSV rendering (UTF-8, header row, "na" for undefined cells)

namespace detail {

inline std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string csv_cell(const std::optional<double>& v) {
  return v ? csv_number(*v) : "na";
}

inline std::string join(const std::vector<AgentId>& names, char sep = ' ') {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += sep;
    out += n;
  }
  return out;
}

}  // namespace detail

inline std::string to_csv(const AccuracyTable& t) {
  std::string out = "agent";
  for (const auto& s : t.statements) out += ",l2_" + s;
  out += ",l2_overall";
  for (const auto& s : t.statements) out += ",l3_" + s;
  out += ",l3_overall\n";
  for (const auto& r : t.rows) {
    out += r.agent;
    for (const auto& c : r.level2) out += "," + detail::csv_cell(c);
    out += "," + detail::csv_cell(r.level2_overall);
    for (const auto& c : r.level3) out += "," + detail::csv_cell(c);
    out += "," + detail::csv_cell(r.level3_overall) + "\n";
  }
  return out;
}

inline std::string to_csv(const CorrelationTable& t) {
  std::string out = "network,measure,level";
  for (const auto& s : t.statements) out += "," + s;
  out += ",overall\n";
  for (const auto& r : t.rows) {
    out += to_string(r.network) + "," + r.measure + "," + std::to_string(r.level);
    for (const auto& c : r.cells) out += "," + detail::csv_cell(c);
    out += "," + detail::csv_cell(r.overall) + "\n";
  }
  return out;
}

inline std::string to_csv(const CoherenceTable& t) {
  std::string out = "network,members";
  for (const auto& s : t.statements) out += "," + s;
  out += ",overall";
  for (const auto& s : t.statements) out += ",delta_" + s;
  out += ",delta_overall\n";
  for (const auto& r : t.rows) {
    out += r.network + "," + detail::join(r.members);
    for (const auto& c : r.cells) out += "," + detail::csv_cell(c);
    out += "," + detail::csv_cell(r.overall);
    for (const auto& d : r.delta) out += "," + detail::csv_cell(d);
    out += "," + detail::csv_cell(r.delta_overall) + "\n";
  }
  return out;
}

// Per-network centrality listing: one row per agent and network.
inline std::string centrality_csv(const TieNetworks& networks) {
  std::string out = "network,agent,betweenness,degree,eigenvector\n";
  for (TieKind kind : {TieKind::Collaboration, TieKind::Friendship, TieKind::Interaction}) {
    const TieNetwork& net = networks.by_kind(kind);
    if (net.nodes().empty()) continue;
    auto deg = degree_centrality(net);
    auto btw = betweenness_centrality(net);
    auto eig = eigenvector_centrality(net);
    for (const auto& a : net.nodes())
      out += to_string(kind) + "," + a + "," + detail::csv_number(btw.at(a)) + "," +
             std::to_string(deg.at(a)) + "," + detail::csv_number(eig.at(a)) + "\n";
  }
  return out;
}

}  // namespace epinets
