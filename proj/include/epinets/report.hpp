#pragma once

// Report rendering: compiles a survey into every pipeline output and
// writes centrality.csv, correlations.csv, coherence.csv, epinet.dot,
// networks.dot and report.json into an output directory. Identical input
// yields byte-identical files.

#include <string>
#include <vector>

#include "epinets/analysis.hpp"
#include "epinets/dot.hpp"
#include "epinets/json_io.hpp"
#include "epinets/survey.hpp"

namespace epinets {

struct ReportConfig {
  std::string out_dir;
  AbsenceMode absence_mode = AbsenceMode::Default;
  std::vector<std::string> statements;  // empty: every answered statement
};

inline Json to_json(const AccuracyTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json l2 = Json::array(), l3 = Json::array();
    for (const auto& c : r.level2) l2.push_back(c ? Json(*c) : Json());
    for (const auto& c : r.level3) l3.push_back(c ? Json(*c) : Json());
    rows.push_back(Json{{"agent", r.agent},
                        {"level2", std::move(l2)},
                        {"level3", std::move(l3)},
                        {"level2_overall", r.level2_overall ? Json(*r.level2_overall) : Json()},
                        {"level3_overall", r.level3_overall ? Json(*r.level3_overall) : Json()}});
  }
  return Json{{"statements", t.statements}, {"rows", std::move(rows)}};
}

inline Json to_json(const CorrelationTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json cells = Json::array();
    for (const auto& c : r.cells) cells.push_back(c ? Json(*c) : Json());
    rows.push_back(Json{{"network", to_string(r.network)},
                        {"measure", r.measure},
                        {"level", r.level},
                        {"cells", std::move(cells)},
                        {"overall", r.overall ? Json(*r.overall) : Json()}});
  }
  return Json{{"statements", t.statements}, {"rows", std::move(rows)}};
}

inline Json to_json(const CoherenceTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json cells = Json::array();
    for (const auto& c : r.cells) cells.push_back(c ? Json(*c) : Json());
    Json delta = Json::array();
    for (const auto& d : r.delta) delta.push_back(d ? Json(*d) : Json());
    rows.push_back(Json{{"network", r.network},
                        {"members", r.members},
                        {"cells", std::move(cells)},
                        {"overall", r.overall ? Json(*r.overall) : Json()},
                        {"delta", std::move(delta)},
                        {"delta_overall", r.delta_overall ? Json(*r.delta_overall) : Json()}});
  }
  return Json{{"statements", t.statements}, {"rows", std::move(rows)}};
}

inline Json centrality_json(const TieNetworks& networks) {
  Json j;
  for (TieKind kind : {TieKind::Collaboration, TieKind::Friendship, TieKind::Interaction}) {
    const TieNetwork& net = networks.by_kind(kind);
    Json per;
    if (!net.nodes().empty()) {
      auto deg = degree_centrality(net);
      auto btw = betweenness_centrality(net);
      auto eig = eigenvector_centrality(net);
      for (const auto& a : net.nodes())
        per[a] = Json{{"betweenness", btw.at(a)}, {"degree", deg.at(a)},
                      {"eigenvector", eig.at(a)}};
    }
    j[to_string(kind)] = std::move(per);
  }
  return j;
}

inline void render_report(const SurveyBundle& bundle, const AnswerKey& key,
                          const ReportConfig& config) {
  bundle.validate();
  const std::vector<std::string> statements =
      config.statements.empty() ? bundle.statements() : config.statements;

  TieNetworks networks = build_networks(bundle);
  Epinet issue = build_issue_epinet(bundle, key);
  AccuracyTable accuracy = accuracy_table(bundle, statements, config.absence_mode);
  CorrelationTable correlations =
      centrality_knowledge_table(bundle, networks, statements, config.absence_mode);
  CoherenceTable coherence = clique_coherence_table(bundle, networks, statements);

  const std::string dir = config.out_dir.empty() ? "." : config.out_dir;
  write_file(dir + "/centrality.csv", centrality_csv(networks));
  write_file(dir + "/correlations.csv", to_csv(correlations));
  write_file(dir + "/coherence.csv", to_csv(coherence));
  write_file(dir + "/epinet.dot", to_dot(issue));
  write_file(dir + "/networks.dot", to_dot(networks));

  Json report{
      {"roster", bundle.roster},
      {"statements", statements},
      {"absence_mode",
       config.absence_mode == AbsenceMode::Default ? "default" : "forced-binary"},
      {"centrality", centrality_json(networks)},
      {"accuracy", to_json(accuracy)},
      {"correlations", to_json(correlations)},
      {"coherence", to_json(coherence)},
  };
  write_file(dir + "/report.json", dump_json(report));
}

}  // namespace epinets
