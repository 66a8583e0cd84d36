#pragma once

// Command-line front end. One verb per construct so scripted runs stay
// auditable: ingest, centrality, cliques, epistemics, focal, coherence,
// correlate, eval, report.
//
// Exit codes: 0 success, 1 usage error, 2 data/schema error,
// 3 computation error. Diagnostics go to standard error; machine output
// to standard output or files.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "epinets/analysis.hpp"
#include "epinets/collective.hpp"
#include "epinets/dot.hpp"
#include "epinets/json_io.hpp"
#include "epinets/report.hpp"
#include "epinets/states.hpp"

namespace epinets::cli {

namespace detail {

inline std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline Literal parse_candidate(const std::string& text) {
  if (!text.empty() && text[0] == '!') return lit(text.substr(1), Sign::Negative);
  return lit(text);
}

// Survey plus answer key, the explicit key file taking precedence.
struct SurveyInputs {
  SurveyBundle bundle;
  AnswerKey key;
};

inline SurveyInputs load_survey_inputs(const std::string& survey_path,
                                       const std::string& key_path) {
  SurveyFile file = load_survey(survey_path);
  SurveyInputs in{std::move(file.bundle), std::move(file.key)};
  if (!key_path.empty()) in.key = load_answer_key(key_path);
  return in;
}

inline void emit(const std::string& content, const std::string& out_dir,
                 const std::string& filename, std::ostream& out) {
  if (out_dir.empty())
    out << content;
  else
    write_file(out_dir + "/" + filename, content);
}

inline std::string json_text(const Json& j) { return dump_json(j); }

// Networks for the centrality/cliques commands: all three from a survey,
// or a single one from a network JSON file.
inline std::vector<TieNetwork> load_tie_networks(const std::string& survey_path,
                                                 const std::string& network_path,
                                                 const std::string& key_path) {
  if (survey_path.empty() == network_path.empty())
    throw SchemaError("exactly one of --survey and --network is required");
  if (!network_path.empty()) return {load_network(network_path)};
  TieNetworks nets = build_networks(load_survey_inputs(survey_path, key_path).bundle);
  return {nets.collaboration, nets.interaction, nets.friendship};
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"epinet: epistemic network construction and analysis"};
  app.require_subcommand(1);

  std::string epinet_path, survey_path, network_path, key_path, out_dir;
  std::string absence_mode = "default";
  std::string format = "csv";
  std::string statements_csv;
  std::string formula_text;
  int nc_cap = kDefaultChainCap;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--statements", statements_csv, "comma-separated statement ids");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "dot"}));
    cmd->add_option("--out", out_dir, "output directory");
  };

  CLI::App* ingest = app.add_subcommand("ingest", "compile a survey into epinets and networks");
  ingest->add_option("--survey", survey_path, "survey JSON file")->required();
  ingest->add_option("--answer-key", key_path, "answer key JSON file");
  add_common(ingest);

  CLI::App* centrality = app.add_subcommand("centrality", "degree/betweenness/eigenvector");
  centrality->add_option("--survey", survey_path, "survey JSON file");
  centrality->add_option("--network", network_path, "network JSON file");
  add_common(centrality);

  CLI::App* cliques = app.add_subcommand("cliques", "maximal cliques of the tie networks");
  cliques->add_option("--survey", survey_path, "survey JSON file");
  cliques->add_option("--network", network_path, "network JSON file");
  add_common(cliques);

  CLI::App* epistemics =
      app.add_subcommand("epistemics", "states, distribution, near-commonality, cohesion");
  epistemics->add_option("--epinet", epinet_path, "epinet JSON file")->required();
  epistemics->add_option("--nc-cap", nc_cap, "chain depth cap")->check(CLI::PositiveNumber);
  add_common(epistemics);

  CLI::App* focal = app.add_subcommand("focal", "rank candidate focal points");
  focal->add_option("--epinet", epinet_path, "epinet JSON file")->required();
  focal->add_option("--nc-cap", nc_cap, "chain depth cap")->check(CLI::PositiveNumber);
  add_common(focal);

  CLI::App* coherence_cmd = app.add_subcommand("coherence", "clique vs network coherence");
  coherence_cmd->add_option("--survey", survey_path, "survey JSON file")->required();
  coherence_cmd->add_option("--answer-key", key_path, "answer key JSON file");
  add_common(coherence_cmd);

  CLI::App* correlate = app.add_subcommand("correlate", "centrality vs knowledge accuracy");
  correlate->add_option("--survey", survey_path, "survey JSON file")->required();
  correlate->add_option("--answer-key", key_path, "answer key JSON file");
  correlate->add_option("--absence-mode", absence_mode, "unmarked-member reading")
      ->check(CLI::IsMember({"default", "forced-binary"}));
  add_common(correlate);

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a formula against an epinet");
  eval_cmd->add_option("--epinet", epinet_path, "epinet JSON file")->required();
  eval_cmd->add_option("formula", formula_text, "query formula")->required();

  CLI::App* report = app.add_subcommand("report", "run every pipeline into an output directory");
  report->add_option("--survey", survey_path, "survey JSON file")->required();
  report->add_option("--answer-key", key_path, "answer key JSON file");
  report->add_option("--absence-mode", absence_mode, "unmarked-member reading")
      ->check(CLI::IsMember({"default", "forced-binary"}));
  report->add_option("--out", out_dir, "output directory")->required();
  report->add_option("--statements", statements_csv, "comma-separated statement ids");

  std::vector<const char*> argv;
  argv.push_back("epinet");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 1;
  }

  const std::vector<std::string> statements = detail::split_csv(statements_csv);

  try {
    if (app.got_subcommand(ingest)) {
      auto in = detail::load_survey_inputs(survey_path, key_path);
      TieNetworks nets = build_networks(in.bundle);
      Epinet perception = build_perception_epinet(in.bundle);
      const std::string dir = out_dir.empty() ? "." : out_dir;
      if (format == "dot") {
        write_file(dir + "/issue_epinet.dot",
                   to_dot(build_issue_epinet(in.bundle, in.key)));
        write_file(dir + "/perception_epinet.dot", to_dot(perception));
        write_file(dir + "/networks.dot", to_dot(nets));
      } else {
        if (in.key.empty())
          throw SchemaError("an answer key is required (in the survey file or --answer-key)");
        write_file(dir + "/issue_epinet.json",
                   dump_json(to_json(build_issue_epinet(in.bundle, in.key))));
        write_file(dir + "/perception_epinet.json", dump_json(to_json(perception)));
        for (const auto* net :
             {&nets.collaboration, &nets.interaction, &nets.friendship})
          write_file(dir + "/network_" + to_string(net->kind()) + ".json",
                     dump_json(to_json(*net)));
      }
      return 0;
    }

    if (app.got_subcommand(centrality)) {
      auto nets = detail::load_tie_networks(survey_path, network_path, key_path);
      if (format == "json") {
        Json j;
        for (const auto& net : nets) {
          Json per;
          if (!net.nodes().empty()) {
            auto deg = degree_centrality(net);
            auto btw = betweenness_centrality(net);
            auto eig = eigenvector_centrality(net);
            for (const auto& a : net.nodes())
              per[a] = Json{{"betweenness", btw.at(a)},
                            {"degree", deg.at(a)},
                            {"eigenvector", eig.at(a)}};
          }
          j[to_string(net.kind())] = std::move(per);
        }
        detail::emit(detail::json_text(j), out_dir, "centrality.json", out);
      } else {
        std::string csv = "network,agent,betweenness,degree,eigenvector\n";
        for (const auto& net : nets) {
          if (net.nodes().empty()) continue;
          auto deg = degree_centrality(net);
          auto btw = betweenness_centrality(net);
          auto eig = eigenvector_centrality(net);
          for (const auto& a : net.nodes())
            csv += to_string(net.kind()) + "," + a + "," +
                   epinets::detail::csv_number(btw.at(a)) + "," + std::to_string(deg.at(a)) +
                   "," + epinets::detail::csv_number(eig.at(a)) + "\n";
        }
        detail::emit(csv, out_dir, "centrality.csv", out);
      }
      return 0;
    }

    if (app.got_subcommand(cliques)) {
      auto nets = detail::load_tie_networks(survey_path, network_path, key_path);
      if (format == "json") {
        Json j;
        for (const auto& net : nets) j[to_string(net.kind())] = maximal_cliques(net);
        detail::emit(detail::json_text(j), out_dir, "cliques.json", out);
      } else {
        std::string csv = "network,members\n";
        for (const auto& net : nets)
          for (const auto& clique : maximal_cliques(net))
            csv += to_string(net.kind()) + "," + epinets::detail::join(clique) + "\n";
        detail::emit(csv, out_dir, "cliques.csv", out);
      }
      return 0;
    }

    if (app.got_subcommand(epistemics)) {
      Epinet net = load_epinet(epinet_path);
      std::vector<PropId> props;
      if (!statements.empty()) {
        props = statements;
      } else {
        for (const auto& [id, p] : net.propositions())
          if (p.truth != Truth::Unknown) props.push_back(id);
      }
      GroupSpec everyone{net.agents()};
      std::vector<AgentId> agents(net.agents().begin(), net.agents().end());

      Json classification = Json::array();
      Json dist = Json::array();
      Json dyads = Json::array();
      for (const auto& prop : props) {
        net.require_proposition(prop);
        Literal l = lit(prop);
        for (const auto& a : agents) {
          EpistemicState s = classify_state(net, a, l);
          classification.push_back(Json{{"agent", a},
                                        {"proposition", prop},
                                        {"state", to_string(s)},
                                        {"level", s.level}});
        }
        auto d = distribution(net, l, everyone);
        dist.push_back(
            Json{{"proposition", prop}, {"knowers", d.count}, {"fraction", d.fraction}});
        for (std::size_t i = 0; i < agents.size(); ++i)
          for (std::size_t j = i + 1; j < agents.size(); ++j) {
            int nc = nc_level_dyad(net, l, agents[i], agents[j], nc_cap);
            dyads.push_back(Json{{"proposition", prop},
                                 {"agent_a", agents[i]},
                                 {"agent_b", agents[j]},
                                 {"nc_level", nc},
                                 {"cohesion", std::min(nc, 3)}});
          }
      }
      if (format == "json") {
        detail::emit(detail::json_text(Json{{"classification", classification},
                                            {"distribution", dist},
                                            {"dyads", dyads}}),
                     out_dir, "epistemics.json", out);
      } else {
        std::string csv = "agent,proposition,state,level\n";
        for (const auto& row : classification)
          csv += row["agent"].get<std::string>() + "," + row["proposition"].get<std::string>() +
                 "," + row["state"].get<std::string>() + "," +
                 std::to_string(row["level"].get<int>()) + "\n";
        csv += "\nproposition,knowers,fraction\n";
        for (const auto& row : dist)
          csv += row["proposition"].get<std::string>() + "," +
                 std::to_string(row["knowers"].get<int>()) + "," +
                 epinets::detail::csv_number(row["fraction"].get<double>()) + "\n";
        csv += "\nproposition,agent_a,agent_b,nc_level,cohesion\n";
        for (const auto& row : dyads)
          csv += row["proposition"].get<std::string>() + "," +
                 row["agent_a"].get<std::string>() + "," + row["agent_b"].get<std::string>() +
                 "," + std::to_string(row["nc_level"].get<int>()) + "," +
                 std::to_string(row["cohesion"].get<int>()) + "\n";
        detail::emit(csv, out_dir, "epistemics.csv", out);
      }
      return 0;
    }

    if (app.got_subcommand(focal)) {
      Epinet net = load_epinet(epinet_path);
      if (statements.empty())
        throw SchemaError("--statements must name at least one candidate proposition");
      std::vector<Literal> candidates;
      for (const auto& s : statements) candidates.push_back(detail::parse_candidate(s));
      GroupSpec everyone{net.agents()};
      auto ranked = focal_salience(net, candidates, everyone, nc_cap);
      if (format == "json") {
        Json j = Json::array();
        for (const auto& r : ranked)
          j.push_back(Json{{"candidate", format_literal(r.candidate)},
                           {"depth", r.depth},
                           {"dyad3_fraction", r.dyad3_fraction}});
        detail::emit(detail::json_text(j), out_dir, "focal.json", out);
      } else {
        std::string csv = "rank,candidate,depth,dyad3_fraction\n";
        int rank = 1;
        for (const auto& r : ranked)
          csv += std::to_string(rank++) + "," + format_literal(r.candidate) + "," +
                 std::to_string(r.depth) + "," +
                 epinets::detail::csv_number(r.dyad3_fraction) + "\n";
        detail::emit(csv, out_dir, "focal.csv", out);
      }
      return 0;
    }

    if (app.got_subcommand(coherence_cmd)) {
      auto in = detail::load_survey_inputs(survey_path, key_path);
      TieNetworks nets = build_networks(in.bundle);
      auto stmts = statements.empty() ? in.bundle.statements() : statements;
      CoherenceTable table = clique_coherence_table(in.bundle, nets, stmts);
      detail::emit(format == "json" ? detail::json_text(to_json(table)) : to_csv(table),
                   out_dir, format == "json" ? "coherence.json" : "coherence.csv", out);
      return 0;
    }

    if (app.got_subcommand(correlate)) {
      auto in = detail::load_survey_inputs(survey_path, key_path);
      TieNetworks nets = build_networks(in.bundle);
      auto stmts = statements.empty() ? in.bundle.statements() : statements;
      CorrelationTable table = centrality_knowledge_table(
          in.bundle, nets, stmts, absence_mode_from_string(absence_mode));
      detail::emit(format == "json" ? detail::json_text(to_json(table)) : to_csv(table),
                   out_dir, format == "json" ? "correlations.json" : "correlations.csv", out);
      return 0;
    }

    if (app.got_subcommand(eval_cmd)) {
      Epinet net = load_epinet(epinet_path);
      out << (evaluate(net, formula_text) ? "true" : "false") << "\n";
      return 0;
    }

    if (app.got_subcommand(report)) {
      auto in = detail::load_survey_inputs(survey_path, key_path);
      if (in.key.empty())
        throw SchemaError("an answer key is required (in the survey file or --answer-key)");
      render_report(in.bundle, in.key,
                    ReportConfig{out_dir, absence_mode_from_string(absence_mode), statements});
      return 0;
    }
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args));
}

}  // namespace epinets::cli
