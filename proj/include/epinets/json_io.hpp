#pragma once

// JSON (de)serialization for epinets, tie networks and survey bundles.
// nlohmann::json keeps object keys sorted, so dumps are deterministic.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "epinets/core.hpp"
#include "epinets/formula.hpp"
#include "epinets/socnet.hpp"
#include "epinets/survey.hpp"

namespace epinets {

using Json = nlohmann::json;

namespace detail {

inline Json load_json(std::istream& in, const std::string& what) {
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(what + ": " + e.what());
  }
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  return load_json(in, path);
}

template <typename T = Json>
T expect(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(where + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw SchemaError(where + "." + key + ": " + e.what());
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Epinet <-> JSON

inline Json to_json(const Epinet& net) {
  Json j;
  j["agents"] = Json::array();
  for (const auto& a : net.agents()) j["agents"].push_back(a);
  j["propositions"] = Json::array();
  for (const auto& [id, p] : net.propositions()) {
    Json jp{{"id", p.id},
            {"statement", p.statement},
            {"truth", std::string(1, truth_letter(p.truth))}};
    if (p.negation_of) jp["negation_of"] = *p.negation_of;
    j["propositions"].push_back(std::move(jp));
  }
  std::vector<std::string> assertions;
  for (const auto& f : net.assertions()) assertions.push_back(format(to_query_formula(f)));
  std::sort(assertions.begin(), assertions.end());
  j["assertions"] = assertions;
  j["confidence"] = Json::array();
  for (const auto& [agent, prop] : net.confidence())
    j["confidence"].push_back(Json{{"agent", agent}, {"proposition", prop}});
  return j;
}

inline Epinet epinet_from_json(const Json& j) {
  Epinet net;
  for (const auto& a : detail::expect<std::vector<std::string>>(j, "agents", "epinet"))
    net.add_agent(a);

  std::vector<std::pair<PropId, PropId>> links;
  for (const auto& jp : detail::expect(j, "propositions", "epinet")) {
    Proposition p;
    p.id = detail::expect<std::string>(jp, "id", "proposition");
    p.statement = jp.value("statement", "");
    std::string truth = detail::expect<std::string>(jp, "truth", "proposition '" + p.id + "'");
    if (truth.size() != 1)
      throw SchemaError("proposition '" + p.id + "': truth must be \"T\", \"F\" or \"U\"");
    p.truth = truth_from_letter(truth[0]);
    if (jp.contains("negation_of"))
      links.emplace_back(p.id, jp.at("negation_of").get<std::string>());
    net.add_proposition(p);
  }
  for (const auto& [a, b] : links) net.link_negation(a, b);

  if (j.contains("assertions")) {
    for (const auto& text : detail::expect<std::vector<std::string>>(j, "assertions", "epinet")) {
      QueryFormula q = parse(text);
      auto stored = to_belief_formula(q);
      if (!stored || !stored->bel_rooted())
        throw SchemaError("assertion '" + text + "' is not a b-only belief formula");
      net.assert_belief(*stored);
    }
  }
  if (j.contains("confidence")) {
    for (const auto& jc : j.at("confidence"))
      net.add_confidence(detail::expect<std::string>(jc, "agent", "confidence"),
                         detail::expect<std::string>(jc, "proposition", "confidence"));
  }
  return net;
}

inline Epinet load_epinet(const std::string& path) {
  return epinet_from_json(detail::load_json_file(path));
}

// ---------------------------------------------------------------------------
// TieNetwork <-> JSON

inline Json to_json(const TieNetwork& net) {
  Json j;
  j["kind"] = to_string(net.kind());
  j["nodes"] = Json::array();
  for (const auto& n : net.nodes()) j["nodes"].push_back(n);
  j["edges"] = Json::array();
  for (const auto& [u, v] : net.edges()) j["edges"].push_back(Json::array({u, v}));
  return j;
}

inline TieNetwork network_from_json(const Json& j) {
  TieNetwork net(tie_kind_from_string(detail::expect<std::string>(j, "kind", "network")));
  for (const auto& n : detail::expect<std::vector<std::string>>(j, "nodes", "network"))
    net.add_node(n);
  for (const auto& je : detail::expect(j, "edges", "network")) {
    if (!je.is_array() || je.size() != 2)
      throw SchemaError("network edge must be a two-element array");
    net.add_edge(je.at(0).get<std::string>(), je.at(1).get<std::string>());
  }
  return net;
}

inline TieNetwork load_network(const std::string& path) {
  return network_from_json(detail::load_json_file(path));
}

// ---------------------------------------------------------------------------
// Survey JSON

namespace detail {

inline std::set<char> marks_from_json(const Json& j, const std::string& where) {
  std::set<char> out;
  if (!j.is_array()) throw SchemaError(where + ": marks must be an array");
  for (const auto& m : j) {
    std::string s = m.get<std::string>();
    if (s.size() != 1) throw SchemaError(where + ": mark must be \"1\" or \"2\"");
    out.insert(s[0]);
  }
  return out;
}

}  // namespace detail

inline AnswerKey answer_key_from_json(const Json& j, const std::string& where = "answer_key") {
  AnswerKey key;
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  for (const auto& [stmt, v] : j.items()) {
    std::string s = v.get<std::string>();
    if (s != "T" && s != "F")
      throw SchemaError(where + "." + stmt + ": value must be \"T\" or \"F\"");
    key[stmt] = s == "T";
  }
  return key;
}

struct SurveyFile {
  SurveyBundle bundle;
  AnswerKey key;  // empty when the file carries none
};

inline SurveyFile survey_from_json(const Json& j) {
  SurveyFile file;
  file.bundle.roster = detail::expect<std::vector<std::string>>(j, "roster", "survey");
  for (const auto& jr : detail::expect(j, "responses", "survey")) {
    SurveyResponse r;
    r.respondent = detail::expect<std::string>(jr, "respondent", "response");
    const std::string where = "response of '" + r.respondent + "'";
    if (jr.contains("q1")) {
      r.q1.emplace();
      for (const auto& [member, jq] : jr.at("q1").items()) {
        Q1Entry entry;
        if (jq.contains("ties"))
          for (const auto& t : jq.at("ties")) entry.ties.insert(t.get<int>());
        if (jq.contains("colA"))
          entry.col_a = detail::marks_from_json(jq.at("colA"), where + ".q1." + member);
        (*r.q1)[member] = std::move(entry);
      }
    }
    if (jr.contains("q2")) {
      const Json& q2 = jr.at("q2");
      if (q2.contains("answers"))
        for (const auto& [item, who] : q2.at("answers").items())
          r.q2_answers[item] = who.get<std::string>();
      if (q2.contains("marks"))
        for (const auto& [member, items] : q2.at("marks").items())
          for (const auto& [item, marks] : items.items())
            r.q2_marks[member][item] =
                detail::marks_from_json(marks, where + ".q2.marks." + member);
    }
    if (jr.contains("q3")) {
      const Json& q3 = jr.at("q3");
      if (q3.contains("answers"))
        for (const auto& [stmt, v] : q3.at("answers").items()) {
          std::string s = v.get<std::string>();
          if (s != "T" && s != "F")
            throw SchemaError(where + ".q3.answers." + stmt + ": value must be \"T\" or \"F\"");
          r.q3_answers[stmt] = s == "T";
        }
      if (q3.contains("marks"))
        for (const auto& [member, stmts] : q3.at("marks").items())
          for (const auto& [stmt, marks] : stmts.items())
            r.q3_marks[member][stmt] =
                detail::marks_from_json(marks, where + ".q3.marks." + member);
    }
    file.bundle.responses.push_back(std::move(r));
  }
  if (j.contains("answer_key")) file.key = answer_key_from_json(j.at("answer_key"));
  file.bundle.validate();
  return file;
}

inline SurveyFile load_survey(const std::string& path) {
  return survey_from_json(detail::load_json_file(path));
}

inline AnswerKey load_answer_key(const std::string& path) {
  return answer_key_from_json(detail::load_json_file(path), path);
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write '" + path + "'");
  out << content;
  if (!out) throw SchemaError("write to '" + path + "' failed");
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace epinets
