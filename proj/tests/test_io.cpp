#include <catch2/catch_amalgamated.hpp>

#include "epinets/dot.hpp"
#include "epinets/json_io.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace epinets;

TEST_CASE("bundled figure-1 file matches the in-code fixture") {
  Epinet loaded = load_epinet(fixtures::data_path("fig1.json"));
  Epinet built = fixtures::fig1();
  REQUIRE(to_json(loaded) == to_json(built));
  REQUIRE(loaded.assertions().size() == 8);
  REQUIRE(loaded.proposition("p").negation_of == "q");
  REQUIRE(loaded.proposition("q").negation_of == "p");
}

TEST_CASE("epinet JSON round-trips exactly") {
  SECTION("figure-1") {
    Epinet net = fixtures::fig1();
    Json j = to_json(net);
    REQUIRE(to_json(epinet_from_json(j)) == j);
    REQUIRE(dump_json(j) == dump_json(to_json(epinet_from_json(j))));
  }
  SECTION("random epinets") {
    oracles::Rng rng(77);
    const std::vector<AgentId> agents{"A", "B", "C"};
    const std::vector<PropId> props{"p", "q"};
    for (int i = 0; i < 100; ++i) {
      Epinet net = oracles::random_epinet(rng, agents, props, 3, 10);
      Json j = to_json(net);
      REQUIRE(to_json(epinet_from_json(j)) == j);
    }
  }
}

TEST_CASE("epinet schema accepts only b-only assertion strings") {
  Json j = to_json(fixtures::fig1());
  SECTION("knowledge operator rejected") {
    j["assertions"].push_back("Alice k p");
    REQUIRE_THROWS_AS(epinet_from_json(j), SchemaError);
  }
  SECTION("conjunction rejected") {
    j["assertions"] = Json::array({"Alice b p & Bob b p"});
    REQUIRE_THROWS_AS(epinet_from_json(j), SchemaError);
  }
  SECTION("bare literal rejected") {
    j["assertions"] = Json::array({"p"});
    REQUIRE_THROWS_AS(epinet_from_json(j), SchemaError);
  }
  SECTION("negated belief accepted") {
    j["assertions"] = Json::array({"Alice b ~Alice b p"});
    Epinet net = epinet_from_json(j);
    REQUIRE(net.holds_assertion(
        bf::belief("Alice", bf::negation(bf::belief("Alice", bf::literal("p"))))));
  }
}

TEST_CASE("network JSON round-trips") {
  TieNetwork net(TieKind::Friendship);
  for (const AgentId a : {"A", "B", "C"}) net.add_node(a);
  net.add_edge("A", "B");
  net.add_edge("C", "B");
  Json j = to_json(net);
  TieNetwork again = network_from_json(j);
  REQUIRE(to_json(again) == j);
  REQUIRE(again.kind() == TieKind::Friendship);
  REQUIRE(again.has_edge("B", "C"));

  SECTION("malformed edges rejected") {
    j["edges"].push_back(Json::array({"A"}));
    REQUIRE_THROWS_AS(network_from_json(j), SchemaError);
  }
  SECTION("unknown kind rejected") {
    j["kind"] = "acquaintance";
    REQUIRE_THROWS_AS(network_from_json(j), SchemaError);
  }
}

TEST_CASE("bundled synthetic survey loads") {
  SurveyFile file = load_survey(fixtures::data_path("survey_synthetic.json"));
  REQUIRE(file.bundle.roster.size() == 11);
  REQUIRE(file.bundle.responses.size() == 11);
  REQUIRE(file.bundle.statements() == std::vector<std::string>{"a", "b", "c", "d", "e"});
  REQUIRE(file.key.size() == 5);
  REQUIRE(file.key.at("c") == false);
}

TEST_CASE("DOT export") {
  SECTION("tie networks render as undirected graphs") {
    TieNetwork net(TieKind::Interaction);
    for (const AgentId a : {"A", "B"}) net.add_node(a);
    net.add_edge("A", "B");
    std::string dot = to_dot(net);
    REQUIRE(dot.find("graph interaction {") == 0);
    REQUIRE(dot.find("\"A\" -- \"B\";") != std::string::npos);
    REQUIRE(dot.find("->") == std::string::npos);
  }
  SECTION("epinets render agents, truth-labeled boxes and ordinal edges") {
    std::string dot = to_dot(fixtures::fig1());
    REQUIRE(dot.find("digraph epinet {") == 0);
    REQUIRE(dot.find("\"Alice\" [shape=ellipse];") != std::string::npos);
    REQUIRE(dot.find("\"q\" [shape=box, label=\"q [F]\"];") != std::string::npos);
    REQUIRE(dot.find("\"Alice\" -> \"q\" [label=\"3\"]") != std::string::npos);
    REQUIRE(dot.find("\"Bob\" -> \"p\" [label=\"2\"]") != std::string::npos);
    // first-order edges carry no label
    REQUIRE(dot.find("\"Bob\" -> \"r\";") != std::string::npos);
  }
}
