#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "epinets/socnet.hpp"
#include "oracles.hpp"

using namespace epinets;

namespace {

TieNetwork path3() {
  TieNetwork net;
  for (const AgentId a : {"A", "B", "C"}) net.add_node(a);
  net.add_edge("A", "B");
  net.add_edge("B", "C");
  return net;
}

TieNetwork star4() {
  TieNetwork net;
  net.add_node("hub");
  for (const AgentId a : {"l1", "l2", "l3", "l4"}) {
    net.add_node(a);
    net.add_edge("hub", a);
  }
  return net;
}

TieNetwork complete(int n) {
  TieNetwork net;
  std::vector<AgentId> names;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    net.add_node(names.back());
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) net.add_edge(names[i], names[j]);
  return net;
}

double cosine(const std::map<AgentId, double>& a, const std::map<AgentId, double>& b) {
  double dot = 0, na = 0, nb = 0;
  for (const auto& [k, v] : a) {
    dot += v * b.at(k);
    na += v * v;
    nb += b.at(k) * b.at(k);
  }
  return dot / std::sqrt(na * nb);
}

}  // namespace

TEST_CASE("tie networks stay simple") {
  TieNetwork net;
  net.add_node("A");
  net.add_node("B");
  REQUIRE_THROWS_AS(net.add_edge("A", "A"), SchemaError);
  REQUIRE_THROWS_AS(net.add_edge("A", "Z"), SchemaError);
  net.add_edge("B", "A");
  net.add_edge("A", "B");  // idempotent, normalized order
  REQUIRE(net.edges().size() == 1);
  REQUIRE(net.has_edge("A", "B"));
  REQUIRE(net.has_edge("B", "A"));
}

TEST_CASE("degree centrality") {
  SECTION("single edge") {
    TieNetwork net;
    for (const AgentId a : {"A", "B", "C"}) net.add_node(a);
    net.add_edge("A", "B");
    auto deg = degree_centrality(net);
    REQUIRE(deg.at("A") == 1);
    REQUIRE(deg.at("B") == 1);
    REQUIRE(deg.at("C") == 0);
  }
  SECTION("complete graph on four") {
    auto deg = degree_centrality(complete(4));
    for (const auto& [a, d] : deg) REQUIRE(d == 3);
  }
}

TEST_CASE("betweenness closed forms") {
  SECTION("path: middle carries the single geodesic") {
    auto bc = betweenness_centrality(path3());
    REQUIRE(bc.at("B") == Catch::Approx(1.0));
    REQUIRE(bc.at("A") == 0.0);
    REQUIRE(bc.at("C") == 0.0);
  }
  SECTION("star: center carries all six leaf pairs") {
    auto bc = betweenness_centrality(star4());
    REQUIRE(bc.at("hub") == Catch::Approx(6.0));
    for (const AgentId l : {"l1", "l2", "l3", "l4"}) REQUIRE(bc.at(l) == 0.0);
  }
  SECTION("complete graph: everyone zero") {
    auto bc = betweenness_centrality(complete(5));
    for (const auto& [a, v] : bc) REQUIRE(v == 0.0);
  }
}

TEST_CASE("eigenvector closed forms") {
  SECTION("triangle: uniform 1/sqrt(3)") {
    auto ev = eigenvector_centrality(complete(3));
    for (const auto& [a, v] : ev) REQUIRE(v == Catch::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-7));
  }
  SECTION("star: center-to-leaf ratio two") {
    auto ev = eigenvector_centrality(star4());
    REQUIRE(ev.at("hub") / ev.at("l1") == Catch::Approx(2.0).epsilon(1e-6));
  }
  SECTION("two disjoint edges: ties break to the lexicographically smallest component") {
    TieNetwork net;
    for (const AgentId a : {"a1", "a2", "z1", "z2"}) net.add_node(a);
    net.add_edge("a1", "a2");
    net.add_edge("z1", "z2");
    auto ev = eigenvector_centrality(net);
    REQUIRE(ev.at("a1") == Catch::Approx(1.0 / std::sqrt(2.0)));
    REQUIRE(ev.at("z1") == 0.0);
    REQUIRE(ev.at("z2") == 0.0);
  }
  SECTION("empty network rejected") {
    REQUIRE_THROWS_AS(eigenvector_centrality(TieNetwork{}), EvalError);
  }
}

TEST_CASE("maximal cliques on fixed graphs") {
  SECTION("triangle") {
    auto cliques = maximal_cliques(complete(3));
    REQUIRE(cliques == std::vector<std::vector<AgentId>>{{"v0", "v1", "v2"}});
  }
  SECTION("path") {
    auto cliques = maximal_cliques(path3());
    REQUIRE(cliques == std::vector<std::vector<AgentId>>{{"A", "B"}, {"B", "C"}});
  }
  SECTION("isolated vertices yield nothing") {
    TieNetwork net;
    net.add_node("A");
    net.add_node("B");
    REQUIRE(maximal_cliques(net).empty());
  }
}

TEST_CASE("centrality measures match their oracles on random graphs") {
  oracles::Rng rng(1618);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + rng.upto(7);  // up to 8 nodes
    TieNetwork net = oracles::random_graph(rng, n, 0.35);

    // degree: direct incidence scan
    auto deg = degree_centrality(net);
    int total = 0;
    for (const auto& node : net.nodes()) {
      int count = 0;
      for (const auto& [u, v] : net.edges())
        if (u == node || v == node) ++count;
      REQUIRE(deg.at(node) == count);
      total += count;
    }
    REQUIRE(total == 2 * static_cast<int>(net.edges().size()));

    // betweenness: exhaustive geodesic enumeration
    auto bc = betweenness_centrality(net);
    auto ref = oracles::brute_betweenness(net);
    for (const auto& [a, v] : bc) REQUIRE(v == Catch::Approx(ref.at(a)).margin(1e-9));

    // eigenvector: dense eigensolver, cosine similarity
    auto ev = eigenvector_centrality(net);
    auto dense = oracles::dense_eigenvector(net);
    REQUIRE(cosine(ev, dense) >= 1.0 - 1e-8);
    double norm = 0.0;
    for (const auto& [a, v] : ev) {
      REQUIRE(v >= 0.0);
      norm += v * v;
    }
    REQUIRE(std::sqrt(norm) == Catch::Approx(1.0).margin(1e-9));
  }
}

TEST_CASE("maximal cliques match subset enumeration on random graphs") {
  oracles::Rng rng(2718);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + rng.upto(11);  // up to 12 nodes
    TieNetwork net = oracles::random_graph(rng, n, 0.4);
    auto fast = maximal_cliques(net);
    auto slow = oracles::brute_cliques(net);
    REQUIRE(fast == slow);

    // structural invariants
    for (const auto& c : fast) {
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) REQUIRE(net.has_edge(c[i], c[j]));
    }
    for (const auto& [u, v] : net.edges()) {
      bool covered = false;
      for (const auto& c : fast)
        if (std::count(c.begin(), c.end(), u) && std::count(c.begin(), c.end(), v))
          covered = true;
      REQUIRE(covered);
    }
  }
}
