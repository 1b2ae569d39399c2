#include "doctest.h"

#include <set>
#include <sstream>

#include "symgraph/atlas.hpp"
#include "symgraph/coset_graph.hpp"
#include "symgraph/subgroup_search.hpp"

using namespace symgraph;

namespace {

std::string data_dir() { return SYMGRAPH_TEST_DATA_DIR; }

// PSL(2,7) with its point stabilizer F_21 and one feasible involution.
struct K8Fixture {
  PermGroup g;
  PermGroup h;
  Permutation t;
  K8Fixture()
      : g(atlas::load_group("PSL(2,7)", data_dir())),
        h(g.point_stabilizer(0)),
        t(Permutation(8)) {
    auto survivors = find_feasible_elements(g, h);
    REQUIRE(!survivors.empty());
    t = survivors.front().element;
  }
};

Permutation extend_to(const Permutation& p, unsigned degree) {
  std::vector<uint8_t> images(degree);
  for (unsigned i = 0; i < degree; ++i)
    images[i] = i < p.degree() ? p[i] : static_cast<uint8_t>(i);
  return Permutation::from_images(std::move(images));
}

}  // namespace

TEST_CASE("K_8 as a coset graph of PSL(2,7)") {
  K8Fixture fix;
  CosetGraph cg = build_coset_graph(fix.g, fix.h, fix.t, "PSL(2,7)");
  CHECK(cg.vertex_count == 8);
  CHECK(valency(cg) == 7);
  CHECK(is_connected(cg));
  CHECK(arc_orbit_count(cg, fix.g) == 1);
  // diameter 1: every pair adjacent
  for (uint32_t v = 0; v < cg.vertex_count; ++v)
    CHECK(cg.adjacency[v].size() == cg.vertex_count - 1);
  // with the trivial group every arc is its own orbit
  CHECK(arc_orbit_count(cg, PermGroup::trivial(8)) == 56);
}

TEST_CASE("group-theoretic valency equals graph degree") {
  K8Fixture fix;
  CosetGraph cg = build_coset_graph(fix.g, fix.h, fix.t, "PSL(2,7)");
  // |h| / |h n h^t|
  Permutation ti = inverse(fix.t);
  auto members = all_elements(fix.h);
  PermSet h_set(8, members);
  uint64_t inter = 0;
  for (const Permutation& e : members)
    if (h_set.contains(compose(compose(fix.t, e), ti).images())) ++inter;
  CHECK(valency(cg) == fix.h.order() / inter);
}

TEST_CASE("generators act as automorphisms and vertex actions are permutations") {
  K8Fixture fix;
  CosetGraph cg = build_coset_graph(fix.g, fix.h, fix.t, "PSL(2,7)");
  for (const Permutation& w : fix.g.generators()) {
    std::vector<uint32_t> sigma = vertex_action(cg, w);
    std::set<uint32_t> image(sigma.begin(), sigma.end());
    CHECK(image.size() == cg.vertex_count);
    for (uint32_t v = 0; v < cg.vertex_count; ++v)
      for (uint32_t u : cg.adjacency[v])
        CHECK(std::binary_search(cg.adjacency[sigma[v]].begin(),
                                 cg.adjacency[sigma[v]].end(), sigma[u]));
  }
}

TEST_CASE("single-coset graph: h = g, t = identity") {
  PermGroup g = atlas::make_alternating(5);
  CosetGraph cg = build_coset_graph(g, g, Permutation(5), "A_5");
  CHECK(cg.vertex_count == 1);
  CHECK(valency(cg) == 0);
  CHECK(is_connected(cg));
}

TEST_CASE("connectivity matches generated-subgroup order both ways") {
  // S_3 x Z_2 on 5 points; H = <(1 2)>, t = (1 3): <H, t> = S_3 < G
  PermGroup g(5, {Permutation::parse_cycles("(1 2 3)", 5),
                  Permutation::parse_cycles("(1 2)", 5),
                  Permutation::parse_cycles("(4 5)", 5)});
  REQUIRE(g.order() == 12);
  PermGroup h(5, {Permutation::parse_cycles("(1 2)", 5)});
  Permutation t = Permutation::parse_cycles("(1 3)", 5);
  CosetGraph cg = build_coset_graph(g, h, t, "S_3xZ_2");
  CHECK(cg.vertex_count == 6);
  CHECK(valency(cg) == 2);
  std::vector<Permutation> joint = h.generators();
  joint.push_back(t);
  uint64_t span = PermGroup(5, joint).order();
  CHECK(span == 6);
  CHECK(is_connected(cg) == (span == g.order()));
  CHECK_FALSE(is_connected(cg));

  // the connected control: K_8 span equals the whole group
  K8Fixture fix;
  std::vector<Permutation> joint2 = fix.h.generators();
  joint2.push_back(fix.t);
  CHECK(PermGroup(8, joint2).order() == fix.g.order());
  CHECK(is_connected(build_coset_graph(fix.g, fix.h, fix.t, "PSL(2,7)")));
}

TEST_CASE("t inside h yields a graph with no edges") {
  PermGroup g = atlas::make_symmetric(4);
  PermGroup h(4, {Permutation::parse_cycles("(1 2)", 4)});
  CosetGraph cg = build_coset_graph(g, h, h.generators()[0], "S_4");
  CHECK(cg.vertex_count == 12);
  CHECK(valency(cg) == 0);
  CHECK(cg.loops_dropped > 0);
  CHECK_FALSE(is_connected(cg));
}

TEST_CASE("construction guards") {
  PermGroup g = atlas::load_group("PSL(2,7)", data_dir());
  PermGroup h = g.point_stabilizer(0);
  // t^2 outside h
  Permutation bad = Permutation::parse_cycles("(1 2 3)", 8);
  bool found_order3_outside = false;
  for (const Permutation& p : all_elements(g)) {
    if (element_order(p) == 3 && !h.contains(compose(p, p))) {
      try {
        build_coset_graph(g, h, p, "PSL(2,7)");
        CHECK(false);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvolutionConditionFailed);
      }
      found_order3_outside = true;
      break;
    }
  }
  CHECK(found_order3_outside);
  (void)bad;

  // vertex budget: A_12 over a Z_7 has 3.4e7 cosets
  PermGroup a12 = atlas::make_alternating(12);
  PermGroup z7(12, {Permutation::parse_cycles("(1 2 3 4 5 6 7)", 12)});
  try {
    build_coset_graph(a12, z7, Permutation(12), "A_12");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::VertexBudgetExceeded);
  }

  // h not a subgroup
  PermGroup s8 = atlas::make_symmetric(8);
  CHECK_THROWS_AS(build_coset_graph(g, s8, Permutation(8), "PSL(2,7)"), Error);
}

TEST_CASE("quotient by the trivial group is the parent") {
  K8Fixture fix;
  CosetGraph cg = build_coset_graph(fix.g, fix.h, fix.t, "PSL(2,7)");
  QuotientGraph q = quotient_graph(cg, PermGroup::trivial(8));
  CHECK(q.orbit_count == cg.vertex_count);
  CHECK(q.semiregular);
  CHECK(q.normal_in_group);
  CHECK(q.valency_assertion_applicable);
  CHECK(q.valency_assertion_holds);
  for (uint32_t v = 0; v < cg.vertex_count; ++v) {
    std::vector<uint32_t> mapped;
    for (uint32_t u : cg.adjacency[v]) mapped.push_back(q.orbit_of[u]);
    std::sort(mapped.begin(), mapped.end());
    CHECK(q.adjacency[q.orbit_of[v]] == mapped);
  }
}

TEST_CASE("K_8 quotient by a non-normal semiregular Z_2 collapses to K_4") {
  K8Fixture fix;
  CosetGraph cg = build_coset_graph(fix.g, fix.h, fix.t, "PSL(2,7)");
  // any involution of PSL(2,7) acts without fixed points on the 8 cosets
  Permutation inv(8);
  for (const Permutation& p : all_elements(fix.g))
    if (element_order(p) == 2) {
      inv = p;
      break;
    }
  QuotientGraph q = quotient_graph(cg, PermGroup(8, {inv}));
  CHECK(q.orbit_count == 4);
  CHECK(q.semiregular);
  CHECK(q.at_least_three_orbits);
  CHECK_FALSE(q.normal_in_group);  // PSL(2,7) is simple
  CHECK_FALSE(q.valency_assertion_applicable);
  for (const auto& nbrs : q.adjacency) CHECK(nbrs.size() == 3);  // K_4
  CHECK(q.internal_edges == 4);          // one matching edge per orbit
  CHECK(q.collapsed_multi_edges == 24 - 6);  // 24 cross edges onto 6 pairs
}

TEST_CASE("double cover of K_8: normal semiregular center preserves valency") {
  // G = PSL(2,7) x Z_2 on 10 points, H = F_21 in the left factor,
  // t = (feasible involution) * (9 10). The quotient by the central Z_2
  // is K_8 again, so the prime-valency preservation hypothesis set is
  // satisfied and the assertion must hold.
  K8Fixture fix;
  PermGroup prod = atlas::make_direct_product(fix.g, atlas::make_cyclic(2));
  std::vector<Permutation> h_gens;
  for (const Permutation& p : fix.h.generators())
    h_gens.push_back(extend_to(p, 10));
  PermGroup h(10, h_gens);
  REQUIRE(h.order() == 21);
  std::vector<uint8_t> timg(10);
  for (unsigned i = 0; i < 8; ++i) timg[i] = fix.t[i];
  timg[8] = 9;
  timg[9] = 8;
  Permutation t = Permutation::from_images(std::move(timg));
  REQUIRE(prod.contains(t));

  CosetGraph cg = build_coset_graph(prod, h, t, "PSL(2,7)xZ_2");
  CHECK(cg.vertex_count == 16);
  CHECK(valency(cg) == 7);
  CHECK(is_connected(cg));
  CHECK(arc_orbit_count(cg, prod) == 1);

  PermGroup center(10, {Permutation::parse_cycles("(9 10)", 10)});
  QuotientGraph q = quotient_graph(cg, center);
  CHECK(q.semiregular);
  CHECK(q.orbit_count == 8);
  CHECK(q.normal_in_group);
  CHECK(q.parent_arc_transitive);
  CHECK(q.valency_assertion_applicable);
  CHECK(q.valency_assertion_holds);
  for (const auto& nbrs : q.adjacency) CHECK(nbrs.size() == 7);
}

TEST_CASE("non-normal semiregular quotient can change the valency") {
  // PSL(2,8) over a Z_7: 72 vertices, 7-valent, arc-transitive. A
  // semiregular Z_3 that is not normal leaves the hypothesis set unmet
  // and the quotient really does lose regularity.
  PermGroup g = atlas::load_group("PSL(2,8)", data_dir());
  std::mt19937_64 rng(12);
  Permutation seven(g.degree());
  for (;;) {
    Permutation r = g.random_element(rng);
    if (element_order(r) == 7) {
      seven = r;
      break;
    }
  }
  PermGroup z7(g.degree(), {seven});
  auto survivors = find_feasible_elements(g, z7);
  REQUIRE(!survivors.empty());
  CosetGraph cg = build_coset_graph(g, z7, survivors.front().element, "PSL(2,8)");
  CHECK(cg.vertex_count == 72);
  CHECK(valency(cg) == 7);
  CHECK(is_connected(cg));
  CHECK(arc_orbit_count(cg, g) == 1);

  Permutation three(g.degree());
  for (;;) {
    Permutation r = g.random_element(rng);
    if (element_order(r) == 9) {
      three = compose(r, compose(r, r));
      break;
    }
  }
  QuotientGraph q = quotient_graph(cg, PermGroup(g.degree(), {three}));
  CHECK(q.orbit_count == 24);
  CHECK(q.semiregular);
  CHECK_FALSE(q.normal_in_group);
  CHECK_FALSE(q.valency_assertion_applicable);
  size_t max_deg = 0, min_deg = SIZE_MAX;
  for (const auto& nbrs : q.adjacency) {
    max_deg = std::max(max_deg, nbrs.size());
    min_deg = std::min(min_deg, nbrs.size());
  }
  // without normality the quotient genuinely loses 7-regularity here
  CHECK(min_deg < 7);
  CHECK(max_deg <= 7);
}

TEST_CASE("semiregular parity") {
  CHECK(semiregular_parity(2, 7) == Parity::odd);
  CHECK(semiregular_parity(6, 7) == Parity::odd);
  CHECK(semiregular_parity(1, 7) == Parity::even);
  CHECK(semiregular_parity(3, 7) == Parity::even);
  CHECK(semiregular_parity(4, 7) == Parity::odd);
  // matches the explicitly constructed permutation for every m <= 36
  for (unsigned m = 1; m <= 36; ++m) {
    std::vector<uint8_t> images(7 * m);
    for (unsigned block = 0; block < 7; ++block)
      for (unsigned i = 0; i < m; ++i)
        images[block * m + i] = static_cast<uint8_t>(block * m + (i + 1) % m);
    Permutation p = Permutation::from_images(std::move(images));
    CHECK(semiregular_parity(m, 7) == parity(p));
  }
  CHECK_THROWS_AS(semiregular_parity(0, 7), Error);
}

TEST_CASE("edge list export is sorted, 0-based, and deterministic") {
  K8Fixture fix;
  CosetGraph cg = build_coset_graph(fix.g, fix.h, fix.t, "PSL(2,7)");
  std::string edges = graph_to_edge_list(cg);
  // K_8 has 28 edges; first line is "0 1", last "6 7"
  std::istringstream in(edges);
  std::string line, last;
  size_t count = 0;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      CHECK(line == "0 1");
      first = false;
    }
    last = line;
    ++count;
  }
  CHECK(count == 28);
  CHECK(last == "6 7");
  CosetGraph again = build_coset_graph(fix.g, fix.h, fix.t, "PSL(2,7)");
  CHECK(graph_to_edge_list(again) == edges);

  std::string json_text = graph_to_json(cg);
  CHECK(json_text.find("\"vertex_count\": 8") != std::string::npos);
  CHECK(json_text.find("\"group\": \"PSL(2,7)\"") != std::string::npos);
}
