#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symgraph/perm_group.hpp"

namespace symgraph {

inline constexpr uint64_t kVertexBudget = 100000;
inline constexpr uint64_t kArcAnalysisBudget = 10000;

// Cos(g, h, h t h): vertices are right cosets of h, with Hx ~ Hdx for
// d in the double coset. Each vertex is identified by the lexicographically
// minimal member of its coset, so vertex ids are stable across runs.
struct CosetGraph {
  CosetGraph(PermGroup group_in, PermGroup stabilizer_in, Permutation connector_in,
             std::string name)
      : group_name(std::move(name)), group(std::move(group_in)),
        stabilizer(std::move(stabilizer_in)), connector(std::move(connector_in)) {}

  uint32_t vertex_count = 0;
  std::vector<std::vector<uint32_t>> adjacency;  // sorted neighbor ids
  std::string group_name;
  PermGroup group;
  PermGroup stabilizer;
  Permutation connector;
  std::vector<Permutation> coset_reps;
  uint32_t loops_dropped = 0;  // nonzero only when t lies in h
};

CosetGraph build_coset_graph(const PermGroup& g, const PermGroup& h,
                             const Permutation& t,
                             const std::string& group_name = "");

bool is_connected(const CosetGraph& cg);
// Common vertex degree; Irregular if degrees differ (construction bug).
unsigned valency(const CosetGraph& cg);

// Vertex permutation induced by right multiplication with w.
std::vector<uint32_t> vertex_action(const CosetGraph& cg, const Permutation& w);

// Orbits of g on ordered adjacent pairs; 1 means g-arc-transitive.
uint64_t arc_orbit_count(const CosetGraph& cg, const PermGroup& g);

struct QuotientGraph {
  uint32_t orbit_count = 0;
  std::vector<uint32_t> orbit_of;  // parent vertex -> orbit id
  std::vector<std::vector<uint32_t>> adjacency;
  bool semiregular = false;
  bool at_least_three_orbits = false;
  bool normal_in_group = false;
  bool parent_arc_transitive = false;
  // All hypotheses verified: prime parent valency, parent arc-transitive,
  // n normal in the provenance group, semiregular with >= 3 orbits.
  bool valency_assertion_applicable = false;
  bool valency_assertion_holds = false;
  uint64_t collapsed_multi_edges = 0;  // excess parent edges between orbit pairs
  uint64_t internal_edges = 0;         // parent edges inside a single orbit
};

// Never refuses: hypothesis failures are reported in the flags and the
// valency assertion is simply not applicable.
QuotientGraph quotient_graph(const CosetGraph& cg, const PermGroup& n);

// Parity of a permutation made of `orbit_count` disjoint cycles of length
// `orbit_size` each: odd exactly when orbit_size is even and orbit_count odd.
Parity semiregular_parity(unsigned orbit_size, unsigned orbit_count = 7);

std::string graph_to_json(const CosetGraph& cg);
// "u v" per line, 0-based, u < v, sorted; bit-exact for fixture diffing.
std::string graph_to_edge_list(const CosetGraph& cg);

}  // namespace symgraph
