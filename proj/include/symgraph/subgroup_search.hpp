#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symgraph/element_scan.hpp"
#include "symgraph/perm_group.hpp"
#include "symgraph/small_group.hpp"

namespace symgraph {

// A conjugacy class of subgroups of an ambient group, held by representative.
struct SubgroupClass {
  PermGroup representative;
  std::string ambient;
  std::string iso_label;
  uint64_t class_size = 0;        // index of the normalizer
  uint64_t normalizer_order = 0;  // order of N_ambient(representative)
  std::string method;             // "cyclic-extension" or "sylow7-localized"
};

struct CensusOptions {
  uint64_t seed = 20177;
  uint64_t scan_budget = kDefaultScanBudget;
  unsigned threads = 0;  // 0 = default_thread_count()
};

// All solvable subgroups of order <= max_order up to g-conjugacy, by
// layered prime-step extensions: a class U is extended by every z in
// N_g(U) with z^p in U \ {z}, giving the subgroup U<z> of order p|U|.
// Every solvable subgroup has a chief-like chain of prime indices, so the
// enumeration is complete.
std::vector<SubgroupClass> enumerate_solvable_subgroups(
    const PermGroup& g, uint64_t max_order, const std::string& ambient_name,
    uint64_t ambient_cap = 10000);

// Number of Sylow-7 subgroups, by counting order-7 elements.
uint64_t sylow7_count(const PermGroup& g, uint64_t cap = 100000);

// Complete census up to g-conjugacy of subgroups isomorphic to a target
// type whose Sylow-7 subgroup is normal (n7 = 1, verified).
//
// Completeness: such a subgroup S has a unique Sylow-7 subgroup Q, and
// S <= N_g(Q); all Sylow-7 subgroups of g are conjugate, so every class
// has a representative between one fixed P = <x> and N = N_g(P). Any
// conjugation between two such representatives maps P to P, hence lies in
// N, so g-conjugacy inside the family equals N-conjugacy.
std::vector<SubgroupClass> sylow7_localized_census(
    const PermGroup& g, const std::string& ambient_name,
    const PermGroup& target_model, const std::string& target_label,
    const CensusOptions& opts = {});

// One of the nine stabilizer-type labels when the group is isomorphic to
// that model, otherwise "other(<fingerprint>)". Order must be <= 252.
std::string identify_iso_type(const PermGroup& h);

// Data of a 2-element t making Cos(g, h, hth) a connected 7-valent
// arc-transitive graph: t^2 in h, <h,t> = g, |h : h n h^t| = 7, and t
// normalizes the intersection.
struct FeasibleElement {
  Permutation element;
  PermGroup intersection;  // h n h^t, index 7 in h
  bool two_element = false;
  bool square_in_h = false;
  bool index_seven = false;
  bool generates = false;
  bool normalizes_intersection = false;
  bool all() const {
    return two_element && square_in_h && index_seven && generates &&
           normalizes_intersection;
  }
};

// Surveys every index-7 subgroup class L of h and every 2-element of
// N_g(L); survivors are complete over those normalizers (one L per h-class
// loses nothing: conjugating by h moves survivors along with L).
std::vector<FeasibleElement> find_feasible_elements(
    const PermGroup& g, const PermGroup& h, const CensusOptions& opts = {});

}  // namespace symgraph
