#include "symgraph/coset_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "json.hpp"
#include "symgraph/element_scan.hpp"

namespace symgraph {

namespace {

std::string image_key(const Permutation& p) {
  return std::string(reinterpret_cast<const char*>(p.images().data()),
                     p.degree());
}

// Lexicographically minimal member of the coset (h members) * w.
Permutation canonical_rep(const std::vector<Permutation>& h_members,
                          const Permutation& w) {
  Permutation best(w.degree());
  bool first = true;
  for (const Permutation& e : h_members) {
    Permutation candidate = compose(e, w);
    if (first || candidate < best) {
      best = std::move(candidate);
      first = false;
    }
  }
  return best;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

CosetGraph build_coset_graph(const PermGroup& g, const PermGroup& h,
                             const Permutation& t,
                             const std::string& group_name) {
  if (!is_subgroup(h, g))
    raise(ErrorCode::NotASubgroup, "coset graph: h is not a subgroup of g");
  if (!g.contains(t))
    raise(ErrorCode::NotASubgroup, "coset graph: t is not an element of g");
  if (!h.contains(compose(t, t)))
    raise(ErrorCode::InvolutionConditionFailed,
          "coset graph needs t^2 in h so that the double coset is symmetric");
  uint64_t index = g.order() / h.order();
  if (index > kVertexBudget)
    raise(ErrorCode::VertexBudgetExceeded,
          "coset space has " + std::to_string(index) + " vertices (budget " +
              std::to_string(kVertexBudget) + ")");

  CosetGraph cg(g, h, t, group_name);

  if (index == 1) {
    cg.vertex_count = 1;
    cg.adjacency.assign(1, {});
    cg.coset_reps.push_back(Permutation(g.degree()));
    if (!t.is_identity()) cg.loops_dropped = 1;
    return cg;
  }

  std::vector<Permutation> h_members = all_elements(h, 10000);
  std::unordered_map<std::string, uint32_t> vertex_ids;
  auto vertex_of = [&](const Permutation& member) -> uint32_t {
    Permutation rep = canonical_rep(h_members, member);
    std::string key = image_key(rep);
    auto it = vertex_ids.find(key);
    if (it != vertex_ids.end()) return it->second;
    uint32_t id = static_cast<uint32_t>(cg.coset_reps.size());
    vertex_ids.emplace(std::move(key), id);
    cg.coset_reps.push_back(std::move(rep));
    return id;
  };

  // The whole coset space first: right multiplication by the group's
  // generators is transitive on [G:H], while the double coset alone only
  // reaches one connected component.
  uint32_t start = vertex_of(Permutation(g.degree()));
  std::deque<uint32_t> queue{start};
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop_front();
    Permutation rep = cg.coset_reps[v];
    for (const Permutation& w : g.generators()) {
      size_t before = cg.coset_reps.size();
      uint32_t u = vertex_of(compose(rep, w));
      if (u == before) queue.push_back(u);
    }
  }
  cg.vertex_count = static_cast<uint32_t>(cg.coset_reps.size());
  if (cg.vertex_count != index)
    throw std::logic_error("coset enumeration missed cosets");

  cg.adjacency.assign(cg.vertex_count, {});
  for (uint32_t v = 0; v < cg.vertex_count; ++v) {
    std::vector<uint32_t> neighbors;
    for (const Permutation& e : h_members) {
      Permutation m = compose(compose(t, e), cg.coset_reps[v]);
      uint32_t u = vertex_of(m);
      if (u == v) {
        ++cg.loops_dropped;
        continue;
      }
      neighbors.push_back(u);
    }
    std::sort(neighbors.begin(), neighbors.end());
    neighbors.erase(std::unique(neighbors.begin(), neighbors.end()),
                    neighbors.end());
    cg.adjacency[v] = std::move(neighbors);
  }

  // The double coset is inverse-closed, so adjacency must come out symmetric.
  for (uint32_t v = 0; v < cg.vertex_count; ++v)
    for (uint32_t u : cg.adjacency[v])
      if (!std::binary_search(cg.adjacency[u].begin(), cg.adjacency[u].end(), v))
        throw std::logic_error("coset graph adjacency is not symmetric");
  return cg;
}

bool is_connected(const CosetGraph& cg) {
  if (cg.vertex_count == 0) return true;
  std::vector<bool> seen(cg.vertex_count, false);
  std::deque<uint32_t> queue{0};
  seen[0] = true;
  uint32_t reached = 1;
  while (!queue.empty()) {
    uint32_t v = queue.front();
    queue.pop_front();
    for (uint32_t u : cg.adjacency[v])
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        queue.push_back(u);
      }
  }
  return reached == cg.vertex_count;
}

unsigned valency(const CosetGraph& cg) {
  if (cg.vertex_count == 0) return 0;
  size_t d = cg.adjacency[0].size();
  for (const auto& nbrs : cg.adjacency)
    if (nbrs.size() != d)
      raise(ErrorCode::Irregular, "vertex degrees differ");
  return static_cast<unsigned>(d);
}

std::vector<uint32_t> vertex_action(const CosetGraph& cg, const Permutation& w) {
  std::vector<Permutation> h_members = all_elements(cg.stabilizer, 10000);
  std::unordered_map<std::string, uint32_t> ids;
  for (uint32_t v = 0; v < cg.vertex_count; ++v)
    ids.emplace(image_key(cg.coset_reps[v]), v);
  std::vector<uint32_t> sigma(cg.vertex_count);
  for (uint32_t v = 0; v < cg.vertex_count; ++v) {
    Permutation moved = canonical_rep(h_members, compose(cg.coset_reps[v], w));
    auto it = ids.find(image_key(moved));
    if (it == ids.end())
      raise(ErrorCode::UnsupportedConstruction,
            "element does not permute the coset space");
    sigma[v] = it->second;
  }
  return sigma;
}

uint64_t arc_orbit_count(const CosetGraph& cg, const PermGroup& g) {
  if (cg.vertex_count > kArcAnalysisBudget)
    raise(ErrorCode::VertexBudgetExceeded,
          "arc analysis capped at " + std::to_string(kArcAnalysisBudget) +
              " vertices");
  // Arc ids: position in the concatenated adjacency lists.
  std::vector<size_t> offset(cg.vertex_count + 1, 0);
  for (uint32_t v = 0; v < cg.vertex_count; ++v)
    offset[v + 1] = offset[v] + cg.adjacency[v].size();
  size_t arc_count = offset[cg.vertex_count];
  auto arc_id = [&](uint32_t v, uint32_t u) -> size_t {
    const auto& nbrs = cg.adjacency[v];
    size_t pos = std::lower_bound(nbrs.begin(), nbrs.end(), u) - nbrs.begin();
    return offset[v] + pos;
  };

  std::vector<size_t> parent(arc_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  for (const Permutation& w : g.generators()) {
    std::vector<uint32_t> sigma = vertex_action(cg, w);
    for (uint32_t v = 0; v < cg.vertex_count; ++v) {
      for (uint32_t u : cg.adjacency[v]) {
        uint32_t sv = sigma[v], su = sigma[u];
        if (!std::binary_search(cg.adjacency[sv].begin(),
                                cg.adjacency[sv].end(), su))
          raise(ErrorCode::UnsupportedConstruction,
                "group does not preserve the edge set");
        size_t a = find(arc_id(v, u));
        size_t b = find(arc_id(sv, su));
        if (a != b) parent[a] = b;
      }
    }
  }
  uint64_t orbits = 0;
  for (size_t a = 0; a < arc_count; ++a)
    if (find(a) == a) ++orbits;
  return orbits;
}

QuotientGraph quotient_graph(const CosetGraph& cg, const PermGroup& n) {
  QuotientGraph q;
  if (!is_subgroup(n, cg.group))
    raise(ErrorCode::NotASubgroup, "quotient: n is not a subgroup of g");

  std::vector<std::vector<uint32_t>> actions;
  for (const Permutation& w : n.generators())
    actions.push_back(vertex_action(cg, w));

  q.orbit_of.assign(cg.vertex_count, UINT32_MAX);
  std::vector<uint64_t> orbit_sizes;
  for (uint32_t v = 0; v < cg.vertex_count; ++v) {
    if (q.orbit_of[v] != UINT32_MAX) continue;
    uint32_t id = q.orbit_count++;
    uint64_t size = 0;
    std::deque<uint32_t> queue{v};
    q.orbit_of[v] = id;
    while (!queue.empty()) {
      uint32_t a = queue.front();
      queue.pop_front();
      ++size;
      for (const auto& sigma : actions) {
        uint32_t b = sigma[a];
        if (q.orbit_of[b] == UINT32_MAX) {
          q.orbit_of[b] = id;
          queue.push_back(b);
        }
      }
    }
    orbit_sizes.push_back(size);
  }

  uint64_t n_order = n.order();
  q.semiregular = std::all_of(orbit_sizes.begin(), orbit_sizes.end(),
                              [&](uint64_t s) { return s == n_order; });
  q.at_least_three_orbits = q.orbit_count >= 3;

  q.normal_in_group = true;
  for (const Permutation& w : cg.group.generators())
    for (const Permutation& m : n.generators())
      if (!n.contains(conjugate(m, w))) q.normal_in_group = false;

  // Quotient adjacency with multiplicity bookkeeping.
  std::map<std::pair<uint32_t, uint32_t>, uint64_t> pair_count;
  for (uint32_t v = 0; v < cg.vertex_count; ++v) {
    for (uint32_t u : cg.adjacency[v]) {
      if (u <= v) continue;  // each parent edge once
      uint32_t a = q.orbit_of[v], b = q.orbit_of[u];
      if (a == b) {
        ++q.internal_edges;
        continue;
      }
      ++pair_count[{std::min(a, b), std::max(a, b)}];
    }
  }
  q.adjacency.assign(q.orbit_count, {});
  for (const auto& [pair, count] : pair_count) {
    q.adjacency[pair.first].push_back(pair.second);
    q.adjacency[pair.second].push_back(pair.first);
    q.collapsed_multi_edges += count - 1;
  }
  for (auto& nbrs : q.adjacency) std::sort(nbrs.begin(), nbrs.end());

  unsigned parent_valency = valency(cg);
  bool parent_prime = is_prime(parent_valency);
  q.parent_arc_transitive = false;
  if (cg.vertex_count <= kArcAnalysisBudget)
    q.parent_arc_transitive = arc_orbit_count(cg, cg.group) == 1;

  q.valency_assertion_applicable = q.semiregular && q.at_least_three_orbits &&
                                   q.normal_in_group && parent_prime &&
                                   q.parent_arc_transitive;
  if (q.valency_assertion_applicable) {
    bool constant = true;
    for (const auto& nbrs : q.adjacency)
      if (nbrs.size() != q.adjacency[0].size()) constant = false;
    q.valency_assertion_holds =
        constant && !q.adjacency.empty() &&
        q.adjacency[0].size() == parent_valency;
  }
  return q;
}

Parity semiregular_parity(unsigned orbit_size, unsigned orbit_count) {
  if (orbit_size == 0)
    raise(ErrorCode::UnsupportedConstruction, "orbit size must be positive");
  return (uint64_t{orbit_count} * (orbit_size - 1)) % 2 == 0 ? Parity::even
                                                             : Parity::odd;
}

std::string graph_to_json(const CosetGraph& cg) {
  nlohmann::ordered_json j;
  j["provenance"]["group"] = cg.group_name;
  std::vector<std::string> h_gens;
  for (const Permutation& p : cg.stabilizer.generators())
    h_gens.push_back(to_cycle_string(p));
  j["provenance"]["stabilizer_generators"] = h_gens;
  j["provenance"]["element"] = to_cycle_string(cg.connector);
  j["vertex_count"] = cg.vertex_count;
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (uint32_t v = 0; v < cg.vertex_count; ++v)
    for (uint32_t u : cg.adjacency[v])
      if (v < u) edges.push_back({v, u});
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

std::string graph_to_edge_list(const CosetGraph& cg) {
  std::string out;
  for (uint32_t v = 0; v < cg.vertex_count; ++v)
    for (uint32_t u : cg.adjacency[v])
      if (v < u)
        out += std::to_string(v) + " " + std::to_string(u) + "\n";
  return out;
}

}  // namespace symgraph
