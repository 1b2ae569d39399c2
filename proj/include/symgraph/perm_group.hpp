#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <vector>

#include "symgraph/perm.hpp"

namespace symgraph {

// One level of a stabilizer chain: the orbit of base_point under the
// generators active at this level, with an explicit transversal.
// u[slot[p]] maps base_point to p; u_inv[slot[p]] maps p back.
struct BsgsLevel {
  uint8_t base_point = 0;
  std::vector<uint8_t> orbit;        // sorted ascending
  std::vector<int16_t> slot;         // point -> transversal index, -1 if absent
  std::vector<uint8_t> in_orbit;     // 0/1 per point
  std::vector<Permutation> u;
  std::vector<Permutation> u_inv;
  std::vector<Permutation> gens;     // strong generators fixing all earlier base points
};

struct Bsgs {
  unsigned degree = 0;
  std::vector<uint8_t> base;
  std::vector<BsgsLevel> levels;
  std::vector<Permutation> strong_generators;
  uint64_t order = 1;                // product of fundamental orbit lengths
  std::vector<uint64_t> suffix_count;  // suffix_count[i] = product of orbit sizes at levels >= i

  // Strips p through the chain; returns the residue and the level reached.
  std::pair<Permutation, size_t> sift(const Permutation& p) const;
};

// A permutation group given by generators, with a lazily built BSGS.
// Base selection rule: any forced prefix first, then ascending points with
// trivial levels pruned, i.e. each kept base point is the smallest point
// moved by its level's stabilizer. Deterministic given the generator
// order, so element enumeration order is reproducible and the identity is
// always element number zero.
// Immutable after construction; copies share the built chain.
class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Permutation> generators);
  static PermGroup trivial(unsigned degree) { return PermGroup(degree, {}); }

  unsigned degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  const Bsgs& bsgs() const;  // built on first use, thread-safe
  uint64_t order() const { return bsgs().order; }

  bool contains(const Permutation& p) const;

  std::vector<uint8_t> orbit(uint8_t point) const;  // sorted
  PermGroup point_stabilizer(uint8_t point) const;

  // Uniform over the group: one unbiased transversal pick per level.
  Permutation random_element(std::mt19937_64& rng) const;
  Permutation random_element(uint64_t seed) const;

private:
  unsigned degree_;
  std::vector<Permutation> gens_;
  struct Cache {
    std::once_flag flag;
    std::unique_ptr<const Bsgs> value;
  };
  std::shared_ptr<Cache> cache_;
};

// Builds a deterministic stabilizer chain. forced_base points are used as
// the leading base points whether or not anything moves them.
Bsgs build_bsgs(unsigned degree, const std::vector<Permutation>& generators,
                const std::vector<uint8_t>& forced_base = {});

bool is_subgroup(const PermGroup& sub, const PermGroup& g);

}  // namespace symgraph
