#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symgraph/element_scan.hpp"
#include "symgraph/perm_group.hpp"

namespace symgraph {

// Indexed table of all elements of a group of modest order. Subgroups are
// handled as sorted vectors of indices into one of these.
class ElementTable {
public:
  ElementTable(unsigned degree, std::vector<Permutation> members);
  explicit ElementTable(const PermGroup& g, uint64_t cap = 100000);

  unsigned degree() const { return degree_; }
  uint32_t size() const { return static_cast<uint32_t>(count_); }
  std::span<const uint8_t> perm(uint32_t idx) const {
    return {flat_.data() + size_t{idx} * degree_, degree_};
  }
  Permutation permutation(uint32_t idx) const;
  std::optional<uint32_t> find(std::span<const uint8_t> images) const;
  uint32_t index_of(std::span<const uint8_t> images) const;
  uint32_t identity() const { return id_idx_; }
  uint32_t mul(uint32_t a, uint32_t b) const;  // a then b
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  uint32_t conj(uint32_t a, uint32_t x) const;  // x^-1 a x
  uint32_t pow(uint32_t a, uint64_t e) const;
  unsigned order_of(uint32_t a) const { return elem_order_[a]; }

  // Small generating set found greedily over the sorted element list.
  const std::vector<uint32_t>& greedy_generators() const;

private:
  void init();
  unsigned degree_ = 0;
  size_t count_ = 0;
  std::vector<uint8_t> flat_;  // sorted lexicographically
  std::vector<uint32_t> inv_;
  std::vector<uint16_t> elem_order_;
  uint32_t id_idx_ = 0;
  mutable std::vector<uint32_t> greedy_gens_;
};

using IndexSet = std::vector<uint32_t>;  // sorted, unique

bool index_set_contains(const IndexSet& s, uint32_t v);
std::string index_set_key(const IndexSet& s);

// Subgroup generated by the given elements (indices).
IndexSet closure(const ElementTable& t, const IndexSet& gens);
IndexSet conjugate_set(const ElementTable& t, const IndexSet& s, uint32_t x);
// Elements of the whole table normalizing s (s must be a subgroup set);
// pass a generating subset of s to keep the per-element test small.
IndexSet normalizer_in_table(const ElementTable& t, const IndexSet& s,
                             const IndexSet& s_gens);

// Conjugation-invariant shape data used to prune and label small groups.
struct Fingerprint {
  uint64_t order = 0;
  std::vector<std::pair<unsigned, unsigned>> element_orders;  // (order, count)
  uint64_t center_order = 0;
  uint64_t derived_order = 0;
  std::vector<std::pair<unsigned, unsigned>> abelianization_orders;
  bool operator==(const Fingerprint&) const = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const ElementTable& t);

// Exact isomorphism test by generator-image backtracking with element-order
// and centralizer-order pruning. Capped at order 1024; every use here stays
// at or below the order-252 ceiling.
bool isomorphic(const ElementTable& a, const ElementTable& b);

}  // namespace symgraph
