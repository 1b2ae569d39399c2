#pragma once

#include <atomic>
#include <cstring>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "symgraph/perm_group.hpp"

namespace symgraph {

// Default ceiling for full element scans; covers A_12, the largest group
// scanned here. Exceeding a budget is an error, never a silent truncation.
inline constexpr uint64_t kDefaultScanBudget = 250'000'000;

unsigned default_thread_count();

// Flat sorted set of same-degree permutations with allocation-free lookup.
class PermSet {
public:
  PermSet() = default;
  PermSet(unsigned degree, const std::vector<Permutation>& elems);

  unsigned degree() const { return degree_; }
  size_t size() const { return count_; }
  std::span<const uint8_t> at(size_t i) const {
    return {flat_.data() + i * degree_, degree_};
  }
  bool contains(std::span<const uint8_t> images) const;

private:
  unsigned degree_ = 0;
  size_t count_ = 0;
  std::vector<uint8_t> flat_;
};

namespace detail {

// Walks the elements of index range [begin, end) in lexicographic order of
// base-image tuples. At level i the walker keeps the suffix product of the
// transversal elements chosen so far (deepest level applied first), so the
// true image of base[i] is iterated in ascending order at every level.
class ElementWalker {
public:
  ElementWalker(const Bsgs& chain, uint64_t begin, uint64_t end)
      : chain_(&chain), remaining_(end - begin) {
    const size_t k = chain.levels.size();
    const unsigned n = chain.degree;
    suffix_.assign(k + 1, std::vector<uint8_t>(n));
    suffix_inv_.assign(k + 1, std::vector<uint8_t>(n));
    for (unsigned x = 0; x < n; ++x)
      suffix_[0][x] = suffix_inv_[0][x] = static_cast<uint8_t>(x);
    digit_.assign(k, 0);
    target_.assign(k, 0);
    if (remaining_ == 0) return;
    uint64_t index = begin;
    for (size_t li = 0; li < k; ++li) {
      uint64_t weight = chain.suffix_count[li + 1];
      digit_[li] = index / weight;
      index %= weight;
      target_[li] = nth_target(li, digit_[li]);
      apply(li);
    }
  }

  bool done() const { return remaining_ == 0; }
  std::span<const uint8_t> element() const { return suffix_.back(); }
  std::span<const uint8_t> element_inv() const { return suffix_inv_.back(); }

  void advance() {
    if (--remaining_ == 0) return;
    size_t k = chain_->levels.size();
    size_t li = k;
    while (li-- > 0) {
      if (digit_[li] + 1 < chain_->levels[li].orbit.size()) {
        ++digit_[li];
        target_[li] = next_target(li, target_[li] + 1);
        apply(li);
        for (size_t lj = li + 1; lj < k; ++lj) {
          digit_[lj] = 0;
          target_[lj] = next_target(lj, 0);
          apply(lj);
        }
        return;
      }
    }
    remaining_ = 0;  // walked past the last element
  }

private:
  // First point >= from whose preimage under the current suffix lies in
  // the fundamental orbit of level li.
  unsigned next_target(size_t li, unsigned from) const {
    const BsgsLevel& lvl = chain_->levels[li];
    const std::vector<uint8_t>& inv = suffix_inv_[li];
    for (unsigned c = from; c < chain_->degree; ++c)
      if (lvl.in_orbit[inv[c]]) return c;
    return chain_->degree;  // unreachable for valid digits
  }

  unsigned nth_target(size_t li, uint64_t rank) const {
    const BsgsLevel& lvl = chain_->levels[li];
    const std::vector<uint8_t>& inv = suffix_inv_[li];
    uint64_t seen = 0;
    for (unsigned c = 0; c < chain_->degree; ++c) {
      if (lvl.in_orbit[inv[c]] && seen++ == rank) return c;
    }
    return chain_->degree;
  }

  void apply(size_t li) {
    const BsgsLevel& lvl = chain_->levels[li];
    const unsigned n = chain_->degree;
    uint8_t beta = suffix_inv_[li][target_[li]];
    int16_t slot = lvl.slot[beta];
    const uint8_t* u = lvl.u[slot].images().data();
    const uint8_t* u_inv = lvl.u_inv[slot].images().data();
    const uint8_t* s = suffix_[li].data();
    const uint8_t* s_inv = suffix_inv_[li].data();
    uint8_t* out = suffix_[li + 1].data();
    uint8_t* out_inv = suffix_inv_[li + 1].data();
    for (unsigned x = 0; x < n; ++x) {
      out[x] = s[u[x]];
      out_inv[x] = u_inv[s_inv[x]];
    }
  }

  const Bsgs* chain_;
  uint64_t remaining_;
  std::vector<std::vector<uint8_t>> suffix_, suffix_inv_;
  std::vector<uint64_t> digit_;
  std::vector<unsigned> target_;
};

}  // namespace detail

// Visits elements with enumeration index in [begin, end); fn is called with
// (images, inverse images) of each element exactly once, in order.
template <class Fn>
void scan_elements(const Bsgs& chain, uint64_t begin, uint64_t end, Fn&& fn) {
  if (begin >= end) return;
  if (chain.levels.empty()) {
    // Trivial group: the identity is element 0.
    std::vector<uint8_t> id(chain.degree);
    for (unsigned x = 0; x < chain.degree; ++x) id[x] = static_cast<uint8_t>(x);
    fn(std::span<const uint8_t>(id), std::span<const uint8_t>(id));
    return;
  }
  detail::ElementWalker walker(chain, begin, end);
  while (!walker.done()) {
    fn(walker.element(), walker.element_inv());
    walker.advance();
  }
}

// Deterministic restartable stream over a whole group.
class ElementStream {
public:
  explicit ElementStream(const PermGroup& g, uint64_t start = 0);
  bool next(Permutation& out);
  uint64_t index() const { return index_; }

private:
  PermGroup group_;
  uint64_t index_;
  uint64_t order_;
};

Permutation element_at(const PermGroup& g, uint64_t index);

// All elements in enumeration order; order(g) must not exceed cap.
std::vector<Permutation> all_elements(const PermGroup& g,
                                      uint64_t cap = 1'000'000);

// Smallest-first greedy generating set recovered from a full member list.
PermGroup group_from_members(unsigned degree,
                             const std::vector<Permutation>& members);

// Chunked multi-threaded scan keeping elements satisfying pred. Chunks are
// merged by set union, so the thread schedule cannot affect the result.
template <class Pred>
std::vector<Permutation> parallel_collect(const PermGroup& g, const Pred& pred,
                                          uint64_t budget = kDefaultScanBudget,
                                          unsigned threads = 0) {
  uint64_t order = g.order();
  if (order > budget)
    raise(ErrorCode::ScanBudgetExceeded,
          "group order " + std::to_string(order) + " exceeds scan budget " +
              std::to_string(budget));
  if (threads == 0) threads = default_thread_count();
  const Bsgs& chain = g.bsgs();

  uint64_t chunks = std::min<uint64_t>(order, uint64_t{threads} * 8);
  if (threads == 1 || order < 4096) chunks = 1;
  uint64_t chunk_size = (order + chunks - 1) / chunks;

  std::vector<std::vector<Permutation>> found(chunks);
  std::atomic<uint64_t> next_chunk{0};
  auto work = [&] {
    for (;;) {
      uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunks) return;
      uint64_t begin = c * chunk_size;
      uint64_t end = std::min(order, begin + chunk_size);
      scan_elements(chain, begin, end,
                    [&](std::span<const uint8_t> elem,
                        std::span<const uint8_t> elem_inv) {
                      if (pred(elem, elem_inv))
                        found[c].push_back(Permutation::from_images(
                            std::vector<uint8_t>(elem.begin(), elem.end())));
                    });
    }
  };
  if (chunks == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::vector<Permutation> merged;
  for (auto& part : found)
    for (auto& p : part) merged.push_back(std::move(p));
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

// Exact N_g(h) = {x in g : x^-1 h x = h}, by full element scan.
PermGroup normalizer_scan(const PermGroup& g, const PermGroup& h,
                          uint64_t budget = kDefaultScanBudget);

// Exact C_g(p) = {x in g : x^-1 p x = p}.
PermGroup centralizer_scan(const PermGroup& g, const Permutation& p,
                           uint64_t budget = kDefaultScanBudget);

}  // namespace symgraph
