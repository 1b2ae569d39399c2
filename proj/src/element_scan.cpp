#include "symgraph/element_scan.hpp"

#include <algorithm>
#include <cstdlib>

namespace symgraph {

unsigned default_thread_count() {
  if (const char* env = std::getenv("SYMGRAPH_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 64) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 16u);
}

PermSet::PermSet(unsigned degree, const std::vector<Permutation>& elems)
    : degree_(degree), count_(elems.size()) {
  std::vector<const Permutation*> sorted;
  sorted.reserve(elems.size());
  for (const Permutation& p : elems) {
    if (p.degree() != degree)
      raise(ErrorCode::DegreeMismatch, "PermSet element degree mismatch");
    sorted.push_back(&p);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const Permutation* a, const Permutation* b) { return *a < *b; });
  flat_.reserve(count_ * degree_);
  for (const Permutation* p : sorted)
    flat_.insert(flat_.end(), p->images().begin(), p->images().end());
}

bool PermSet::contains(std::span<const uint8_t> images) const {
  if (images.size() != degree_) return false;
  size_t lo = 0, hi = count_;
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    int cmp = std::memcmp(flat_.data() + mid * degree_, images.data(), degree_);
    if (cmp == 0) return true;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return false;
}

ElementStream::ElementStream(const PermGroup& g, uint64_t start)
    : group_(g), index_(start), order_(g.order()) {
  if (order_ > kDefaultScanBudget)
    raise(ErrorCode::ScanBudgetExceeded,
          "group order " + std::to_string(order_) +
              " exceeds the enumeration budget");
}

bool ElementStream::next(Permutation& out) {
  if (index_ >= order_) return false;
  out = element_at(group_, index_);
  ++index_;
  return true;
}

Permutation element_at(const PermGroup& g, uint64_t index) {
  if (index >= g.order())
    raise(ErrorCode::TooLarge, "element index " + std::to_string(index) +
                                   " out of range for order " +
                                   std::to_string(g.order()));
  Permutation result(g.degree());
  scan_elements(g.bsgs(), index, index + 1,
                [&](std::span<const uint8_t> elem, std::span<const uint8_t>) {
                  result = Permutation::from_images(
                      std::vector<uint8_t>(elem.begin(), elem.end()));
                });
  return result;
}

std::vector<Permutation> all_elements(const PermGroup& g, uint64_t cap) {
  uint64_t order = g.order();
  if (order > cap)
    raise(ErrorCode::TooLarge, "group of order " + std::to_string(order) +
                                   " too large to list (cap " +
                                   std::to_string(cap) + ")");
  std::vector<Permutation> elems;
  elems.reserve(order);
  scan_elements(g.bsgs(), 0, order,
                [&](std::span<const uint8_t> elem, std::span<const uint8_t>) {
                  elems.push_back(Permutation::from_images(
                      std::vector<uint8_t>(elem.begin(), elem.end())));
                });
  return elems;
}

PermGroup group_from_members(unsigned degree,
                             const std::vector<Permutation>& members) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(degree);
  for (const Permutation& m : members) {
    if (m.is_identity()) continue;
    if (current.contains(m)) continue;
    gens.push_back(m);
    current = PermGroup(degree, gens);
    if (current.order() == members.size()) break;
  }
  return current;
}

PermGroup normalizer_scan(const PermGroup& g, const PermGroup& h,
                          uint64_t budget) {
  if (!is_subgroup(h, g))
    raise(ErrorCode::NotASubgroup, "normalizer_scan: h is not a subgroup of g");
  const unsigned n = g.degree();
  std::vector<Permutation> h_gens;
  for (const Permutation& s : h.generators())
    if (!s.is_identity()) h_gens.push_back(s);
  if (h_gens.empty()) return g;  // N_g(1) = g

  PermSet h_set(n, all_elements(h));
  auto pred = [&](std::span<const uint8_t> elem,
                  std::span<const uint8_t> elem_inv) {
    static thread_local std::vector<uint8_t> buf;
    buf.resize(elem.size());
    for (const Permutation& y : h_gens) {
      raw::conjugate_into(y.images(), elem, elem_inv, buf);
      if (!h_set.contains(buf)) return false;
    }
    return true;
  };
  std::vector<Permutation> members = parallel_collect(g, pred, budget);
  return group_from_members(n, members);
}

PermGroup centralizer_scan(const PermGroup& g, const Permutation& p,
                           uint64_t budget) {
  if (p.degree() != g.degree())
    raise(ErrorCode::DegreeMismatch, "centralizer_scan degree mismatch");
  if (p.is_identity()) return g;
  auto pred = [&](std::span<const uint8_t> elem,
                  std::span<const uint8_t> elem_inv) {
    static thread_local std::vector<uint8_t> buf;
    buf.resize(elem.size());
    raw::conjugate_into(p.images(), elem, elem_inv, buf);
    return std::memcmp(buf.data(), p.images().data(), buf.size()) == 0;
  };
  std::vector<Permutation> members = parallel_collect(g, pred, budget);
  return group_from_members(g.degree(), members);
}

}  // namespace symgraph
