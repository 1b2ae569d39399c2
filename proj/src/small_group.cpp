#include "symgraph/small_group.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace symgraph {

ElementTable::ElementTable(unsigned degree, std::vector<Permutation> members)
    : degree_(degree), count_(members.size()) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  count_ = members.size();
  flat_.reserve(count_ * degree_);
  for (const Permutation& p : members) {
    if (p.degree() != degree_)
      raise(ErrorCode::DegreeMismatch, "element table degree mismatch");
    flat_.insert(flat_.end(), p.images().begin(), p.images().end());
  }
  init();
}

ElementTable::ElementTable(const PermGroup& g, uint64_t cap)
    : ElementTable(g.degree(), all_elements(g, cap)) {}

void ElementTable::init() {
  Permutation id(degree_);
  id_idx_ = index_of(id.images());
  inv_.resize(count_);
  elem_order_.resize(count_);
  std::vector<uint8_t> buf(degree_);
  for (uint32_t i = 0; i < count_; ++i) {
    raw::invert_into(perm(i), buf);
    inv_[i] = index_of(buf);
    uint64_t ord = 1;
    std::vector<bool> seen(degree_, false);
    std::span<const uint8_t> p = perm(i);
    for (unsigned s = 0; s < degree_; ++s) {
      if (seen[s]) continue;
      unsigned len = 0;
      for (unsigned j = s; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, uint64_t{len});
    }
    elem_order_[i] = static_cast<uint16_t>(ord);
  }
}

Permutation ElementTable::permutation(uint32_t idx) const {
  auto span = perm(idx);
  return Permutation::from_images(std::vector<uint8_t>(span.begin(), span.end()));
}

std::optional<uint32_t> ElementTable::find(std::span<const uint8_t> images) const {
  size_t lo = 0, hi = count_;
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    int cmp = std::memcmp(flat_.data() + mid * degree_, images.data(), degree_);
    if (cmp == 0) return static_cast<uint32_t>(mid);
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return std::nullopt;
}

uint32_t ElementTable::index_of(std::span<const uint8_t> images) const {
  auto idx = find(images);
  if (!idx)
    raise(ErrorCode::NotASubgroup, "element missing from table (set not closed)");
  return *idx;
}

uint32_t ElementTable::mul(uint32_t a, uint32_t b) const {
  static thread_local std::vector<uint8_t> buf;
  buf.resize(degree_);
  raw::compose_into(perm(a), perm(b), buf);
  return index_of(buf);
}

uint32_t ElementTable::conj(uint32_t a, uint32_t x) const {
  static thread_local std::vector<uint8_t> buf;
  buf.resize(degree_);
  raw::conjugate_into(perm(a), perm(x), perm(inv_[x]), buf);
  return index_of(buf);
}

uint32_t ElementTable::pow(uint32_t a, uint64_t e) const {
  uint32_t result = id_idx_;
  uint32_t base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

const std::vector<uint32_t>& ElementTable::greedy_generators() const {
  if (!greedy_gens_.empty() || count_ == 1) return greedy_gens_;
  IndexSet have{id_idx_};
  for (uint32_t i = 0; i < count_; ++i) {
    if (index_set_contains(have, i)) continue;
    greedy_gens_.push_back(i);
    IndexSet gens = greedy_gens_;
    have = closure(*this, gens);
    if (have.size() == count_) break;
  }
  return greedy_gens_;
}

bool index_set_contains(const IndexSet& s, uint32_t v) {
  return std::binary_search(s.begin(), s.end(), v);
}

std::string index_set_key(const IndexSet& s) {
  std::string key(s.size() * sizeof(uint32_t), '\0');
  std::memcpy(key.data(), s.data(), key.size());
  return key;
}

IndexSet closure(const ElementTable& t, const IndexSet& gens) {
  std::vector<bool> in(t.size(), false);
  in[t.identity()] = true;
  std::deque<uint32_t> queue{t.identity()};
  while (!queue.empty()) {
    uint32_t e = queue.front();
    queue.pop_front();
    for (uint32_t g : gens) {
      uint32_t p = t.mul(e, g);
      if (!in[p]) {
        in[p] = true;
        queue.push_back(p);
      }
    }
  }
  IndexSet result;
  for (uint32_t i = 0; i < t.size(); ++i)
    if (in[i]) result.push_back(i);
  return result;
}

IndexSet conjugate_set(const ElementTable& t, const IndexSet& s, uint32_t x) {
  IndexSet result;
  result.reserve(s.size());
  for (uint32_t e : s) result.push_back(t.conj(e, x));
  std::sort(result.begin(), result.end());
  return result;
}

IndexSet normalizer_in_table(const ElementTable& t, const IndexSet& s,
                             const IndexSet& s_gens) {
  IndexSet result;
  for (uint32_t x = 0; x < t.size(); ++x) {
    bool ok = true;
    for (uint32_t g : s_gens) {
      if (!index_set_contains(s, t.conj(g, x))) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(x);
  }
  return result;
}

namespace {

std::vector<std::pair<unsigned, unsigned>> order_histogram(
    const ElementTable& t, const IndexSet& subset) {
  std::map<unsigned, unsigned> hist;
  for (uint32_t e : subset) ++hist[t.order_of(e)];
  return {hist.begin(), hist.end()};
}

IndexSet whole(const ElementTable& t) {
  IndexSet all(t.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

IndexSet derived_subgroup(const ElementTable& t) {
  IndexSet commutators;
  for (uint32_t a = 0; a < t.size(); ++a)
    for (uint32_t b = 0; b < t.size(); ++b)
      commutators.push_back(t.mul(t.mul(t.inv(a), t.inv(b)), t.mul(a, b)));
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()),
                    commutators.end());
  return closure(t, commutators);
}

}  // namespace

Fingerprint fingerprint(const ElementTable& t) {
  Fingerprint f;
  f.order = t.size();
  f.element_orders = order_histogram(t, whole(t));

  const std::vector<uint32_t>& gens = t.greedy_generators();
  uint64_t center = 0;
  for (uint32_t x = 0; x < t.size(); ++x) {
    bool central = true;
    for (uint32_t g : gens)
      if (t.mul(x, g) != t.mul(g, x)) {
        central = false;
        break;
      }
    if (central) ++center;
  }
  f.center_order = center;

  IndexSet derived = derived_subgroup(t);
  f.derived_order = derived.size();

  // Order statistics of the abelian quotient determine it up to isomorphism.
  std::vector<int32_t> coset(t.size(), -1);
  std::vector<uint32_t> reps;
  for (uint32_t x = 0; x < t.size(); ++x) {
    if (coset[x] >= 0) continue;
    int32_t id = static_cast<int32_t>(reps.size());
    reps.push_back(x);
    for (uint32_t d : derived) coset[t.mul(d, x)] = id;
  }
  std::map<unsigned, unsigned> hist;
  for (uint32_t r : reps) {
    unsigned ord = 1;
    uint32_t acc = r;
    while (coset[acc] != coset[t.identity()]) {
      acc = t.mul(acc, r);
      ++ord;
    }
    ++hist[ord];
  }
  f.abelianization_orders = {hist.begin(), hist.end()};
  return f;
}

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "order=" << order << ", eo=[";
  for (size_t i = 0; i < element_orders.size(); ++i) {
    if (i) out << ' ';
    out << element_orders[i].first << ':' << element_orders[i].second;
  }
  out << "], z=" << center_order << ", d=" << derived_order << ", ab=[";
  for (size_t i = 0; i < abelianization_orders.size(); ++i) {
    if (i) out << ' ';
    out << abelianization_orders[i].first << ':' << abelianization_orders[i].second;
  }
  out << ']';
  return out.str();
}

namespace {

std::vector<uint32_t> centralizer_orders(const ElementTable& t) {
  std::vector<uint32_t> result(t.size(), 0);
  for (uint32_t x = 0; x < t.size(); ++x)
    for (uint32_t y = 0; y < t.size(); ++y)
      if (t.mul(x, y) == t.mul(y, x)) ++result[x];
  return result;
}

// Deterministic generating sequence: highest element order first, then
// smallest index outside the running closure.
std::vector<uint32_t> generating_sequence(const ElementTable& t) {
  std::vector<uint32_t> gens;
  if (t.size() == 1) return gens;
  uint32_t best = 0;
  for (uint32_t i = 0; i < t.size(); ++i)
    if (t.order_of(i) > t.order_of(best)) best = i;
  gens.push_back(best);
  IndexSet have = closure(t, gens);
  while (have.size() < t.size()) {
    for (uint32_t i = 0; i < t.size(); ++i) {
      if (!index_set_contains(have, i)) {
        gens.push_back(i);
        break;
      }
    }
    have = closure(t, gens);
  }
  return gens;
}

// Propagates the first `count` generator images across the subgroup they
// generate in `a` by BFS, checking every Cayley edge. A conflict or a
// collision means the partial assignment extends to no isomorphism.
bool images_consistent(const ElementTable& a, const ElementTable& b,
                       const std::vector<uint32_t>& gens,
                       const std::vector<uint32_t>& images, size_t count) {
  std::vector<int64_t> map(a.size(), -1);
  std::vector<bool> hit(b.size(), false);
  map[a.identity()] = b.identity();
  hit[b.identity()] = true;
  std::deque<uint32_t> queue{a.identity()};
  while (!queue.empty()) {
    uint32_t e = queue.front();
    queue.pop_front();
    for (size_t gi = 0; gi < count; ++gi) {
      uint32_t ea = a.mul(e, gens[gi]);
      uint32_t eb = b.mul(static_cast<uint32_t>(map[e]), images[gi]);
      if (map[ea] >= 0) {
        if (map[ea] != eb) return false;
      } else {
        if (hit[eb]) return false;  // not injective
        map[ea] = eb;
        hit[eb] = true;
        queue.push_back(ea);
      }
    }
  }
  return true;
}

bool search_images(const ElementTable& a, const ElementTable& b,
                   const std::vector<uint32_t>& gens,
                   const std::vector<uint32_t>& cent_a,
                   const std::vector<uint32_t>& cent_b,
                   std::vector<uint32_t>& images, size_t level) {
  if (level == gens.size()) return true;
  uint32_t g = gens[level];
  for (uint32_t y = 0; y < b.size(); ++y) {
    if (b.order_of(y) != a.order_of(g)) continue;
    if (cent_b[y] != cent_a[g]) continue;
    images[level] = y;
    if (!images_consistent(a, b, gens, images, level + 1)) continue;
    if (search_images(a, b, gens, cent_a, cent_b, images, level + 1)) return true;
  }
  return false;
}

}  // namespace

bool isomorphic(const ElementTable& a, const ElementTable& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 1024)
    raise(ErrorCode::TooLarge, "isomorphism test capped at order 1024");
  if (fingerprint(a) != fingerprint(b)) return false;
  std::vector<uint32_t> gens = generating_sequence(a);
  std::vector<uint32_t> cent_a = centralizer_orders(a);
  std::vector<uint32_t> cent_b = centralizer_orders(b);
  std::vector<uint32_t> images(gens.size(), 0);
  return search_images(a, b, gens, cent_a, cent_b, images, 0);
}

}  // namespace symgraph
