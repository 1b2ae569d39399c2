#include "symgraph/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace symgraph {

namespace {

// Working state of the Schreier-Sims construction. Levels are rebuilt
// lazily after the strong generator list or base changes.
struct Builder {
  unsigned degree;
  std::vector<uint8_t> base;
  std::vector<Permutation> strong;
  std::vector<BsgsLevel> levels;
  std::vector<bool> fresh;

  explicit Builder(unsigned n) : degree(n) {}

  bool fixes_prefix(const Permutation& p, size_t count) const {
    for (size_t i = 0; i < count; ++i)
      if (p[base[i]] != base[i]) return false;
    return true;
  }

  void append_base_point(uint8_t point) {
    base.push_back(point);
    BsgsLevel lvl;
    lvl.base_point = point;
    levels.push_back(std::move(lvl));
    fresh.push_back(false);
  }

  void mark_stale_up_to(size_t level) {
    for (size_t i = 0; i <= level && i < fresh.size(); ++i) fresh[i] = false;
  }

  void rebuild(size_t li) {
    BsgsLevel& lvl = levels[li];
    lvl.gens.clear();
    for (const Permutation& s : strong)
      if (fixes_prefix(s, li)) lvl.gens.push_back(s);

    lvl.slot.assign(degree, -1);
    lvl.in_orbit.assign(degree, 0);
    lvl.u.clear();
    lvl.u_inv.clear();

    std::deque<uint8_t> queue;
    auto add = [&](uint8_t point, Permutation trans) {
      lvl.slot[point] = static_cast<int16_t>(lvl.u.size());
      lvl.in_orbit[point] = 1;
      lvl.u_inv.push_back(inverse(trans));
      lvl.u.push_back(std::move(trans));
      queue.push_back(point);
    };
    add(lvl.base_point, Permutation(degree));
    while (!queue.empty()) {
      uint8_t a = queue.front();
      queue.pop_front();
      for (const Permutation& s : lvl.gens) {
        uint8_t b = s[a];
        if (!lvl.in_orbit[b]) add(b, compose(lvl.u[lvl.slot[a]], s));
      }
    }
    lvl.orbit.clear();
    for (unsigned p = 0; p < degree; ++p)
      if (lvl.in_orbit[p]) lvl.orbit.push_back(static_cast<uint8_t>(p));
    fresh[li] = true;
  }

  void ensure_fresh(size_t li) {
    if (!fresh[li]) rebuild(li);
  }

  // Strips p through levels [from, end). Returns the residue and the number
  // of base points the residue is known to fix.
  std::pair<Permutation, size_t> sift(Permutation p, size_t from) {
    for (size_t li = from; li < levels.size(); ++li) {
      ensure_fresh(li);
      uint8_t image = p[base[li]];
      if (!levels[li].in_orbit[image]) return {std::move(p), li};
      p = compose(p, levels[li].u_inv[levels[li].slot[image]]);
    }
    return {std::move(p), levels.size()};
  }

  // Adds a sifted residue as a strong generator; returns the deepest level
  // it is active at.
  size_t add_strong(Permutation h) {
    size_t j = 0;
    while (j < base.size() && h[base[j]] == base[j]) ++j;
    if (j == base.size()) {
      uint8_t moved = 0;
      while (h[moved] == moved) ++moved;
      append_base_point(moved);
    }
    strong.push_back(std::move(h));
    mark_stale_up_to(j);
    return j;
  }

  void insert_generator(const Permutation& g) {
    if (g.is_identity()) return;
    auto [residue, level] = sift(g, 0);
    (void)level;
    if (!residue.is_identity()) add_strong(std::move(residue));
  }

  // Verifies level li: every Schreier generator must strip to the identity
  // through the deeper levels. On failure the residue has been added as a
  // strong generator; returns the level to reprocess from.
  std::optional<size_t> process(size_t li) {
    ensure_fresh(li);
    const BsgsLevel& lvl = levels[li];
    for (uint8_t point : lvl.orbit) {
      const Permutation& u_point = lvl.u[lvl.slot[point]];
      for (size_t si = 0; si < lvl.gens.size(); ++si) {
        const Permutation& s = lvl.gens[si];
        uint8_t image = s[point];
        Permutation schreier =
            compose(compose(u_point, s), lvl.u_inv[lvl.slot[image]]);
        if (schreier.is_identity()) continue;
        auto [residue, stuck] = sift(std::move(schreier), li + 1);
        (void)stuck;
        if (!residue.is_identity()) return add_strong(std::move(residue));
      }
    }
    return std::nullopt;
  }
};

uint64_t checked_product(const std::vector<BsgsLevel>& levels) {
  uint64_t order = 1;
  for (const BsgsLevel& lvl : levels) {
    uint64_t next;
    if (__builtin_mul_overflow(order, static_cast<uint64_t>(lvl.orbit.size()),
                               &next))
      raise(ErrorCode::ArithmeticOverflow, "group order exceeds 64 bits");
    order = next;
  }
  return order;
}

}  // namespace

std::pair<Permutation, size_t> Bsgs::sift(const Permutation& p) const {
  Permutation cur = p;
  for (size_t li = 0; li < levels.size(); ++li) {
    uint8_t image = cur[base[li]];
    if (!levels[li].in_orbit[image]) return {std::move(cur), li};
    cur = compose(cur, levels[li].u_inv[levels[li].slot[image]]);
  }
  return {std::move(cur), levels.size()};
}

Bsgs build_bsgs(unsigned degree, const std::vector<Permutation>& generators,
                const std::vector<uint8_t>& forced_base) {
  Builder b(degree);
  // Forced prefix first, then every remaining point in ascending order.
  // Levels whose orbit stays trivial are pruned afterwards, so each kept
  // level's base point is the smallest point its stabilizer moves and the
  // fundamental orbit never dips below it; the identity enumerates first.
  std::vector<bool> used(degree, false);
  for (uint8_t point : forced_base) {
    if (!used[point]) b.append_base_point(point);
    used[point] = true;
  }
  for (unsigned point = 0; point < degree; ++point)
    if (!used[point]) b.append_base_point(static_cast<uint8_t>(point));
  for (const Permutation& g : generators) b.insert_generator(g);

  if (!b.levels.empty()) {
    size_t li = b.levels.size() - 1;
    for (;;) {
      auto restart = b.process(li);
      if (restart) {
        li = *restart;
        if (li >= b.levels.size()) li = b.levels.size() - 1;
      } else if (li == 0) {
        break;
      } else {
        --li;
      }
    }
  }

  Bsgs result;
  result.degree = degree;
  // Points with trivial orbits are fixed by their whole level stabilizer,
  // so dropping those levels changes neither the order nor membership.
  for (size_t li = 0; li < b.levels.size(); ++li) {
    b.ensure_fresh(li);
    if (b.levels[li].orbit.size() == 1) continue;
    result.base.push_back(b.base[li]);
    result.levels.push_back(std::move(b.levels[li]));
  }
  result.strong_generators = std::move(b.strong);
  result.order = checked_product(result.levels);
  result.suffix_count.assign(result.levels.size() + 1, 1);
  for (size_t i = result.levels.size(); i-- > 0;)
    result.suffix_count[i] =
        result.suffix_count[i + 1] * result.levels[i].orbit.size();

  // Safety net: random generator words must strip to the identity.
  if (!generators.empty()) {
    std::mt19937_64 rng(0x5eedu);
    for (int trial = 0; trial < 16; ++trial) {
      Permutation w(degree);
      for (int step = 0; step < 8; ++step)
        w = compose(w, generators[rng() % generators.size()]);
      auto [residue, level] = result.sift(w);
      (void)level;
      if (!residue.is_identity())
        throw std::logic_error("schreier-sims verification failed");
    }
  }
  return result;
}

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
  if (degree_ == 0 || degree_ > kMaxDegree)
    raise(ErrorCode::InvalidPermutation,
          "group degree must be in [1, " + std::to_string(kMaxDegree) + "]");
  for (const Permutation& g : gens_)
    if (g.degree() != degree_)
      raise(ErrorCode::DegreeMismatch,
            "generator degree " + std::to_string(g.degree()) +
                " does not match group degree " + std::to_string(degree_));
}

const Bsgs& PermGroup::bsgs() const {
  std::call_once(cache_->flag, [this] {
    cache_->value = std::make_unique<Bsgs>(build_bsgs(degree_, gens_));
  });
  return *cache_->value;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    raise(ErrorCode::DegreeMismatch,
          "membership test: degree " + std::to_string(p.degree()) + " vs " +
              std::to_string(degree_));
  auto [residue, level] = bsgs().sift(p);
  (void)level;
  return residue.is_identity();
}

std::vector<uint8_t> PermGroup::orbit(uint8_t point) const {
  if (point >= degree_)
    raise(ErrorCode::DegreeMismatch, "orbit point out of range");
  std::vector<uint8_t> in(degree_, 0);
  std::deque<uint8_t> queue{point};
  in[point] = 1;
  while (!queue.empty()) {
    uint8_t a = queue.front();
    queue.pop_front();
    for (const Permutation& g : gens_) {
      uint8_t b = g[a];
      if (!in[b]) {
        in[b] = 1;
        queue.push_back(b);
      }
    }
  }
  std::vector<uint8_t> result;
  for (unsigned p = 0; p < degree_; ++p)
    if (in[p]) result.push_back(static_cast<uint8_t>(p));
  return result;
}

PermGroup PermGroup::point_stabilizer(uint8_t point) const {
  if (point >= degree_)
    raise(ErrorCode::DegreeMismatch, "stabilizer point out of range");
  Bsgs chain = build_bsgs(degree_, gens_, {point});
  std::vector<Permutation> stab_gens;
  for (const Permutation& s : chain.strong_generators)
    if (s[point] == point) stab_gens.push_back(s);
  return PermGroup(degree_, std::move(stab_gens));
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  const Bsgs& chain = bsgs();
  // Unbiased index draw so the element distribution is exactly uniform.
  auto draw = [&rng](uint64_t m) -> uint64_t {
    uint64_t limit = std::numeric_limits<uint64_t>::max() -
                     (std::numeric_limits<uint64_t>::max() % m + 1) % m;
    uint64_t r = rng();
    while (r > limit) r = rng();
    return r % m;
  };
  Permutation g(degree_);
  // Element = u^(k-1) * ... * u^(0), deepest transversal applied first.
  for (size_t li = chain.levels.size(); li-- > 0;) {
    const BsgsLevel& lvl = chain.levels[li];
    uint8_t point = lvl.orbit[draw(lvl.orbit.size())];
    if (li == chain.levels.size() - 1)
      g = lvl.u[lvl.slot[point]];
    else
      g = compose(g, lvl.u[lvl.slot[point]]);
  }
  return g;
}

Permutation PermGroup::random_element(uint64_t seed) const {
  std::mt19937_64 rng(seed);
  return random_element(rng);
}

bool is_subgroup(const PermGroup& sub, const PermGroup& g) {
  if (sub.degree() != g.degree()) return false;
  for (const Permutation& s : sub.generators())
    if (!g.contains(s)) return false;
  return true;
}

}  // namespace symgraph
