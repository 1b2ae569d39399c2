#include "symgraph/subgroup_search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "symgraph/atlas.hpp"

namespace symgraph {

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> primes;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

// Layered prime-step subgroup enumeration inside an element table.
// Classes are deduplicated by storing the key of every conjugate of every
// known class, so a candidate set is recognized in one hash lookup and two
// distinct stored classes are never conjugate.
class LatticeEnumerator {
public:
  struct ClassRec {
    IndexSet rep;
    IndexSet chain_gens;  // generating indices accumulated along the chain
    uint64_t class_size = 0;
  };

  LatticeEnumerator(const ElementTable& table, uint64_t max_order,
                    bool divisors_only)
      : table_(table), max_order_(max_order), divisors_only_(divisors_only),
        primes_(prime_factors(table.size())) {}

  // start must be a subgroup set of the table; its chain generators seed
  // every extension chain.
  void run(const IndexSet& start, const IndexSet& start_gens) {
    std::vector<ClassRec> layer;
    layer.push_back(register_class(start, start_gens));
    classes_.push_back(layer.front());
    while (!layer.empty()) {
      std::vector<ClassRec> next;
      for (const ClassRec& cls : layer) extend(cls, next);
      for (const ClassRec& cls : next) classes_.push_back(cls);
      layer = std::move(next);
    }
  }

  const std::vector<ClassRec>& classes() const { return classes_; }
  uint64_t table_order() const { return table_.size(); }

private:
  ClassRec register_class(const IndexSet& rep, const IndexSet& chain_gens) {
    // Conjugation orbit of the subgroup set under the whole table group.
    const std::vector<uint32_t>& gens = table_.greedy_generators();
    std::deque<IndexSet> queue{rep};
    seen_.insert(index_set_key(rep));
    uint64_t orbit = 1;
    while (!queue.empty()) {
      IndexSet cur = std::move(queue.front());
      queue.pop_front();
      for (uint32_t g : gens) {
        IndexSet img = conjugate_set(table_, cur, g);
        std::string key = index_set_key(img);
        if (seen_.insert(std::move(key)).second) {
          ++orbit;
          queue.push_back(std::move(img));
        }
      }
    }
    ClassRec rec;
    rec.rep = rep;
    rec.chain_gens = chain_gens;
    rec.class_size = orbit;
    return rec;
  }

  void extend(const ClassRec& cls, std::vector<ClassRec>& out) {
    const uint64_t size = cls.rep.size();
    IndexSet normalizer = normalizer_in_table(table_, cls.rep, cls.chain_gens.empty()
                                                  ? cls.rep
                                                  : cls.chain_gens);
    std::vector<bool> in_u(table_.size(), false);
    for (uint32_t e : cls.rep) in_u[e] = true;

    for (uint64_t p : primes_) {
      uint64_t next_order = size * p;
      if (next_order > max_order_) continue;
      if (divisors_only_ && max_order_ % next_order != 0) continue;
      for (uint32_t z : normalizer) {
        if (in_u[z]) continue;
        // If p does not divide ord(z) then <z^p> = <z>, so z^p in U would
        // put z itself in U; no candidate is lost by this filter.
        if (table_.order_of(z) % p != 0) continue;
        uint32_t zp = table_.pow(z, p);
        if (!in_u[zp]) continue;
        IndexSet candidate = extension_set(cls.rep, z, p);
        std::string key = index_set_key(candidate);
        if (seen_.contains(key)) continue;
        IndexSet chain = cls.chain_gens;
        chain.push_back(z);
        ClassRec rec = register_class(candidate, chain);
        out.push_back(rec);
      }
    }
  }

  // U <z> = U u Uz u ... u Uz^(p-1); closed because z normalizes U and
  // z^p lies in U.
  IndexSet extension_set(const IndexSet& u, uint32_t z, uint64_t p) {
    IndexSet result = u;
    uint32_t zk = z;
    for (uint64_t k = 1; k < p; ++k) {
      for (uint32_t e : u) result.push_back(table_.mul(e, zk));
      if (k + 1 < p) zk = table_.mul(zk, z);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  const ElementTable& table_;
  uint64_t max_order_;
  bool divisors_only_;
  std::vector<uint64_t> primes_;
  std::vector<ClassRec> classes_;
  std::unordered_set<std::string> seen_;
};

PermGroup group_from_indices(const ElementTable& table, const IndexSet& set) {
  std::vector<Permutation> members;
  members.reserve(set.size());
  for (uint32_t e : set) members.push_back(table.permutation(e));
  return group_from_members(table.degree(), members);
}

std::string label_for(const ElementTable& table, const IndexSet& set) {
  if (set.size() > 252) return "other(order=" + std::to_string(set.size()) + ")";
  std::vector<Permutation> members;
  for (uint32_t e : set) members.push_back(table.permutation(e));
  ElementTable sub(table.degree(), std::move(members));
  for (const std::string& name : atlas::stabilizer_type_names()) {
    PermGroup model = *atlas::try_make_named(name);
    if (model.order() != sub.size()) continue;
    ElementTable model_table(model);
    if (isomorphic(sub, model_table)) return name;
  }
  return "other(" + fingerprint(sub).to_string() + ")";
}

}  // namespace

std::vector<SubgroupClass> enumerate_solvable_subgroups(
    const PermGroup& g, uint64_t max_order, const std::string& ambient_name,
    uint64_t ambient_cap) {
  if (g.order() > ambient_cap)
    raise(ErrorCode::AmbientTooLarge,
          "solvable subgroup enumeration needs order <= " +
              std::to_string(ambient_cap) + ", got " + std::to_string(g.order()));
  ElementTable table(g, ambient_cap);
  LatticeEnumerator en(table, max_order, /*divisors_only=*/false);
  en.run({table.identity()}, {});

  std::vector<SubgroupClass> result;
  for (const auto& rec : en.classes()) {
    result.push_back(SubgroupClass{group_from_indices(table, rec.rep),
                                   ambient_name, label_for(table, rec.rep),
                                   rec.class_size,
                                   g.order() / rec.class_size,
                                   "cyclic-extension"});
  }
  return result;
}

uint64_t sylow7_count(const PermGroup& g, uint64_t cap) {
  if (g.order() % 7 != 0) return 0;
  uint64_t order7 = 0;
  if (g.order() > cap)
    raise(ErrorCode::TooLarge, "sylow7_count requires order <= cap");
  scan_elements(g.bsgs(), 0, g.order(),
                [&](std::span<const uint8_t> elem, std::span<const uint8_t>) {
                  unsigned n = static_cast<unsigned>(elem.size());
                  std::vector<bool> seen(n, false);
                  uint64_t ord = 1;
                  for (unsigned s = 0; s < n; ++s) {
                    if (seen[s]) continue;
                    unsigned len = 0;
                    for (unsigned j = s; !seen[j]; j = elem[j]) {
                      seen[j] = true;
                      ++len;
                    }
                    ord = std::lcm(ord, uint64_t{len});
                  }
                  if (ord == 7) ++order7;
                });
  return order7 / 6;  // each subgroup of order 7 holds six order-7 elements
}

std::vector<SubgroupClass> sylow7_localized_census(
    const PermGroup& g, const std::string& ambient_name,
    const PermGroup& target_model, const std::string& target_label,
    const CensusOptions& opts) {
  if (target_model.order() % 7 != 0 || sylow7_count(target_model, 100000) != 1)
    raise(ErrorCode::PreconditionN7,
          "target type " + target_label +
              " lacks a normal Sylow-7 subgroup; localization incomplete");
  if (g.order() % 7 != 0) return {};  // no Sylow-7, so no such subgroup
  if (g.order() % 49 == 0)
    raise(ErrorCode::UnsupportedConstruction,
          "ambient Sylow-7 subgroups must have order 7 for <x> to be one of "
          "them; got 49 | order");

  // One Sylow-7 subgroup P = <x>, found by seeded uniform sampling.
  std::mt19937_64 rng(opts.seed);
  Permutation x(g.degree());
  bool found = false;
  for (int trial = 0; trial < 100000; ++trial) {
    Permutation r = g.random_element(rng);
    uint64_t ord = element_order(r);
    if (ord % 7 == 0) {
      x = r;
      for (uint64_t k = 1; k < ord / 7; ++k) x = compose(x, r);
      found = true;
      break;
    }
  }
  if (!found)
    raise(ErrorCode::PreconditionN7, "no element of order divisible by 7 found");

  PermGroup p7(g.degree(), {x});
  PermGroup normalizer = normalizer_scan(g, p7, opts.scan_budget);
  // Sylow: the number of Sylow-7 subgroups |g : N| is 1 mod 7.
  if ((g.order() / normalizer.order()) % 7 != 1)
    throw std::logic_error("Sylow count congruence violated by the scan");

  ElementTable table(normalizer, 100000);
  IndexSet start = closure(table, {table.index_of(x.images())});
  LatticeEnumerator en(table, target_model.order(), /*divisors_only=*/true);
  en.run(start, {table.index_of(x.images())});

  ElementTable model_table(target_model);
  std::vector<SubgroupClass> result;
  for (const auto& rec : en.classes()) {
    if (rec.rep.size() != target_model.order()) continue;
    std::vector<Permutation> members;
    for (uint32_t e : rec.rep) members.push_back(table.permutation(e));
    ElementTable sub(table.degree(), members);
    if (!isomorphic(sub, model_table)) continue;
    // Orbits under N are whole ambient classes, so sizes scale by |g : N|.
    result.push_back(SubgroupClass{group_from_indices(table, rec.rep),
                                   ambient_name, target_label,
                                   rec.class_size * (g.order() / normalizer.order()),
                                   normalizer.order() / rec.class_size,
                                   "sylow7-localized"});
  }
  return result;
}

std::string identify_iso_type(const PermGroup& h) {
  if (h.order() > 252)
    raise(ErrorCode::TooLarge, "iso type identification capped at order 252");
  ElementTable table(h, 252);
  for (const std::string& name : atlas::stabilizer_type_names()) {
    PermGroup model = *atlas::try_make_named(name);
    if (model.order() != table.size()) continue;
    ElementTable model_table(model);
    if (isomorphic(table, model_table)) return name;
  }
  return "other(" + fingerprint(table).to_string() + ")";
}

std::vector<FeasibleElement> find_feasible_elements(const PermGroup& g,
                                                    const PermGroup& h,
                                                    const CensusOptions& opts) {
  if (!is_subgroup(h, g))
    raise(ErrorCode::NotASubgroup, "feasible search: h is not a subgroup of g");
  if (h.order() > 252)
    raise(ErrorCode::TooLarge, "feasible search caps the stabilizer at 252");
  if (h.order() % 7 != 0)
    raise(ErrorCode::StabilizerOrderNotDivisibleBy7,
          "no index-7 subgroup can give valency 7: |h| = " +
              std::to_string(h.order()));

  const unsigned n = g.degree();
  std::vector<Permutation> h_members = all_elements(h);
  PermSet h_set(n, h_members);
  uint64_t l_order = h.order() / 7;

  // Index-7 subgroups of h up to h-conjugacy; they have order <= 36, hence
  // are solvable, so the prime-step enumeration inside h is complete.
  std::vector<SubgroupClass> l_classes;
  for (SubgroupClass& cls :
       enumerate_solvable_subgroups(h, l_order, "stabilizer", 252))
    if (cls.representative.order() == l_order) l_classes.push_back(std::move(cls));

  std::vector<FeasibleElement> survivors;
  for (const SubgroupClass& l_cls : l_classes) {
    const PermGroup& l_rep = l_cls.representative;
    PermGroup n_l = normalizer_scan(g, l_rep, opts.scan_budget);
    std::vector<Permutation> candidates = all_elements(n_l, 2'000'000);
    for (const Permutation& t : candidates) {
      if (t.is_identity()) continue;
      if (!is_two_element(t)) continue;
      if (!h_set.contains(compose(t, t).images())) continue;

      // h n h^t, via membership of conjugates.
      Permutation t_inv = inverse(t);
      std::vector<Permutation> intersection;
      for (const Permutation& e : h_members) {
        // e in h^t <=> t e t^-1 in h
        Permutation back = compose(compose(t, e), t_inv);
        if (h_set.contains(back.images())) intersection.push_back(e);
      }
      if (intersection.size() * 7 != h.order()) continue;

      std::vector<Permutation> joint = h.generators();
      joint.push_back(t);
      if (PermGroup(n, joint).order() != g.order()) continue;

      FeasibleElement fe{.element = t,
                         .intersection = group_from_members(n, intersection),
                         .two_element = true,
                         .square_in_h = true,
                         .index_seven = true,
                         .generates = true,
                         .normalizes_intersection = true};
      // Re-verify the normalizing condition directly on the intersection.
      PermSet l_set(n, intersection);
      for (const Permutation& e : intersection)
        if (!l_set.contains(conjugate(e, t).images()))
          fe.normalizes_intersection = false;
      survivors.push_back(std::move(fe));
    }
  }
  return survivors;
}

}  // namespace symgraph
