#include "symgraph/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "symgraph/atlas.hpp"
#include "symgraph/coset_graph.hpp"

namespace symgraph {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, unsigned>> factors;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      factors.push_back({p, e});
    }
  }
  if (n > 1) factors.push_back({n, 1});
  return factors;
}

std::string factor_string(uint64_t n) {
  if (n == 1) return "1";
  std::ostringstream out;
  bool first = true;
  for (auto [p, e] : factorize(n)) {
    if (!first) out << "*";
    first = false;
    out << p;
    if (e > 1) out << "^" << e;
  }
  return out.str();
}

uint64_t factorial(unsigned n) {
  uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (__builtin_mul_overflow(f, uint64_t{i}, &f))
      raise(ErrorCode::ArithmeticOverflow, "factorial overflow");
  }
  return f;
}

ojson class_witness(const SubgroupClass& cls) {
  ojson w;
  w["degree"] = cls.representative.degree();
  w["order"] = cls.representative.order();
  w["iso_label"] = cls.iso_label;
  w["class_size"] = cls.class_size;
  w["normalizer_order"] = cls.normalizer_order;
  w["method"] = cls.method;
  std::vector<std::string> gens;
  for (const Permutation& p : cls.representative.generators())
    gens.push_back(to_cycle_string(p));
  w["generators"] = gens;
  return w;
}

ojson feasible_witness(const FeasibleElement& fe) {
  ojson w;
  w["element"] = to_cycle_string(fe.element);
  w["element_order"] = element_order(fe.element);
  std::vector<std::string> gens;
  for (const Permutation& p : fe.intersection.generators())
    gens.push_back(to_cycle_string(p));
  w["intersection_generators"] = gens;
  w["intersection_order"] = fe.intersection.order();
  w["checks"] = {{"two_element", fe.two_element},
                 {"square_in_h", fe.square_in_h},
                 {"index_seven", fe.index_seven},
                 {"generates", fe.generates},
                 {"normalizes_intersection", fe.normalizes_intersection}};
  return w;
}

std::string skip_status(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ScanBudgetExceeded:
      return "SKIPPED(budget)";
    case ErrorCode::UnknownGroup:
    case ErrorCode::OrderMismatch:
    case ErrorCode::ParseError:
      return "SKIPPED(load-error)";
    default:
      return std::string("SKIPPED(") + error_code_name(e.code()) + ")";
  }
}

std::vector<std::string> group_generator_strings(const PermGroup& g) {
  std::vector<std::string> gens;
  for (const Permutation& p : g.generators()) gens.push_back(to_cycle_string(p));
  return gens;
}

}  // namespace

Manifest manifest_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    raise(ErrorCode::ParseError, std::string("claim manifest: ") + e.what());
  }
  Manifest m;
  m.schema_version = j.value("schema_version", 1);
  m.default_seed = j.value("default_seed", uint64_t{20177});
  for (const json& cj : j.at("claims")) {
    Claim c;
    c.id = cj.at("id").get<std::string>();
    c.paper_location = cj.value("paper_location", "");
    c.kind = cj.at("kind").get<std::string>();
    c.params = cj.value("params", json::object());
    c.expected = cj.value("expected", json::object());
    if (cj.contains("scan_budget")) c.scan_budget = cj.at("scan_budget").get<uint64_t>();
    if (cj.contains("seed")) c.seed = cj.at("seed").get<uint64_t>();
    c.discrepancy_note = cj.value("discrepancy_note", "");
    m.claims.push_back(std::move(c));
  }
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, "cannot open manifest " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return manifest_from_json_text(text.str());
}

Manifest load_default_manifest(const std::string& data_dir) {
  std::string dir = data_dir.empty() ? atlas::default_data_dir() : data_dir;
  return load_manifest(dir + "/claims.json");
}

bool glob_match(const std::string& pattern, const std::string& text) {
  std::function<bool(size_t, size_t)> match = [&](size_t pi, size_t ti) -> bool {
    while (pi < pattern.size()) {
      if (pattern[pi] == '*') {
        for (size_t skip = 0; skip + ti <= text.size(); ++skip)
          if (match(pi + 1, ti + skip)) return true;
        return false;
      }
      if (ti >= text.size()) return false;
      if (pattern[pi] != '?' && pattern[pi] != text[ti]) return false;
      ++pi;
      ++ti;
    }
    return ti == text.size();
  };
  return match(0, 0);
}

ClaimRunner::ClaimRunner(Manifest manifest, std::string data_dir)
    : manifest_(std::move(manifest)), data_dir_(std::move(data_dir)) {}

uint64_t ClaimRunner::effective_seed(const Claim& claim) const {
  if (const char* env = std::getenv("SYMGRAPH_SEED"))
    return std::strtoull(env, nullptr, 10);
  if (claim.seed) return *claim.seed;
  return manifest_.default_seed;
}

std::vector<SubgroupClass> ClaimRunner::census_cached(const std::string& ambient,
                                                      const std::string& target,
                                                      const CensusOptions& opts) {
  std::string key = ambient + "|" + target + "|" + std::to_string(opts.seed) +
                    "|" + std::to_string(opts.scan_budget);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = census_cache_.find(key);
  if (it != census_cache_.end()) return it->second;
  PermGroup g = atlas::load_group(ambient, data_dir_);
  PermGroup model = atlas::load_group(target, data_dir_);
  std::vector<SubgroupClass> classes =
      sylow7_localized_census(g, ambient, model, target, opts);
  census_cache_.emplace(key, classes);
  return classes;
}

ClaimReport ClaimRunner::run(const std::string& id) {
  for (const Claim& claim : manifest_.claims)
    if (claim.id == id) return run_claim(claim);
  raise(ErrorCode::UnknownClaim, id);
}

std::vector<ClaimReport> ClaimRunner::run_suite(const std::string& filter,
                                                bool parallel) {
  std::vector<const Claim*> selected;
  for (const Claim& claim : manifest_.claims)
    if (filter.empty() || glob_match(filter, claim.id)) selected.push_back(&claim);

  std::vector<ClaimReport> reports(selected.size());
  if (!parallel) {
    for (size_t i = 0; i < selected.size(); ++i)
      reports[i] = run_claim(*selected[i]);
    return reports;
  }
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      reports[i] = run_claim(*selected[i]);
    }
  };
  unsigned threads = std::min<unsigned>(default_thread_count(),
                                        static_cast<unsigned>(selected.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::max(1u, threads); ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return reports;
}

bool ClaimRunner::suite_passed(const std::vector<ClaimReport>& reports) {
  for (const ClaimReport& r : reports)
    if (r.failed()) return false;
  return true;
}

ClaimReport ClaimRunner::run_claim(const Claim& claim) {
  auto start = std::chrono::steady_clock::now();
  ClaimReport report;
  report.id = claim.id;

  ojson body;
  body["schema_version"] = 1;
  body["id"] = claim.id;
  body["paper_location"] = claim.paper_location;
  body["kind"] = claim.kind;
  uint64_t seed = effective_seed(claim);
  body["seed"] = seed;
  body["params"] = claim.params;
  body["expected"] = claim.expected;

  CensusOptions opts;
  opts.seed = seed;
  if (claim.scan_budget) opts.scan_budget = *claim.scan_budget;

  bool matches = false;
  try {
    ojson computed;
    if (claim.kind == "subgroup-census") {
      std::string method = claim.params.at("method").get<std::string>();
      std::string ambient = claim.params.at("ambient").get<std::string>();
      if (method == "cyclic-extension") {
        PermGroup g = atlas::load_group(ambient, data_dir_);
        uint64_t max_order = claim.params.at("max_order").get<uint64_t>();
        uint64_t filter_order = claim.params.at("filter_order").get<uint64_t>();
        std::vector<SubgroupClass> classes =
            enumerate_solvable_subgroups(g, max_order, ambient);
        uint64_t count = 0;
        ojson witnesses = ojson::array();
        for (const SubgroupClass& cls : classes) {
          if (cls.representative.order() != filter_order) continue;
          ++count;
          witnesses.push_back(class_witness(cls));
        }
        computed["method"] = method;
        computed["total_solvable_classes"] = classes.size();
        computed["filter_order"] = filter_order;
        computed["class_count"] = count;
        computed["classes"] = witnesses;
        matches = count == claim.expected.at("class_count").get<uint64_t>();
      } else if (method == "sylow7") {
        ojson censuses = ojson::array();
        matches = true;
        for (const json& tj : claim.params.at("targets")) {
          std::string target = tj.get<std::string>();
          std::vector<SubgroupClass> classes = census_cached(ambient, target, opts);
          ojson entry;
          entry["target"] = target;
          entry["class_count"] = classes.size();
          ojson witnesses = ojson::array();
          for (const SubgroupClass& cls : classes)
            witnesses.push_back(class_witness(cls));
          entry["classes"] = witnesses;
          censuses.push_back(entry);
          uint64_t expected_count =
              claim.expected.at("class_counts").at(target).get<uint64_t>();
          if (classes.size() != expected_count) matches = false;
        }
        computed["method"] = method;
        computed["censuses"] = censuses;
      } else {
        raise(ErrorCode::UnsupportedConstruction, "census method " + method);
      }
    } else if (claim.kind == "feasibility") {
      std::string ambient = claim.params.at("ambient").get<std::string>();
      PermGroup g = atlas::load_group(ambient, data_dir_);
      const json& spec = claim.params.at("stabilizer");
      PermGroup h = PermGroup::trivial(g.degree());
      if (spec.contains("census_target")) {
        std::string target = spec.at("census_target").get<std::string>();
        std::vector<SubgroupClass> classes = census_cached(ambient, target, opts);
        computed["census_class_count"] = classes.size();
        if (classes.size() != 1)
          raise(ErrorCode::UnsupportedConstruction,
                "feasibility claim expects exactly one census class, found " +
                    std::to_string(classes.size()));
        h = classes.front().representative;
      } else if (spec.contains("point")) {
        h = g.point_stabilizer(spec.at("point").get<uint8_t>());
      } else {
        std::vector<Permutation> gens;
        for (const json& text : spec.at("gens"))
          gens.push_back(
              Permutation::parse_cycles(text.get<std::string>(), g.degree()));
        h = PermGroup(g.degree(), std::move(gens));
      }
      computed["stabilizer"] = {{"order", h.order()},
                                {"iso_label", identify_iso_type(h)},
                                {"generators", group_generator_strings(h)}};
      std::vector<FeasibleElement> survivors = find_feasible_elements(g, h, opts);
      computed["survivor_count"] = survivors.size();
      ojson witnesses = ojson::array();
      for (const FeasibleElement& fe : survivors)
        witnesses.push_back(feasible_witness(fe));
      computed["survivors"] = witnesses;
      matches =
          survivors.size() == claim.expected.at("survivor_count").get<uint64_t>();
    } else if (claim.kind == "parity") {
      unsigned orbit_count = claim.params.at("orbit_count").get<unsigned>();
      ojson parities;
      matches = true;
      for (const json& mj : claim.params.at("orbit_sizes")) {
        unsigned m = mj.get<unsigned>();
        std::string p = to_string(semiregular_parity(m, orbit_count));
        parities[std::to_string(m)] = p;
        if (claim.expected.at("parities").at(std::to_string(m)).get<std::string>() !=
            p)
          matches = false;
      }
      computed["parities"] = parities;
    } else if (claim.kind == "arithmetic") {
      std::string check = claim.params.at("check").get<std::string>();
      computed["check"] = check;
      if (check == "stabilizer-types") {
        bool all_divide = true, all_n7 = true;
        ojson rows = ojson::array();
        for (const std::string& name : atlas::stabilizer_type_names()) {
          PermGroup model = *atlas::try_make_named(name);
          uint64_t order = model.order();
          uint64_t n7 = sylow7_count(model);
          bool divides = 252 % order == 0;
          rows.push_back({{"type", name},
                          {"order", order},
                          {"divides_252", divides},
                          {"n7", n7}});
          all_divide = all_divide && divides;
          all_n7 = all_n7 && n7 == 1;
        }
        computed["types"] = rows;
        computed["all_divide_252"] = all_divide;
        computed["all_n7_one"] = all_n7;
        matches = all_divide == claim.expected.at("all_divide_252").get<bool>() &&
                  all_n7 == claim.expected.at("all_n7_one").get<bool>();
      } else if (check == "table1") {
        bool all_match = true;
        ojson rows = ojson::array();
        for (const json& row : claim.params.at("rows")) {
          std::string t = row.at("group").get<std::string>();
          std::string m = row.at("subgroup").get<std::string>();
          uint64_t index = row.at("index").get<uint64_t>();
          uint64_t to = atlas::order_constant(t);
          uint64_t mo = atlas::order_constant(m);
          bool ok = to % mo == 0 && to / mo == index && 252 % index == 0;
          rows.push_back({{"group", t},
                          {"subgroup", m},
                          {"group_order", to},
                          {"subgroup_order", mo},
                          {"index", index},
                          {"ok", ok}});
          all_match = all_match && ok;
        }
        ojson family = ojson::array();
        for (const json& nj : claim.params.at("alternating_family")) {
          unsigned n = nj.get<unsigned>();
          uint64_t to = factorial(n) / 2;
          uint64_t mo = factorial(n - 1) / 2;
          bool ok = to % mo == 0 && to / mo == n && 252 % n == 0;
          family.push_back({{"n", n}, {"ok", ok}});
          all_match = all_match && ok;
        }
        computed["rows"] = rows;
        computed["alternating_family"] = family;
        computed["all_match"] = all_match;
        matches = all_match == claim.expected.at("all_match").get<bool>();
      } else if (check == "prime-support") {
        std::vector<uint64_t> primes;
        for (const json& pj : claim.params.at("primes"))
          primes.push_back(pj.get<uint64_t>());
        bool all_supported = true;
        ojson rows = ojson::array();
        for (const json& gj : claim.params.at("groups")) {
          std::string name = gj.get<std::string>();
          PermGroup g = atlas::load_group(name, data_dir_);
          uint64_t order = g.order();
          bool supported = true;
          for (auto [p, e] : factorize(order))
            if (std::find(primes.begin(), primes.end(), p) == primes.end())
              supported = false;
          rows.push_back({{"group", name},
                          {"order", order},
                          {"factorization", factor_string(order)},
                          {"prime_support_ok", supported}});
          all_supported = all_supported && supported;
        }
        computed["groups"] = rows;
        computed["all_supported"] = all_supported;
        matches =
            all_supported == claim.expected.at("all_supported").get<bool>();
      } else if (check == "corollary-divisors") {
        std::vector<unsigned> candidates{7};
        for (unsigned n = 14; n <= 252; ++n)
          if (252 % n == 0) candidates.push_back(n);
        std::vector<unsigned> arc;
        for (unsigned n : candidates)
          if (36 % n == 0) arc.push_back(n);
        std::vector<uint64_t> stab_orders;
        for (const std::string& name : atlas::stabilizer_type_names())
          stab_orders.push_back(atlas::try_make_named(name)->order());
        std::vector<unsigned> removed_sizes;
        for (const json& mj : claim.params.at("parity_removed_orbit_sizes"))
          removed_sizes.push_back(mj.get<unsigned>());
        std::vector<unsigned> regular, removed;
        for (unsigned n : candidates) {
          if (std::find(stab_orders.begin(), stab_orders.end(), n) ==
              stab_orders.end())
            continue;
          unsigned m = n / 7;
          bool remove = std::find(removed_sizes.begin(), removed_sizes.end(),
                                  m) != removed_sizes.end() &&
                        semiregular_parity(m, 7) == Parity::odd;
          if (remove)
            removed.push_back(n);
          else
            regular.push_back(n);
        }
        computed["candidates"] = candidates;
        computed["candidate_count"] = candidates.size();
        computed["arc"] = arc;
        computed["regular"] = regular;
        computed["removed_by_parity"] = removed;
        matches =
            candidates.size() ==
                claim.expected.at("candidate_count").get<size_t>() &&
            arc == claim.expected.at("arc").get<std::vector<unsigned>>() &&
            regular == claim.expected.at("regular").get<std::vector<unsigned>>();
      } else {
        raise(ErrorCode::UnsupportedConstruction, "arithmetic check " + check);
      }
    } else if (claim.kind == "graph-property") {
      std::string name = claim.params.at("group").get<std::string>();
      PermGroup g = atlas::load_group(name, data_dir_);
      const json& spec = claim.params.at("stabilizer");
      PermGroup h = spec.contains("point")
                        ? g.point_stabilizer(spec.at("point").get<uint8_t>())
                        : PermGroup::trivial(g.degree());
      computed["stabilizer"] = {{"order", h.order()},
                                {"iso_label", identify_iso_type(h)}};
      std::vector<FeasibleElement> survivors = find_feasible_elements(g, h, opts);
      computed["survivor_count"] = survivors.size();
      bool ok = !survivors.empty();
      if (ok) {
        const Permutation& t = survivors.front().element;
        CosetGraph cg = build_coset_graph(g, h, t, name);
        bool connected = is_connected(cg);
        unsigned val = valency(cg);
        uint64_t arcs = arc_orbit_count(cg, g);
        bool complete = val + 1 == cg.vertex_count;
        computed["element"] = to_cycle_string(t);
        computed["vertex_count"] = cg.vertex_count;
        computed["valency"] = val;
        computed["connected"] = connected;
        computed["arc_orbits"] = arcs;
        computed["complete"] = complete;
        matches = claim.expected.at("survivors_nonempty").get<bool>() &&
                  cg.vertex_count ==
                      claim.expected.at("vertex_count").get<uint32_t>() &&
                  val == claim.expected.at("valency").get<unsigned>() &&
                  connected == claim.expected.at("connected").get<bool>() &&
                  arcs == claim.expected.at("arc_orbits").get<uint64_t>() &&
                  complete == claim.expected.at("complete").get<bool>();
      } else {
        matches = !claim.expected.at("survivors_nonempty").get<bool>();
      }
    } else {
      raise(ErrorCode::UnsupportedConstruction, "claim kind " + claim.kind);
    }

    body["computed"] = computed;
    if (matches) {
      report.status = claim.discrepancy_note.empty() ? "PASS" : "DISCREPANCY-NOTED";
      if (!claim.discrepancy_note.empty())
        body["discrepancy_note"] = claim.discrepancy_note;
    } else {
      report.status = "FAIL";
    }
  } catch (const Error& e) {
    report.status = skip_status(e);
    body["error"] = e.what();
  }
  body["status"] = report.status;
  report.body = std::move(body);
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::string report_body_text(const ClaimReport& report) {
  return report.body.dump(2) + "\n";
}

std::string report_to_json_text(const ClaimReport& report) {
  ojson j = report.body;
  j["wall_ms"] = report.wall_ms;
  return j.dump(2) + "\n";
}

std::string suite_to_json_text(const std::vector<ClaimReport>& reports) {
  ojson j;
  j["schema_version"] = 1;
  ojson list = ojson::array();
  for (const ClaimReport& r : reports) {
    ojson entry = r.body;
    entry["wall_ms"] = r.wall_ms;
    list.push_back(entry);
  }
  j["reports"] = list;
  j["failures"] = std::count_if(reports.begin(), reports.end(),
                                [](const ClaimReport& r) { return r.failed(); });
  return j.dump(2) + "\n";
}

bool revalidate_report(const ClaimReport& report, const std::string& data_dir) {
  const ojson& body = report.body;
  std::string kind = body.value("kind", "");
  if (body.contains("error")) return true;  // skipped claims carry no witnesses
  try {
    if (kind == "subgroup-census") {
      std::string ambient = body.at("params").at("ambient").get<std::string>();
      PermGroup g = atlas::load_group(ambient, data_dir);
      auto check_class = [&](const ojson& w) {
        unsigned degree = w.at("degree").get<unsigned>();
        std::vector<Permutation> gens;
        for (const auto& text : w.at("generators"))
          gens.push_back(
              Permutation::parse_cycles(text.get<std::string>(), degree));
        PermGroup rep(degree, gens);
        if (rep.order() != w.at("order").get<uint64_t>()) return false;
        for (const Permutation& p : gens)
          if (!g.contains(p)) return false;
        if (g.order() % rep.order() != 0) return false;  // Lagrange
        if (w.at("class_size").get<uint64_t>() *
                w.at("normalizer_order").get<uint64_t>() !=
            g.order())
          return false;
        if (rep.order() <= 252 &&
            identify_iso_type(rep) != w.at("iso_label").get<std::string>())
          return false;
        return true;
      };
      const ojson& computed = body.at("computed");
      if (computed.contains("classes")) {
        for (const ojson& w : computed.at("classes"))
          if (!check_class(w)) return false;
      }
      if (computed.contains("censuses")) {
        for (const ojson& entry : computed.at("censuses"))
          for (const ojson& w : entry.at("classes"))
            if (!check_class(w)) return false;
      }
      return true;
    }
    if (kind == "graph-property") {
      std::string ambient = body.at("params").at("group").get<std::string>();
      PermGroup g = atlas::load_group(ambient, data_dir);
      const ojson& computed = body.at("computed");
      if (!computed.contains("element")) return true;  // no witness graph
      const ojson& spec = body.at("params").at("stabilizer");
      PermGroup h = spec.contains("point")
                        ? g.point_stabilizer(spec.at("point").get<uint8_t>())
                        : PermGroup::trivial(g.degree());
      Permutation t = Permutation::parse_cycles(
          computed.at("element").get<std::string>(), g.degree());
      CosetGraph cg = build_coset_graph(g, h, t, ambient);
      if (cg.vertex_count != computed.at("vertex_count").get<uint32_t>())
        return false;
      if (valency(cg) != computed.at("valency").get<unsigned>()) return false;
      if (is_connected(cg) != computed.at("connected").get<bool>()) return false;
      if (arc_orbit_count(cg, g) != computed.at("arc_orbits").get<uint64_t>())
        return false;
      return true;
    }
    if (kind == "feasibility") {
      std::string ambient = body.at("params").at("ambient").get<std::string>();
      PermGroup g = atlas::load_group(ambient, data_dir);
      const ojson& computed = body.at("computed");
      if (!computed.contains("survivors")) return true;
      const ojson& stab = computed.at("stabilizer");
      std::vector<Permutation> h_gens;
      for (const auto& text : stab.at("generators"))
        h_gens.push_back(
            Permutation::parse_cycles(text.get<std::string>(), g.degree()));
      PermGroup h(g.degree(), h_gens);
      PermSet h_set(g.degree(), all_elements(h));
      for (const ojson& w : computed.at("survivors")) {
        Permutation t = Permutation::parse_cycles(
            w.at("element").get<std::string>(), g.degree());
        if (!is_two_element(t)) return false;
        if (!h_set.contains(compose(t, t).images())) return false;
        Permutation t_inv = inverse(t);
        uint64_t intersection = 0;
        std::vector<Permutation> members;
        for (uint64_t i = 0; i < h_set.size(); ++i) {
          auto span = h_set.at(i);
          Permutation e = Permutation::from_images(
              std::vector<uint8_t>(span.begin(), span.end()));
          if (h_set.contains(compose(compose(t, e), t_inv).images())) {
            ++intersection;
            members.push_back(e);
          }
        }
        if (intersection * 7 != h.order()) return false;
        PermSet l_set(g.degree(), members);
        for (const Permutation& e : members)
          if (!l_set.contains(conjugate(e, t).images())) return false;
        std::vector<Permutation> joint = h_gens;
        joint.push_back(t);
        if (PermGroup(g.degree(), joint).order() != g.order()) return false;
      }
      return true;
    }
    // Arithmetic and parity claims carry no reusable witnesses; their
    // computed sections are re-derived by the claim runner itself.
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace symgraph
