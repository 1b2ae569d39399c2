#include "symgraph/atlas.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#ifndef SYMGRAPH_DEFAULT_DATA_DIR
#define SYMGRAPH_DEFAULT_DATA_DIR "data"
#endif

namespace symgraph::atlas {

namespace {

using ordered_json = nlohmann::ordered_json;

Permutation cycle(unsigned degree, const std::string& text) {
  return Permutation::parse_cycles(text, degree);
}

const std::map<std::string, std::string>& data_file_registry() {
  static const std::map<std::string, std::string> registry = {
      {"PSL(2,7)", "psl_2_7.json"},
      {"PSL(2,8)", "psl_2_8.json"},
      {"PSU(3,3)", "psu_3_3.json"},
      {"PSU(4,3)", "psu_4_3.json"},
  };
  return registry;
}

}  // namespace

PermGroup make_cyclic(unsigned n) {
  if (n == 0 || n > kMaxDegree)
    raise(ErrorCode::UnsupportedConstruction, "cyclic group Z_" + std::to_string(n));
  if (n == 1) return PermGroup::trivial(1);
  std::vector<uint8_t> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = static_cast<uint8_t>((i + 1) % n);
  return PermGroup(n, {Permutation::from_images(std::move(images))});
}

PermGroup make_dihedral(unsigned n) {
  if (n < 3 || n > kMaxDegree)
    raise(ErrorCode::UnsupportedConstruction,
          "dihedral group D_" + std::to_string(n));
  std::vector<uint8_t> rot(n), refl(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = static_cast<uint8_t>((i + 1) % n);
    refl[i] = static_cast<uint8_t>((n - i) % n);
  }
  return PermGroup(n, {Permutation::from_images(std::move(rot)),
                       Permutation::from_images(std::move(refl))});
}

PermGroup make_frobenius(unsigned n) {
  unsigned multiplier;
  if (n == 21)
    multiplier = 2;  // order 3 mod 7
  else if (n == 42)
    multiplier = 3;  // order 6 mod 7
  else
    raise(ErrorCode::UnsupportedConstruction,
          "Frobenius group F_" + std::to_string(n) + " (only 21 and 42)");
  std::vector<uint8_t> shift(7), mult(7);
  for (unsigned i = 0; i < 7; ++i) {
    shift[i] = static_cast<uint8_t>((i + 1) % 7);
    mult[i] = static_cast<uint8_t>((i * multiplier) % 7);
  }
  return PermGroup(7, {Permutation::from_images(std::move(shift)),
                       Permutation::from_images(std::move(mult))});
}

PermGroup make_alternating(unsigned n) {
  if (n < 3 || n > kMaxDegree)
    raise(ErrorCode::UnsupportedConstruction,
          "alternating group A_" + std::to_string(n));
  if (n == 3) return PermGroup(3, {cycle(3, "(1 2 3)")});
  std::ostringstream big;
  big << '(';
  // (1 2 ... n) is even only for odd n; for even n use (2 3 ... n).
  for (unsigned i = (n % 2 == 1) ? 1 : 2; i <= n; ++i) {
    if (big.tellp() > 1) big << ' ';
    big << i;
  }
  big << ')';
  return PermGroup(n, {cycle(n, "(1 2 3)"), cycle(n, big.str())});
}

PermGroup make_symmetric(unsigned n) {
  if (n == 0 || n > kMaxDegree)
    raise(ErrorCode::UnsupportedConstruction,
          "symmetric group S_" + std::to_string(n));
  if (n == 1) return PermGroup::trivial(1);
  if (n == 2) return PermGroup(2, {cycle(2, "(1 2)")});
  std::ostringstream big;
  big << '(';
  for (unsigned i = 1; i <= n; ++i) {
    if (i > 1) big << ' ';
    big << i;
  }
  big << ')';
  return PermGroup(n, {cycle(n, "(1 2)"), cycle(n, big.str())});
}

PermGroup make_direct_product(const PermGroup& a, const PermGroup& b) {
  unsigned degree = a.degree() + b.degree();
  if (degree > kMaxDegree)
    raise(ErrorCode::UnsupportedConstruction, "direct product degree too large");
  std::vector<Permutation> gens;
  for (const Permutation& g : a.generators()) {
    std::vector<uint8_t> images(degree);
    for (unsigned i = 0; i < a.degree(); ++i) images[i] = g[i];
    for (unsigned i = a.degree(); i < degree; ++i)
      images[i] = static_cast<uint8_t>(i);
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  for (const Permutation& g : b.generators()) {
    std::vector<uint8_t> images(degree);
    for (unsigned i = 0; i < a.degree(); ++i) images[i] = static_cast<uint8_t>(i);
    for (unsigned i = 0; i < b.degree(); ++i)
      images[a.degree() + i] = static_cast<uint8_t>(a.degree() + g[i]);
    gens.push_back(Permutation::from_images(std::move(images)));
  }
  return PermGroup(degree, std::move(gens));
}

const std::vector<std::string>& stabilizer_type_names() {
  static const std::vector<std::string> names = {
      "Z_7",      "D_7",      "F_21",     "D_7xZ_2",  "F_42",
      "F_21xZ_3", "F_42xZ_2", "F_42xZ_3", "F_42xZ_6",
  };
  return names;
}

std::optional<PermGroup> try_make_named(const std::string& name) {
  // Direct products: tokens joined by 'x'.
  if (size_t pos = name.find('x'); pos != std::string::npos) {
    auto left = try_make_named(name.substr(0, pos));
    auto right = try_make_named(name.substr(pos + 1));
    if (!left || !right) return std::nullopt;
    return make_direct_product(*left, *right);
  }
  auto parse_suffix = [&](const char* prefix) -> std::optional<unsigned> {
    size_t len = std::strlen(prefix);
    if (name.size() <= len || name.compare(0, len, prefix) != 0)
      return std::nullopt;
    unsigned value = 0;
    for (size_t i = len; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
      value = value * 10 + static_cast<unsigned>(name[i] - '0');
      if (value > 100000) return std::nullopt;
    }
    return value;
  };
  try {
    if (auto n = parse_suffix("Z_")) return make_cyclic(*n);
    if (auto n = parse_suffix("D_")) return make_dihedral(*n);
    if (auto n = parse_suffix("F_")) return make_frobenius(*n);
    if (auto n = parse_suffix("A_")) return make_alternating(*n);
    if (auto n = parse_suffix("S_")) return make_symmetric(*n);
  } catch (const Error&) {
    return std::nullopt;
  }
  return std::nullopt;
}

std::string default_data_dir() {
  if (const char* env = std::getenv("SYMGRAPH_DATA")) return env;
  return SYMGRAPH_DEFAULT_DATA_DIR;
}

GroupSpec spec_from_json_text(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    raise(ErrorCode::ParseError, std::string("group file: ") + e.what());
  }
  GroupSpec spec;
  try {
    spec.name = j.at("name").get<std::string>();
    spec.degree = j.at("degree").get<unsigned>();
    spec.generators = j.at("generators").get<std::vector<std::string>>();
    if (j.contains("expected_order"))
      spec.expected_order = j.at("expected_order").get<uint64_t>();
    if (j.contains("source_note"))
      spec.source_note = j.at("source_note").get<std::string>();
  } catch (const std::exception& e) {
    raise(ErrorCode::ParseError, std::string("group file fields: ") + e.what());
  }
  spec.provenance = "data-file";
  return spec;
}

std::string spec_to_json_text(const GroupSpec& spec) {
  ordered_json j;
  j["name"] = spec.name;
  j["degree"] = spec.degree;
  j["generators"] = spec.generators;
  if (spec.expected_order) j["expected_order"] = *spec.expected_order;
  j["source_note"] = spec.source_note;
  return j.dump(2) + "\n";
}

PermGroup build_from_spec(const GroupSpec& spec) {
  std::vector<Permutation> gens;
  for (const std::string& text : spec.generators)
    gens.push_back(cycle(spec.degree, text));
  PermGroup group(spec.degree, std::move(gens));
  if (spec.expected_order && group.order() != *spec.expected_order)
    raise(ErrorCode::OrderMismatch,
          spec.name + ": built order " + std::to_string(group.order()) +
              " but file expects " + std::to_string(*spec.expected_order));
  return group;
}

GroupSpec load_spec(const std::string& name, const std::string& data_dir) {
  auto it = data_file_registry().find(name);
  if (it == data_file_registry().end())
    raise(ErrorCode::UnknownGroup, name);
  std::filesystem::path dir = data_dir.empty() ? default_data_dir() : data_dir;
  std::filesystem::path file = dir / "atlas" / it->second;
  std::ifstream in(file);
  if (!in)
    raise(ErrorCode::UnknownGroup,
          name + " (missing data file " + file.string() + ")");
  std::ostringstream text;
  text << in.rdbuf();
  return spec_from_json_text(text.str());
}

PermGroup load_group(const std::string& name, const std::string& data_dir) {
  if (auto made = try_make_named(name)) return *made;
  return build_from_spec(load_spec(name, data_dir));
}

std::vector<GroupSpec> list_available(const std::string& data_dir) {
  std::vector<GroupSpec> result;
  for (const std::string& name : stabilizer_type_names()) {
    PermGroup g = *try_make_named(name);
    GroupSpec spec;
    spec.name = name;
    spec.degree = g.degree();
    for (const Permutation& p : g.generators())
      spec.generators.push_back(to_cycle_string(p));
    spec.expected_order = g.order();
    spec.provenance = "constructed";
    result.push_back(std::move(spec));
  }
  for (const auto& [name, file] : data_file_registry()) {
    try {
      result.push_back(load_spec(name, data_dir));
    } catch (const Error&) {
      // listed groups whose data file is unavailable are skipped
    }
  }
  return result;
}

const std::vector<OrderConstant>& order_constants() {
  static const std::vector<OrderConstant> constants = {
      {"A_7", 2520},
      {"A_8", 20160},
      {"A_9", 181440},
      {"A_12", 239500800},
      {"S_5", 120},
      {"S_6", 720},
      {"S_7", 5040},
      {"S_8", 40320},
      {"(A_4xA_5):Z_2", 1440},
      {"(A_6xZ_3):Z_2", 2160},
      {"PSL(2,7)", 168},
      {"PSL(2,8)", 504},
      {"PSL(2,11)", 660},
      {"PSL(3,4)", 20160},
      {"PSU(3,3)", 6048},
      {"PSU(4,2)", 25920},
      {"PSU(4,2):Z_2", 51840},
      {"PSU(4,3)", 3265920},
      {"PSp(6,2)", 1451520},
      {"Z_2^5:S_6", 23040},
      {"Z_2^4:A_5", 960},
      {"M_11", 7920},
      {"M_12", 95040},
  };
  return constants;
}

uint64_t order_constant(const std::string& name) {
  for (const OrderConstant& c : order_constants())
    if (c.name == name) return c.order;
  raise(ErrorCode::UnknownGroup, "no order constant for " + name);
}

}  // namespace symgraph::atlas
