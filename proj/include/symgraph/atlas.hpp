#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symgraph/perm_group.hpp"

namespace symgraph::atlas {

struct GroupSpec {
  std::string name;
  unsigned degree = 0;
  std::vector<std::string> generators;  // cycle notation, 1-based
  std::optional<uint64_t> expected_order;
  std::string source_note;
  std::string provenance;  // "constructed" or "data-file"
};

PermGroup make_cyclic(unsigned n);
// Dihedral group of ORDER 2n on n points. D_7 here has order 14; the
// other naming convention exists, so this is stated wherever it matters.
PermGroup make_dihedral(unsigned n);
// Frobenius groups of order 21 = Z_7:Z_3 and 42 = Z_7:Z_6, faithful on
// 7 points via i -> 2i (cube residue) resp. i -> 3i (primitive root).
PermGroup make_frobenius(unsigned n);
PermGroup make_alternating(unsigned n);
PermGroup make_symmetric(unsigned n);
// Acts on the disjoint union of the two point sets.
PermGroup make_direct_product(const PermGroup& a, const PermGroup& b);

// The nine solvable point-stabilizer types of a connected heptavalent
// arc-transitive graph, in order of increasing order:
// 7, 14, 21, 28, 42, 63, 84, 126, 252.
const std::vector<std::string>& stabilizer_type_names();

// Parses constructor names: "Z_7", "D_7", "F_21", "F_42", "A_12", "S_7",
// and 'x'-joined direct products such as "F_42xZ_2".
std::optional<PermGroup> try_make_named(const std::string& name);

std::string default_data_dir();

// Resolves constructor names first, then shipped data files.
// A data file whose built order differs from expected_order is refused.
PermGroup load_group(const std::string& name, const std::string& data_dir = "");
GroupSpec load_spec(const std::string& name, const std::string& data_dir = "");

std::vector<GroupSpec> list_available(const std::string& data_dir = "");

GroupSpec spec_from_json_text(const std::string& text);
std::string spec_to_json_text(const GroupSpec& spec);
PermGroup build_from_spec(const GroupSpec& spec);

// Order constants for index arithmetic over the primitive-group table;
// only the four data-file groups above ship generators.
struct OrderConstant {
  std::string name;
  uint64_t order;
};
const std::vector<OrderConstant>& order_constants();
uint64_t order_constant(const std::string& name);

}  // namespace symgraph::atlas
