#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "symgraph/atlas.hpp"
#include "symgraph/claims.hpp"
#include "symgraph/coset_graph.hpp"
#include "symgraph/subgroup_search.hpp"

namespace {

using namespace symgraph;

PermGroup resolve_stabilizer(const PermGroup& g, const std::string& spec) {
  if (spec.rfind("point:", 0) == 0) {
    unsigned point = static_cast<unsigned>(std::stoul(spec.substr(6)));
    return g.point_stabilizer(static_cast<uint8_t>(point));
  }
  if (spec.rfind("gens:", 0) == 0) {
    std::vector<Permutation> gens;
    std::string rest = spec.substr(5);
    size_t start = 0;
    while (start < rest.size()) {
      size_t semi = rest.find(';', start);
      std::string part = rest.substr(
          start, semi == std::string::npos ? std::string::npos : semi - start);
      if (!part.empty())
        gens.push_back(Permutation::parse_cycles(part, g.degree()));
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    return PermGroup(g.degree(), std::move(gens));
  }
  raise(ErrorCode::ParseError,
        "stabilizer spec must be point:<k> or gens:<cycles;cycles;...>");
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
}

int run_verify(const std::string& data_dir, const std::string& claim_id,
               const std::string& filter, bool parallel,
               const std::string& json_path) {
  ClaimRunner runner(load_default_manifest(data_dir), data_dir);
  std::vector<ClaimReport> reports;
  if (!claim_id.empty()) {
    reports.push_back(runner.run(claim_id));
  } else {
    reports = runner.run_suite(filter, parallel);
  }
  for (const ClaimReport& r : reports)
    std::cout << r.status << "  " << r.id << "  ("
              << static_cast<long>(r.wall_ms) << " ms)\n";
  if (!json_path.empty()) write_or_print(json_path, suite_to_json_text(reports));
  return ClaimRunner::suite_passed(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation-group and coset-graph verification engine"};
  app.require_subcommand(1);
  std::string data_dir;
  app.add_option("--data-dir", data_dir,
                 "data directory (default: SYMGRAPH_DATA or built-in)");

  // verify run <id> | verify suite [--filter GLOB] [--parallel] [--json PATH]
  CLI::App* verify = app.add_subcommand("verify", "run claims from the manifest");
  verify->require_subcommand(1);
  CLI::App* verify_run = verify->add_subcommand("run", "run one claim by id");
  std::string claim_id;
  verify_run->add_option("id", claim_id, "claim id")->required();
  CLI::App* verify_suite = verify->add_subcommand("suite", "run the claim suite");
  std::string filter, json_path;
  bool parallel = false;
  verify_suite->add_option("--filter", filter, "glob over claim ids");
  verify_suite->add_flag("--parallel", parallel, "run independent claims concurrently");
  verify_suite->add_option("--json", json_path, "write the full report JSON here");

  CLI::App* atlas_cmd = app.add_subcommand("atlas", "inspect shipped groups");
  atlas_cmd->require_subcommand(1);
  atlas_cmd->add_subcommand("list", "list constructors and data files");
  CLI::App* atlas_show = atlas_cmd->add_subcommand("show", "show one group");
  std::string group_name;
  atlas_show->add_option("name", group_name, "group name")->required();

  CLI::App* coset = app.add_subcommand("coset-graph", "build a coset graph");
  std::string cg_group, cg_stab, cg_element, cg_out, cg_format = "edges";
  coset->add_option("--group", cg_group)->required();
  coset->add_option("--stabilizer", cg_stab, "point:<k> or gens:<cycles;...>")
      ->required();
  coset->add_option("--element", cg_element, "cycle notation")->required();
  coset->add_option("--out", cg_out, "output path (default stdout)");
  coset->add_option("--format", cg_format, "edges or json");

  CLI::App* feas = app.add_subcommand("feasible-search",
                                      "search 2-elements giving 7-valent coset graphs");
  std::string fs_group, fs_stab;
  feas->add_option("--group", fs_group)->required();
  feas->add_option("--stabilizer", fs_stab, "point:<k> or gens:<cycles;...>")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      if (verify_run->parsed())
        return run_verify(data_dir, claim_id, "", false, "");
      return run_verify(data_dir, "", filter, parallel, json_path);
    }
    if (atlas_cmd->parsed()) {
      if (atlas_show->parsed()) {
        PermGroup g = atlas::load_group(group_name, data_dir);
        std::cout << "name:   " << group_name << "\n"
                  << "degree: " << g.degree() << "\n"
                  << "order:  " << g.order() << "\n";
        for (const Permutation& p : g.generators())
          std::cout << "gen:    " << to_cycle_string(p) << "\n";
        return 0;
      }
      for (const atlas::GroupSpec& spec : atlas::list_available(data_dir))
        std::cout << spec.name << "  degree=" << spec.degree << "  order="
                  << (spec.expected_order ? std::to_string(*spec.expected_order)
                                          : "?")
                  << "  [" << spec.provenance << "]\n";
      std::cout << "order constants for index arithmetic:\n";
      for (const atlas::OrderConstant& c : atlas::order_constants())
        std::cout << "  " << c.name << " = " << c.order << "\n";
      return 0;
    }
    if (coset->parsed()) {
      PermGroup g = atlas::load_group(cg_group, data_dir);
      PermGroup h = resolve_stabilizer(g, cg_stab);
      Permutation t = Permutation::parse_cycles(cg_element, g.degree());
      CosetGraph cg = build_coset_graph(g, h, t, cg_group);
      std::cerr << "vertices: " << cg.vertex_count
                << "  valency: " << valency(cg)
                << "  connected: " << (is_connected(cg) ? "yes" : "no") << "\n";
      write_or_print(cg_out,
                     cg_format == "json" ? graph_to_json(cg) : graph_to_edge_list(cg));
      return 0;
    }
    if (feas->parsed()) {
      PermGroup g = atlas::load_group(fs_group, data_dir);
      PermGroup h = resolve_stabilizer(g, fs_stab);
      std::cout << "stabilizer order " << h.order() << ", type "
                << identify_iso_type(h) << "\n";
      std::vector<FeasibleElement> survivors = find_feasible_elements(g, h);
      std::cout << survivors.size() << " feasible element(s)\n";
      for (const FeasibleElement& fe : survivors)
        std::cout << "  " << to_cycle_string(fe.element) << "  (order "
                  << element_order(fe.element) << ")\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
