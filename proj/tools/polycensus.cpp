#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polycensus/census.hpp"
#include "polycensus/generators.hpp"
#include "polycensus/oracle.hpp"
#include "polycensus/planar_code.hpp"
#include "polycensus/reduction.hpp"

namespace {

using namespace polycensus;
using nlohmann::ordered_json;

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw Error(Errc::bad_input, "cannot open output file " + path);
  return file;
}

std::vector<Embedding> load_graphs(const std::string& path, bool use_stdin) {
  if (use_stdin) return read_graphs(std::cin);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::bad_input, "cannot open input file " + path);
  return read_graphs(file);
}

ordered_json identity_json(const IdentityReport& report) {
  ordered_json arr = ordered_json::array();
  for (const IdentityCheck& c : report.checks)
    arr.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.passed}});
  return arr;
}

ordered_json sparse_json(const std::map<int, int>& m) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, c] : m) out[std::to_string(k)] = c;
  return out;
}

int cmd_enumerate(int max_vertices, const std::string& format, const std::string& output,
                  int workers, bool force) {
  EnumerationRun run = enumerate_polyhedral(max_vertices, workers, force);
  std::ofstream file;
  std::ostream& out = open_output(output, file);
  if (format == "planar_code") {
    out.write(kPlanarCodeHeader, 15);
    for (int n = 4; n <= run.max_vertices; ++n) {
      const CodeSet& set = run.by_vertices[n];
      for (size_t i = 0; i < set.size(); ++i) {
        auto view = set.at(i);
        out.write(reinterpret_cast<const char*>(view.data()), static_cast<long>(view.size()));
      }
    }
  } else {
    for (int n = 4; n <= run.max_vertices; ++n) {
      const CodeSet& set = run.by_vertices[n];
      for (size_t i = 0; i < set.size(); ++i)
        out << record_json(census_record(set.code_at(i))).dump() << '\n';
    }
  }
  std::cerr << "enumerated " << run.counters.generated << " candidates, "
            << run.counters.duplicates << " duplicates, " << run.counters.wall_seconds
            << "s\n";
  return 0;
}

int cmd_analyze(const std::string& path, bool use_stdin) {
  std::vector<Embedding> graphs = load_graphs(path, use_stdin);
  size_t index = 0;
  for (const Embedding& e : graphs) {
    ordered_json j;
    j["index"] = index++;
    ValidationReport report = validate(e);
    j["valid"] = report.ok();
    if (!report.ok()) {
      ordered_json checks = ordered_json::array();
      for (const CheckResult& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.passed}, {"witness", c.witness}});
      j["checks"] = checks;
      std::cout << j.dump() << '\n';
      continue;
    }
    PolyhedralGraph g = validate_polyhedral(e);
    const GraphProfile& p = g.profile();
    j["code"] = g.code().hex();
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["faces"] = g.face_count();
    j["v_k"] = sparse_json(p.v_k);
    j["f_k"] = sparse_json(p.f_k);
    j["nontri"] = p.nontri;
    j["rigid"] = p.rigid_count;
    j["nonrigid"] = p.nonrigid_count;
    j["totally_triangular"] = p.totally_triangular;
    j["identities"] = identity_json(check_identities(g));
    j["reducible"] = is_reducible(g);
    std::cout << j.dump() << '\n';
  }
  return 0;
}

int cmd_census(int max_vertices, std::optional<int> rigid, bool irreducible,
               const std::string& output, int workers, bool force) {
  EnumerationRun run = enumerate_polyhedral(max_vertices, workers, force);
  CensusFilter filter;
  filter.rigid = rigid;
  filter.irreducible_only = irreducible;
  std::vector<CensusRecord> records = census(run, filter, workers);
  std::ofstream file;
  std::ostream& out = open_output(output, file);
  for (const CensusRecord& r : records) out << record_json(r).dump() << '\n';
  return 0;
}

int cmd_verify(int max_vertices, bool long_checks, int workers, bool force) {
  EnumerationRun run = enumerate_polyhedral(max_vertices, workers, force);
  VerificationReport report = verify(run, long_checks, workers);
  for (const ClaimResult& c : report.claims) {
    const char* tag = c.status == ClaimStatus::passed   ? "PASS"
                      : c.status == ClaimStatus::failed ? "FAIL"
                                                        : "SKIP";
    std::cout << tag << ' ' << c.id;
    if (!c.range.empty()) std::cout << " [" << c.range << "]";
    std::cout << ": " << c.detail << '\n';
    if (c.status == ClaimStatus::failed)
      for (const std::string& w : c.witnesses) std::cout << "  witness " << w << '\n';
  }
  return report.all_passed() ? 0 : 1;
}

ordered_json tree_json(const FactorTree& tree) {
  ordered_json j;
  j["code"] = tree.code.hex();
  j["irreducible"] = tree.irreducible;
  if (!tree.irreducible) {
    j["seam"] = tree.seam;
    ordered_json codes = ordered_json::array();
    for (const FactorTree& child : tree.children) codes.push_back(child.code.hex());
    j["factor_codes"] = codes;
    ordered_json children = ordered_json::array();
    for (const FactorTree& child : tree.children) children.push_back(tree_json(child));
    j["factors"] = children;
  }
  return j;
}

int cmd_decompose(const std::string& path, bool use_stdin) {
  std::vector<Embedding> graphs = load_graphs(path, use_stdin);
  for (const Embedding& e : graphs) {
    PolyhedralGraph g = validate_polyhedral(e);
    std::cout << tree_json(factorize(g)).dump() << '\n';
  }
  return 0;
}

int cmd_generate(const std::string& family, int n, const std::vector<int>& stellations,
                 const std::string& format, const std::string& output) {
  std::unique_ptr<PolyhedralGraph> g;
  if (family == "pyramid")
    g = std::make_unique<PolyhedralGraph>(pyramid(n));
  else if (family == "bipyramid")
    g = std::make_unique<PolyhedralGraph>(bipyramid(n));
  else if (family == "prism-stack")
    g = std::make_unique<PolyhedralGraph>(prism_stack(n));
  else
    throw Error(Errc::bad_input, "unknown family " + family);
  for (int face : stellations) *g = stellate(*g, face);

  std::ofstream file;
  std::ostream& out = open_output(output, file);
  if (format == "ascii")
    out << ascii_line(g->embedding()) << '\n';
  else
    write_planar_code(out, {g->embedding()});
  return 0;
}

int cmd_oracle(int vertices, int workers) {
  CodeSet codes = brute_force_oracle(vertices, workers);
  for (size_t i = 0; i < codes.size(); ++i) std::cout << codes.code_at(i).hex() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polycensus: polyhedral graph census and verification toolkit"};
  app.require_subcommand(1);

  int max_vertices = 9;
  int workers = 0;
  bool force = false;
  std::string format = "planar_code";
  std::string output;
  std::string input;
  bool use_stdin = false;
  std::optional<int> rigid;
  bool irreducible = false;
  bool long_checks = false;
  std::string family;
  int gen_n = 3;
  std::vector<int> stellations;
  int oracle_n = 4;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "enumerate all polyhedral types");
  enumerate_cmd->add_option("--max-vertices", max_vertices, "largest vertex count")->required();
  enumerate_cmd->add_option("--format", format, "planar_code|jsonl")
      ->check(CLI::IsMember({"planar_code", "jsonl"}));
  enumerate_cmd->add_option("--output", output, "write to file instead of stdout");
  enumerate_cmd->add_option("--workers", workers, "worker threads (0 = auto)");
  enumerate_cmd->add_flag("--force", force, "override the soft vertex cap");

  auto* analyze_cmd = app.add_subcommand("analyze", "profile + identities + reducibility");
  analyze_cmd->add_option("--file", input, "input file (planar_code or ascii)");
  analyze_cmd->add_flag("--stdin", use_stdin, "read graphs from stdin");
  analyze_cmd->add_option("--format", format, "input format hint (auto-detected)");

  auto* census_cmd = app.add_subcommand("census", "emit census records as JSONL");
  census_cmd->add_option("--max-vertices", max_vertices, "largest vertex count")->required();
  census_cmd->add_option("--rigid", rigid, "keep types with exactly K rigid vertices");
  census_cmd->add_flag("--irreducible", irreducible, "keep only irreducible types");
  census_cmd->add_option("--output", output, "write to file instead of stdout");
  census_cmd->add_option("--workers", workers, "worker threads (0 = auto)");
  census_cmd->add_flag("--force", force, "override the soft vertex cap");

  auto* verify_cmd = app.add_subcommand("verify", "machine-check the classification claims");
  verify_cmd->add_option("--max-vertices", max_vertices, "largest vertex count")->required();
  verify_cmd->add_flag("--long", long_checks, "include the 8-vertex oracle cross-check");
  verify_cmd->add_option("--workers", workers, "worker threads (0 = auto)");
  verify_cmd->add_flag("--force", force, "override the soft vertex cap");

  auto* decompose_cmd = app.add_subcommand("decompose", "factor trees as JSON");
  decompose_cmd->add_option("--file", input, "input file (planar_code or ascii)");
  decompose_cmd->add_flag("--stdin", use_stdin, "read graphs from stdin");

  auto* generate_cmd = app.add_subcommand("generate", "named constructors");
  generate_cmd->add_option("family", family, "pyramid|bipyramid|prism-stack")->required();
  generate_cmd->add_option("--n", gen_n, "size parameter")->required();
  generate_cmd->add_option("--stellate", stellations, "stellate face index, repeatable");
  generate_cmd->add_option("--format", format, "planar_code|ascii")
      ->check(CLI::IsMember({"planar_code", "ascii"}));
  generate_cmd->add_option("--output", output, "write to file instead of stdout");

  auto* oracle_cmd = app.add_subcommand("oracle", "independent oracle codes");
  oracle_cmd->add_option("--vertices", oracle_n, "vertex count (4..8)")->required();
  oracle_cmd->add_option("--workers", workers, "worker threads (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate_cmd->parsed())
      return cmd_enumerate(max_vertices, format, output, workers, force);
    if (analyze_cmd->parsed()) return cmd_analyze(input, use_stdin);
    if (census_cmd->parsed())
      return cmd_census(max_vertices, rigid, irreducible, output, workers, force);
    if (verify_cmd->parsed()) return cmd_verify(max_vertices, long_checks, workers, force);
    if (decompose_cmd->parsed()) return cmd_decompose(input, use_stdin);
    if (generate_cmd->parsed())
      return cmd_generate(family, gen_n, stellations, format, output);
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_n, workers);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
