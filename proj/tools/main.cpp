// Command-line entry point. Subcommands:
//   certify      --input <polytope.json>
//   enumerate    --dim D --max-vol V [--jobs J]
//   verify-lemma --dim D --max-vol V
//   decompose    --vol V
//   probe        --family F --params a,b,c,d --targets N --seed S
//
// Exit codes: 0 = verdict computed (including FAIL verdicts), 1 = invalid
// input (unknown flags, malformed JSON, float vertices, dimension limits,
// unreadable files — each with its own message on stderr), 2 = property
// violation (non-empty lemma counterexample list or a failed internal
// assertion). All regular output is JSON on stdout; --jobs never changes
// the bytes produced.

#include "latgauss/json_io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_certify(const std::string& input_path) {
  const auto vertices = latgauss::parse_vertices_json(read_file(input_path));
  const auto polytope = latgauss::LatticePolytope::build(vertices);
  const auto report = latgauss::certify(polytope);
  std::cout << latgauss::certificate_to_json(report, polytope) << '\n';
  return 0;
}

int run_enumerate(int dim, long long max_vol, unsigned jobs) {
  const latgauss::EnumerateOptions opts{dim, latgauss::Int(max_vol), jobs};
  for (const auto& c : latgauss::enumerate_simplices(opts))
    std::cout << latgauss::simplex_class_to_json(c) << '\n';
  return 0;
}

int run_verify_lemma(int dim, long long max_vol) {
  const latgauss::EnumerateOptions opts{dim, latgauss::Int(max_vol)};
  const auto result = latgauss::verify_lemma(opts);
  std::cout << latgauss::lemma_result_to_json(result, opts) << '\n';
  return result.counterexamples.empty() ? 0 : 2;
}

int run_decompose(long long vol) {
  const latgauss::Int v(vol);
  std::cout << latgauss::decompositions_to_json(v, latgauss::topology_decompositions(v))
            << '\n';
  return 0;
}

int run_probe(const std::string& family, const std::vector<double>& params,
              std::size_t targets, std::uint64_t seed) {
  if (params.size() != 4)
    throw std::invalid_argument("--params must be exactly four comma-separated numbers a,b,c,d");
  const auto report =
      latgauss::real_fibered_verdict(latgauss::family_from_name(family), params, targets, seed);
  std::cout << latgauss::probe_report_to_json(report) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-polytope certification and logarithmic Gauss map probe"};
  app.require_subcommand(1);

  std::string input_path;
  auto* certify = app.add_subcommand("certify", "Certify a polytope from a JSON vertex list");
  certify->add_option("--input", input_path, "Polytope JSON file")->required();

  int dim = 0;
  long long max_vol = 0;
  unsigned jobs = 0;
  auto* enumerate =
      app.add_subcommand("enumerate", "Enumerate simplex classes up to unimodular equivalence");
  enumerate->add_option("--dim", dim, "Ambient dimension")->required();
  enumerate->add_option("--max-vol", max_vol, "Largest normalized volume")->required();
  enumerate->add_option("--jobs", jobs, "Worker threads (0 = hardware)");

  int lemma_dim = 0;
  long long lemma_max_vol = 0;
  auto* verify_lemma = app.add_subcommand(
      "verify-lemma", "Search enumerated classes for volume > 1 counterexamples");
  verify_lemma->add_option("--dim", lemma_dim, "Ambient dimension")->required();
  verify_lemma->add_option("--max-vol", lemma_max_vol, "Largest normalized volume")->required();

  long long vol = 0;
  auto* decompose = app.add_subcommand("decompose", "List (k, l) pairs with 2k + l = vol");
  decompose->add_option("--vol", vol, "Total degree to decompose")->required();

  std::string family;
  std::vector<double> params;
  std::size_t targets = 0;
  std::uint64_t seed = 0;
  auto* probe =
      app.add_subcommand("probe", "Sample fibers of the logarithmic Gauss map over real targets");
  probe->add_option("--family", family, "hyperplane or example19")->required();
  probe->add_option("--params", params, "Coefficients a,b,c,d")->delimiter(',')->required();
  probe->add_option("--targets", targets, "Number of sampled targets")->required();
  probe->add_option("--seed", seed, "Random seed")->required();

  try {
    app.parse(argc, argv);
    if (certify->parsed()) return run_certify(input_path);
    if (enumerate->parsed()) return run_enumerate(dim, max_vol, jobs);
    if (verify_lemma->parsed()) return run_verify_lemma(lemma_dim, lemma_max_vol);
    if (decompose->parsed()) return run_decompose(vol);
    if (probe->parsed()) return run_probe(family, params, targets, seed);
    std::cerr << "error: no subcommand selected\n";
    return 1;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal property violation: " << e.what() << '\n';
    return 2;
  }
}
