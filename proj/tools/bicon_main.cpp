// Command-line front end: catalog generation, property verification and
// virial coefficient estimation.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bicon/catalog_io.hpp"
#include "bicon/error.hpp"
#include "bicon/generator.hpp"
#include "bicon/verify.hpp"
#include "bicon/virial.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kInvariant = 3,
  kIo = 4,
};

struct GenerateArgs {
  int n = 0;
  std::string out;
  std::string format = "g6";
  int jobs = 1;
};

struct VerifyArgs {
  int n = 0;
  int jobs = 1;
};

struct VirialArgs {
  int order = 0;
  std::string potential = "hs";
  double sigma = 1.0;
  double epsilon = 1.0;
  double tstar = 1.0;
  double samples = 1e6;
  std::uint64_t seed = 1;
  std::string out;
  int jobs = 1;
};

int run_generate(const GenerateArgs& args) {
  if (args.n < 2 || args.n > bicon::kMaxCatalogOrder) {
    std::cerr << "error: --n must be in [2, " << bicon::kMaxCatalogOrder << "]\n";
    return kUsage;
  }
  const bicon::Catalog cat = bicon::generate(args.n, args.jobs);
  if (!args.out.empty()) {
    const auto format = args.format == "g6" ? bicon::CatalogFormat::Graph6 : bicon::CatalogFormat::JsonLines;
    for (const auto& path : bicon::write_catalog(cat, args.out, format)) std::cerr << "wrote " << path.string() << '\n';
  }
  std::cout << cat.size() << '\n';
  return kOk;
}

int run_verify(const VerifyArgs& args) {
  if (args.n < 2 || args.n > 8) {
    std::cerr << "error: --n must be in [2, 8]\n";
    return kUsage;
  }
  bool all = true;
  for (const bicon::CheckResult& r : bicon::run_verification(args.n, args.jobs)) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  std::cout << (all ? "all checks passed" : "some checks failed") << '\n';
  return all ? kOk : kCheckFailed;
}

int run_virial(const VirialArgs& args) {
  if (args.order < 2 || args.order > 6) {
    std::cerr << "error: --order must be in [2, 6]\n";
    return kUsage;
  }
  if (!(args.samples >= 1.0) || args.samples != std::floor(args.samples) || args.samples > 1e15) {
    std::cerr << "error: --samples must be a positive integer\n";
    return kUsage;
  }
  bicon::PotentialSpec p;
  p.kind = args.potential == "hs" ? bicon::PotentialKind::HardSphere : bicon::PotentialKind::LennardJones;
  p.sigma = args.sigma;
  p.epsilon = args.epsilon;
  p.reduced_temperature = args.tstar;
  p.validate();

  const auto samples = static_cast<std::uint64_t>(args.samples);
  const bicon::Catalog cat = bicon::generate(args.order, args.jobs);
  const bicon::VirialResult result = bicon::virial_coefficient(args.order, p, samples, args.seed, cat, args.jobs);
  const std::string report = bicon::format_virial_report(result, p, samples, args.seed);
  if (args.out.empty()) {
    std::cout << report;
  } else {
    std::ofstream f(args.out, std::ios::binary);
    if (!f || !(f << report)) throw bicon::IoError("cannot write " + args.out);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inductive generation of 2-connected graphs and virial cluster integrals"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Build the catalog of 2-connected graphs on n vertices");
  generate->add_option("--n", gen.n, "Vertex count (2..10)")->required();
  generate->add_option("--out", gen.out, "Output path; omit to print the count only");
  generate->add_option("--format", gen.format, "Output format")->check(CLI::IsMember({"g6", "json-lines"}));
  generate->add_option("--jobs", gen.jobs, "Worker threads")->check(CLI::PositiveNumber);

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run the structural property suite at n");
  verify->add_option("--n", ver.n, "Vertex count (2..8; oracle checks up to 7)")->required();
  verify->add_option("--jobs", ver.jobs, "Worker threads")->check(CLI::PositiveNumber);

  VirialArgs vir;
  auto* virial = app.add_subcommand("virial", "Estimate a virial coefficient by Monte Carlo");
  virial->add_option("--order", vir.order, "Coefficient order (2..6)")->required();
  virial->add_option("--potential", vir.potential, "Pair potential")->check(CLI::IsMember({"hs", "lj"}));
  virial->add_option("--sigma", vir.sigma, "Length scale");
  virial->add_option("--epsilon", vir.epsilon, "Lennard-Jones well depth");
  virial->add_option("--tstar", vir.tstar, "Reduced temperature kT/epsilon");
  virial->add_option("--samples", vir.samples, "Samples per graph class (e.g. 1e6)");
  virial->add_option("--seed", vir.seed, "RNG seed");
  virial->add_option("--out", vir.out, "Write the report here instead of stdout");
  virial->add_option("--jobs", vir.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*verify) return run_verify(ver);
    if (*virial) return run_virial(vir);
  } catch (const bicon::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const bicon::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const bicon::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
