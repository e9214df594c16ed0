// Command-line laboratory front-end: distances between surface files,
// derivative verification, the pinching/twisting experiments, and JSON IO.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hyperlab/errors.hpp"
#include "hyperlab/experiments.hpp"
#include "hyperlab/holonomy.hpp"
#include "hyperlab/metrics.hpp"
#include "hyperlab/surface.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitDegeneracy = 3;
constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hyperlab::validation_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

hyperlab::surface::FNPoint load_point(const std::string& path) {
  return hyperlab::surface::fn_point_from_json(read_file(path));
}

// Relative --out paths resolve against HYPERLAB_OUT_DIR when set.
std::string resolve_out(const std::string& path) {
  const char* dir = std::getenv("HYPERLAB_OUT_DIR");
  if (!dir || path.empty() || path.front() == '/') return path;
  std::string d(dir);
  if (!d.empty() && d.back() != '/') d += '/';
  return d + path;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  const std::string resolved = resolve_out(out_path);
  std::ofstream out(resolved, std::ios::binary);
  if (!out) throw hyperlab::validation_error("cannot write file: " + resolved);
  out << text;
}

void print_bound(const hyperlab::CertifiedBound& b) {
  std::cout << hyperlab::experiments::format_double(b.value) << "\n";
  std::cout << "# kind = " << hyperlab::kind_name(b.kind) << "\n";
  std::cout << "# source = " << b.source << "\n";
  if (b.kind != hyperlab::BoundKind::Exact)
    std::cout << "# budget = " << b.budget << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for hyperbolic surfaces in "
               "Fenchel-Nielsen coordinates"};
  app.require_subcommand(1);

  std::string file_a, file_b, file_in, out_path, preset = "genus-2";
  int budget = 2, samples = 200, kmin = 3, kmax = 20;
  double twist_t = 1.0, epsilon = 0.3, radius = 1.0;
  std::optional<double> epsilon0;
  unsigned seed = 42;

  // dist {fn|ls|arc}
  auto* dist = app.add_subcommand("dist", "distance between two surface files");
  dist->require_subcommand(1);
  for (const char* which : {"fn", "ls", "arc"}) {
    auto* sub = dist->add_subcommand(
        which, std::string("certified ") + which + " distance");
    sub->add_option("--a", file_a, "first surface JSON")->required();
    sub->add_option("--b", file_b, "second surface JSON")->required();
    if (std::string(which) != "fn")
      sub->add_option("--budget", budget, "curve enumeration budget K");
  }

  // verify wolpert
  auto* verify = app.add_subcommand("verify", "formula verification sweeps");
  verify->require_subcommand(1);
  auto* wolpert = verify->add_subcommand(
      "wolpert", "twist derivative formulas vs finite differences");
  wolpert->add_option("--preset", preset, "surface preset");
  wolpert->add_option("--samples", samples, "number of random configurations");
  wolpert->add_option("--seed", seed, "random seed");
  wolpert->add_option("--out", out_path, "output CSV path (default stdout)");

  // experiment {shrinking-curve|divergent-twist|thickpart}
  auto* experiment = app.add_subcommand("experiment", "phenomenon reproductions");
  experiment->require_subcommand(1);
  auto* shrink = experiment->add_subcommand(
      "shrinking-curve", "constant d_fn vs decaying d_ls certificate");
  shrink->add_option("--kmin", kmin, "smallest k (eps_k = 2^-k)");
  shrink->add_option("--kmax", kmax, "largest k");
  shrink->add_option("--t", twist_t, "twist amount");
  shrink->add_option("--budget", budget, "curve enumeration budget K");
  shrink->add_option("--out", out_path, "output CSV path (default stdout)");
  auto* divergent = experiment->add_subcommand(
      "divergent-twist", "d_fn diverges while the d_ls certificate vanishes");
  divergent->add_option("--kmin", kmin, "smallest k");
  divergent->add_option("--kmax", kmax, "largest k");
  divergent->add_option("--budget", budget, "curve enumeration budget K");
  divergent->add_option("--out", out_path, "output CSV path (default stdout)");
  auto* thick = experiment->add_subcommand(
      "thickpart", "empirical comparison constant over thick-part pairs");
  thick->add_option("--preset", preset, "surface preset");
  thick->add_option("--epsilon", epsilon, "thick-part threshold");
  thick->add_option("--epsilon0", epsilon0, "boundary length cap");
  thick->add_option("--samples", samples, "number of pairs");
  thick->add_option("--radius", radius, "d_fn ball radius");
  thick->add_option("--budget", budget, "curve enumeration budget K");
  thick->add_option("--seed", seed, "random seed");
  thick->add_option("--out", out_path, "output CSV path (default stdout)");

  // io {validate|roundtrip}
  auto* io = app.add_subcommand("io", "surface JSON utilities");
  io->require_subcommand(1);
  auto* validate = io->add_subcommand("validate", "parse and validate a file");
  validate->add_option("--in", file_in, "surface JSON")->required();
  auto* roundtrip =
      io->add_subcommand("roundtrip", "byte-identical re-emission of a file");
  roundtrip->add_option("--in", file_in, "surface JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help() << "\n";
    return kExitUsage;
  }

  try {
    if (dist->parsed()) {
      const auto p = load_point(file_a);
      const auto q = load_point(file_b);
      if (dist->get_subcommand("fn")->parsed()) {
        print_bound(hyperlab::metrics::d_fn(p, q));
      } else {
        const auto hp = hyperlab::holonomy::holonomy_rep(p);
        const auto hq = hyperlab::holonomy::holonomy_rep(q);
        if (dist->get_subcommand("ls")->parsed())
          print_bound(hyperlab::metrics::d_ls_lower(hp, hq, budget));
        else
          print_bound(hyperlab::metrics::d_arc_lower(hp, hq, budget));
      }
      return kExitOk;
    }

    hyperlab::experiments::ExperimentConfig cfg;
    cfg.preset = preset;
    cfg.kmin = kmin;
    cfg.kmax = kmax;
    cfg.t = twist_t;
    cfg.epsilon = epsilon;
    cfg.epsilon0 = epsilon0;
    cfg.samples = samples;
    cfg.ball_radius = radius;
    cfg.budget = budget;
    cfg.seed = seed;

    if (wolpert->parsed()) {
      emit(hyperlab::experiments::run_wolpert_verification(cfg).to_csv(),
           out_path);
      return kExitOk;
    }
    if (shrink->parsed()) {
      emit(hyperlab::experiments::run_shrinking_curve(cfg).to_csv(), out_path);
      return kExitOk;
    }
    if (divergent->parsed()) {
      emit(hyperlab::experiments::run_divergent_twist(cfg).to_csv(), out_path);
      return kExitOk;
    }
    if (thick->parsed()) {
      emit(hyperlab::experiments::run_thickpart_scan(cfg).to_csv(), out_path);
      return kExitOk;
    }
    if (validate->parsed()) {
      load_point(file_in);
      std::cout << "ok\n";
      return kExitOk;
    }
    if (roundtrip->parsed()) {
      std::cout << hyperlab::surface::to_json(load_point(file_in));
      return kExitOk;
    }
  } catch (const hyperlab::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const hyperlab::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const hyperlab::degeneracy_error& e) {
    std::cerr << "degeneracy: " << e.what() << "\n";
    return kExitDegeneracy;
  } catch (const hyperlab::non_hyperbolic_error& e) {
    std::cerr << "degeneracy: " << e.what() << "\n";
    return kExitDegeneracy;
  }
  return kExitUsage;
}
