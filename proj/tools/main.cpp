#include "tropjac/abel_jacobi.hpp"
#include "tropjac/ceresa.hpp"
#include "tropjac/errors.hpp"
#include "tropjac/report.hpp"
#include "tropjac/zonotope.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

namespace fs = std::filesystem;
using namespace tropjac;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kUnsupported = 3;

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::string mode = "numeric";
  unsigned long seed = 0;
  bool verbose = false;
};

class Unsupported : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool all_numeric(const MetricGraph& g) {
  for (const auto& e : g.edges)
    if (e.length.is_symbolic()) return false;
  return true;
}

MetricGraph load_for_mode(const RunConfig& cfg) {
  MetricGraph g = load_curve(cfg.input);
  if (cfg.mode == "symbolic" && !g.is_symbolic())
    throw ValidationError("--mode symbolic needs every length to be a variable");
  if ((cfg.mode == "numeric" || cfg.mode == "both") && !all_numeric(g))
    throw ValidationError("--mode " + cfg.mode + " needs rational lengths");
  return g;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& text) {
  std::cout << text;
  if (!cfg.output.empty()) {
    fs::create_directories(cfg.output);
    write_file(fs::path(cfg.output) / name, text);
  }
}

// translation replay for --seed: a shift on the quarter grid of the unit cube
RatVec seeded_shift(unsigned long seed, std::size_t dim) {
  std::mt19937_64 rng(seed);
  RatVec out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(Rational(static_cast<long>(rng() % 4), 4));
  return out;
}

int cmd_analyze(const RunConfig& cfg) {
  emit(cfg, "analyze.json", analyze_json(load_curve(cfg.input)));
  return kOk;
}

int cmd_ceresa(const RunConfig& cfg) {
  MetricGraph g = load_for_mode(cfg);
  if (genus(g) < 3) throw Unsupported("ceresa needs genus >= 3, got " + std::to_string(genus(g)));
  CeresaOptions opt;
  opt.symbolic = cfg.mode == "both";
  if (cfg.seed != 0) opt.extra_shift = seeded_shift(cfg.seed, 3);
  auto t0 = std::chrono::steady_clock::now();
  CeresaReport r = ceresa_report(g, opt);
  if (cfg.verbose) {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << "ceresa: " << s << " s";
    if (r.numeric) std::cerr << ", " << r.numeric->cw_cells << " 3-cells, " << r.numeric->stats.unit_pivots << " unit pivots";
    std::cerr << "\n";
  }
  emit(cfg, "ceresa.json", ceresa_json(r));
  return kOk;
}

int cmd_export(const RunConfig& cfg) {
  MetricGraph g = load_curve(cfg.input);
  if (!all_numeric(g)) throw ValidationError("export needs rational lengths");
  if (genus(g) == 0) throw Unsupported("export needs genus >= 1");
  fs::path dir = cfg.output.empty() ? fs::current_path() : fs::path(cfg.output);
  fs::create_directories(dir);
  JacobianData jd(g);
  FramedChain w1 = w1_cycle(jd);
  write_file(dir / "w1.json", chain_json(w1));
  write_file(dir / "w1_neg.json", chain_json(negate_cycle(jd, w1)));
  std::vector<std::string> written{"w1.json", "w1_neg.json"};
  if (jd.genus() == 3) {
    CeresaOptions opt;
    opt.symbolic = false;
    if (cfg.seed != 0) opt.extra_shift = seeded_shift(cfg.seed, 3);
    CeresaResult r = ceresa_invariant(jd, opt);
    write_file(dir / "difference.json", chain_json(r.difference));
    write_file(dir / "chain.json", chain_json(r.connecting));
    written.insert(written.end(), {"difference.json", "chain.json"});
  }
  write_file(dir / "zonotope.json", zonotope_to_json(build_zonotope(jd)));
  written.push_back("zonotope.json");
  for (const auto& f : written) std::cout << (dir / f).string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical Jacobians: Abel-Jacobi cycles, period lattices and the Ceresa obstruction"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", cfg.input, "curve file (JSON)")->required();
    sub->add_option("--output,-o", cfg.output, "output directory");
    sub->add_option("--mode", cfg.mode, "numeric, symbolic or both")
        ->check(CLI::IsMember({"numeric", "symbolic", "both"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized replays (0: none)");
    sub->add_flag("--verbose,-v", cfg.verbose, "timings on stderr");
  };
  add_common(app.add_subcommand("analyze", "genus, type, Q, periods and dicing check"));
  add_common(app.add_subcommand("ceresa", "Ceresa obstruction report"));
  add_common(app.add_subcommand("export", "W_1, W_1^-, connecting chain and zonotope geometry"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "analyze") return cmd_analyze(cfg);
    if (cfg.command == "ceresa") return cmd_ceresa(cfg);
    return cmd_export(cfg);
  } catch (const Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const WrongGenus& e) {
    std::cerr << e.what() << "\n";
    return kUnsupported;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
