#include <cstdint>
#include <iostream>
#include <limits>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "pointline/analysis.hpp"
#include "pointline/compose.hpp"
#include "pointline/geometry.hpp"
#include "pointline/io.hpp"
#include "pointline/random_construct.hpp"
#include "pointline/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitIo = 3;

int cmd_build_random(const std::string& delta_str, std::uint64_t seed,
                     int max_retries, const std::string& out,
                     const std::string& report_path) {
  const double delta = pl::parse_real_or_fraction(delta_str);
  const pl::RandomParams params = pl::derive_params(delta, seed, max_retries);
  pl::RandomBuild build = pl::build_random(params);
  pl::write_config_file(build.config, out);
  if (!report_path.empty()) {
    pl::write_report_file(build.report, report_path);
  }
  std::cout << "size=" << build.config.size() << " attempts="
            << build.report.attempts;
  if (build.report.measured_delta) {
    std::cout << " d=" << pl::format_double(*build.report.measured_delta);
  }
  std::cout << (build.report.success ? " ok" : " retries-exhausted") << "\n";
  return build.report.success ? kExitOk : kExitVerifyFail;
}

int cmd_compose(const std::string& base_path, const std::string& inner_path,
                const std::string& w_str, const std::string& c_str, int depth,
                const std::string& mode, const std::string& out,
                const std::string& report_path) {
  pl::RecursionPlan plan;
  plan.depth = depth;
  plan.base = pl::read_config_file(base_path);
  if (inner_path.empty()) {
    plan.inner_seed = pl::Configuration::create({{0.0, 0.0, 0.0}},
                                                std::nullopt, "singleton");
  } else {
    plan.inner_seed = pl::read_config_file(inner_path);
  }
  plan.params.w = pl::parse_real_or_fraction(w_str);
  plan.params.separation = pl::parse_real_or_fraction(c_str);
  plan.params.guaranteed = (mode == "guaranteed");
  pl::ComposeResult result = pl::iterate_compose(plan);
  pl::write_config_file(result.config, out);
  if (!report_path.empty()) {
    pl::write_report_file(result.report, report_path);
  }
  const pl::LevelTable table = pl::level_table(result.report.levels);
  std::cout << table.to_text();
  return kExitOk;
}

int cmd_verify(const std::string& path, bool sampled,
               std::size_t verify_cap) {
  pl::Configuration cfg = pl::read_config_file(path);
  if (!cfg.claimed_delta()) {
    throw pl::PreconditionError("file has no claimed_delta to verify");
  }
  if (sampled) {
    if (cfg.size() <= verify_cap) {
      throw pl::PreconditionError(
          "--sampled is reserved for files above the exact-verification cap");
    }
    auto rng = std::mt19937_64(12345);
    const auto& e = cfg.elements();
    double best = std::numeric_limits<double>::infinity();
    std::size_t wa = 0, wb = 0;
    for (int s = 0; s < 2000000; ++s) {
      const auto a = static_cast<std::size_t>(rng() % e.size());
      const auto b = static_cast<std::size_t>(rng() % e.size());
      if (a == b) continue;
      const double d = pl::vertical_distance(e[a], e[b]);
      if (d < best) {
        best = d;
        wa = a;
        wb = b;
      }
    }
    const bool pass = best >= *cfg.claimed_delta() - pl::kClaimTolerance;
    std::cout << "sampled d<=" << pl::format_double(best) << " witness=(" << wa
              << "," << wb << ") claimed="
              << pl::format_double(*cfg.claimed_delta())
              << (pass ? " pass" : " FAIL") << "\n";
    return pass ? kExitOk : kExitVerifyFail;
  }
  const pl::VerifyOutcome v = pl::verify_claim(cfg);
  if (v.degenerate) {
    std::cout << "degenerate: " << v.note << " pass\n";
    return kExitOk;
  }
  std::cout << "d=" << pl::format_double(v.measured) << " witness=("
            << v.witness->index_a << "," << v.witness->index_b << ") claimed="
            << pl::format_double(*cfg.claimed_delta())
            << (v.pass ? " pass" : " FAIL");
  if (v.sanity_exceeded) {
    std::cout << " [sanity bound exceeded]";
  }
  std::cout << "\n";
  return v.pass ? kExitOk : kExitVerifyFail;
}

int cmd_export(const std::string& path, const std::string& svg_out,
               const std::string& csv_out, const std::string& strip_str) {
  pl::Configuration cfg = pl::read_config_file(path);
  if (svg_out.empty() && csv_out.empty()) {
    throw pl::PreconditionError("export needs --svg and/or --csv");
  }
  if (!svg_out.empty()) {
    const double strip = strip_str.empty()
                             ? 0.0
                             : pl::parse_real_or_fraction(strip_str);
    pl::write_svg(cfg, svg_out, strip);
  }
  if (!csv_out.empty()) {
    pl::write_csv(cfg, csv_out);
  }
  return kExitOk;
}

int cmd_baseline(int n, const std::string& out) {
  pl::write_config_file(pl::trivial_configuration(n), out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point-line configuration builder and verifier"};
  app.require_subcommand(1);

  std::string delta_str, out, report_path;
  std::uint64_t seed = 0;
  int max_retries = 20;
  auto* build = app.add_subcommand("build-random",
                                   "randomized empty-strip construction");
  build->add_option("--delta", delta_str, "target minimum distance")
      ->required();
  build->add_option("--seed", seed, "RNG seed");
  build->add_option("--max-retries", max_retries, "attempt budget");
  build->add_option("--out", out, "output configuration file")->required();
  build->add_option("--report", report_path, "output report file");

  std::string base_path, inner_path, w_str, c_str = "5", mode = "guaranteed";
  int depth = 1;
  auto* comp = app.add_subcommand("compose", "self-affine composition");
  comp->add_option("--base", base_path, "base configuration file")->required();
  comp->add_option("--inner", inner_path,
                   "inner configuration file (default: singleton)");
  comp->add_option("--w", w_str, "cell scale, e.g. 1/64")->required();
  comp->add_option("--C", c_str, "separation constant");
  comp->add_option("--depth", depth, "number of composition levels");
  comp->add_option("--mode", mode, "guaranteed|exploratory")
      ->check(CLI::IsMember({"guaranteed", "exploratory"}));
  comp->add_option("--out", out, "output configuration file")->required();
  comp->add_option("--report", report_path, "output report file");

  std::string verify_path;
  bool exact = false, sampled = false;
  auto* ver = app.add_subcommand("verify", "check a file against its claim");
  ver->add_option("file", verify_path, "configuration file")->required();
  ver->add_flag("--exact", exact, "full pairwise verification (default)");
  ver->add_flag("--sampled", sampled,
                "sampled verification (large files only)");

  std::string export_path, svg_out, csv_out, strip_str;
  auto* exp = app.add_subcommand("export", "render to SVG / CSV");
  exp->add_option("file", export_path, "configuration file")->required();
  exp->add_option("--svg", svg_out, "SVG output path");
  exp->add_option("--csv", csv_out, "CSV output path");
  exp->add_option("--strip-width", strip_str,
                  "vertical half-width of strip bands (0 = none)");

  int n = 0;
  auto* basel = app.add_subcommand("baseline", "write the stacked baseline");
  basel->add_option("--n", n, "number of elements")->required();
  basel->add_option("--out", out, "output configuration file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitPrecondition;
  }

  try {
    if (build->parsed()) {
      return cmd_build_random(delta_str, seed, max_retries, out, report_path);
    }
    if (comp->parsed()) {
      return cmd_compose(base_path, inner_path, w_str, c_str, depth, mode, out,
                         report_path);
    }
    if (ver->parsed()) {
      if (exact && sampled) {
        throw pl::PreconditionError("choose one of --exact / --sampled");
      }
      return cmd_verify(verify_path, sampled, pl::ComposeParams{}.verify_cap);
    }
    if (exp->parsed()) {
      return cmd_export(export_path, svg_out, csv_out, strip_str);
    }
    if (basel->parsed()) {
      return cmd_baseline(n, out);
    }
  } catch (const pl::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const pl::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitPrecondition;
}
