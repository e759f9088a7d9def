// Command-line front end: frontier sweeps to CSV, closed-form limits,
// channel-file evaluation and the self-verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 no feasible point.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crbc/channel_io.hpp"
#include "crbc/dmc.hpp"
#include "crbc/frontier.hpp"
#include "crbc/gaussian.hpp"
#include "crbc/verification.hpp"

namespace {

namespace g = crbc::gaussian;
namespace d = crbc::dmc;
namespace io = crbc::io;
namespace fr = crbc::frontier;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInfeasible = 3;

std::string fmt(double v, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  std::string s = os.str();
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-')
    s.erase(0, 1);  // "-0.000000" -> "0.000000"
  return s;
}

struct RegionOptions {
  std::string scheme = "prop1";
  double P = 0, N1 = 0, N2 = 0;
  std::vector<double> a_values;
  double a1 = -1, a2 = -1;
  std::vector<std::size_t> grid;
  std::vector<double> gamma_range;
  double nc_override = -1, nc2_override = -1;
  unsigned refine = 20;
  std::string out;
  int precision = 6;
};

int run_region(const RegionOptions& opt) {
  const auto scheme = fr::parse_scheme(opt.scheme);
  if (!scheme) {
    std::cerr << "error: unknown --scheme '" << opt.scheme
              << "' (expected prop1..prop5)\n";
    return kExitInvalidInput;
  }

  fr::SweepConfig cfg;
  cfg.scheme = *scheme;
  if (!opt.grid.empty()) {
    cfg.alpha_points = opt.grid[0];
    if (opt.grid.size() > 1) cfg.beta_points = opt.grid[1];
    if (opt.grid.size() > 2) cfg.gamma_points = opt.grid[2];
  }
  if (!opt.gamma_range.empty()) {
    if (opt.gamma_range.size() != 2) {
      std::cerr << "error: --gamma-range needs exactly two values\n";
      return kExitInvalidInput;
    }
    cfg.gamma_min = opt.gamma_range[0];
    cfg.gamma_max = opt.gamma_range[1];
  }
  if (opt.nc_override >= 0) cfg.nc_override = opt.nc_override;
  if (opt.nc2_override >= 0) cfg.nc2_override = opt.nc2_override;
  cfg.refine_passes = opt.refine;

  const bool two_sided = *scheme == fr::Scheme::prop5;
  std::vector<fr::FrontierFamily> families;
  try {
    cfg.validate();
    if (two_sided) {
      if (opt.a1 < 0 || opt.a2 < 0) {
        std::cerr << "error: prop5 needs --a1 and --a2\n";
        return kExitInvalidInput;
      }
      g::TwoSidedGaussianParams p{opt.P, opt.a1, opt.a2, opt.N1, opt.N2};
      p.validate();
      families.push_back(fr::trace_frontier(cfg, p));
    } else {
      if (opt.a_values.empty()) {
        std::cerr << "error: --a is required for one-sided schemes\n";
        return kExitInvalidInput;
      }
      g::GaussianCrbcParams p{opt.P, opt.a_values.front(), opt.N1, opt.N2};
      p.validate();
      families = fr::trace_family(cfg, p, opt.a_values);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  std::size_t total = 0;
  for (const auto& fam : families) total += fam.points.size();
  if (total == 0) {
    std::cerr << "error: no feasible point for the requested parameters\n";
    return kExitInfeasible;
  }

  const std::string path =
      opt.out.empty() ? "region_" + opt.scheme + ".csv" : opt.out;
  std::ofstream csv(path);
  if (!csv) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitInvalidInput;
  }
  const int pr = opt.precision;
  if (two_sided) {
    csv << "scheme,a1,a2,alpha,beta1,beta2,nc1,nc2,re1,re2\n";
    for (const auto& fam : families)
      for (const auto& pt : fam.points)
        csv << opt.scheme << ',' << fmt(fam.a, pr) << ',' << fmt(fam.a2, pr)
            << ',' << fmt(pt.params.alpha, pr) << ','
            << fmt(pt.params.beta1, pr) << ',' << fmt(pt.params.beta2, pr)
            << ',' << fmt(pt.params.nc1, pr) << ',' << fmt(pt.params.nc2, pr)
            << ',' << fmt(pt.re1, pr) << ',' << fmt(pt.re2, pr) << '\n';
  } else {
    csv << "scheme,a,alpha,beta,gamma,nc,re1,re2\n";
    for (const auto& fam : families)
      for (const auto& pt : fam.points)
        csv << opt.scheme << ',' << fmt(fam.a, pr) << ','
            << fmt(pt.params.alpha, pr) << ',' << fmt(pt.params.beta, pr)
            << ',' << fmt(pt.params.gamma, pr) << ',' << fmt(pt.params.nc, pr)
            << ',' << fmt(pt.re1, pr) << ',' << fmt(pt.re2, pr) << '\n';
  }
  csv.close();

  for (const auto& fam : families) {
    const fr::FrontierPoint* best1 = nullptr;
    const fr::FrontierPoint* best2 = nullptr;
    for (const auto& pt : fam.points) {
      if (!best1 || pt.re1 > best1->re1) best1 = &pt;
      if (!best2 || pt.re2 > best2->re2) best2 = &pt;
    }
    std::cout << opt.scheme << " a=" << fmt(fam.a, pr);
    if (two_sided) std::cout << " a2=" << fmt(fam.a2, pr);
    std::cout << " points=" << fam.points.size();
    if (best1)
      std::cout << " max_re1=" << fmt(best1->re1, pr)
                << " (alpha=" << fmt(best1->params.alpha, 2) << ")";
    if (best2)
      std::cout << " max_re2=" << fmt(best2->re2, pr)
                << " (alpha=" << fmt(best2->params.alpha, 2) << ")";
    std::cout << "\n";
  }
  std::cout << "wrote " << total << " frontier points to " << path << "\n";
  return 0;
}

int run_limit(double P, double N1, double N2, int precision) {
  try {
    const double c1 = g::corollary1_limit(P, N1, N2);
    const double sato = g::gaussian_sato_bound(P, N1, N2);
    std::cout << "large-a_limit   " << fmt(c1, precision) << "\n";
    std::cout << "sato_bound      " << fmt(sato, precision) << "\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

void print_region_eval(const d::RegionEvaluation& ev, int pr) {
  std::cout << "R1         " << fmt(ev.r1, pr) << "\n";
  std::cout << "R2         " << fmt(ev.r2, pr) << "\n";
  std::cout << "R1+R2      " << fmt(ev.r1_plus_r2, pr) << "\n";
  std::cout << "Re1        " << fmt(ev.re1, pr) << "\n";
  std::cout << "Re2        " << fmt(ev.re2, pr) << "\n";
  std::cout << "Re1_raw    " << fmt(ev.re1_raw, pr) << "\n";
  std::cout << "Re2_raw    " << fmt(ev.re2_raw, pr) << "\n";
  std::cout << "slack1     " << fmt(ev.slack1, pr) << " "
            << (ev.constraint1_ok ? "satisfied" : "VIOLATED") << "\n";
  if (ev.slack2)
    std::cout << "slack2     " << fmt(*ev.slack2, pr) << " "
              << (ev.constraint2_ok ? "satisfied" : "VIOLATED") << "\n";
}

struct DmcEvalOptions {
  std::string channel_path;
  std::string dist_path;
  std::string input_dist_path;
  int theorem = 0;
  bool maximize = false;
  unsigned resolution = 32;
  int precision = 6;
};

int run_dmc_eval(const DmcEvalOptions& opt) {
  try {
    const auto ch = io::load_channel_file(opt.channel_path);
    const int pr = opt.precision;
    switch (opt.theorem) {
      case 1: {
        const auto f = io::load_factors_file(opt.dist_path);
        print_region_eval(d::eval_theorem1(ch, io::make_theorem1_input(f, ch)),
                          pr);
        return 0;
      }
      case 4: {
        const auto f = io::load_factors_file(opt.dist_path);
        print_region_eval(d::eval_theorem4(ch, io::make_theorem4_input(f, ch)),
                          pr);
        return 0;
      }
      case 5: {
        const auto f = io::load_factors_file(opt.dist_path);
        print_region_eval(d::eval_theorem5(ch, io::make_theorem5_input(f, ch)),
                          pr);
        return 0;
      }
      case 2: {
        const auto f = io::load_factors_file(opt.dist_path);
        const auto pt = d::eval_theorem2_point(
            ch, io::make_theorem2_input(f, ch));
        std::cout << "Re1_tilde  " << fmt(pt.re1_tilde, pr) << "\n";
        std::cout << "Re2_tilde  " << fmt(pt.re2_tilde, pr) << "\n";
        std::cout << "Re1_bar    " << fmt(pt.re1_bar, pr) << "\n";
        std::cout << "Re2_bar    " << fmt(pt.re2_bar, pr) << "\n";
        std::cout << "R1_bound   " << fmt(pt.r1_bound, pr) << "\n";
        std::cout << "R2_bound   " << fmt(pt.r2_bound, pr) << "\n";
        return 0;
      }
      case 3: {
        if (opt.maximize) {
          const auto mx = d::maximize_theorem3(ch, opt.resolution);
          std::cout << "max_I(X;Y2|X1,Y1)  " << fmt(mx.value, pr) << "\n";
          std::cout << "argmax_p(x,x1)    ";
          for (double v : mx.p_xx1) std::cout << " " << fmt(v, pr);
          std::cout << "\n";
          return 0;
        }
        if (opt.input_dist_path.empty()) {
          std::cerr << "error: theorem 3 needs --input-dist or --maximize\n";
          return kExitInvalidInput;
        }
        const auto f = io::load_factors_file(opt.input_dist_path);
        const auto p_xx1 = io::make_input_dist(f, ch);
        std::cout << "I(X;Y2|X1,Y1)  "
                  << fmt(d::eval_theorem3(ch, p_xx1), pr) << "\n";
        return 0;
      }
      default:
        std::cerr << "error: --theorem must be 1..5\n";
        return kExitInvalidInput;
    }
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const d::InvalidDistribution& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

int run_verify(const std::string& filter) {
  const auto results = crbc::verification::run_all(filter);
  crbc::verification::print_table(std::cout, results);
  if (results.empty()) {
    std::cerr << "error: no criterion matches filter '" << filter << "'\n";
    return kExitInvalidInput;
  }
  return crbc::verification::all_passed(results) ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Secrecy rate-equivocation regions of cooperative relay broadcast "
      "channels"};
  app.require_subcommand(1);

  RegionOptions region;
  auto* cmd_region = app.add_subcommand(
      "region", "Trace achievable (Re1, Re2) frontiers to CSV");
  cmd_region->add_option("--scheme", region.scheme,
                         "prop1 | prop2 | prop3 | prop4 | prop5");
  cmd_region->add_option("--P", region.P, "transmitter power")->required();
  cmd_region->add_option("--N1", region.N1, "user-1 noise variance")
      ->required();
  cmd_region->add_option("--N2", region.N2, "user-2 noise variance")
      ->required();
  cmd_region->add_option("--a", region.a_values,
                         "helper power ratio(s), comma separated")
      ->delimiter(',');
  cmd_region->add_option("--a1", region.a1, "user-1 power ratio (prop5)");
  cmd_region->add_option("--a2", region.a2, "user-2 power ratio (prop5)");
  cmd_region
      ->add_option("--grid", region.grid,
                   "grid sizes: alpha[,beta[,gamma]] (default 101,51,81)")
      ->delimiter(',');
  cmd_region
      ->add_option("--gamma-range", region.gamma_range,
                   "DPC coefficient range lo,hi (default -2,2)")
      ->delimiter(',');
  cmd_region->add_option("--nc", region.nc_override,
                         "fixed compression noise (default: feasibility floor)");
  cmd_region->add_option("--nc2", region.nc2_override,
                         "fixed second compression noise (prop5)");
  cmd_region->add_option("--refine", region.refine,
                         "coordinate-ascent passes per frontier point");
  cmd_region->add_option("--out", region.out,
                         "CSV path (default region_<scheme>.csv)");
  cmd_region->add_option("--precision", region.precision,
                         "decimal places (default 6)");

  double limit_P = 0, limit_N1 = 0, limit_N2 = 0;
  int limit_precision = 6;
  auto* cmd_limit = app.add_subcommand(
      "limit", "Large-helper-power limit of user 2's equivocation");
  cmd_limit->add_option("--P", limit_P)->required();
  cmd_limit->add_option("--N1", limit_N1)->required();
  cmd_limit->add_option("--N2", limit_N2)->required();
  cmd_limit->add_option("--precision", limit_precision);

  DmcEvalOptions dmc_eval;
  auto* cmd_dmc = app.add_subcommand(
      "dmc-eval", "Evaluate region bounds on a finite-alphabet channel");
  cmd_dmc->add_option("--channel", dmc_eval.channel_path, "channel file")
      ->required();
  cmd_dmc->add_option("--theorem", dmc_eval.theorem, "1..5")->required();
  cmd_dmc->add_option("--dist", dmc_eval.dist_path,
                      "factored-distribution file");
  cmd_dmc->add_option("--input-dist", dmc_eval.input_dist_path,
                      "input distribution file (theorem 3)");
  cmd_dmc->add_flag("--maximize", dmc_eval.maximize,
                    "maximize over inputs (theorem 3)");
  cmd_dmc->add_option("--resolution", dmc_eval.resolution,
                      "simplex grid denominator (default 32)");
  cmd_dmc->add_option("--precision", dmc_eval.precision);

  std::string verify_filter;
  auto* cmd_verify =
      app.add_subcommand("verify", "Run the self-verification suite");
  cmd_verify->add_option("--filter", verify_filter,
                         "run only criteria whose id/name/tags match");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidInput;
  }

  if (cmd_region->parsed()) return run_region(region);
  if (cmd_limit->parsed())
    return run_limit(limit_P, limit_N1, limit_N2, limit_precision);
  if (cmd_dmc->parsed()) return run_dmc_eval(dmc_eval);
  if (cmd_verify->parsed()) return run_verify(verify_filter);
  return kExitInvalidInput;
}
