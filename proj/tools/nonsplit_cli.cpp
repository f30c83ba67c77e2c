#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "nonsplit/biquad.hpp"
#include "nonsplit/char_oracle.hpp"
#include "nonsplit/cubic.hpp"
#include "nonsplit/dedekind.hpp"
#include "nonsplit/profiles.hpp"
#include "nonsplit/saddle.hpp"
#include "nonsplit/sigma.hpp"

using json = nlohmann::ordered_json;
using namespace nonsplit;

namespace {

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Profile load_profile(const std::string& name, double k, double A, int m, double t_max) {
  if (name == "extremal") return extremal_profile(k, t_max);
  if (name == "cubic-U") return cubic_U_profile(make_envelope(A), m);
  if (name == "cubic-L") return cubic_L_profile(make_envelope(A));
  if (name == "cubic-lower") return cubic_lower_profile(make_envelope(A), m);
  if (name == "cubic-upper") return cubic_upper_profile(make_envelope(A));
  std::ifstream in(name);
  if (!in) throw ValidationError("cannot open profile file '" + name + "'");
  return parse_profile(in);
}

json residue_json(const FieldParams& fp) {
  try {
    auto r = residue_bound(fp);
    return {{"log_greedy", r.log_greedy},
            {"log_theorem2", r.log_theorem2},
            {"log_louboutin", r.log_louboutin},
            {"B", r.B},
            {"c", r.c},
            {"alpha", r.alpha},
            {"sigma", r.sigma},
            {"log_T", r.log_T},
            {"s2", r.s2},
            {"s2_asymptotic", r.s2_asymptotic},
            {"note", "asymptotic: O(1/log d) part of B and O-terms dropped, +- unquantified"}};
  } catch (const std::domain_error&) {
    return nullptr;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("NONSPLIT_THREADS")) {
    int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"nonsplit: least non-split prime bounds and their numerics"};
  app.require_subcommand(1);

  // bound
  int degree = 4;
  double log_disc = 100.0;
  std::string c_name = "quarter";
  auto* bound = app.add_subcommand("bound", "exponent bound for the least non-split prime of a degree-l field");
  bound->add_option("--degree", degree, "field degree l")->required()->check(CLI::Range(2, 100000));
  bound->add_option("--log-disc", log_disc, "log d_K")->required()->check(CLI::PositiveNumber);
  bound->add_option("--c", c_name, "stark_half | quarter | stechkin | quarter_plus_B");

  // residue
  auto* residue = app.add_subcommand("residue", "residue bounds: greedy assembly, closed form, Louboutin");
  residue->add_option("--degree", degree, "field degree l")->required()->check(CLI::Range(2, 100000));
  residue->add_option("--log-disc", log_disc, "log d_K")->required()->check(CLI::PositiveNumber);

  // sigma
  double k = 1.0, umax = 3.0, step = 1e-4, A = std::sqrt(std::exp(1.0));
  int m = 2;
  std::string profile = "extremal", method = "convolution";
  bool want_zero = false;
  std::size_t stride = 100;
  auto* sigma = app.add_subcommand("sigma", "solve the convolution equation or the extremal DDE");
  sigma->add_option("--k", k, "k = l - 1")->check(CLI::Range(1.0, 1000.0));
  sigma->add_option("--profile", profile, "extremal | cubic-lower | cubic-upper | profile file");
  sigma->add_option("--method", method, "convolution | dde");
  sigma->add_option("--umax", umax, "largest u");
  sigma->add_option("--step", step, "grid spacing (1/step must be an integer)");
  sigma->add_option("--A", A, "cancellation point for cubic profiles");
  sigma->add_option("--m", m, "cubic tail exponent")->check(CLI::IsMember({2, 3}));
  sigma->add_option("--stride", stride, "CSV row stride")->check(CLI::PositiveNumber);
  sigma->add_flag("--first-zero", want_zero, "report the first zero as JSON");

  // saddle-compare
  double u_lo = 0.0, u_hi = 0.0, du = 1.0;
  auto* sc = app.add_subcommand("saddle-compare", "saddle-point main term against the DDE");
  sc->add_option("--k", k, "k")->required()->check(CLI::Range(3.0, 200.0));
  sc->add_option("--umin", u_lo, "first u");
  sc->add_option("--umax", u_hi, "last u");
  sc->add_option("--du", du, "u spacing")->check(CLI::PositiveNumber);
  sc->add_option("--step", step, "DDE step (default by k)");

  // cubic-optimize
  double tol = 1e-9, coef = 4.5, scan_step = 0.01, a_tol = 1e-6;
  bool csv = false, paper_check = false;
  auto* cub = app.add_subcommand("cubic-optimize", "critical A for the non-Galois cubic case");
  cub->add_option("--m", m, "U tail exponent")->check(CLI::IsMember({2, 3}));
  cub->add_option("--tol", tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  cub->add_option("--coef", coef, "coefficient of I3'")->check(CLI::PositiveNumber);
  cub->add_option("--scan-step", scan_step, "A grid spacing")->check(CLI::PositiveNumber);
  cub->add_option("--a-tol", a_tol, "bisection tolerance on A")->check(CLI::PositiveNumber);
  cub->add_flag("--csv", csv, "emit the (A, rhs) curve as CSV");
  cub->add_flag("--paper-check", paper_check, "use the acceptance configuration");

  // biquad-optimize
  double grid_step = 0.001, delta_max = 0.5;
  auto* biq = app.add_subcommand("biquad-optimize", "delta sweep for the product of two quadratic characters");
  biq->add_option("--grid-step", grid_step, "delta spacing (<= 0.005)");
  biq->add_option("--delta-max", delta_max, "sweep end");
  biq->add_option("--tol", tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  biq->add_flag("--csv", csv, "emit the sweep as CSV");
  biq->add_flag("--paper-check", paper_check, "use the acceptance configuration");

  // scan
  std::int64_t from = 3, to = 1000;
  std::string mode = "quadratic", filter = "prime";
  auto* sn = app.add_subcommand("scan", "least non-residues over a range of moduli");
  sn->add_option("--from", from, "first modulus")->check(CLI::Range(std::int64_t(3), std::int64_t(10'000'000)));
  sn->add_option("--to", to, "last modulus")->check(CLI::Range(std::int64_t(3), std::int64_t(10'000'000)));
  sn->add_option("--mode", mode, "quadratic | pair")->check(CLI::IsMember({"quadratic", "pair"}));
  sn->add_option("--filter", filter, "all | prime | fundamental")->check(CLI::IsMember({"all", "prime", "fundamental"}));

  // profile-eval
  std::vector<double> ts;
  double t_max = 4.0;
  auto* pe = app.add_subcommand("profile-eval", "evaluate a profile at points");
  pe->add_option("--profile", profile, "extremal | cubic-U | cubic-L | cubic-lower | cubic-upper | file");
  pe->add_option("--k", k, "k for the extremal profile");
  pe->add_option("--A", A, "cancellation point for cubic profiles");
  pe->add_option("--m", m, "cubic tail exponent")->check(CLI::IsMember({2, 3}));
  pe->add_option("--tmax", t_max, "extremal profile length");
  pe->add_option("--t", ts, "evaluation points")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*bound) {
      FieldParams fp{degree, log_disc};
      CPolicy c = parse_c_policy(c_name);
      auto r = theorem1_exponent(fp, c);
      json j = {{"command", "bound"},
                {"config", {{"degree", degree}, {"log_disc", log_disc}, {"c", c_name}}},
                {"l", degree},
                {"log_dK", log_disc},
                {"c_policy", c_name},
                {"c", r.c},
                {"A", r.A},
                {"argmax_lambda", r.argmax},
                {"exponent", r.exponent},
                {"baseline", r.baseline},
                {"beats_baseline", r.beats_baseline},
                {"log_x_threshold", invert_split_bound(fp, c)},
                {"residue_bounds", residue_json(fp)}};
      emit(j);
    } else if (*residue) {
      FieldParams fp{degree, log_disc};
      B_term(fp);
      emit({{"command", "residue"},
            {"config", {{"degree", degree}, {"log_disc", log_disc}}},
            {"residue_bounds", residue_json(fp)}});
    } else if (*sigma) {
      SigmaSolution sol;
      if (method == "dde") {
        if (profile != "extremal") throw ValidationError("--method dde needs the extremal profile");
        sol = solve_extremal_dde(k, umax, step);
      } else if (method == "convolution") {
        sol = solve_convolution(load_profile(profile, k, A, m, umax), k, umax, step);
      } else {
        throw ValidationError("--method must be convolution or dde");
      }
      if (want_zero) {
        auto z = first_zero(sol);
        json j = {{"command", "sigma"},
                  {"config", {{"k", k}, {"profile", profile}, {"method", method}, {"umax", umax}, {"step", step}}},
                  {"provenance", provenance_name(sol.provenance)},
                  {"under_resolved", sol.under_resolved}};
        j["first_zero"] = z ? json(*z) : json(nullptr);
        emit(j);
      } else {
        std::cout << to_csv(sol, stride);
      }
    } else if (*sc) {
      if (u_hi <= 0.0) u_hi = 1.5 * k;
      if (u_lo <= 0.0) u_lo = 0.5 * k;
      double st = step == 1e-4 ? default_step(k) : step;
      std::cout << saddle_table_csv(k, u_lo, u_hi, du, st);
    } else if (*cub) {
      if (paper_check) {
        m = 2;
        tol = 1e-6;
        coef = 4.5;
      }
      IncExcConfig cfg;
      cfg.quad_tolerance = tol;
      auto rep = cubic_critical_A(cfg, m, coef, scan_step, a_tol);
      if (csv) {
        std::printf("A,rhs\n");
        for (auto [a, v] : rep.curve) std::printf("%.6f,%.10g\n", a, v);
      } else {
        json j = {{"command", "cubic-optimize"},
                  {"config", {{"m", m}, {"tol", tol}, {"coef", coef}, {"scan_step", scan_step}, {"a_tol", a_tol}, {"paper_check", paper_check}}},
                  {"A_star", rep.A_star},
                  {"four_A_star", 4.0 * rep.A_star},
                  {"exponent", rep.exponent},
                  {"baseline", rep.baseline},
                  {"below_baseline", rep.exponent < rep.baseline},
                  {"rhs_at_1.6625", rep.rhs_at_16625},
                  {"note", "N << d_K^{exponent}, up to d_K^eps"}};
        emit(j);
      }
    } else if (*biq) {
      if (paper_check) {
        grid_step = 0.001;
        delta_max = 0.5;
        tol = 1e-9;
      }
      IncExcConfig cfg;
      cfg.quad_tolerance = tol;
      auto rep = biquad_sweep(cfg, grid_step, delta_max);
      if (csv) {
        std::printf("delta,A,exp_interaction,exp_trivial,exp_final,exp_q1q2\n");
        for (const auto& r : rep.rows)
          std::printf("%.4f,%.8f,%.8f,%.8f,%.8f,%.8f\n", r.delta, r.A, r.exp_interaction, r.exp_trivial,
                      r.exp_final, r.exp_q1q2);
      } else {
        json j = {{"command", "biquad-optimize"},
                  {"config", {{"grid_step", grid_step}, {"delta_max", delta_max}, {"tol", tol}, {"paper_check", paper_check}}},
                  {"A_delta0", rep.rows.front().A},
                  {"worst_delta", rep.worst_delta},
                  {"worst_exponent_q", rep.worst_exponent_q},
                  {"worst_exponent_q1q2", rep.worst_exponent_q1q2},
                  {"delta0_exponent_q1q2", rep.delta0_exponent_q1q2},
                  {"first_piece_integral", biquad_first_piece()}};
        emit(j);
      }
    } else if (*sn) {
      if (to < from) throw ValidationError("--to must be >= --from");
      ScanMode md = mode == "pair" ? ScanMode::pair : ScanMode::quadratic;
      ScanFilter fl = filter == "all" ? ScanFilter::all
                      : filter == "prime" ? ScanFilter::prime : ScanFilter::fundamental;
      std::cout << to_csv(scan(from, to, md, fl), md);
    } else if (*pe) {
      auto p = load_profile(profile, k, A, m, t_max);
      json vals = json::array();
      for (double t : ts) vals.push_back({{"t", t}, {"value", eval_profile(p, t)}});
      emit({{"command", "profile-eval"},
            {"config", {{"profile", profile}, {"k", k}, {"A", A}, {"m", m}}},
            {"values", vals}});
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
