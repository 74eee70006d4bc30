#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bernzeta/bernoulli.hpp"
#include "bernzeta/reference.hpp"
#include "bernzeta/series.hpp"
#include "bernzeta/tree.hpp"

using json = nlohmann::json;
using namespace bernzeta;

namespace {

struct GlobalOpts {
  unsigned digits = 30;
  double w = 4.0;
  unsigned long n_max = 20000;
  double limit_eps = 1e-3;
  std::string convention = "classical";
  std::string format = "text";
  std::uint64_t node_budget = kDefaultNodeBudget;
};

Convention parse_convention(const std::string& c) {
  if (c == "classical") return Convention::Classical;
  if (c == "redefined") return Convention::Redefined;
  throw CLI::ValidationError("--convention must be classical or redefined");
}

SeriesConfig series_config(const GlobalOpts& g) {
  SeriesConfig cfg;
  cfg.w = g.w;
  cfg.target_digits = g.digits;
  cfg.n_max = g.n_max;
  cfg.limit_eps = g.limit_eps;
  return cfg;
}

std::string fmt_hp(const HPReal& x, unsigned digits) {
  if (x.is_zero()) return "0";
  return x.str(digits, std::ios_base::scientific);
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------- bern ----

ExactRational bern_by_method(const std::string& method, unsigned n, Convention conv,
                             std::uint64_t budget) {
  ExactRational classical;
  if (method == "recurrence") return bernoulli(n, conv);
  if (method == "egf") return egf_coefficients(n + 1, conv)[n];
  if (method == "tree") {
    classical = n >= 2 ? bernoulli_via_tree(n, budget)
                       : (n == 0 ? ExactRational(1) : ExactRational(-1, 2));
  } else if (method == "det") {
    classical = ExactRational(factorial_int(n)) * s_det(n ? n : 1);
    if (n == 0) classical = 1;  // determinant form starts at k = 1
  } else {
    throw CLI::ValidationError("unknown --method " + method);
  }
  if (conv == Convention::Redefined && n == 1) classical = -classical;
  return classical;
}

int run_bern(const GlobalOpts& g, unsigned n, const std::string& method) {
  Timer timer;
  Convention conv = parse_convention(g.convention);
  std::vector<std::string> methods =
      method == "all" ? std::vector<std::string>{"recurrence", "tree", "det", "egf"}
                      : std::vector<std::string>{method};
  std::vector<std::pair<std::string, ExactRational>> results;
  for (const auto& m : methods) results.emplace_back(m, bern_by_method(m, n, conv, g.node_budget));
  bool match = true;
  for (const auto& [m, v] : results) match = match && v == results.front().second;

  if (g.format == "csv") {
    std::cout << "n,convention,method,value,status\n";
    for (const auto& [m, v] : results)
      std::cout << n << "," << g.convention << "," << m << "," << to_fraction_string(v)
                << ",OK\n";
    if (method == "all")
      std::cout << n << "," << g.convention << ",all," << to_fraction_string(results.front().second)
                << "," << (match ? "MATCH" : "MISMATCH") << "\n";
  } else if (g.format == "json") {
    for (const auto& [m, v] : results) {
      json j{{"n", n}, {"convention", g.convention}, {"method", m},
             {"value", to_fraction_string(v)}, {"status", "OK"}};
      std::cout << j.dump() << "\n";
    }
    if (method == "all") {
      json j{{"n", n}, {"convention", g.convention}, {"method", "all"},
             {"value", to_fraction_string(results.front().second)},
             {"status", match ? "MATCH" : "MISMATCH"}};
      std::cout << j.dump() << "\n";
    }
  } else {
    for (const auto& [m, v] : results)
      std::cout << "B_" << n << " (" << g.convention << ", " << m
                << ") = " << to_fraction_string(v) << "\n";
    if (method == "all") std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    std::cout << "wall_time_ms " << timer.ms() << "\n";
  }
  return match ? 0 : 1;
}

// ------------------------------------------------------------ tree-row ----

int run_tree_row(const GlobalOpts& g, unsigned n, bool sum_only) {
  Timer timer;
  ExactRational sum = s_row_sum(n, g.node_budget);
  if (sum_only) {
    if (g.format == "csv") {
      std::cout << "n,sum\n" << n << "," << to_fraction_string(sum) << "\n";
    } else if (g.format == "json") {
      std::cout << json{{"n", n}, {"sum", to_fraction_string(sum)}}.dump() << "\n";
    } else {
      std::cout << "S_" << n << " = " << to_fraction_string(sum) << "\n";
      std::cout << "wall_time_ms " << timer.ms() << "\n";
    }
    return 0;
  }
  TreeRow row = tree_row(n, g.node_budget);
  auto args_str = [](const FormalTerm& t, const char* sep) {
    std::string s;
    for (size_t i = 0; i < t.args.size(); ++i) {
      if (i) s += sep;
      s += std::to_string(t.args[i]);
    }
    return s;
  };
  if (g.format == "csv") {
    std::cout << "term_index,sign,args,value\n";
    for (size_t i = 0; i < row.terms.size(); ++i) {
      const FormalTerm& t = row.terms[i];
      std::cout << i << "," << (t.sign > 0 ? "+1" : "-1") << "," << args_str(t, ";") << ","
                << to_fraction_string(t.value()) << "\n";
    }
    std::cout << "sum,,," << to_fraction_string(sum) << "\n";
  } else if (g.format == "json") {
    for (size_t i = 0; i < row.terms.size(); ++i) {
      const FormalTerm& t = row.terms[i];
      std::cout << json{{"term_index", i}, {"sign", t.sign}, {"args", args_str(t, ";")},
                        {"value", to_fraction_string(t.value())}}.dump()
                << "\n";
    }
    std::cout << json{{"sum", to_fraction_string(sum)}}.dump() << "\n";
  } else {
    for (const FormalTerm& t : row.terms) {
      std::cout << (t.sign > 0 ? "+1/(" : "-1/(");
      for (size_t i = 0; i < t.args.size(); ++i)
        std::cout << (i ? "*" : "") << t.args[i] << "!";
      std::cout << ") = " << to_fraction_string(t.value()) << "\n";
    }
    std::cout << "S_" << n << " = " << to_fraction_string(sum) << "\n";
    std::cout << "wall_time_ms " << timer.ms() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- zeta ----

void print_eval(const GlobalOpts& g, const HPComplex& s, const EvalResult& r,
                double wall_ms) {
  unsigned d = g.digits;
  if (g.format == "csv") {
    std::cout << "s_re,s_im,value_re,value_im,abs_err_est,terms_used,status\n";
    std::cout << fmt_hp(s.re, d) << "," << fmt_hp(s.im, d) << "," << fmt_hp(r.value.re, d) << ","
              << fmt_hp(r.value.im, d) << "," << fmt_hp(r.abs_err_est, 3) << "," << r.terms_used
              << "," << to_string(r.status) << "\n";
  } else if (g.format == "json") {
    json j{{"s_re", fmt_hp(s.re, d)},        {"s_im", fmt_hp(s.im, d)},
           {"value_re", fmt_hp(r.value.re, d)}, {"value_im", fmt_hp(r.value.im, d)},
           {"abs_err_est", fmt_hp(r.abs_err_est, 3)}, {"terms_used", r.terms_used},
           {"status", to_string(r.status)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "s = " << fmt_hp(s.re, d) << " + " << fmt_hp(s.im, d) << " i\n"
              << "value = " << fmt_hp(r.value.re, d) << " + " << fmt_hp(r.value.im, d) << " i\n"
              << "abs_err_est = " << fmt_hp(r.abs_err_est, 3) << "\n"
              << "terms_used = " << r.terms_used << "\nstatus = " << to_string(r.status) << "\n"
              << "wall_time_ms " << wall_ms << "\n";
  }
}

int run_zeta(const GlobalOpts& g, const std::string& s_re, const std::string& s_im,
             const std::string& method, unsigned long dirichlet_terms, unsigned em_n,
             unsigned em_m) {
  Timer timer;
  SeriesConfig cfg = series_config(g);
  PrecisionScope scope(working_precision_bits(cfg));
  HPComplex s{HPReal(s_re), HPReal(s_im)};
  EvalResult r;
  if (method == "nested") {
    r = zeta_nested(s, cfg);
  } else if (method == "em") {
    EmParams p;
    p.n_cut = em_n;
    p.m_order = em_m;
    p.target_digits = g.digits;
    r = zeta_euler_maclaurin(s, p);
  } else if (method == "dirichlet") {
    r = zeta_dirichlet(s, dirichlet_terms, g.digits);
  } else {
    throw CLI::ValidationError("unknown --method " + method);
  }
  print_eval(g, s, r, timer.ms());
  if (r.status == EvalStatus::Pole) {
    std::cerr << "error: zeta has its pole at s = 1\n";
    return 1;
  }
  if (r.status == EvalStatus::OutOfRegion) {
    std::cerr << "error: s outside the convergence region; the nested series needs "
                 "Re(s) > 1/w (+margin), here 1/w = "
              << 1.0 / g.w << "\n";
    return 1;
  }
  return 0;
}

// ----------------------------------------------------------- bfunc-plot ----

int run_bfunc_plot(const GlobalOpts& g, double s_min, double s_max, double step) {
  SeriesConfig cfg = series_config(g);
  unsigned d = g.digits;
  std::cout << "s,re,im,abs_err_est,status\n";
  if (step <= 0) throw CLI::ValidationError("step must be positive");
  for (unsigned long k = 0;; ++k) {
    double sv = s_min + double(k) * step;
    if (sv > s_max + 1e-12) break;
    double snapped = std::round(sv);
    bool integral = std::abs(sv - snapped) < 1e-9;
    HPComplex s(HPReal(integral ? snapped : sv), HPReal(0));
    EvalResult r = bernoulli_function(s, cfg);
    std::ostringstream sval;
    sval << sv;
    std::cout << sval.str() << "," << fmt_hp(r.value.re, d) << "," << fmt_hp(r.value.im, d)
              << "," << fmt_hp(r.abs_err_est, 3) << "," << to_string(r.status) << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- sweep-w ----

int run_sweep_w(const GlobalOpts& g, const std::string& s_re, const std::string& s_im,
                const std::vector<double>& w_list) {
  SeriesConfig cfg = series_config(g);
  unsigned d = g.digits;
  PrecisionScope scope(working_precision_bits(cfg));
  HPComplex s{HPReal(s_re), HPReal(s_im)};
  std::cout << "w,value_re,value_im,abs_err_est,terms_used,status\n";
  for (double w : w_list) {
    if (w <= 0) throw CLI::ValidationError("w values must be positive");
    SeriesConfig c = cfg;
    c.w = w;
    EvalResult r = zeta_nested(s, c);
    std::ostringstream wstr;
    wstr << w;
    std::cout << wstr.str() << "," << fmt_hp(r.value.re, d) << "," << fmt_hp(r.value.im, d) << ","
              << fmt_hp(r.abs_err_est, 3) << "," << r.terms_used << "," << to_string(r.status)
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernoulli numbers, the Bernoulli function B(s), and the nested-series "
               "Riemann zeta representation"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--digits", g.digits, "significant decimal digits")->envname("BZETA_DIGITS");
  app.add_option("--w", g.w, "series parameter w > 0")->envname("BZETA_W");
  app.add_option("--n-max", g.n_max, "outer series cap")->envname("BZETA_N_MAX");
  app.add_option("--limit-eps", g.limit_eps, "offset for the odd-integer limit path")
      ->envname("BZETA_LIMIT_EPS");
  app.add_option("--convention", g.convention, "classical|redefined")
      ->envname("BZETA_CONVENTION");
  app.add_option("--format", g.format, "text|csv|json")->envname("BZETA_FORMAT");
  app.add_option("--node-budget", g.node_budget, "tree node budget")
      ->envname("BZETA_NODE_BUDGET");

  // bern
  auto* bern_cmd = app.add_subcommand("bern", "exact Bernoulli number B_n");
  unsigned bern_n = 0;
  std::string bern_method = "recurrence";
  bern_cmd->add_option("n", bern_n, "index")->required();
  bern_cmd->add_option("--method", bern_method, "recurrence|tree|det|egf|all")
      ->envname("BZETA_METHOD");

  // tree-row
  auto* tree_cmd = app.add_subcommand("tree-row", "row n of the generating tree");
  unsigned tree_n = 0;
  bool sum_only = false;
  tree_cmd->add_option("n", tree_n, "row depth")->required();
  tree_cmd->add_flag("--sum-only", sum_only, "print only the exact row sum S_n");

  // zeta
  auto* zeta_cmd = app.add_subcommand("zeta", "evaluate the Riemann zeta function");
  std::string zs_re = "2", zs_im = "0", zeta_method = "nested";
  unsigned long dirichlet_terms = 100000;
  unsigned em_n = 200, em_m = 12;
  zeta_cmd->add_option("s_re", zs_re, "Re(s)")->required();
  zeta_cmd->add_option("s_im", zs_im, "Im(s)");
  zeta_cmd->add_option("--method", zeta_method, "nested|em|dirichlet")->envname("BZETA_METHOD");
  zeta_cmd->add_option("--terms", dirichlet_terms, "Dirichlet partial-sum length");
  zeta_cmd->add_option("--em-n", em_n, "Euler-Maclaurin cut N");
  zeta_cmd->add_option("--em-m", em_m, "Euler-Maclaurin order M");

  // bfunc-plot
  auto* plot_cmd = app.add_subcommand("bfunc-plot", "CSV samples of B(s) on a real grid");
  double ps_min = 0, ps_max = 0, ps_step = 1;
  plot_cmd->add_option("s_min", ps_min)->required();
  plot_cmd->add_option("s_max", ps_max)->required();
  plot_cmd->add_option("step", ps_step)->required();

  // sweep-w
  auto* sweep_cmd = app.add_subcommand("sweep-w", "zeta_nested across a list of w values");
  std::string ws_re = "2", ws_im = "0", w_list_str = "1,2,4";
  sweep_cmd->add_option("s_re", ws_re, "Re(s)")->required();
  sweep_cmd->add_option("s_im", ws_im, "Im(s)");
  sweep_cmd->add_option("--w-list", w_list_str, "comma-separated w values");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bern_cmd->parsed()) return run_bern(g, bern_n, bern_method);
    if (tree_cmd->parsed()) return run_tree_row(g, tree_n, sum_only);
    if (zeta_cmd->parsed())
      return run_zeta(g, zs_re, zs_im, zeta_method, dirichlet_terms, em_n, em_m);
    if (plot_cmd->parsed()) return run_bfunc_plot(g, ps_min, ps_max, ps_step);
    if (sweep_cmd->parsed()) {
      std::vector<double> ws;
      std::stringstream ss(w_list_str);
      std::string tok;
      while (std::getline(ss, tok, ',')) ws.push_back(std::stod(tok));
      return run_sweep_w(g, ws_re, ws_im, ws);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
