// SPDX-License-Identifier: Apache-2.0
//
// abelzeta command line: evaluate single functions with certified error
// balls, run the identity verification suite, and re-render stored reports.
//
// Exit codes: 0 pass, 1 any fail row, 2 usage, 3 inconclusive only, 4 I/O.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abelzeta/exact.hpp"
#include "abelzeta/identities.hpp"
#include "abelzeta/report.hpp"
#include "abelzeta/specfun.hpp"

namespace {

using namespace abelzeta;

// Significant decimal digits justified by the radius; conservative by one
// digit so we never print more than the ball supports.
long justified_digits(const Ball& b) {
  if (b.rad().is_zero())
    return static_cast<long>(std::floor(b.mid().prec() * 0.30103));
  if (b.mid().is_zero()) return 1;
  long e_mid = static_cast<long>(mpfr_get_exp(b.mid().raw()));
  long e_rad = static_cast<long>(mpfr_get_exp(b.rad().raw()));
  long d = static_cast<long>(std::floor((e_mid - e_rad - 1) * 0.30103)) - 1;
  return std::max<long>(d, 1);
}

std::string ball_text(const Ball& b) {
  std::string mid = decimal_str(b.mid().raw(), justified_digits(b));
  if (b.rad().is_zero()) return mid + " (exact)";
  return mid + " ± " + b.rad().str();
}

std::vector<long> parse_grid(const std::string& s) {
  std::vector<long> out;
  auto range = s.find("..");
  if (range != std::string::npos) {
    long a = std::stol(s.substr(0, range));
    long b = std::stol(s.substr(range + 2));
    for (long v = a; v <= b; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

std::vector<ExactRational> parse_rationals(const std::string& s) {
  std::vector<ExactRational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return 4;
  }
  f << text;
  if (!f) {
    std::cerr << "error: write failed for " << out_path << "\n";
    return 4;
  }
  return 0;
}

struct EvalArgs {
  std::string function;
  std::vector<std::string> args;
  long prec_bits = 256;
  std::string format = "text";
};

int run_eval(const EvalArgs& in) {
  const Precision prec{in.prec_bits, 16};
  auto need = [&](size_t n) {
    if (in.args.size() != n)
      throw std::invalid_argument("function " + in.function + " expects " +
                                  std::to_string(n) + " argument(s)");
  };
  auto arg_long = [&](size_t i) { return std::stol(in.args.at(i)); };
  auto arg_q = [&](size_t i) { return parse_rational(in.args.at(i)); };

  std::optional<Ball> ball;
  std::string exact_text;
  if (in.function == "zeta") {
    need(1);
    ball = zeta_int(arg_long(0), prec);
  } else if (in.function == "zeta_minus_one") {
    need(1);
    ball = zeta_minus_one(arg_long(0), prec);
  } else if (in.function == "hurwitz") {
    need(2);
    ball = hurwitz_zeta(arg_long(0), Ball::from_rational(arg_q(1), prec), prec);
  } else if (in.function == "polygamma") {
    need(2);
    ball = polygamma(arg_long(0), Ball::from_rational(arg_q(1), prec), prec);
  } else if (in.function == "gamma") {
    need(0);
    ball = euler_gamma(prec);
  } else if (in.function == "stirling2") {
    need(2);
    exact_text =
        stirling2(std::stoul(in.args.at(0)), std::stoul(in.args.at(1)))
            .get_str();
  } else if (in.function == "bernoulli") {
    need(1);
    exact_text = bernoulli(std::stoul(in.args.at(0))).get_str();
  } else {
    throw std::invalid_argument("unknown function: " + in.function);
  }

  if (in.format == "json") {
    Json obj;
    obj["function"] = in.function;
    obj["args"] = in.args;
    obj["prec_bits"] = in.prec_bits;
    if (ball) {
      obj["mid"] = mid_string(*ball);
      obj["rad"] = rad_string(*ball);
    } else {
      obj["exact"] = exact_text;
    }
    std::cout << obj.dump(2) << "\n";
  } else {
    std::cout << (ball ? ball_text(*ball) : exact_text) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigorous zeta-series identity verifier"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate one function with error bounds");
  eval_cmd->add_option("function", eval_args.function,
                       "zeta | zeta_minus_one | hurwitz | polygamma | gamma | "
                       "stirling2 | bernoulli")
      ->required();
  eval_cmd->add_option("args", eval_args.args, "function arguments");
  eval_cmd->add_option("--prec-bits", eval_args.prec_bits, "precision bits");
  eval_cmd->add_option("--format", eval_args.format, "text | json");

  SuiteConfig cfg;
  std::string m_opt, n_opt, z_opt, variant_opt;
  auto* verify_cmd =
      app.add_subcommand("verify", "run the identity verification suite");
  verify_cmd->add_option("--prec-bits", cfg.prec_bits, "precision bits");
  verify_cmd->add_option("--eps", cfg.eps, "target radius, e.g. 1e-40");
  verify_cmd->add_option("--only", cfg.only, "identity id glob filter");
  verify_cmd->add_option("--variant", variant_opt,
                         "as_printed | corrected_candidate");
  verify_cmd->add_option("--m", m_opt, "M grid, e.g. 2..8 or 1,2,3");
  verify_cmd->add_option("--n", n_opt, "N grid");
  verify_cmd->add_option("--z", z_opt, "z grid, e.g. 1/2,1/4");
  verify_cmd->add_option("--format", cfg.format, "json | csv | md");
  verify_cmd->add_option("--out", cfg.out_path, "output file");
  verify_cmd->add_option("--jobs", cfg.jobs, "worker threads");
  verify_cmd->add_option("--seed", cfg.lemma_seed, "lemma batch seed");
  verify_cmd->add_option("--term-cap", cfg.term_cap, "summation term cap");
  verify_cmd->add_option("--max-doublings", cfg.max_doublings,
                         "adaptive precision doublings");

  std::string report_in, report_format = "json", report_out;
  auto* report_cmd =
      app.add_subcommand("report", "re-render a stored JSON report");
  report_cmd->add_option("in_path", report_in, "input JSON report")
      ->required();
  report_cmd->add_option("--format", report_format, "json | csv | md");
  report_cmd->add_option("--out", report_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (eval_cmd->parsed()) {
      try {
        return run_eval(eval_args);
      } catch (const EvalFailure& e) {
        std::cerr << "warning: target accuracy not reached; best ball:\n";
        std::cout << ball_text(e.best()) << "\n";
        return 3;
      }
    }

    if (verify_cmd->parsed()) {
      if (!variant_opt.empty()) {
        auto v = variant_from_string(variant_opt);
        if (!v) {
          std::cerr << "error: unknown variant " << variant_opt << "\n";
          return 2;
        }
        cfg.variant_filter = v;
      }
      if (!m_opt.empty()) {
        cfg.m_grid = parse_grid(m_opt);
        cfg.m23_grid = cfg.m_grid;
        cfg.prop_m_grid = cfg.m_grid;
      }
      if (!n_opt.empty()) cfg.n_grid = parse_grid(n_opt);
      if (!z_opt.empty()) cfg.z_grid = parse_rationals(z_opt);
      Mag::parse(cfg.eps);  // validate before the run starts

      SuiteResult result = run_suite(cfg);
      Json doc = report_document(cfg, result);
      int io = write_output(render(doc, cfg.format), cfg.out_path);
      if (io != 0) return io;
      return exit_code_for(doc);
    }

    if (report_cmd->parsed()) {
      std::ifstream f(report_in);
      if (!f) {
        std::cerr << "error: cannot open " << report_in << "\n";
        return 4;
      }
      std::stringstream buf;
      buf << f.rdbuf();
      Json doc;
      try {
        doc = parse_report(buf.str());
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
      }
      return write_output(render(doc, report_format), report_out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
