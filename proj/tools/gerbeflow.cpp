// gerbeflow command-line driver.
//
// Exit codes: 0 pass, 1 identity failure, 2 usage or malformed input, 3 MC obstruction.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gerbeflow/errors.hpp"
#include "gerbeflow/suites.hpp"

using namespace gerbeflow;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
Json load_json(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(arg + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string render(const Report& r, const std::string& format) {
  return format == "json" ? r.to_json().dump(2) + "\n" : r.to_text();
}

std::uint64_t env_seed(std::uint64_t fallback) {
  const char* s = std::getenv("GERBEFLOW_SEED");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') throw UsageError("GERBEFLOW_SEED must be a non-negative integer");
  return v;
}

void add_suite_flags(CLI::App* cmd, SuiteConfig& cfg, bool& seed_given) {
  cmd->add_option("--dim", cfg.dim, "chart dimension n")->capture_default_str();
  cmd->add_option("--max-deg", cfg.max_deg, "polynomial degree bound D")->capture_default_str();
  cmd->add_option("--mv-deg", cfg.mv_deg, "polyvector degree bound")->capture_default_str();
  cmd->add_option("--trials", cfg.trials, "number of seeded trials")->capture_default_str();
  cmd->add_option_function<std::uint64_t>("--seed", [&](std::uint64_t s) { cfg.seed = s, seed_given = true; },
                                          "seed (falls back to GERBEFLOW_SEED, then 42)");
  cmd->add_option("--order", cfg.order, "Artin ring order N")->capture_default_str();
  cmd->add_option("--span-deg", cfg.span_deg, "spanning-family degree for cochain equality (-1 off)")->capture_default_str();
  cmd->add_option("--tuples", cfg.tuples, "random tuples per trial")->capture_default_str();
}

struct EvalArgs {
  std::string op;
  std::vector<std::string> inputs;
  int order = 1;
};

Json eval_op(const EvalArgs& a) {
  const ArtinRing ring(a.order);
  auto need = [&](std::size_t n) {
    if (a.inputs.size() != n) throw UsageError("eval " + a.op + " takes " + std::to_string(n) + " inputs");
  };
  auto mv = [&](std::size_t i) { return multivector_from_json(load_json(a.inputs[i]), ring); };
  auto form = [&](std::size_t i) { return diffform_from_json(load_json(a.inputs[i]), ring); };
  auto mdo = [&](std::size_t i) { return mdo_from_json(load_json(a.inputs[i]), ring); };

  if (a.op == "schouten") return need(2), to_json(schouten(mv(0), mv(1)));
  if (a.op == "wedge") return need(2), to_json(mv_wedge(mv(0), mv(1)));
  if (a.op == "d") return need(1), to_json(de_rham_d(form(0)));
  if (a.op == "contract") return need(2), to_json(contract(form(0), mv(1)));
  if (a.op == "hkr") return need(1), to_json(hkr(mv(0)));
  if (a.op == "bracket") return need(2), to_json(gerstenhaber_bracket(mdo(0), mdo(1)));
  if (a.op == "delta") return need(1), to_json(hochschild_delta(mdo(0)));
  if (a.op == "cup") return need(2), to_json(cup(mdo(0), mdo(1)));
  if (a.op == "phi") {
    if (a.inputs.empty()) throw UsageError("eval phi takes a form followed by multivectors");
    DiffForm w = form(0);
    const int k = static_cast<int>(a.inputs.size()) - 1;
    std::vector<MultiVector> args;
    for (int i = 1; i <= k; ++i) args.push_back(mv(static_cast<std::size_t>(i)));
    return to_json(phi_component(w, k)(args));
  }
  if (a.op == "compose-trace") {
    // Phi(F) o Phi(G) on the remaining multivectors; "m" stands for the
    // multiplication cochain. Every permutation term is listed with its sign.
    if (a.inputs.size() < 2) throw UsageError("eval compose-trace takes F G followed by multivectors");
    std::vector<MultiVector> args;
    for (std::size_t i = 2; i < a.inputs.size(); ++i) args.push_back(mv(i));
    if (args.empty()) throw UsageError("eval compose-trace needs at least one multivector argument");
    const Chart chart = args.front().chart();
    auto cochain = [&](std::size_t i, int arity) {
      if (a.inputs[i] == "m") return m_cochain(chart);
      return phi_component(form(i), arity);
    };
    const int outer_arity = a.inputs[0] == "m" ? 2 : form(0).degree();
    const int inner_arity = static_cast<int>(args.size()) - outer_arity + 1;
    std::vector<TraceTerm> trace;
    MultiVector total = ce_compose_trace(cochain(0, outer_arity), cochain(1, inner_arity), args, trace);
    Json terms = Json::array();
    for (const auto& t : trace)
      terms.push_back({{"sigma", t.sigma.images()}, {"eps", t.eps}, {"inner", to_json(t.inner)}, {"value", to_json(t.value)}});
    return {{"terms", terms}, {"total", to_json(total)}};
  }
  throw UsageError("unknown eval op \"" + a.op + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Schouten, Chevalley-Eilenberg, twisted L-infinity, Hochschild and Deligne calculus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string out_path, format = "text";
  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output path (stdout if absent)");
    cmd->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  };

  SuiteConfig cfg;
  bool seed_given = false;
  auto* suite = app.add_subcommand("suite", "run a seeded property suite");
  suite->add_option("--suite", cfg.suite, "one of: schouten phi-dgla phixy linfty mc hochschild symmetry hkr deligne")->required();
  suite->add_flag("--negative-control", cfg.negative_control, "linfty: use non-closed H (failures are expected)");
  add_suite_flags(suite, cfg, seed_given);
  add_output_flags(suite);

  auto* deligne = app.add_subcommand("deligne", "Deligne groupoid checks");
  auto* verify = deligne->add_subcommand("verify", "run the deligne suite");
  deligne->require_subcommand(1);
  add_suite_flags(verify, cfg, seed_given);
  add_output_flags(verify);

  std::string mc_file, report_path;
  auto* mc = app.add_subcommand("mc", "twisted Poisson Maurer-Cartan jobs");
  mc->require_subcommand(1);
  auto* mc_check = mc->add_subcommand("check", "residual of pi (default h*pi1) modulo h^maxOrder");
  auto* mc_solve_cmd = mc->add_subcommand("solve", "order-by-order solver");
  for (auto* cmd : {mc_check, mc_solve_cmd}) {
    cmd->add_option("file", mc_file, "problem JSON")->required();
    add_output_flags(cmd);
    cmd->add_option("--report", report_path, "also write the report here");
  }

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate one operation on JSON inputs");
  eval->add_option("op", eval_args.op, "schouten wedge d contract phi hkr bracket delta cup compose-trace")->required();
  eval->add_option("inputs", eval_args.inputs, "JSON files or inline JSON");
  eval->add_option("--order", eval_args.order, "Artin ring order of the inputs")->capture_default_str();
  eval->add_option("--out", out_path, "output path (stdout if absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*suite || *verify) {
      if (*verify) cfg.suite = "deligne";
      if (!seed_given) cfg.seed = env_seed(cfg.seed);
      Report r = run_suite(cfg);
      emit(render(r, format), out_path);
      return r.exit_code();
    }
    if (*mc) {
      auto result = mc_job(load_json(mc_file), *mc_solve_cmd ? McMode::Solve : McMode::Check);
      emit(result.output.dump(2) + "\n", out_path);
      if (!report_path.empty()) emit(render(result.report, format), report_path);
      else if (!out_path.empty()) std::cout << render(result.report, format);
      return result.exit_code;
    }
    if (*eval) {
      emit(eval_op(eval_args).dump(2) + "\n", out_path);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StructuralError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
