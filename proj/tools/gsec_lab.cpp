#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gsec/bounds.hpp"
#include "gsec/errors.hpp"
#include "gsec/json_io.hpp"
#include "gsec/representability.hpp"
#include "gsec/routing.hpp"
#include "gsec/verify.hpp"

using namespace gsec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;
constexpr int kExitInfeasible = 3;

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string suite;
  int trials = 100;
  std::uint64_t seed = 0;
  int cap = kDefaultEnumerationCap;
  bool oracle_check = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw BadParams("cannot write '" + opt.output + "'");
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string subset_name(std::size_t bits) {
  std::string s = "{";
  bool first = true;
  for (int v = 0; (std::size_t(1) << v) <= bits; ++v)
    if (bits >> v & 1) {
      s += (first ? "" : ",") + std::to_string(v);
      first = false;
    }
  return s + "}";
}

// Drops certificates that fail an independent re-check; a dropped one is a bug.
void revalidate_report(const ForestFamily& fam, ReprReport& rep) {
  const ForestFamily work = rep.auto_closed ? edge_consistent_closure(fam) : fam;
  std::optional<GsecPolytope> p;
  if (rep.ell.valid) p.emplace(fam.host(), rep.ell.table());
  for (const auto& c : rep.certificates) {
    CertContext ctx;
    const bool structural =
        std::holds_alternative<ForestPair>(c) && std::get<ForestPair>(c).relation == "same_edge_set";
    ctx.family = structural ? &fam : &work;
    ctx.polytope = p ? &*p : nullptr;
    ctx.ell = &rep.ell.values;
    if (!revalidate(fam.host(), c, ctx)) throw InternalMismatch("certificate failed re-validation");
  }
}

int cmd_check(const Options& opt) {
  const ForestFamily fam = family_from_json(read_json_file(opt.input));
  ReprReport rep = is_representable(fam);
  revalidate_report(fam, rep);
  if (opt.format == "json") {
    emit(opt, dump(to_json(fam.host(), rep)));
  } else {
    std::ostringstream os;
    os << "family: " << fam.kind_name() << " on " << fam.host().num_vertices() << " vertices\n"
       << "representable: " << (rep.representable ? "yes" : "no") << "\n"
       << "  nonempty " << rep.nonempty << ", downward closed " << rep.downward_closed << ", edge-consistent "
       << rep.edge_consistent << ", minimal infeasibility property " << rep.mip_property << "\n";
    for (const auto& c : rep.certificates) os << "certificate: " << to_json(fam.host(), c).dump() << "\n";
    emit(opt, os.str());
  }
  return rep.representable ? kExitOk : kExitNegative;
}

int cmd_rhs(const Options& opt) {
  const ForestFamily fam = family_from_json(read_json_file(opt.input));
  const ReprReport rep = is_representable(fam);
  const RhsTable u = upper_bound_table(fam);
  Json j;
  if (!rep.representable) j["warning"] = "family is not representable; l is reported for inspection only";
  j["representable"] = rep.representable;
  j["ell"] = table_to_json(rep.ell.values);
  j["ell_valid"] = rep.ell.valid;
  j["u"] = to_json(u);
  Json slack = Json::array();
  for (std::size_t s = 1; s < rep.ell.values.size(); ++s)
    if (rep.ell.values[s] < u.values()[s]) slack.push_back(subset_name(s));
  j["slack_subsets"] = slack;
  if (opt.format == "json") {
    emit(opt, dump(j));
  } else {
    std::ostringstream os;
    if (!rep.representable) os << "warning: " << j["warning"].get<std::string>() << "\n";
    os << "subset  l  u\n";
    for (std::size_t s = 1; s < rep.ell.values.size(); ++s)
      os << subset_name(s) << "  " << rep.ell.values[s] << "  " << u.values()[s]
         << (rep.ell.values[s] < u.values()[s] ? "  slack" : "") << "\n";
    emit(opt, os.str());
  }
  return kExitOk;
}

int cmd_solve(const Options& opt) {
  const Json in = read_json_file(opt.input);
  Json out;
  bool feasible = false;
  if (in.is_object() && in.contains("uncertainty")) {
    const RcmstInstance inst = rcmst_from_json(in);
    // solve_rcmst already compares branch and bound against the oracle.
    const auto sol = opt.oracle_check ? solve_rcmst(inst) : bnb_solve_rcmst(inst);
    feasible = sol.has_value();
    out = sol ? to_json(inst, *sol) : Json{{"status", "infeasible"}};
    if (opt.oracle_check) out["oracle_agrees"] = true;
  } else {
    const VrpInstance inst = vrp_from_json(in);
    const auto sol = solve_vrp_form(inst);
    if (opt.oracle_check) {
      const auto oracle = oracle_solve_vrp(inst);
      if (sol.has_value() != oracle.has_value() || (sol && sol->cost != oracle->cost))
        throw InternalMismatch("formulation and route-enumeration oracle disagree");
    }
    if (sol && !routes_feasible(inst, sol->cycles)) throw InternalMismatch("solution decodes to infeasible routes");
    feasible = sol.has_value();
    out = sol ? to_json(*sol) : Json{{"status", "infeasible"}};
    if (opt.oracle_check) out["oracle_agrees"] = true;
  }
  if (opt.format == "json") {
    emit(opt, dump(out));
  } else {
    std::ostringstream os;
    os << "status: " << out["status"].get<std::string>() << "\n";
    if (feasible) os << "cost: " << out["cost"].get<std::string>() << "\n";
    if (out.contains("cycles"))
      for (const auto& c : out["cycles"]) os << "route: " << c.dump() << "\n";
    if (out.contains("tree")) os << "tree: " << out["tree"].dump() << "\n";
    emit(opt, os.str());
  }
  return feasible ? kExitOk : kExitInfeasible;
}

int cmd_verify(const Options& opt) {
  std::optional<Json> input;
  if (!opt.input.empty()) input = read_json_file(opt.input);
  const SuiteReport rep = run_suite(opt.suite, opt.trials, opt.seed, input);
  if (opt.format == "json") {
    emit(opt, dump(to_json(rep)));
  } else {
    std::ostringstream os;
    for (const auto& t : rep.trials)
      if (t.status != "pass") os << "trial " << t.trial << " (seed " << t.seed << "): " << t.status << " " << t.detail << "\n";
    for (const auto& n : rep.notes) os << "note: " << n << "\n";
    os << rep.suite << ": " << rep.passed << " passed, " << rep.failed << " failed, " << rep.skipped << " skipped\n";
    emit(opt, os.str());
  }
  return rep.ok() ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv("GSEC_LAB_CAP")) {
    try {
      opt.cap = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "error: GSEC_LAB_CAP is not an integer\n";
      return kExitError;
    }
  }

  CLI::App app{"Generalized subtour elimination constraint toolkit"};
  app.require_subcommand(1);
  app.add_option("--cap", opt.cap, "Vertex cap for exhaustive enumeration")->capture_default_str();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--output", opt.output, "Write output to this file instead of stdout");

  auto* check = app.add_subcommand("check", "Decide representability of a forest family");
  check->add_option("family", opt.input, "Family JSON file")->required();
  auto* rhs = app.add_subcommand("rhs", "Print the weakest and strongest right-hand-side tables");
  rhs->add_option("family", opt.input, "Family JSON file")->required();
  auto* solve = app.add_subcommand("solve", "Solve a VRP or RCMST instance exactly");
  solve->add_option("instance", opt.input, "Instance JSON file")->required();
  solve->add_flag("--oracle-check", opt.oracle_check, "Confirm the optimum with the enumeration oracle");
  auto* verify = app.add_subcommand("verify", "Run a seeded randomized verification suite");
  verify->add_option("--suite", opt.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--trials", opt.trials, "Number of trials")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", opt.seed, "Base seed")->capture_default_str();
  verify->add_option("--input", opt.input, "Replace the random instance with this JSON file");
  for (auto* sub : {check, rhs, solve, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }

  try {
    set_enumeration_cap(opt.cap);
    if (*check) return cmd_check(opt);
    if (*rhs) return cmd_rhs(opt);
    if (*solve) return cmd_solve(opt);
    return cmd_verify(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
