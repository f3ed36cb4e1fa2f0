#include "gsec/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gsec/bounds.hpp"
#include "gsec/errors.hpp"
#include "gsec/random_instances.hpp"
#include "gsec/representability.hpp"
#include "gsec/routing.hpp"

namespace gsec {

bool revalidate(const Graph& g, const Certificate& c, const CertContext& ctx) {
  const ForestFamily* fam = ctx.family;
  return std::visit(
      [&](const auto& cert) -> bool {
        using C = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<C, ForestPair>) {
          if (!fam) return true;
          if (!fam->contains(cert.first) || fam->contains(cert.second)) return false;
          if (cert.relation == "missing_subgraph") return is_subgraph(cert.second, cert.first) && !(cert.first == cert.second);
          if (cert.relation == "same_edge_set") return cert.first.edges == cert.second.edges;
          if (cert.relation == "same_vertex_set")
            return component_vertex_sets(g, cert.first) == component_vertex_sets(g, cert.second);
          return false;
        } else if constexpr (std::is_same_v<C, ViolatedGsec>) {
          if (!ctx.polytope) return true;
          if (cert.rhs_value != ctx.polytope->bound(cert.subset) || cert.lhs <= cert.rhs_value) return false;
          if (cert.forest) {
            if ((cert.forest->edges & g.edges_within(cert.subset)).size() != cert.lhs) return false;
            if (fam && !fam->contains(*cert.forest)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<C, ExtraIntegerPoint>) {
          if (!g.is_acyclic(cert.edges)) return false;
          if (ctx.polytope && !indicator_in_polytope(*ctx.polytope, Forest{g.endpoints(cert.edges), cert.edges}).holds)
            return false;
          if (fam)
            for (const auto& f : members(*fam))
              if (f.edges == cert.edges) return false;
          return true;
        } else if constexpr (std::is_same_v<C, SeparatingPoint>) {
          if (ctx.inner && !in_polytope(*ctx.inner, cert.x)) return false;
          Rational lhs = 0;
          for (int id : g.edges_within(cert.subset).indices()) lhs += cert.x[static_cast<std::size_t>(id)];
          if (lhs != cert.lhs || lhs <= cert.rhs_value) return false;
          return !ctx.polytope || ctx.polytope->bound(cert.subset) == cert.rhs_value;
        } else if constexpr (std::is_same_v<C, ForestWitness>) {
          if (!fam) return true;
          if (cert.reason == "mip_violation")
            return fam->contains(cert.forest) &&
                   (!ctx.ell || cert.forest.num_components() < (*ctx.ell)[cert.forest.verts.bits()]);
          if (cert.reason == "missing_edgeless") return cert.forest.edges.empty() && !fam->contains(cert.forest);
          if (cert.reason == "empty_family") return members(*fam).empty();
          if (cert.reason == "minimal_infeasible") return !fam->contains(cert.forest);
          return true;
        } else if constexpr (std::is_same_v<C, SubsetPair>) {
          if (!ctx.g) return true;
          return (cert.a & cert.b).empty() && (*ctx.g)(cert.a | cert.b) > (*ctx.g)(cert.a) + (*ctx.g)(cert.b);
        } else {
          const PathFamily* r = ctx.routes;
          if (!r) return true;
          if (cert.relation == "trivial_path") return cert.first.size() <= 1 && !r->contains(cert.first);
          if (cert.relation == "subpath" || cert.relation == "subsequence")
            return r->contains(cert.first) && !r->contains(cert.second);
          if (cert.relation == "vertex_consistency")
            return cert.first.vertex_set() == cert.second.vertex_set() && r->contains(cert.first) &&
                   !r->contains(cert.second);
          if (cert.relation == "star")
            return cert.first.vertex_set() == cert.second.vertex_set() && !r->contains(cert.first) &&
                   r->contains(cert.second);
          return false;
        }
      },
      c);
}

bool brp_feasible_by_definition(std::span<const Rational> d, const Rational& capacity, std::span<const int> order) {
  // q + D(i) in [0, Q] for all prefixes, including D(0) = 0.
  Rational prefix = 0, lo = 0, hi = capacity;
  for (int v : order) {
    prefix += d[static_cast<std::size_t>(v)];
    Rational low_i = -prefix;
    Rational high_i = capacity - prefix;
    if (low_i > lo) lo = std::move(low_i);
    if (high_i < hi) hi = std::move(high_i);
  }
  return lo <= hi;
}

namespace {

struct Outcome {
  std::string status;
  std::string detail;
};

Outcome pass(std::string d = {}) { return {"pass", std::move(d)}; }
Outcome fail(std::string d) { return {"fail", std::move(d)}; }
Outcome skip(std::string d) { return {"skip", std::move(d)}; }

ForestFamily random_family(Rng& rng, const Graph& g) {
  return coin(rng, 0.6) ? random_downward_family(rng, g, uniform_int(rng, 1, 3)) : random_structured_family(rng, g);
}

Graph random_host(Rng& rng, int lo, int hi) {
  const int n = uniform_int(rng, lo, hi);
  return random_graph(rng, n, uniform_int(rng, 4, 9) / 10.0);
}

bool certificates_valid(const Graph& g, const ReprReport& rep, const ForestFamily& fam) {
  const ForestFamily work = rep.auto_closed ? edge_consistent_closure(fam) : fam;
  std::optional<GsecPolytope> p;
  if (rep.ell.valid) p.emplace(g, rep.ell.table());
  for (const auto& c : rep.certificates) {
    CertContext ctx;
    const bool structural = std::holds_alternative<ForestPair>(c) &&
                            std::get<ForestPair>(c).relation == "same_edge_set";
    ctx.family = structural ? &fam : &work;
    ctx.polytope = p ? &*p : nullptr;
    ctx.ell = &rep.ell.values;
    if (!revalidate(g, c, ctx)) return false;
  }
  return true;
}

Outcome trial_thm1(Rng& rng, const std::optional<Json>& input) {
  const ForestFamily fam = input ? family_from_json(*input) : random_family(rng, random_host(rng, 3, 6));
  const ReprReport rep = is_representable(fam);
  if (!certificates_valid(fam.host(), rep, fam)) return fail("a certificate did not re-validate");
  return pass(rep.representable ? "representable" : "not representable");
}

Outcome trial_thm2(Rng& rng, const std::optional<Json>& input) {
  std::optional<ForestFamily> fam;
  std::optional<ReprReport> rep;
  if (input) {
    fam.emplace(family_from_json(*input));
    rep.emplace(is_representable(*fam));
  } else {
    for (int attempt = 0; attempt < 30 && !(rep && rep->representable); ++attempt) {
      fam.emplace(random_family(rng, random_host(rng, 3, 5)));
      rep.emplace(is_representable(*fam));
    }
  }
  if (!rep->representable) return skip("family is not representable");
  const Graph& g = fam->host();
  for (int i = 0; i < 4; ++i) {
    const RhsTable f = random_rhs_between(rng, rep->ell.values, rep->u->values());
    if (auto r = represents(GsecPolytope(g, f), *fam); !r) return fail("table between l and u does not represent");
  }
  int admissible = 0;
  for (int i = 0; i < 4; ++i) {
    const RhsTable f = random_rhs(rng, g.num_vertices());
    const auto a = rhs_admissible(*fam, f);
    admissible += a.admissible ? 1 : 0;
  }
  return pass(std::to_string(admissible) + "/4 random tables admissible");
}

Outcome trial_prop4(Rng& rng) {
  const int n = uniform_int(rng, 3, 5);
  const Graph g = random_graph(rng, n, uniform_int(rng, 5, 10) / 10.0);
  const PathFamily r = random_path_family(rng, g);
  const ForestFamily h = ForestFamily::routes(g, r);
  const ForestFamily c = ForestFamily::linear_forests(g);
  const LowerBound ell = lower_bound_table(h, c);
  std::optional<RhsTable> f;
  const int pick = uniform_int(rng, 0, 2);
  if (pick == 1 && ell.valid) {
    const RhsTable u = upper_bound_table(h);
    if (pointwise_leq(ell.values, u.values())) f = random_rhs_between(rng, ell.values, u.values());
  } else if (pick == 2) {
    f = random_rhs(rng, n);
  }
  const auto rep = conditioned_representable(h, c, f);
  return pass(rep.holds ? "represented" : "not represented");
}

Outcome trial_prop5(Rng& rng, const std::optional<Json>& input) {
  std::optional<SetFunction> g;
  if (input) g.emplace(set_function_from_json(*input, -1));
  else g.emplace(random_xos(rng, uniform_int(rng, 3, 6), 4));
  const int n = g->num_vertices();
  const auto sub = is_subadditive(*g);
  if (!sub.subadditive) {
    std::ostringstream os;
    os << "precondition violated: g is not subadditive on A=" << sub.violation->first.bits()
       << " B=" << sub.violation->second.bits();
    return skip(os.str());
  }
  std::optional<RhsTable> f;
  try {
    f.emplace(rhs_from_g(*g));
  } catch (const OutOfRange& e) {
    return skip(std::string("precondition violated: ") + e.what());
  }
  const Graph host = coin(rng, 0.5) ? Graph::complete(n) : random_graph(rng, n, 0.6);
  const auto r = represents(GsecPolytope(host, *f), ForestFamily::theta(host, *g));
  return r.holds ? pass() : fail("P(f) does not represent F(Theta(g))");
}

Outcome trial_brp(Rng& rng) {
  const int len = uniform_int(rng, 1, 7);
  const Rational q = random_rational(rng, 1, 5, 3);
  const auto d = random_rationals(rng, len, -q, q, 4);
  std::vector<int> order(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  const bool both = brp_path_feasible(d, q, order);
  if (both != brp_feasible_by_definition(d, q, order)) return fail("evaluators disagree with the load definition");
  return pass(both ? "feasible" : "infeasible");
}

Outcome trial_claim(Rng& rng, const std::optional<Json>& input) {
  const ForestFamily fam = input ? family_from_json(*input) : random_family(rng, random_host(rng, 3, 6));
  const ForestFamily work = materialize(fam);
  const LowerBound ell = lower_bound_table(work);
  if (std::holds_alternative<ForestFamily::TreeClosure>(fam.kind()))
    for (std::size_t s = 1; s < ell.values.size(); ++s)
      if (ell.values[s] < 1 || ell.values[s] > 2) return fail("tree-closure family with l outside {1, 2}");
  if (ell.valid)
    if (!integer_points_downward_closed(GsecPolytope(fam.host(), ell.table())).holds)
      return fail("integer points of P(l) are not downward closed");
  if (!has_mip_property(work, ell).holds) return skip("no minimal infeasibility property");
  claim_equal_components(work);
  return pass();
}

Outcome trial_solvers(Rng& rng, int trial) {
  switch (trial % 3) {
    case 0:
    case 1: {
      const int n = uniform_int(rng, 3, 6);
      const int k = uniform_int(rng, 1, std::min(3, n));
      const VrpInstance inst = trial % 3 == 0 ? random_cvrp(rng, n, k) : random_brp(rng, n, k);
      const auto form = solve_vrp_form(inst);
      const auto oracle = oracle_solve_vrp(inst);
      if (form.has_value() != oracle.has_value()) return fail("formulation and oracle disagree on feasibility");
      if (!form) return pass("infeasible");
      if (form->cost != oracle->cost)
        return fail("cost " + to_string(form->cost) + " differs from oracle " + to_string(oracle->cost));
      if (!routes_feasible(inst, form->cycles)) return fail("formulation optimum decodes to infeasible routes");
      return pass(to_string(form->cost));
    }
    default: {
      const int n = uniform_int(rng, 3, 6);
      const Rational gamma = random_rational(rng, 0, n, 2);
      const RcmstInstance inst = random_rcmst(rng, n, gamma);
      const auto sol = solve_rcmst(inst);
      const auto& b = std::get<BudgetedFunction>(inst.load.kind());
      RcmstInstance zero = inst;
      zero.load = SetFunction::budgeted(b.dbar, b.dhat, 0, b.capacity);
      RcmstInstance single = inst;
      single.load = SetFunction::singleton(b.dbar, b.capacity);
      const auto a = solve_rcmst(zero), c = solve_rcmst(single);
      if (a.has_value() != c.has_value() || (a && a->cost != c->cost))
        return fail("gamma = 0 differs from the nominal instance");
      return pass(sol ? to_string(sol->cost) : "infeasible");
    }
  }
}

Outcome trial_lp(Rng& rng) {
  const int n = uniform_int(rng, 3, 5);
  const Graph g = random_graph(rng, n, uniform_int(rng, 5, 10) / 10.0);
  const GsecPolytope p(g, random_rhs(rng, n));
  const VertexSet s(static_cast<std::uint32_t>(uniform_int(rng, 1, (1 << n) - 1)));
  const MaxResult a = max_xS(p, s);
  const MaxResult b = max_xS(p, s, {.prune = false, .shuffle_seed = std::nullopt});
  const MaxResult c = max_xS(p, s, {.prune = true, .shuffle_seed = rng()});
  if (a.value != b.value || a.value != c.value) return fail("LP value depends on row order or pruning");
  if (!in_polytope(p, a.x)) return fail("LP optimum lies outside the polytope");
  if (s.size() >= 1 && (a.value > p.bound(s) || a.value > g.edges_within(s).size()))
    return fail("LP value exceeds the trivial bound");
  for (int v = 0; v < n; ++v)
    if (!s.contains(v) && max_xS(p, s.with(v)).value < a.value) return fail("LP value is not monotone in S");
  return pass(to_string(a.value));
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"thm1", "thm2", "prop4", "prop5", "brp", "claim", "solvers", "lp"};
  return names;
}

SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed, const std::optional<Json>& input) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) throw BadParams("unknown suite '" + name + "'");
  if (trials < 0) throw BadParams("trial count must be nonnegative");
  const bool takes_input = name == "thm1" || name == "thm2" || name == "claim" || name == "prop5";
  SuiteReport rep;
  rep.suite = name;
  rep.seed = seed;
  if (input && !takes_input) rep.notes.push_back("input ignored by this suite");
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
    Rng rng(s);
    Outcome out;
    try {
      const std::optional<Json>& in = takes_input ? input : std::nullopt;
      if (name == "thm1") out = trial_thm1(rng, in);
      else if (name == "thm2") out = trial_thm2(rng, in);
      else if (name == "prop4") out = trial_prop4(rng);
      else if (name == "prop5") out = trial_prop5(rng, in);
      else if (name == "brp") out = trial_brp(rng);
      else if (name == "claim") out = trial_claim(rng, in);
      else if (name == "solvers") out = trial_solvers(rng, t);
      else out = trial_lp(rng);
    } catch (const PreconditionFailed& e) {
      out = skip(std::string("precondition: ") + e.what());
    } catch (const Error& e) {
      out = fail(e.what());
    }
    if (out.status == "pass") ++rep.passed;
    else if (out.status == "skip") ++rep.skipped;
    else ++rep.failed;
    rep.trials.push_back({t, s, out.status, out.detail});
  }
  return rep;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["trials"] = r.trials.size();
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["skipped"] = r.skipped;
  j["notes"] = r.notes;
  j["results"] = Json::array();
  for (const auto& t : r.trials)
    j["results"].push_back({{"trial", t.trial}, {"seed", t.seed}, {"status", t.status}, {"detail", t.detail}});
  return j;
}

}  // namespace gsec
