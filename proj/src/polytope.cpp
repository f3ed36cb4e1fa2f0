#include "gsec/polytope.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gsec/errors.hpp"
#include "gsec/simplex.hpp"

namespace gsec {

namespace {

std::uint32_t subset_count(const Graph& g) { return std::uint32_t{1} << g.num_vertices(); }

std::optional<VertexSet> violated_by_edges(const GsecPolytope& p, EdgeSet edges) {
  const Graph& g = p.host();
  const std::uint32_t count = subset_count(g);
  for (std::uint32_t s = 3; s < count; ++s) {
    const VertexSet vs(s);
    if ((edges & g.edges_within(vs)).size() > p.bound(vs)) return vs;
  }
  return std::nullopt;
}

// All acyclic edge subsets in ascending order of bits, by include/exclude
// search from the highest edge id down.
void acyclic_edge_sets(const Graph& g, const GsecPolytope& p, std::vector<EdgeSet>& out) {
  const int m = g.num_edges();
  std::vector<int> parent(static_cast<std::size_t>(g.num_vertices()));
  auto rec = [&](auto&& self, int id, EdgeSet chosen, std::vector<int> comp) -> void {
    if (id < 0) {
      if (!violated_by_edges(p, chosen)) out.push_back(chosen);
      return;
    }
    self(self, id - 1, chosen, comp);
    const Edge& e = g.edge(id);
    const int cu = comp[static_cast<std::size_t>(e.u)], cv = comp[static_cast<std::size_t>(e.v)];
    if (cu == cv) return;
    for (auto& c : comp)
      if (c == cv) c = cu;
    self(self, id - 1, chosen.with(id), std::move(comp));
  };
  std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()));
  for (std::size_t v = 0; v < comp.size(); ++v) comp[v] = static_cast<int>(v);
  rec(rec, m - 1, EdgeSet{}, comp);
  std::sort(out.begin(), out.end());
}

}  // namespace

GsecPolytope::GsecPolytope(Graph host, RhsTable rhs) : host_(std::move(host)), rhs_(std::move(rhs)) {
  if (host_.num_vertices() != rhs_.num_vertices()) throw BadParams("RHS table and graph have different vertex counts");
}

CheckResult indicator_in_polytope(const GsecPolytope& p, const Forest& f) {
  if (auto s = violated_by_edges(p, f.edges)) {
    const int lhs = (f.edges & p.host().edges_within(*s)).size();
    return CheckResult::fail(ViolatedGsec{*s, Rational(lhs), p.bound(*s), f});
  }
  return CheckResult::ok();
}

std::optional<VertexSet> violated_gsec(const GsecPolytope& p, std::span<const Rational> x) {
  const Graph& g = p.host();
  if (x.size() != static_cast<std::size_t>(g.num_edges())) throw BadParams("point has the wrong dimension");
  const std::uint32_t count = subset_count(g);
  for (std::uint32_t s = 1; s < count; ++s) {
    const VertexSet vs(s);
    Rational lhs = 0;
    for (int id : g.edges_within(vs).indices()) lhs += x[static_cast<std::size_t>(id)];
    if (lhs > p.bound(vs)) return vs;
  }
  return std::nullopt;
}

bool in_polytope(const GsecPolytope& p, std::span<const Rational> x) {
  for (const auto& v : x)
    if (v < 0 || v > 1) return false;
  return !violated_gsec(p, x);
}

std::vector<EdgeSet> integer_points(const GsecPolytope& p, bool cross_check) {
  const Graph& g = p.host();
  require_within_cap(g.num_vertices(), "integer_points");
  std::vector<EdgeSet> out;
  acyclic_edge_sets(g, p, out);
  if (cross_check && g.num_edges() <= 20) {
    const std::uint64_t count = std::uint64_t{1} << g.num_edges();
    std::size_t found = 0;
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      const EdgeSet es(bits);
      if (violated_by_edges(p, es)) continue;
      if (!g.is_acyclic(es) || !std::binary_search(out.begin(), out.end(), es))
        throw InternalMismatch("0/1 scan found an integer point outside the forest list");
      ++found;
    }
    if (found != out.size()) throw InternalMismatch("0/1 scan and forest filter disagree on integer points");
  }
  return out;
}

CheckResult represents(const GsecPolytope& p, const ForestFamily& fam) {
  if (!(fam.host() == p.host())) throw BadParams("family and polytope live on different graphs");
  std::vector<EdgeSet> member_edges;
  for (const auto& f : members(fam)) {
    if (auto r = indicator_in_polytope(p, f); !r) return r;
    member_edges.push_back(f.edges);
  }
  std::sort(member_edges.begin(), member_edges.end());
  member_edges.erase(std::unique(member_edges.begin(), member_edges.end()), member_edges.end());
  for (EdgeSet es : integer_points(p, false))
    if (!std::binary_search(member_edges.begin(), member_edges.end(), es))
      return CheckResult::fail(ExtraIntegerPoint{es});
  return CheckResult::ok();
}

MaxResult max_xS(const GsecPolytope& p, VertexSet s, const LpOptions& opts) {
  const Graph& g = p.host();
  require_within_cap(g.num_vertices(), "max_xS");
  const EdgeSet inside = g.edges_within(s);
  const auto vars = inside.indices();
  MaxResult res;
  res.x.assign(static_cast<std::size_t>(g.num_edges()), Rational(0));
  res.value = 0;
  if (vars.empty()) return res;

  // Variables outside E(S) can be fixed to 0 since P is closed under
  // lowering coordinates. A GSEC on T then only sees E(T & S).
  std::map<std::uint32_t, int> tightest;
  std::vector<std::pair<std::uint32_t, int>> rows_raw;
  const std::uint32_t count = subset_count(g);
  for (std::uint32_t t = 1; t < count; ++t) {
    const VertexSet w = VertexSet(t) & s;
    if (g.edges_within(w).empty()) continue;
    const int rhs = p.bound(VertexSet(t));
    if (opts.prune) {
      auto [it, fresh] = tightest.emplace(w.bits(), rhs);
      if (!fresh) it->second = std::min(it->second, rhs);
    } else {
      rows_raw.emplace_back(w.bits(), rhs);
    }
  }
  if (opts.prune)
    for (const auto& [w, rhs] : tightest)
      if (rhs < g.edges_within(VertexSet(w)).size()) rows_raw.emplace_back(w, rhs);

  LpProblem lp;
  lp.c.assign(vars.size(), Rational(1));
  for (std::size_t j = 0; j < vars.size(); ++j) {
    std::vector<Rational> row(vars.size(), Rational(0));
    row[j] = 1;
    lp.a.push_back(std::move(row));
    lp.b.emplace_back(1);
  }
  for (const auto& [w, rhs] : rows_raw) {
    const EdgeSet ew = g.edges_within(VertexSet(w));
    std::vector<Rational> row(vars.size(), Rational(0));
    for (std::size_t j = 0; j < vars.size(); ++j)
      if (ew.contains(vars[j])) row[j] = 1;
    lp.a.push_back(std::move(row));
    lp.b.emplace_back(rhs);
  }
  if (opts.shuffle_seed) {
    std::vector<std::size_t> order(lp.a.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::mt19937_64 rng(*opts.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
    LpProblem shuffled;
    shuffled.c = lp.c;
    for (std::size_t i : order) {
      shuffled.a.push_back(lp.a[i]);
      shuffled.b.push_back(lp.b[i]);
    }
    lp = std::move(shuffled);
  }

  const LpResult sol = maximize(lp);
  if (!sol.bounded) throw InternalMismatch("GSEC LP reported unbounded despite the box");
  res.value = sol.value;
  for (std::size_t j = 0; j < vars.size(); ++j) res.x[static_cast<std::size_t>(vars[j])] = sol.x[j];
  return res;
}

CheckResult polytope_contains(const GsecPolytope& outer, const GsecPolytope& inner) {
  if (!(outer.host() == inner.host())) throw BadParams("polytopes live on different graphs");
  const Graph& g = outer.host();
  const std::uint32_t count = subset_count(g);
  for (std::uint32_t s = 1; s < count; ++s) {
    const VertexSet vs(s);
    const int bound = outer.bound(vs);
    if (bound >= g.edges_within(vs).size() || outer.rhs()(vs) <= inner.rhs()(vs)) continue;
    MaxResult m = max_xS(inner, vs);
    if (m.value > bound) return CheckResult::fail(SeparatingPoint{std::move(m.x), vs, m.value, bound});
  }
  return CheckResult::ok();
}

CheckResult integer_points_downward_closed(const GsecPolytope& p) {
  const auto pts = integer_points(p, false);
  const Graph& g = p.host();
  for (EdgeSet es : pts)
    for (int id : es.indices()) {
      const EdgeSet lower = es.without(id);
      if (!std::binary_search(pts.begin(), pts.end(), lower))
        return CheckResult::fail(ForestPair{Forest{g.endpoints(es), es}, Forest{g.endpoints(lower), lower},
                                            "missing_subgraph"});
    }
  return CheckResult::ok();
}

}  // namespace gsec
