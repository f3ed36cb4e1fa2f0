#include "gsec/random_instances.hpp"

#include <algorithm>
#include <set>

#include "gsec/errors.hpp"

namespace gsec {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, int max_den) {
  const int den = uniform_int(rng, 1, max_den);
  // Numerators k/den inside [lo, hi].
  const std::int64_t first = ceil_int(lo * den), last = floor_int(hi * den);
  if (first > last) return lo;
  const auto k = std::uniform_int_distribution<std::int64_t>(first, last)(rng);
  return Rational(k, den);
}

std::vector<Rational> random_rationals(Rng& rng, int count, const Rational& lo, const Rational& hi, int max_den) {
  std::vector<Rational> out;
  for (int i = 0; i < count; ++i) out.push_back(random_rational(rng, lo, hi, max_den));
  return out;
}

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, p)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph random_depot_graph(Rng& rng, int customers, double p) {
  const int n = customers + 1;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, p)) edges.push_back({u, v});
  // Join each component to the depot through its smallest vertex.
  std::vector<int> comp(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) comp[static_cast<std::size_t>(v)] = v;
  for (const Edge& e : edges) {
    const int a = comp[static_cast<std::size_t>(e.u)], b = comp[static_cast<std::size_t>(e.v)];
    for (auto& c : comp)
      if (c == b) c = a;
  }
  for (int v = 1; v < n; ++v)
    if (comp[static_cast<std::size_t>(v)] != comp[0]) {
      const int old = comp[static_cast<std::size_t>(v)];
      edges.push_back({0, v});
      for (auto& c : comp)
        if (c == old) c = comp[0];
    }
  return Graph(n, std::move(edges));
}

Forest random_forest(Rng& rng, const Graph& g, double edge_p, double vertex_p) {
  std::vector<int> ids(static_cast<std::size_t>(g.num_edges()));
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  std::shuffle(ids.begin(), ids.end(), rng);
  EdgeSet edges;
  for (int id : ids)
    if (coin(rng, edge_p) && g.is_acyclic(edges.with(id))) edges = edges.with(id);
  VertexSet verts = g.endpoints(edges);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (coin(rng, vertex_p)) verts = verts.with(v);
  return Forest{verts, edges};
}

ForestFamily random_downward_family(Rng& rng, const Graph& g, int generators) {
  std::set<std::uint64_t> edge_sets{0};
  for (int i = 0; i < generators; ++i) {
    const EdgeSet top = random_forest(rng, g, coin(rng, 0.5) ? 0.7 : 0.35, 0.0).edges;
    const std::uint64_t bits = top.bits();
    for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
      edge_sets.insert(sub);
      if (sub == 0) break;
    }
  }
  std::vector<Forest> out;
  for (const auto& f : enumerate_forests(g))
    if (edge_sets.count(f.edges.bits())) out.push_back(f);
  return ForestFamily::explicit_forests(g, std::move(out));
}

ForestFamily random_structured_family(Rng& rng, const Graph& g) {
  const int n = g.num_vertices();
  switch (uniform_int(rng, 0, 5)) {
    case 0: {
      const Rational q = random_rational(rng, 1, 4, 3);
      return ForestFamily::cmst(g, random_rationals(rng, n, 0, q, 3), q);
    }
    case 1: {
      std::vector<int> b;
      for (int v = 0; v < n; ++v) b.push_back(uniform_int(rng, 0, 3));
      return ForestFamily::degree_bounded(g, std::move(b));
    }
    case 2:
      return ForestFamily::theta(g, random_xos(rng, n, 3));
    case 3: {
      const Rational q = random_rational(rng, 1, 3, 2);
      return ForestFamily::brp(g, random_rationals(rng, n, -q, q, 2), q);
    }
    case 4:
      return ForestFamily::all(g);
    default:
      return ForestFamily::linear_forests(g);
  }
}

RhsTable random_rhs(Rng& rng, int n) {
  std::vector<int> v(std::size_t{1} << n, 0);
  for (std::size_t s = 1; s < v.size(); ++s) v[s] = uniform_int(rng, 1, std::popcount(s));
  return RhsTable(n, std::move(v));
}

RhsTable random_rhs_between(Rng& rng, std::span<const int> lo, std::span<const int> hi) {
  if (!pointwise_leq(lo, hi)) throw BadParams("lower table exceeds upper table");
  std::vector<int> v(lo.size(), 0);
  for (std::size_t s = 1; s < v.size(); ++s) v[s] = uniform_int(rng, lo[s], hi[s]);
  return RhsTable(std::countr_zero(lo.size()), std::move(v));
}

SetFunction random_xos(Rng& rng, int n, int max_vectors) {
  std::vector<std::vector<Rational>> ws;
  const int count = uniform_int(rng, 1, max_vectors);
  for (int i = 0; i < count; ++i) {
    std::vector<Rational> w;
    for (int v = 0; v < n; ++v) w.emplace_back(uniform_int(rng, -4, 4), 4);
    ws.push_back(std::move(w));
  }
  return SetFunction::xos(n, std::move(ws));
}

PathFamily random_path_family(Rng& rng, const Graph& g) {
  const int n = g.num_vertices();
  switch (uniform_int(rng, 0, 5)) {
    case 0: {
      const Rational q = random_rational(rng, 1, 3, 2);
      return PathFamily::brp(random_rationals(rng, n, -q, q, 2), q);
    }
    case 1: {
      const Rational q = random_rational(rng, 1, 4, 2);
      return PathFamily::cvrp(random_rationals(rng, n, 0, q, 2), q);
    }
    default:
      break;
  }
  const bool close = coin(rng, 0.5);
  const double keep = uniform_int(rng, 1, 9) / 10.0;
  std::set<PathSeq> chosen;
  for (const auto& p : enumerate_paths(g)) {
    if (p.size() <= 1) {
      chosen.insert(p);
      continue;
    }
    if (!coin(rng, keep)) continue;
    chosen.insert(p);
    if (close) {
      const auto vs = p.verts();
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j <= vs.size(); ++j) chosen.insert(PathSeq(std::vector<int>(vs.begin() + i, vs.begin() + j)));
    }
  }
  return PathFamily::explicit_paths(std::vector<PathSeq>(chosen.begin(), chosen.end()));
}

namespace {

VrpInstance random_costs(Rng& rng, int n, int k) {
  VrpInstance inst;
  inst.n = n;
  inst.k = k;
  inst.depot_costs = random_rationals(rng, n, 1, 10, 4);
  inst.edge_costs = random_rationals(rng, n * (n - 1) / 2, 1, 10, 4);
  return inst;
}

}  // namespace

VrpInstance random_cvrp(Rng& rng, int n, int k) {
  VrpInstance inst = random_costs(rng, n, k);
  const Rational q = random_rational(rng, 2, 6, 2);
  // Demands scaled to the fleet so that most instances are feasible.
  const Rational hi = std::min(q, Rational(q * 3 * k / (2 * n)));
  auto d = random_rationals(rng, n, 0, hi, 2);
  inst.rhs = rhs_from_g(cvrp_load(d, q));
  inst.routes = PathFamily::cvrp(std::move(d), q);
  return inst;
}

VrpInstance random_brp(Rng& rng, int n, int k) {
  VrpInstance inst = random_costs(rng, n, k);
  const Rational q = random_rational(rng, 1, 4, 2);
  const Rational hi = std::min(q, Rational(q * 2 * k / n));
  auto d = random_rationals(rng, n, -hi, hi, 2);
  inst.rhs = rhs_from_g(brp_load(d, q));
  inst.routes = PathFamily::brp(std::move(d), q);
  return inst;
}

RcmstInstance random_rcmst(Rng& rng, int customers, const Rational& gamma) {
  RcmstInstance inst;
  inst.graph = random_depot_graph(rng, customers, 0.6);
  inst.costs = random_rationals(rng, inst.graph.num_edges(), 1, 10, 4);
  const Rational q = random_rational(rng, 3, 8, 2);
  auto dbar = random_rationals(rng, customers, 0, q / 2, 2);
  auto dhat = random_rationals(rng, customers, 0, q / 2, 2);
  inst.load = SetFunction::budgeted(std::move(dbar), std::move(dhat), gamma, q);
  return inst;
}

}  // namespace gsec
