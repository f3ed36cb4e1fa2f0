#include "gsec/routing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gsec/errors.hpp"

namespace gsec {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

const Graph& customer_graph(int n) {
  static thread_local std::vector<Graph> cache;
  if (cache.size() <= static_cast<std::size_t>(n))
    for (int i = static_cast<int>(cache.size()); i <= n; ++i) cache.push_back(Graph::complete(i));
  return cache[static_cast<std::size_t>(n)];
}

std::vector<int> g0_cycle(std::span<const int> path) {
  std::vector<int> c{0};
  for (int v : path) c.push_back(v + 1);
  c.push_back(0);
  return c;
}

// Every subset S with |S| >= 2 keeps |E(S) ∩ chosen| <= |S| - f(S).
bool gsecs_hold(const Graph& g, const RhsTable& f, EdgeSet chosen, std::uint32_t must_contain) {
  const std::uint32_t full = g.all_vertices().bits();
  const std::uint32_t rest = full & ~must_contain;
  for (std::uint32_t extra = rest;; extra = (extra - 1) & rest) {
    const VertexSet s(extra | must_contain);
    if (s.size() >= 2 && (chosen & g.edges_within(s)).size() > s.size() - f(s)) return false;
    if (extra == 0) break;
  }
  return true;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  }
};

}  // namespace

void validate(const VrpInstance& inst) {
  if (inst.n < 1) throw BadParams("a VRP instance needs at least one customer");
  require_within_cap(inst.n, "VRP solver");
  if (inst.k < 1 || inst.k > inst.n) throw BadParams("k must lie in [1, |V|]");
  if (inst.depot_costs.size() != static_cast<std::size_t>(inst.n)) throw BadParams("one depot cost per customer");
  if (inst.edge_costs.size() != static_cast<std::size_t>(customer_graph(inst.n).num_edges()))
    throw BadParams("one edge cost per customer pair");
  for (const auto& c : inst.depot_costs)
    if (c < 0) throw BadParams("costs must be nonnegative");
  for (const auto& c : inst.edge_costs)
    if (c < 0) throw BadParams("costs must be nonnegative");
  if (inst.rhs.num_vertices() != inst.n) throw BadParams("RHS table size differs from the customer count");
  if (!contains_trivial_paths(inst.routes, customer_graph(inst.n)).holds)
    throw BadParams("route family must contain every path with at most one vertex");
}

Rational route_cost(const VrpInstance& inst, std::span<const int> path) {
  if (path.empty()) return Rational(0);
  const Graph& g = customer_graph(inst.n);
  Rational c = inst.depot_costs[static_cast<std::size_t>(path.front())] +
               inst.depot_costs[static_cast<std::size_t>(path.back())];
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    c += inst.edge_costs[static_cast<std::size_t>(*g.edge_id(path[i], path[i + 1]))];
  return c;
}

VrpX cycles_to_x(const std::vector<std::vector<int>>& cycles, int n) {
  const Graph& g = customer_graph(n);
  VrpX x{std::vector<int>(static_cast<std::size_t>(n), 0), std::vector<int>(static_cast<std::size_t>(g.num_edges()), 0)};
  for (const auto& c : cycles)
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      const int a = c[i], b = c[i + 1];
      if (a == 0 || b == 0) {
        const int v = (a == 0 ? b : a) - 1;
        if (v < 0 || v >= n) throw BadParams("cycle vertex out of range");
        ++x.depot[static_cast<std::size_t>(v)];
      } else {
        const auto id = g.edge_id(a - 1, b - 1);
        if (!id) throw BadParams("cycle vertex out of range");
        ++x.customer[static_cast<std::size_t>(*id)];
      }
    }
  return x;
}

bool routes_feasible(const VrpInstance& inst, const std::vector<std::vector<int>>& cycles) {
  if (cycles.size() != static_cast<std::size_t>(inst.k)) return false;
  std::uint32_t seen = 0;
  for (const auto& c : cycles) {
    if (c.size() < 3 || c.front() != 0 || c.back() != 0) return false;
    std::vector<int> path;
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
      const int v = c[i] - 1;
      if (v < 0 || v >= inst.n || ((seen >> v) & 1U)) return false;
      seen |= std::uint32_t{1} << v;
      path.push_back(v);
    }
    if (!inst.routes.contains(PathSeq(path))) return false;
  }
  return seen == VertexSet::full(inst.n).bits();
}

// ------------------------------------------------------------------ oracle

std::optional<VrpSolution> oracle_solve_vrp(const VrpInstance& inst) {
  validate(inst);
  const int n = inst.n;
  const Graph& g = customer_graph(n);
  const std::size_t count = std::size_t{1} << n;

  struct Best {
    bool found = false;
    Rational cost;
    std::vector<int> order;
  };
  std::vector<Best> best(count);
  std::vector<int> path;
  std::uint32_t used = 0;
  auto extend = [&](auto&& self) -> void {
    if (path.size() == 1 || path.front() < path.back()) {
      if (inst.routes.contains(PathSeq(path))) {
        auto& slot = best[used];
        Rational c = route_cost(inst, path);
        if (!slot.found || c < slot.cost) slot = Best{true, std::move(c), path};
      }
    }
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      if (!g.edge_id(path.back(), v)) continue;
      path.push_back(v);
      used |= std::uint32_t{1} << v;
      self(self);
      used &= ~(std::uint32_t{1} << v);
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used = std::uint32_t{1} << s;
    extend(extend);
  }

  // dp[j][mask]: cheapest cover of mask by j nonempty routes.
  const int k = inst.k;
  std::vector<std::vector<std::optional<Rational>>> dp(static_cast<std::size_t>(k + 1),
                                                       std::vector<std::optional<Rational>>(count));
  std::vector<std::vector<std::uint32_t>> pick(static_cast<std::size_t>(k + 1), std::vector<std::uint32_t>(count, 0));
  dp[0][0] = Rational(0);
  for (int j = 1; j <= k; ++j)
    for (std::uint32_t mask = 1; mask < count; ++mask) {
      const std::uint32_t low = mask & (~mask + 1);
      const std::uint32_t rest = mask & ~low;
      for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
        const std::uint32_t block = sub | low;
        const auto& prev = dp[static_cast<std::size_t>(j - 1)][mask & ~block];
        if (best[block].found && prev) {
          Rational c = *prev + best[block].cost;
          auto& cur = dp[static_cast<std::size_t>(j)][mask];
          if (!cur || c < *cur) {
            cur = std::move(c);
            pick[static_cast<std::size_t>(j)][mask] = block;
          }
        }
        if (sub == 0) break;
      }
    }
  const std::uint32_t full = static_cast<std::uint32_t>(count - 1);
  if (!dp[static_cast<std::size_t>(k)][full]) return std::nullopt;

  VrpSolution sol;
  std::uint32_t mask = full;
  for (int j = k; j >= 1; --j) {
    const std::uint32_t block = pick[static_cast<std::size_t>(j)][mask];
    sol.cycles.push_back(g0_cycle(best[block].order));
    mask &= ~block;
  }
  std::sort(sol.cycles.begin(), sol.cycles.end());
  sol.x = cycles_to_x(sol.cycles, n);
  sol.cost = *dp[static_cast<std::size_t>(k)][full];
  return sol;
}

// ---------------------------------------------------------- branch & bound

namespace {

class VrpSearch {
 public:
  explicit VrpSearch(const VrpInstance& inst) : inst_(inst), g_(customer_graph(inst.n)) {
    n_ = inst.n;
    m_ = g_.num_edges();
    const int total = n_ + m_;
    std::vector<Rational> all(inst.depot_costs.begin(), inst.depot_costs.end());
    all.insert(all.end(), inst.edge_costs.begin(), inst.edge_costs.end());
    cost_ = scale_to_integers(all).values;

    order_.resize(static_cast<std::size_t>(total));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return cost_[static_cast<std::size_t>(a)] < cost_[static_cast<std::size_t>(b)];
    });

    // Vertex n stands for the depot.
    incident_.resize(static_cast<std::size_t>(n_ + 1));
    for (int pos = 0; pos < total; ++pos) {
      const auto [a, b] = ends(order_[static_cast<std::size_t>(pos)]);
      incident_[static_cast<std::size_t>(a)].push_back(pos);
      incident_[static_cast<std::size_t>(b)].push_back(pos);
    }
    target_.assign(static_cast<std::size_t>(n_ + 1), 2);
    target_[static_cast<std::size_t>(n_)] = 2 * inst.k;
    deg_.assign(static_cast<std::size_t>(n_ + 1), 0);
    rem_.assign(static_cast<std::size_t>(n_ + 1), 0);
    for (int var = 0; var < total; ++var) {
      const auto [a, b] = ends(var);
      rem_[static_cast<std::size_t>(a)] += ub(var);
      rem_[static_cast<std::size_t>(b)] += ub(var);
    }
    value_.assign(static_cast<std::size_t>(total), 0);
  }

  std::optional<std::vector<int>> run() {
    dfs(0, 0);
    if (best_cost_ >= kInf) return std::nullopt;
    return best_value_;
  }

 private:
  std::pair<int, int> ends(int var) const {
    if (var < n_) return {var, n_};
    const Edge& e = g_.edge(var - n_);
    return {e.u, e.v};
  }
  int ub(int var) const { return var < n_ ? 2 : 1; }
  std::int64_t c(int var) const { return cost_[static_cast<std::size_t>(var)]; }

  // Twice a lower bound on the cost of the undecided variables from `pos`.
  std::int64_t fill_bound(int pos) const {
    std::int64_t total = 0;
    for (int v = 0; v <= n_; ++v) {
      int need = target_[static_cast<std::size_t>(v)] - deg_[static_cast<std::size_t>(v)];
      const auto& inc = incident_[static_cast<std::size_t>(v)];
      for (auto it = std::lower_bound(inc.begin(), inc.end(), pos); it != inc.end() && need > 0; ++it) {
        const int var = order_[static_cast<std::size_t>(*it)];
        const int take = std::min(need, ub(var));
        total += take * c(var);
        need -= take;
      }
      if (need > 0) return kInf;
    }
    return total;
  }

  void dfs(int pos, std::int64_t committed) {
    const int total = n_ + m_;
    if (pos == total) {
      for (int v = 0; v <= n_; ++v)
        if (deg_[static_cast<std::size_t>(v)] != target_[static_cast<std::size_t>(v)]) return;
      if (!gsecs_hold(g_, inst_.rhs, chosen_, 0)) return;
      if (committed < best_cost_) {
        best_cost_ = committed;
        best_value_ = value_;
      }
      return;
    }
    const int var = order_[static_cast<std::size_t>(pos)];
    const auto [a, b] = ends(var);
    const auto ai = static_cast<std::size_t>(a), bi = static_cast<std::size_t>(b);
    rem_[ai] -= ub(var);
    rem_[bi] -= ub(var);
    const int top = std::min({ub(var), target_[ai] - deg_[ai], target_[bi] - deg_[bi]});
    for (int val = top; val >= 0; --val) {
      deg_[ai] += val;
      deg_[bi] += val;
      value_[static_cast<std::size_t>(var)] = val;
      const bool is_customer_edge = var >= n_ && val == 1;
      if (is_customer_edge) chosen_ = chosen_.with(var - n_);
      const std::int64_t now = committed + val * c(var);
      bool ok = deg_[ai] + rem_[ai] >= target_[ai] && deg_[bi] + rem_[bi] >= target_[bi];
      if (ok && is_customer_edge) ok = gsecs_hold(g_, inst_.rhs, chosen_, (std::uint32_t{1} << a) | (std::uint32_t{1} << b));
      if (ok) {
        const std::int64_t fill = fill_bound(pos + 1);
        if (fill < kInf && 2 * now + fill < 2 * best_cost_) dfs(pos + 1, now);
      }
      if (is_customer_edge) chosen_ = chosen_.without(var - n_);
      deg_[ai] -= val;
      deg_[bi] -= val;
    }
    value_[static_cast<std::size_t>(var)] = 0;
    rem_[ai] += ub(var);
    rem_[bi] += ub(var);
  }

  const VrpInstance& inst_;
  const Graph& g_;
  int n_ = 0, m_ = 0;
  std::vector<std::int64_t> cost_;
  std::vector<int> order_;
  std::vector<std::vector<int>> incident_;  // positions in order_, ascending
  std::vector<int> target_, deg_, rem_, value_;
  EdgeSet chosen_;
  std::int64_t best_cost_ = kInf;
  std::vector<int> best_value_;
};

}  // namespace

std::optional<VrpSolution> solve_vrp_form(const VrpInstance& inst) {
  validate(inst);
  VrpSearch search(inst);
  const auto values = search.run();
  if (!values) return std::nullopt;
  VrpSolution sol;
  sol.x.depot.assign(values->begin(), values->begin() + inst.n);
  sol.x.customer.assign(values->begin() + inst.n, values->end());
  sol.cycles = decode_x_to_cycles(sol.x, inst.n, inst.k);
  sol.cost = 0;
  for (int v = 0; v < inst.n; ++v) sol.cost += sol.x.depot[static_cast<std::size_t>(v)] * inst.depot_costs[static_cast<std::size_t>(v)];
  for (std::size_t e = 0; e < sol.x.customer.size(); ++e) sol.cost += sol.x.customer[e] * inst.edge_costs[e];
  return sol;
}

std::vector<std::vector<int>> decode_x_to_cycles(const VrpX& x, int n, int k) {
  const Graph& g = customer_graph(n);
  if (x.depot.size() != static_cast<std::size_t>(n) || x.customer.size() != static_cast<std::size_t>(g.num_edges()))
    throw MalformedX("x has the wrong dimension");
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  int depot_deg = 0;
  for (int v = 0; v < n; ++v) {
    const int val = x.depot[static_cast<std::size_t>(v)];
    if (val < 0 || val > 2) throw MalformedX("depot edge value outside {0,1,2}");
    deg[static_cast<std::size_t>(v)] += val;
    depot_deg += val;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const int val = x.customer[static_cast<std::size_t>(e)];
    if (val < 0 || val > 1) throw MalformedX("customer edge value outside {0,1}");
    deg[static_cast<std::size_t>(g.edge(e).u)] += val;
    deg[static_cast<std::size_t>(g.edge(e).v)] += val;
  }
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] != 2)
      throw MalformedX("customer " + std::to_string(v + 1) + " has degree " + std::to_string(deg[static_cast<std::size_t>(v)]));
  if (depot_deg != 2 * k) throw MalformedX("depot degree is not 2k");

  std::vector<std::vector<int>> cycles;
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  for (int s = 0; s < n; ++s) {
    const int dv = x.depot[static_cast<std::size_t>(s)];
    if (visited[static_cast<std::size_t>(s)] || dv == 0) continue;
    std::vector<int> path{s};
    visited[static_cast<std::size_t>(s)] = 1;
    if (dv == 1) {
      int cur = s;
      for (;;) {
        int next = -1;
        for (int id : g.incident(cur).indices())
          if (x.customer[static_cast<std::size_t>(id)] == 1 && !used[static_cast<std::size_t>(id)]) {
            used[static_cast<std::size_t>(id)] = 1;
            next = g.edge(id).u == cur ? g.edge(id).v : g.edge(id).u;
            break;
          }
        if (next < 0) break;
        cur = next;
        visited[static_cast<std::size_t>(cur)] = 1;
        path.push_back(cur);
      }
      if (x.depot[static_cast<std::size_t>(path.back())] != 1 || path.size() < 2)
        throw MalformedX("route starting at customer " + std::to_string(s + 1) + " does not return to the depot");
    }
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    cycles.push_back(g0_cycle(path));
  }
  std::vector<int> stray;
  for (int v = 0; v < n; ++v)
    if (!visited[static_cast<std::size_t>(v)]) stray.push_back(v + 1);
  if (!stray.empty()) {
    std::string msg = "depot-free cycle through customers";
    for (int v : stray) msg += " " + std::to_string(v);
    throw MalformedX(msg);
  }
  if (cycles.size() != static_cast<std::size_t>(k)) throw MalformedX("x does not decompose into k cycles");
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

// -------------------------------------------------------------------- RCMST

namespace {

struct RcmstView {
  int n;                            // customers
  Graph customers;                  // G_0 - {0}
  std::vector<int> to_customer;     // G_0 edge id -> customer edge id, or -1
  std::vector<char> within_budget;  // g(S) <= 1
  bool monotone;
};

RcmstView make_view(const RcmstInstance& inst) {
  RcmstView view;
  view.n = inst.load.num_vertices();
  std::vector<Edge> inner;
  for (const Edge& e : inst.graph.edges())
    if (e.u != 0) inner.push_back({e.u - 1, e.v - 1});
  view.customers = Graph(view.n, inner);
  for (const Edge& e : inst.graph.edges())
    view.to_customer.push_back(e.u == 0 ? -1 : *view.customers.edge_id(e.u - 1, e.v - 1));
  const auto values = inst.load.tabulate();
  for (const auto& v : values) view.within_budget.push_back(v <= 1 ? 1 : 0);
  view.monotone = is_monotone(inst.load);
  return view;
}

EdgeSet customer_edges(const RcmstView& view, EdgeSet tree) {
  EdgeSet out;
  for (int id : tree.indices())
    if (view.to_customer[static_cast<std::size_t>(id)] >= 0) out = out.with(view.to_customer[static_cast<std::size_t>(id)]);
  return out;
}

bool tree_feasible(const RcmstInstance& inst, const RcmstView& view, EdgeSet tree) {
  const Forest f{VertexSet::full(view.n), customer_edges(view, tree)};
  if (view.monotone) {
    for (VertexSet comp : component_vertex_sets(view.customers, f))
      if (!view.within_budget[comp.bits()]) return false;
    return true;
  }
  const TreeFamily theta = TreeFamily::theta(inst.load);
  for (const auto& t : components(view.customers, f))
    if (!theta.contains(view.customers, t)) return false;
  return true;
}

}  // namespace

void validate(const RcmstInstance& inst) {
  const int n = inst.load.num_vertices();
  if (inst.graph.num_vertices() != n + 1) throw BadParams("RCMST graph must have one vertex per customer plus the depot");
  require_within_cap(n, "RCMST solver");
  if (inst.costs.size() != static_cast<std::size_t>(inst.graph.num_edges())) throw BadParams("one cost per edge");
  DisjointSets ds(n + 1);
  for (const Edge& e : inst.graph.edges()) ds.parent[static_cast<std::size_t>(ds.find(e.u))] = ds.find(e.v);
  for (int v = 1; v <= n; ++v)
    if (ds.find(v) != ds.find(0)) throw BadParams("RCMST graph is not connected");
  if (const auto sub = is_subadditive(inst.load); !sub.subadditive)
    throw PreconditionFailed("load function is not subadditive");
}

bool rcmst_tree_feasible(const RcmstInstance& inst, EdgeSet tree) {
  const int n = inst.load.num_vertices();
  if (tree.size() != n || !inst.graph.is_acyclic(tree)) return false;
  return tree_feasible(inst, make_view(inst), tree);
}

std::optional<RcmstSolution> oracle_solve_rcmst(const RcmstInstance& inst, long long tree_cap) {
  validate(inst);
  const RcmstView view = make_view(inst);
  const Graph& g = inst.graph;
  const int need = view.n;
  const int m = g.num_edges();
  long long trees = 0;
  std::optional<RcmstSolution> best;

  auto rec = [&](auto&& self, int id, EdgeSet chosen, std::vector<int> comp) -> void {
    if (chosen.size() == need) {
      if (++trees > tree_cap) throw CapExceeded("spanning tree count exceeds the enumeration cap");
      if (!tree_feasible(inst, view, chosen)) return;
      Rational cost = 0;
      for (int e : chosen.indices()) cost += inst.costs[static_cast<std::size_t>(e)];
      if (!best || cost < best->cost || (cost == best->cost && chosen < best->tree))
        best = RcmstSolution{chosen, std::move(cost)};
      return;
    }
    if (id == m || m - id < need - chosen.size()) return;
    const Edge& e = g.edge(id);
    const int cu = comp[static_cast<std::size_t>(e.u)], cv = comp[static_cast<std::size_t>(e.v)];
    if (cu != cv) {
      std::vector<int> merged = comp;
      for (auto& c : merged)
        if (c == cv) c = cu;
      self(self, id + 1, chosen.with(id), std::move(merged));
    }
    self(self, id + 1, chosen, std::move(comp));
  };
  std::vector<int> comp(static_cast<std::size_t>(need + 1));
  std::iota(comp.begin(), comp.end(), 0);
  rec(rec, 0, EdgeSet{}, comp);
  return best;
}

std::optional<RcmstSolution> bnb_solve_rcmst(const RcmstInstance& inst) {
  validate(inst);
  const RcmstView view = make_view(inst);
  const int n = view.n;
  for (int v = 0; v < n; ++v)
    if (!view.within_budget[std::size_t{1} << v]) return std::nullopt;

  // f = max{1, ceil g}, clamped to |S| so the table stays an RHS function.
  const auto values = inst.load.tabulate();
  std::vector<int> f(values.size(), 0);
  for (std::size_t s = 1; s < values.size(); ++s)
    f[s] = static_cast<int>(std::clamp<std::int64_t>(ceil_int(values[s]), 1, std::popcount(s)));
  const RhsTable rhs(n, std::move(f));

  const Graph& g = inst.graph;
  const int m = g.num_edges();
  const auto scaled = scale_to_integers(inst.costs).values;
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scaled[static_cast<std::size_t>(a)] < scaled[static_cast<std::size_t>(b)]; });

  std::int64_t best_cost = kInf;
  EdgeSet best_tree;
  auto rec = [&](auto&& self, int pos, int count, EdgeSet chosen, EdgeSet inner, std::int64_t cost,
                 std::vector<int> comp) -> void {
    if (count == n) {
      if (!gsecs_hold(view.customers, rhs, inner, 0)) return;
      if (cost < best_cost || (cost == best_cost && chosen < best_tree)) {
        best_cost = cost;
        best_tree = chosen;
      }
      return;
    }
    if (m - pos < n - count) return;
    std::int64_t bound = cost;
    for (int p = pos, taken = 0; taken < n - count; ++p, ++taken) bound += scaled[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])];
    if (bound > best_cost) return;

    const int id = order[static_cast<std::size_t>(pos)];
    const Edge& e = g.edge(id);
    const int cu = comp[static_cast<std::size_t>(e.u)], cv = comp[static_cast<std::size_t>(e.v)];
    if (cu != cv) {
      EdgeSet next_inner = inner;
      bool ok = true;
      const int ce = view.to_customer[static_cast<std::size_t>(id)];
      if (ce >= 0) {
        next_inner = inner.with(ce);
        ok = gsecs_hold(view.customers, rhs, next_inner, (std::uint32_t{1} << (e.u - 1)) | (std::uint32_t{1} << (e.v - 1)));
      }
      if (ok) {
        std::vector<int> merged = comp;
        for (auto& c : merged)
          if (c == cv) c = cu;
        self(self, pos + 1, count + 1, chosen.with(id), next_inner, cost + scaled[static_cast<std::size_t>(id)],
             std::move(merged));
      }
    }
    self(self, pos + 1, count, chosen, inner, cost, std::move(comp));
  };
  std::vector<int> comp(static_cast<std::size_t>(n + 1));
  std::iota(comp.begin(), comp.end(), 0);
  rec(rec, 0, 0, EdgeSet{}, EdgeSet{}, 0, comp);
  if (best_cost >= kInf) return std::nullopt;
  Rational cost = 0;
  for (int e : best_tree.indices()) cost += inst.costs[static_cast<std::size_t>(e)];
  return RcmstSolution{best_tree, std::move(cost)};
}

std::optional<RcmstSolution> solve_rcmst(const RcmstInstance& inst) {
  auto bnb = bnb_solve_rcmst(inst);
  const auto oracle = oracle_solve_rcmst(inst);
  if (bnb.has_value() != oracle.has_value())
    throw InternalMismatch("RCMST branch and bound and tree enumeration disagree on feasibility");
  if (bnb && bnb->cost != oracle->cost)
    throw InternalMismatch("RCMST branch and bound cost " + to_string(bnb->cost) + " differs from enumeration cost " +
                           to_string(oracle->cost));
  if (bnb && !rcmst_tree_feasible(inst, bnb->tree))
    throw InternalMismatch("RCMST branch and bound returned a tree outside Theta(g)");
  return bnb;
}

}  // namespace gsec
