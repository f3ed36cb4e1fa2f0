#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

VertexSet ends(const Graph& g, EdgeSet es) {
  VertexSet v;
  for (int id : es.indices()) v = v.with(g.edge(id).u).with(g.edge(id).v);
  return v;
}

// Calls fn(sub) for every submask of mask, including 0 and mask.
template <class Mask, class Fn>
void for_submasks(Mask mask, Fn fn) {
  using W = typename Mask::word_type;
  const W m = mask.bits();
  W s = m;
  while (true) {
    fn(Mask(s));
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace

EdgeSet edges_inside(const Graph& g, VertexSet s) {
  EdgeSet out;
  for (int id = 0; id < g.num_edges(); ++id)
    if (s.contains(g.edge(id).u) && s.contains(g.edge(id).v)) out = out.with(id);
  return out;
}

bool acyclic(const Graph& g, EdgeSet es) {
  Dsu d(g.num_vertices());
  for (int id : es.indices())
    if (!d.unite(g.edge(id).u, g.edge(id).v)) return false;
  return true;
}

std::vector<Forest> all_forests(const Graph& g) {
  std::vector<Forest> out;
  const std::uint32_t top = 1u << g.num_vertices();
  for (std::uint32_t s = 0; s < top; ++s) {
    const VertexSet vs(s);
    for_submasks(edges_inside(g, vs), [&](EdgeSet es) {
      if (acyclic(g, es)) out.push_back({vs, es});
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

int count_components(const Graph& g, VertexSet verts, EdgeSet es) {
  return static_cast<int>(pieces(g, verts, es).size());
}

std::vector<VertexSet> pieces(const Graph& g, VertexSet verts, EdgeSet es) {
  Dsu d(g.num_vertices());
  for (int id : es.indices()) d.unite(g.edge(id).u, g.edge(id).v);
  std::vector<VertexSet> out;
  for (int v : verts.indices()) {
    bool placed = false;
    for (auto& p : out)
      if (d.find(p.first()) == d.find(v)) {
        p = p.with(v);
        placed = true;
      }
    if (!placed) out.push_back(VertexSet::single(v));
  }
  return out;
}

std::vector<Forest> minimal_infeasible_by_covers(const Graph& g, const Membership& in_fam, const Membership& in_cond) {
  std::vector<Forest> out;
  for (const Forest& f : all_forests(g)) {
    if (!in_cond(f) || in_fam(f)) continue;
    bool minimal = true;
    for (int id : f.edges.indices()) minimal = minimal && in_fam({f.verts, f.edges.without(id)});
    const VertexSet touched = ends(g, f.edges);
    for (int v : (f.verts - touched).indices()) minimal = minimal && in_fam({f.verts.without(v), f.edges});
    if (minimal) out.push_back(f);
  }
  return out;
}

std::vector<Forest> minimal_infeasible_full(const Graph& g, const Membership& in_fam, const Membership& in_cond) {
  std::vector<Forest> out;
  for (const Forest& f : all_forests(g)) {
    if (!in_cond(f) || in_fam(f)) continue;
    bool minimal = true;
    for_submasks(f.edges, [&](EdgeSet d) {
      const VertexSet need = ends(g, d);
      for_submasks(f.verts - need, [&](VertexSet extra) {
        const Forest sub{need | extra, d};
        if (!(sub == f) && !in_fam(sub)) minimal = false;
      });
    });
    if (minimal) out.push_back(f);
  }
  return out;
}

std::vector<int> lower_bound(const Graph& g, const std::vector<Forest>& minimal) {
  std::vector<int> l(std::size_t(1) << g.num_vertices(), 1);
  l[0] = 0;
  for (const Forest& f : minimal) {
    int& slot = l[f.verts.bits()];
    slot = std::max(slot, 1 + count_components(g, f.verts, f.edges));
  }
  return l;
}

std::vector<int> upper_bound(const Graph& g, const std::vector<Forest>& members) {
  std::vector<int> u(std::size_t(1) << g.num_vertices(), 0);
  for (std::size_t s = 1; s < u.size(); ++s) {
    const VertexSet vs(static_cast<std::uint32_t>(s));
    const EdgeSet inside = edges_inside(g, vs);
    int best = vs.size();
    for (const Forest& f : members) best = std::min(best, vs.size() - (f.edges & inside).size());
    u[s] = best;
  }
  return u;
}

std::vector<EdgeSet> integer_points(const Graph& g, const std::vector<int>& f) {
  const std::size_t subsets = std::size_t(1) << g.num_vertices();
  std::vector<EdgeSet> inside(subsets);
  for (std::size_t s = 0; s < subsets; ++s) inside[s] = edges_inside(g, VertexSet(static_cast<std::uint32_t>(s)));
  std::vector<EdgeSet> out;
  const std::uint64_t top = std::uint64_t(1) << g.num_edges();
  for (std::uint64_t x = 0; x < top; ++x) {
    bool ok = true;
    for (std::size_t s = 1; s < subsets && ok; ++s)
      ok = (EdgeSet(x) & inside[s]).size() <= std::popcount(s) - f[s];
    if (ok) out.push_back(EdgeSet(x));
  }
  return out;
}

bool in_phi(const Graph& g, const std::vector<int>& f, const Forest& forest) {
  bool ok = true;
  for_submasks(forest.edges, [&](EdgeSet d) {
    const VertexSet need = ends(g, d);
    for_submasks(forest.verts - need, [&](VertexSet extra) {
      const VertexSet w = need | extra;
      if (!w.empty() && count_components(g, w, d) < f[w.bits()]) ok = false;
    });
  });
  return ok;
}

namespace {

// Solves the square system a x = b; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

std::vector<std::vector<Rational>> polytope_vertices(const Graph& g, const std::vector<int>& f) {
  const int m = g.num_edges();
  // Rows a x <= b; one GSEC per distinct edge set at its tightest bound.
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (int e = 0; e < m; ++e) {
    std::vector<Rational> lo(static_cast<std::size_t>(m), Rational(0)), hi = lo;
    lo[static_cast<std::size_t>(e)] = -1;
    hi[static_cast<std::size_t>(e)] = 1;
    rows.push_back(lo);
    rhs.push_back(0);
    rows.push_back(hi);
    rhs.push_back(1);
  }
  std::vector<int> tightest(std::size_t(1) << m, 1 << 20);
  for (std::size_t s = 1; s < f.size(); ++s) {
    const EdgeSet in = edges_inside(g, VertexSet(static_cast<std::uint32_t>(s)));
    if (in.empty()) continue;
    int& t = tightest[in.bits()];
    t = std::min(t, std::popcount(s) - f[s]);
  }
  for (std::size_t es = 1; es < tightest.size(); ++es) {
    if (tightest[es] == 1 << 20) continue;
    std::vector<Rational> row(static_cast<std::size_t>(m), Rational(0));
    for (int id : EdgeSet(es).indices()) row[static_cast<std::size_t>(id)] = 1;
    rows.push_back(row);
    rhs.push_back(tightest[es]);
  }
  std::vector<std::vector<Rational>> verts;
  const std::size_t r = rows.size();
  std::vector<int> pick(static_cast<std::size_t>(m));
  std::function<void(int, std::size_t)> rec = [&](int depth, std::size_t from) {
    if (depth == m) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> b;
      for (int i : pick) {
        a.push_back(rows[static_cast<std::size_t>(i)]);
        b.push_back(rhs[static_cast<std::size_t>(i)]);
      }
      auto x = solve_square(a, b);
      if (!x) return;
      for (std::size_t i = 0; i < r; ++i) {
        Rational lhs = 0;
        for (int c = 0; c < m; ++c) lhs += rows[i][static_cast<std::size_t>(c)] * (*x)[static_cast<std::size_t>(c)];
        if (lhs > rhs[i]) return;
      }
      if (std::find(verts.begin(), verts.end(), *x) == verts.end()) verts.push_back(*x);
      return;
    }
    for (std::size_t i = from; i < r; ++i) {
      pick[static_cast<std::size_t>(depth)] = static_cast<int>(i);
      rec(depth + 1, i + 1);
    }
  };
  if (m == 0) return {{}};
  rec(0, 0);
  return verts;
}

Rational lp_vertex_max(const Graph& g, const std::vector<int>& f, VertexSet s) {
  return max_over_vertices(g, polytope_vertices(g, f), s);
}

Rational max_over_vertices(const Graph& g, const std::vector<std::vector<Rational>>& verts, VertexSet s) {
  const EdgeSet in = edges_inside(g, s);
  Rational best = -1;
  for (const auto& x : verts) {
    Rational v = 0;
    for (int id : in.indices()) v += x[static_cast<std::size_t>(id)];
    if (v > best) best = v;
  }
  return best;
}

bool is_linear_forest(const Graph& g, const Forest& f) {
  if (!acyclic(g, f.edges)) return false;
  std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int id : f.edges.indices()) {
    ++deg[static_cast<std::size_t>(g.edge(id).u)];
    ++deg[static_cast<std::size_t>(g.edge(id).v)];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
}

bool brp_by_initial_load(const std::vector<Rational>& d, const Rational& q, const std::vector<int>& order) {
  std::vector<Rational> prefix{Rational(0)};
  for (int v : order) prefix.push_back(prefix.back() + d[static_cast<std::size_t>(v)]);
  std::vector<Rational> candidates{Rational(0), q};
  for (const auto& p : prefix) {
    candidates.push_back(-p);
    candidates.push_back(q - p);
  }
  for (const auto& start : candidates) {
    if (start < 0 || start > q) continue;
    bool ok = true;
    for (const auto& p : prefix) ok = ok && start + p >= 0 && start + p <= q;
    if (ok) return true;
  }
  return false;
}

Rational xos_value(const std::vector<std::vector<Rational>>& w, VertexSet s) {
  Rational best = 0;
  bool first = true;
  for (const auto& vec : w) {
    Rational v = 0;
    for (int i : s.indices()) v += vec[static_cast<std::size_t>(i)];
    if (first || v > best) best = v;
    first = false;
  }
  return s.empty() ? Rational(0) : best;
}

Rational budgeted_value(const std::vector<Rational>& dbar, const std::vector<Rational>& dhat, const Rational& gamma,
                        const Rational& cap, VertexSet s) {
  Rational total = 0;
  std::vector<Rational> dev;
  for (int i : s.indices()) {
    total += dbar[static_cast<std::size_t>(i)];
    dev.push_back(dhat[static_cast<std::size_t>(i)]);
  }
  std::sort(dev.begin(), dev.end(), [](const Rational& a, const Rational& b) { return a > b; });
  Rational budget = gamma;
  for (const auto& h : dev) {
    if (budget <= 0) break;
    const Rational take = budget < 1 ? budget : Rational(1);
    total += take * h;
    budget -= take;
  }
  return total / cap;
}

bool in_theta_closure(const Graph& g, const SetFn& load, const Forest& f) {
  if (!acyclic(g, f.edges) || !ends(g, f.edges).subset_of(f.verts)) return false;
  for (VertexSet piece : pieces(g, f.verts, f.edges)) {
    bool ok = true;
    for_submasks(piece, [&](VertexSet w) {
      if (w.empty()) return;
      if (count_components(g, w, f.edges & edges_inside(g, w)) == 1 && load(w) > 1) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<Rational> vrp_min_cost(const gsec::VrpInstance& inst) {
  const int n = inst.n;
  const Graph kn = Graph::complete(n);
  auto edge_cost = [&](int a, int b) { return inst.edge_costs[static_cast<std::size_t>(*kn.edge_id(a, b))]; };
  const std::size_t masks = std::size_t(1) << n;
  std::vector<std::optional<Rational>> best(masks);
  for (std::size_t m = 1; m < masks; ++m) {
    std::vector<int> perm = VertexSet(static_cast<std::uint32_t>(m)).indices();
    do {
      if (!inst.routes.contains(gsec::PathSeq(perm))) continue;
      Rational c = inst.depot_costs[static_cast<std::size_t>(perm.front())] +
                   inst.depot_costs[static_cast<std::size_t>(perm.back())];
      for (std::size_t i = 0; i + 1 < perm.size(); ++i) c += edge_cost(perm[i], perm[i + 1]);
      if (!best[m] || c < *best[m]) best[m] = c;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  // Restricted growth strings give each partition into exactly k blocks once.
  std::optional<Rational> answer;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (n - i < inst.k - used) return;
    if (i == n) {
      if (used != inst.k) return;
      std::vector<std::uint32_t> block(static_cast<std::size_t>(used), 0);
      for (int v = 0; v < n; ++v) block[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] |= 1u << v;
      Rational total = 0;
      for (auto b : block) {
        if (!best[b]) return;
        total += *best[b];
      }
      if (!answer || total < *answer) answer = total;
      return;
    }
    for (int l = 0; l <= used && l < inst.k; ++l) {
      label[static_cast<std::size_t>(i)] = l;
      rec(i + 1, std::max(used, l + 1));
    }
  };
  rec(0, 0);
  return answer;
}

std::optional<Rational> rcmst_min_cost(const Graph& g, const std::vector<Rational>& costs, const SetFn& load) {
  const int nv = g.num_vertices();
  const int m = g.num_edges();
  std::optional<Rational> answer;
  std::vector<int> pick;
  const VertexSet customers = VertexSet::full(nv).without(0);
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == nv - 1) {
      EdgeSet t;
      for (int id : pick) t = t.with(id);
      if (!acyclic(g, t)) return;
      EdgeSet away;
      for (int id : t.indices())
        if (g.edge(id).u != 0 && g.edge(id).v != 0) away = away.with(id);
      for (VertexSet p : pieces(g, customers, away))
        if (load(VertexSet(p.bits() >> 1)) > 1) return;
      Rational c = 0;
      for (int id : pick) c += costs[static_cast<std::size_t>(id)];
      if (!answer || c < *answer) answer = c;
      return;
    }
    for (int id = from; id < m; ++id) {
      pick.push_back(id);
      rec(id + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return answer;
}

}  // namespace oracle
