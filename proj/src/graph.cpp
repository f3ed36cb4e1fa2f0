#include "gsec/graph.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <sstream>

#include "gsec/errors.hpp"

namespace gsec {

namespace {

std::atomic<int> g_cap{kDefaultEnumerationCap};

constexpr int kWithinCacheLimit = 12;

struct DisjointSets {
  std::array<std::int8_t, kMaxVertices> parent{};
  DisjointSets() { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = static_cast<std::int8_t>(b);
    return true;
  }
};

}  // namespace

int enumeration_cap() { return g_cap.load(); }

void set_enumeration_cap(int cap) {
  if (cap < 1 || cap > kMaxVertices) throw BadParams("enumeration cap must lie in [1, 32]");
  g_cap.store(cap);
}

void require_within_cap(int n, const char* what) {
  if (n > enumeration_cap())
    throw CapExceeded(std::string(what) + ": " + std::to_string(n) + " vertices exceeds cap " +
                      std::to_string(enumeration_cap()));
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) throw InvalidGraph("vertex count must lie in [0, 32]");
  for (auto& e : edges_) {
    if (e.u == e.v) throw InvalidGraph("self loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InvalidGraph("edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidGraph("parallel edges are not supported");
  if (num_edges() > kMaxEdges) throw InvalidGraph("at most 64 edges are supported");

  incident_.assign(static_cast<std::size_t>(n), EdgeSet{});
  id_matrix_.assign(static_cast<std::size_t>(n * n), -1);
  for (int id = 0; id < num_edges(); ++id) {
    const auto& e = edges_[static_cast<std::size_t>(id)];
    incident_[static_cast<std::size_t>(e.u)] = incident_[static_cast<std::size_t>(e.u)].with(id);
    incident_[static_cast<std::size_t>(e.v)] = incident_[static_cast<std::size_t>(e.v)].with(id);
    id_matrix_[static_cast<std::size_t>(e.u * n + e.v)] = id;
    id_matrix_[static_cast<std::size_t>(e.v * n + e.u)] = id;
  }
  if (n <= kWithinCacheLimit) {
    const std::size_t count = std::size_t{1} << n;
    within_.assign(count, EdgeSet{});
    // E(S) = E(S - {v}) plus the edges from v into S - {v}, v = lowest vertex.
    for (std::size_t s = 1; s < count; ++s) {
      const int v = std::countr_zero(s);
      const std::size_t rest = s & (s - 1);
      EdgeSet add;
      for (int id : incident_[static_cast<std::size_t>(v)].indices()) {
        const auto& e = edges_[static_cast<std::size_t>(id)];
        const int other = e.u == v ? e.v : e.u;
        if ((rest >> other) & 1U) add = add.with(id);
      }
      within_[s] = within_[rest] | add;
    }
  }
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

std::optional<int> Graph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  const int id = id_matrix_[static_cast<std::size_t>(u * n_ + v)];
  if (id < 0) return std::nullopt;
  return id;
}

EdgeSet Graph::edges_within(VertexSet s) const {
  if (s.bits() < within_.size()) return within_[s.bits()];
  EdgeSet out;
  for (int id = 0; id < num_edges(); ++id) {
    const auto& e = edges_[static_cast<std::size_t>(id)];
    if (s.contains(e.u) && s.contains(e.v)) out = out.with(id);
  }
  return out;
}

VertexSet Graph::endpoints(EdgeSet es) const {
  VertexSet out;
  for (auto b = es.bits(); b != 0; b &= b - 1) {
    const auto& e = edges_[static_cast<std::size_t>(std::countr_zero(b))];
    out = out.with(e.u).with(e.v);
  }
  return out;
}

bool Graph::is_acyclic(EdgeSet es) const {
  DisjointSets ds;
  for (auto b = es.bits(); b != 0; b &= b - 1) {
    const auto& e = edges_[static_cast<std::size_t>(std::countr_zero(b))];
    if (!ds.unite(e.u, e.v)) return false;
  }
  return true;
}

bool is_forest(const Graph& g, VertexSet verts, EdgeSet edges) {
  if (!verts.subset_of(g.all_vertices()) || !edges.subset_of(g.all_edges())) return false;
  if (!g.endpoints(edges).subset_of(verts)) return false;
  return g.is_acyclic(edges);
}

Forest make_forest(const Graph& g, VertexSet verts, EdgeSet edges) {
  if (!verts.subset_of(g.all_vertices())) throw InvalidGraph("forest vertex outside host graph");
  if (!edges.subset_of(g.all_edges())) throw InvalidGraph("forest edge outside host graph");
  if (!g.endpoints(edges).subset_of(verts))
    throw InvalidGraph("forest edge endpoint missing from its vertex set");
  if (!g.is_acyclic(edges)) throw InvalidGraph("edge set contains a cycle");
  return Forest{verts, edges};
}

Forest edgeless_forest(VertexSet verts) { return Forest{verts, EdgeSet{}}; }

std::vector<Forest> enumerate_forests_on(const Graph& g, VertexSet s) {
  const std::vector<int> ids = g.edges_within(s).indices();
  std::vector<Forest> out;
  // Depth-first include/exclude over E(S) with incremental union-find.
  auto rec = [&](auto&& self, std::size_t i, EdgeSet chosen, DisjointSets ds) -> void {
    if (i == ids.size()) {
      out.push_back(Forest{s, chosen});
      return;
    }
    self(self, i + 1, chosen, ds);
    const auto& e = g.edge(ids[i]);
    if (ds.unite(e.u, e.v)) self(self, i + 1, chosen.with(ids[i]), ds);
  };
  rec(rec, 0, EdgeSet{}, DisjointSets{});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> enumerate_forests(const Graph& g) {
  require_within_cap(g.num_vertices(), "enumerate_forests");
  std::vector<Forest> out;
  const std::uint32_t count = std::uint32_t{1} << g.num_vertices();
  for (std::uint32_t s = 0; s < count; ++s) {
    auto part = enumerate_forests_on(g, VertexSet(s));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Forest induced_subforest(const Graph& g, const Forest& f, VertexSet s) {
  const VertexSet verts = f.verts & s;
  return Forest{verts, f.edges & g.edges_within(verts)};
}

std::vector<VertexSet> component_vertex_sets(const Graph& g, const Forest& f) {
  DisjointSets ds;
  for (auto b = f.edges.bits(); b != 0; b &= b - 1) {
    const auto& e = g.edge(std::countr_zero(b));
    ds.unite(e.u, e.v);
  }
  std::array<std::uint32_t, kMaxVertices> by_root{};
  for (int v : f.verts.indices()) by_root[static_cast<std::size_t>(ds.find(v))] |= std::uint32_t{1} << v;
  std::vector<VertexSet> out;
  for (auto bits : by_root)
    if (bits != 0) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.first() < b.first(); });
  return out;
}

std::vector<Forest> components(const Graph& g, const Forest& f) {
  std::vector<Forest> out;
  for (VertexSet c : component_vertex_sets(g, f)) out.push_back(induced_subforest(g, f, c));
  return out;
}

int max_degree(const Graph& g, const Forest& f) {
  int best = 0;
  for (int v : f.verts.indices()) best = std::max(best, (f.edges & g.incident(v)).size());
  return best;
}

std::vector<Forest> maximal_proper_subgraphs(const Graph& g, const Forest& f) {
  std::vector<Forest> out;
  for (int id : f.edges.indices()) out.push_back(Forest{f.verts, f.edges.without(id)});
  for (int v : f.verts.indices())
    if ((f.edges & g.incident(v)).empty()) out.push_back(Forest{f.verts.without(v), f.edges});
  return out;
}

std::vector<Forest> proper_subgraphs(const Graph& g, const Forest& f) {
  std::vector<Forest> out;
  const auto all_e = f.edges.bits();
  std::uint64_t sub_e = 0;
  do {
    const EdgeSet es(sub_e);
    const VertexSet required = g.endpoints(es);
    const auto optional = (f.verts - required).bits();
    std::uint32_t sub_v = 0;
    do {
      Forest h{required | VertexSet(sub_v), es};
      if (h != f) out.push_back(h);
      sub_v = (sub_v - optional) & optional;
    } while (sub_v != 0);
    sub_e = (sub_e - all_e) & all_e;
  } while (sub_e != 0);
  std::sort(out.begin(), out.end());
  return out;
}

PathSeq::PathSeq(std::vector<int> verts) : verts_(std::move(verts)) {
  std::uint32_t seen = 0;
  for (int v : verts_) {
    if (v < 0 || v >= kMaxVertices) throw InvalidGraph("path vertex out of range");
    if ((seen >> v) & 1U) throw InvalidGraph("path repeats vertex " + std::to_string(v));
    seen |= std::uint32_t{1} << v;
  }
  if (verts_.size() > 1 && verts_.front() > verts_.back()) std::reverse(verts_.begin(), verts_.end());
}

VertexSet PathSeq::vertex_set() const {
  VertexSet s;
  for (int v : verts_) s = s.with(v);
  return s;
}

Forest path_to_forest(const Graph& g, const PathSeq& p) {
  Forest f{p.vertex_set(), EdgeSet{}};
  if (!f.verts.subset_of(g.all_vertices())) throw InvalidGraph("path vertex outside host graph");
  const auto vs = p.verts();
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const auto id = g.edge_id(vs[i], vs[i + 1]);
    if (!id) throw InvalidGraph("path uses a non-edge " + std::to_string(vs[i]) + "-" + std::to_string(vs[i + 1]));
    f.edges = f.edges.with(*id);
  }
  return f;
}

std::optional<PathSeq> forest_to_path(const Graph& g, const Forest& f) {
  if (f.empty()) return PathSeq{};
  if (f.num_components() != 1 || max_degree(g, f) > 2) return std::nullopt;
  int start = -1;
  for (int v : f.verts.indices())
    if ((f.edges & g.incident(v)).size() <= 1) {
      start = v;
      break;
    }
  std::vector<int> order{start};
  EdgeSet left = f.edges;
  int cur = start;
  while (!left.empty()) {
    const EdgeSet out = left & g.incident(cur);
    const int id = out.first();
    const auto& e = g.edge(id);
    cur = e.u == cur ? e.v : e.u;
    left = left.without(id);
    order.push_back(cur);
  }
  return PathSeq(std::move(order));
}

std::vector<PathSeq> enumerate_paths(const Graph& g) {
  require_within_cap(g.num_vertices(), "enumerate_paths");
  std::vector<PathSeq> out;
  out.emplace_back();
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::uint32_t used) -> void {
    if (cur.size() == 1 || cur.front() < cur.back()) out.emplace_back(cur);
    const int last = cur.back();
    for (int id : g.incident(last).indices()) {
      const auto& e = g.edge(id);
      const int next = e.u == last ? e.v : e.u;
      if ((used >> next) & 1U) continue;
      cur.push_back(next);
      self(self, used | (std::uint32_t{1} << next));
      cur.pop_back();
    }
  };
  for (int s = 0; s < g.num_vertices(); ++s) {
    cur = {s};
    rec(rec, std::uint32_t{1} << s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Forest> enumerate_trees(const Graph& g) {
  std::vector<Forest> out;
  for (const auto& f : enumerate_forests(g))
    if (f.num_components() == 1) out.push_back(f);
  return out;
}

std::string describe(const Graph& g, const Forest& f) {
  std::ostringstream os;
  os << "V={";
  bool first = true;
  for (int v : f.verts.indices()) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "} E={";
  first = true;
  for (int id : f.edges.indices()) {
    os << (first ? "" : ",") << g.edge(id).u << "-" << g.edge(id).v;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace gsec
