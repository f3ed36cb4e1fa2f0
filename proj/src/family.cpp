#include "gsec/family.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "gsec/errors.hpp"

namespace gsec {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_brp_demands(std::span<const Rational> d, const Rational& capacity) {
  if (capacity < 0) throw InvalidDemand("capacity Q must be nonnegative");
  for (std::size_t v = 0; v < d.size(); ++v)
    if (abs(d[v]) > capacity)
      throw InvalidDemand("|d_" + std::to_string(v) + "| = " + to_string(abs(d[v])) + " exceeds Q = " +
                          to_string(capacity));
}

void check_capacity_demands(std::span<const Rational> d, const Rational& capacity) {
  if (capacity < 0) throw InvalidDemand("capacity Q must be nonnegative");
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] < 0 || d[v] > capacity)
      throw InvalidDemand("d_" + std::to_string(v) + " = " + to_string(d[v]) + " is outside [0, Q]");
}

void require_demand_size(std::size_t got, const Graph& host) {
  if (got != static_cast<std::size_t>(host.num_vertices()))
    throw BadParams("demand vector has " + std::to_string(got) + " entries for a graph on " +
                    std::to_string(host.num_vertices()) + " vertices");
}

bool is_path_of(const Graph& g, std::span<const int> order) {
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (!g.edge_id(order[i], order[i + 1])) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- PathFamily

PathFamily PathFamily::all() { return PathFamily(All{}); }

PathFamily PathFamily::explicit_paths(std::vector<PathSeq> paths) {
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return PathFamily(Explicit{std::move(paths)});
}

PathFamily PathFamily::brp(std::vector<Rational> d, Rational capacity) {
  if (capacity <= 0) throw BadParams("capacity Q must be positive");
  check_brp_demands(d, capacity);
  return PathFamily(Brp{std::move(d), std::move(capacity)});
}

PathFamily PathFamily::cvrp(std::vector<Rational> d, Rational capacity) {
  if (capacity <= 0) throw BadParams("capacity Q must be positive");
  check_capacity_demands(d, capacity);
  return PathFamily(Cvrp{std::move(d), std::move(capacity)});
}

std::string PathFamily::kind_name() const {
  return std::visit(Overloaded{[](const All&) { return "all"; }, [](const Explicit&) { return "explicit"; },
                               [](const Brp&) { return "brp"; }, [](const Cvrp&) { return "cvrp"; }},
                    kind_);
}

bool PathFamily::contains(const PathSeq& p) const {
  return std::visit(
      Overloaded{
          [](const All&) { return true; },
          [&](const Explicit& e) { return std::binary_search(e.paths.begin(), e.paths.end(), p); },
          [&](const Brp& b) { return brp_path_feasible(b.d, b.capacity, p.verts()); },
          [&](const Cvrp& c) { return sum_over(c.d, p.vertex_set().bits()) <= c.capacity; },
      },
      kind_);
}

// ---------------------------------------------------------------- TreeFamily

TreeFamily TreeFamily::theta(SetFunction g) {
  const auto values = g.tabulate();
  std::vector<char> ok(values.size());
  for (std::size_t s = 0; s < values.size(); ++s) ok[s] = values[s] <= 1 ? 1 : 0;
  return TreeFamily(Theta{std::move(g), std::move(ok)});
}

TreeFamily TreeFamily::explicit_trees(std::vector<Forest> trees) {
  for (const auto& t : trees)
    if (t.num_components() != 1) throw BadParams("explicit tree family entry is not a tree");
  std::sort(trees.begin(), trees.end());
  trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
  return TreeFamily(ExplicitTrees{std::move(trees)});
}

TreeFamily TreeFamily::paths(PathFamily routes) { return TreeFamily(Paths{std::move(routes)}); }

std::string TreeFamily::kind_name() const {
  return std::visit(Overloaded{[](const Theta&) { return "theta"; }, [](const ExplicitTrees&) { return "explicit"; },
                               [](const Paths&) { return "paths"; }},
                    kind_);
}

bool TreeFamily::contains(const Graph& host, const Forest& tree) const {
  return std::visit(
      Overloaded{
          [&](const Theta& t) {
            // Subtrees of a tree are exactly the vertex subsets W with
            // |E(T) inside W| = |W| - 1.
            const std::uint32_t all = tree.verts.bits();
            for (std::uint32_t w = all; w != 0; w = (w - 1) & all) {
              const VertexSet ws(w);
              if ((tree.edges & host.edges_within(ws)).size() == ws.size() - 1 && !t.within_budget[w]) return false;
            }
            return true;
          },
          [&](const ExplicitTrees& e) { return std::binary_search(e.trees.begin(), e.trees.end(), tree); },
          [&](const Paths& p) {
            const auto path = forest_to_path(host, tree);
            return path.has_value() && p.routes.contains(*path);
          },
      },
      kind_);
}

// -------------------------------------------------------------- ForestFamily

ForestFamily ForestFamily::all(Graph host) { return ForestFamily(std::move(host), All{}); }

ForestFamily ForestFamily::explicit_forests(Graph host, std::vector<Forest> forests) {
  for (const auto& f : forests) make_forest(host, f.verts, f.edges);
  std::sort(forests.begin(), forests.end());
  forests.erase(std::unique(forests.begin(), forests.end()), forests.end());
  return ForestFamily(std::move(host), Explicit{std::move(forests)});
}

ForestFamily ForestFamily::cmst(Graph host, std::vector<Rational> d, Rational capacity) {
  require_demand_size(d.size(), host);
  check_capacity_demands(d, capacity);
  return ForestFamily(std::move(host), Cmst{std::move(d), std::move(capacity)});
}

ForestFamily ForestFamily::degree_bounded(Graph host, std::vector<int> bounds) {
  if (bounds.size() != static_cast<std::size_t>(host.num_vertices()))
    throw BadParams("degree bound vector must have one entry per vertex");
  for (int b : bounds)
    if (b < 0) throw BadParams("degree bounds must be nonnegative");
  return ForestFamily(std::move(host), DegreeBounded{std::move(bounds)});
}

ForestFamily ForestFamily::tree_closure(Graph host, TreeFamily trees) {
  if (const auto* t = std::get_if<TreeFamily::Theta>(&trees.kind());
      t && t->g.num_vertices() != host.num_vertices())
    throw BadParams("set function ground set does not match the host graph");
  if (const auto* p = std::get_if<TreeFamily::Paths>(&trees.kind())) {
    if (const auto* b = std::get_if<PathFamily::Brp>(&p->routes.kind())) require_demand_size(b->d.size(), host);
    if (const auto* c = std::get_if<PathFamily::Cvrp>(&p->routes.kind())) require_demand_size(c->d.size(), host);
  }
  if (const auto* e = std::get_if<TreeFamily::ExplicitTrees>(&trees.kind()))
    for (const auto& t : e->trees) make_forest(host, t.verts, t.edges);
  return ForestFamily(std::move(host), TreeClosure{std::move(trees)});
}

ForestFamily ForestFamily::path_restriction(ForestFamily base) {
  Graph host = base.host();
  return ForestFamily(std::move(host), PathRestriction{std::make_shared<const ForestFamily>(std::move(base))});
}

ForestFamily ForestFamily::linear_forests(Graph host) { return path_restriction(all(std::move(host))); }

ForestFamily ForestFamily::brp(Graph host, std::vector<Rational> d, Rational capacity) {
  return routes(std::move(host), PathFamily::brp(std::move(d), std::move(capacity)));
}

ForestFamily ForestFamily::theta(Graph host, SetFunction g) {
  return tree_closure(std::move(host), TreeFamily::theta(std::move(g)));
}

ForestFamily ForestFamily::routes(Graph host, PathFamily r) {
  return tree_closure(std::move(host), TreeFamily::paths(std::move(r)));
}

std::string ForestFamily::kind_name() const {
  return std::visit(Overloaded{[](const All&) { return "all"; }, [](const Explicit&) { return "explicit"; },
                               [](const Cmst&) { return "cmst"; }, [](const DegreeBounded&) { return "degree"; },
                               [](const TreeClosure&) { return "tree_closure"; },
                               [](const PathRestriction&) { return "path_restriction"; }},
                    kind_);
}

bool ForestFamily::contains(const Forest& f) const {
  return std::visit(
      Overloaded{
          [](const All&) { return true; },
          [&](const Explicit& e) { return std::binary_search(e.forests.begin(), e.forests.end(), f); },
          [&](const Cmst& c) {
            for (VertexSet comp : component_vertex_sets(host_, f))
              if (sum_over(c.d, comp.bits()) > c.capacity) return false;
            return true;
          },
          [&](const DegreeBounded& d) {
            for (int v : f.verts.indices())
              if ((f.edges & host_.incident(v)).size() > d.bounds[static_cast<std::size_t>(v)]) return false;
            return true;
          },
          [&](const TreeClosure& t) {
            for (const auto& tree : components(host_, f))
              if (!t.trees.contains(host_, tree)) return false;
            return true;
          },
          [&](const PathRestriction& p) { return max_degree(host_, f) <= 2 && p.base->contains(f); },
      },
      kind_);
}

// ------------------------------------------------------- structural checks

std::vector<Forest> members(const ForestFamily& fam) {
  std::vector<Forest> out;
  for (const auto& f : enumerate_forests(fam.host()))
    if (fam.contains(f)) out.push_back(f);
  return out;
}

ForestFamily materialize(const ForestFamily& fam) {
  if (std::holds_alternative<ForestFamily::Explicit>(fam.kind())) return fam;
  return ForestFamily::explicit_forests(fam.host(), members(fam));
}

CheckResult is_downward_closed(const ForestFamily& fam) {
  for (const auto& f : enumerate_forests(fam.host())) {
    if (!fam.contains(f)) continue;
    for (const auto& sub : maximal_proper_subgraphs(fam.host(), f))
      if (!fam.contains(sub)) return CheckResult::fail(ForestPair{f, sub, "missing_subgraph"});
  }
  return CheckResult::ok();
}

namespace {

// Groups all forests by a key and reports the smallest key whose group holds
// both a member and a non-member.
template <class KeyFn>
CheckResult consistent_by(const ForestFamily& fam, KeyFn key, const char* relation) {
  struct Group {
    std::optional<Forest> in, out;
  };
  std::map<decltype(key(Forest{})), Group> groups;
  for (const auto& f : enumerate_forests(fam.host())) {
    auto& grp = groups[key(f)];
    auto& slot = fam.contains(f) ? grp.in : grp.out;
    if (!slot) slot = f;
  }
  for (const auto& [k, grp] : groups)
    if (grp.in && grp.out) return CheckResult::fail(ForestPair{*grp.in, *grp.out, relation});
  return CheckResult::ok();
}

}  // namespace

CheckResult is_edge_consistent(const ForestFamily& fam) {
  return consistent_by(fam, [](const Forest& f) { return f.edges.bits(); }, "same_edge_set");
}

// Forests are compared when their trees span the same vertex sets, so a
// spanning tree is never weighed against an edgeless forest.
CheckResult is_vertex_consistent(const ForestFamily& fam) {
  const Graph& g = fam.host();
  return consistent_by(fam, [&g](const Forest& f) { return component_vertex_sets(g, f); }, "same_vertex_set");
}

ForestFamily edge_consistent_closure(const ForestFamily& fam) {
  const auto all = enumerate_forests(fam.host());
  std::vector<std::uint64_t> edge_sets;
  for (const auto& f : all)
    if (fam.contains(f)) edge_sets.push_back(f.edges.bits());
  std::sort(edge_sets.begin(), edge_sets.end());
  std::vector<Forest> out;
  for (const auto& f : all)
    if (std::binary_search(edge_sets.begin(), edge_sets.end(), f.edges.bits())) out.push_back(f);
  return ForestFamily::explicit_forests(fam.host(), std::move(out));
}

CheckResult contains_edgeless(const ForestFamily& fam) {
  const std::uint32_t count = std::uint32_t{1} << fam.host().num_vertices();
  for (std::uint32_t s = 0; s < count; ++s) {
    const Forest f = edgeless_forest(VertexSet(s));
    if (!fam.contains(f)) return CheckResult::fail(ForestWitness{f, "missing_edgeless"});
  }
  return CheckResult::ok();
}

// -------------------------------------------------------------------- BRP

bool brp_feasible_prefix_band(std::span<const Rational> d, const Rational& capacity, std::span<const int> order) {
  Rational prefix = 0, hi = 0, lo = 0;
  for (int v : order) {
    prefix += d[static_cast<std::size_t>(v)];
    if (prefix > hi) hi = prefix;
    if (prefix < lo) lo = prefix;
    if (hi - lo > capacity) return false;
  }
  return true;
}

bool brp_feasible_interval_sums(std::span<const Rational> d, const Rational& capacity, std::span<const int> order) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    Rational sum = 0;
    for (std::size_t j = i; j < order.size(); ++j) {
      sum += d[static_cast<std::size_t>(order[j])];
      if (abs(sum) > capacity) return false;
    }
  }
  return true;
}

bool brp_path_feasible(std::span<const Rational> d, const Rational& capacity, std::span<const int> order) {
  check_brp_demands(d, capacity);
  for (int v : order)
    if (v < 0 || static_cast<std::size_t>(v) >= d.size()) throw BadParams("path vertex has no demand entry");
  const bool band = brp_feasible_prefix_band(d, capacity, order);
  if (band != brp_feasible_interval_sums(d, capacity, order))
    throw InternalMismatch("BRP prefix-band and interval-sum evaluators disagree");
  return band;
}

// ------------------------------------------------------ path family checks

CheckResult contains_trivial_paths(const PathFamily& r, const Graph& g) {
  if (!r.contains(PathSeq{})) return CheckResult::fail(PathPair{PathSeq{}, PathSeq{}, "trivial_path"});
  for (int v = 0; v < g.num_vertices(); ++v) {
    PathSeq p({v});
    if (!r.contains(p)) return CheckResult::fail(PathPair{p, p, "trivial_path"});
  }
  return CheckResult::ok();
}

CheckResult is_subpath_closed(const PathFamily& r, const Graph& g) {
  for (const auto& p : enumerate_paths(g)) {
    if (p.empty() || !r.contains(p)) continue;
    const auto vs = p.verts();
    const PathSeq drop_front(std::vector<int>(vs.begin() + 1, vs.end()));
    const PathSeq drop_back(std::vector<int>(vs.begin(), vs.end() - 1));
    for (const auto& sub : {drop_front, drop_back})
      if (!r.contains(sub)) return CheckResult::fail(PathPair{p, sub, "subpath"});
  }
  return CheckResult::ok();
}

CheckResult is_subsequence_closed(const PathFamily& r, const Graph& g) {
  for (const auto& p : enumerate_paths(g)) {
    if (p.empty() || !r.contains(p)) continue;
    const auto vs = p.verts();
    const std::uint32_t full = (std::uint32_t{1} << vs.size()) - 1;
    for (std::uint32_t keep = 0; keep < full; ++keep) {
      std::vector<int> order;
      for (std::size_t i = 0; i < vs.size(); ++i)
        if ((keep >> i) & 1U) order.push_back(vs[i]);
      if (!is_path_of(g, order)) continue;
      PathSeq sub(std::move(order));
      if (!r.contains(sub)) return CheckResult::fail(PathPair{p, sub, "subsequence"});
    }
  }
  return CheckResult::ok();
}

CheckResult is_vertex_consistent(const PathFamily& r, const Graph& g) {
  std::map<std::uint32_t, std::pair<std::optional<PathSeq>, std::optional<PathSeq>>> groups;
  for (const auto& p : enumerate_paths(g)) {
    auto& grp = groups[p.vertex_set().bits()];
    auto& slot = r.contains(p) ? grp.first : grp.second;
    if (!slot) slot = p;
  }
  for (const auto& [k, grp] : groups)
    if (grp.first && grp.second) return CheckResult::fail(PathPair{*grp.first, *grp.second, "vertex_consistency"});
  return CheckResult::ok();
}

}  // namespace gsec
