#include "gsec/bounds.hpp"

#include <algorithm>

#include "gsec/errors.hpp"

namespace gsec {

namespace {

std::vector<Forest> minimal_infeasible_impl(const ForestFamily& fam, const ForestFamily* cond) {
  const bool down = is_downward_closed(fam).holds;
  const Graph& g = fam.host();
  std::vector<Forest> out;
  for (const auto& f : enumerate_forests(g)) {
    if (fam.contains(f) || (cond && !cond->contains(f))) continue;
    const auto subs = down ? maximal_proper_subgraphs(g, f) : proper_subgraphs(g, f);
    if (std::all_of(subs.begin(), subs.end(), [&](const Forest& s) { return fam.contains(s); })) out.push_back(f);
  }
  return out;
}

LowerBound lower_bound_impl(const ForestFamily& fam, const ForestFamily* cond) {
  const int n = fam.host().num_vertices();
  LowerBound lb;
  lb.values.assign(std::size_t{1} << n, 1);
  lb.values[0] = 0;
  lb.minimal = minimal_infeasible_impl(fam, cond);
  for (const auto& f : lb.minimal) {
    auto& slot = lb.values[f.verts.bits()];
    if (f.verts.empty()) continue;
    slot = std::max(slot, 1 + f.num_components());
    lb.blocking.push_back(f.verts);
  }
  std::sort(lb.blocking.begin(), lb.blocking.end());
  lb.blocking.erase(std::unique(lb.blocking.begin(), lb.blocking.end()), lb.blocking.end());
  for (std::size_t s = 1; s < lb.values.size(); ++s)
    if (lb.values[s] > std::popcount(s)) lb.valid = false;
  return lb;
}

}  // namespace

std::vector<Forest> minimal_infeasible(const ForestFamily& fam) { return minimal_infeasible_impl(fam, nullptr); }

std::vector<Forest> minimal_infeasible(const ForestFamily& fam, const ForestFamily& cond) {
  if (!(cond.host() == fam.host())) throw BadParams("conditioning family lives on a different graph");
  return minimal_infeasible_impl(fam, &cond);
}

RhsTable LowerBound::table() const {
  if (!valid) throw OutOfRange("lower bound exceeds |S| somewhere; it is not an RHS function");
  return RhsTable(std::countr_zero(values.size()), values);
}

LowerBound lower_bound_table(const ForestFamily& fam) { return lower_bound_impl(fam, nullptr); }

LowerBound lower_bound_table(const ForestFamily& fam, const ForestFamily& cond) {
  if (!(cond.host() == fam.host())) throw BadParams("conditioning family lives on a different graph");
  return lower_bound_impl(fam, &cond);
}

RhsTable upper_bound_table(const ForestFamily& fam) {
  const Graph& g = fam.host();
  const auto mem = members(fam);
  if (mem.empty()) throw EmptyFamily("upper bound of an empty family is undefined");
  const std::size_t count = std::size_t{1} << g.num_vertices();
  std::vector<int> u(count, 0);
  for (std::size_t s = 1; s < count; ++s) {
    const EdgeSet inside = g.edges_within(VertexSet(static_cast<std::uint32_t>(s)));
    int best_edges = 0;
    for (const auto& f : mem) best_edges = std::max(best_edges, (f.edges & inside).size());
    u[s] = std::popcount(s) - best_edges;
  }
  return RhsTable(g.num_vertices(), std::move(u));
}

}  // namespace gsec
