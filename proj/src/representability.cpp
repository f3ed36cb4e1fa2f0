#include "gsec/representability.hpp"

#include <algorithm>
#include <map>

#include "gsec/errors.hpp"

namespace gsec {

namespace {

std::vector<EdgeSet> edge_sets_of(const std::vector<Forest>& forests) {
  std::vector<EdgeSet> out;
  for (const auto& f : forests) out.push_back(f.edges);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool phi_contains(std::span<const int> f, const Graph& g, const Forest& forest) {
  const std::uint32_t all = forest.verts.bits();
  for (std::uint32_t s = all; s != 0; s = (s - 1) & all) {
    const VertexSet vs(s);
    if (vs.size() - (forest.edges & g.edges_within(vs)).size() < f[s]) return false;
  }
  return true;
}

CheckResult has_mip_property(const ForestFamily& fam, const LowerBound& ell) {
  for (const auto& f : members(fam))
    if (f.num_components() < ell.values[f.verts.bits()]) return CheckResult::fail(ForestWitness{f, "mip_violation"});
  return CheckResult::ok();
}

CheckResult has_mip_property(const ForestFamily& fam) { return has_mip_property(fam, lower_bound_table(fam)); }

ReprReport is_representable(const ForestFamily& fam, const ReprOptions& opts) {
  ReprReport rep;
  const auto ec = is_edge_consistent(fam);
  rep.edge_consistent = ec.holds;
  if (!ec.holds) rep.certificates.push_back(*ec.certificate);
  rep.auto_closed = !ec.holds;
  const ForestFamily work = ec.holds ? materialize(fam) : edge_consistent_closure(fam);

  const auto mem = members(work);
  rep.nonempty = !mem.empty();
  if (!rep.nonempty) rep.certificates.push_back(ForestWitness{Forest{}, "empty_family"});

  const auto down = is_downward_closed(work);
  rep.downward_closed = down.holds;
  if (!down.holds) rep.certificates.push_back(*down.certificate);

  const auto edgeless = contains_edgeless(work);
  rep.contains_edgeless = edgeless.holds;
  if (!edgeless.holds) rep.certificates.push_back(*edgeless.certificate);

  rep.ell = lower_bound_table(work);
  const auto mip = has_mip_property(work, rep.ell);
  rep.mip_property = mip.holds;
  if (!mip.holds) rep.certificates.push_back(*mip.certificate);

  rep.representable = rep.nonempty && rep.downward_closed && rep.mip_property;
  if (rep.nonempty) rep.u = upper_bound_table(work);

  if (opts.cross_validate) {
    if (rep.ell.valid) {
      const auto direct = represents(GsecPolytope(work.host(), rep.ell.table()), work);
      if (direct.holds != rep.representable)
        throw InternalMismatch("characterization and enumeration of P(l) disagree on representability");
      if (!direct.holds) rep.certificates.push_back(*direct.certificate);
    } else if (rep.representable) {
      throw InternalMismatch("representable family with an out-of-range lower bound");
    }
  }
  return rep;
}

AdmissibleReport rhs_admissible(const ForestFamily& fam, const RhsTable& f) {
  if (f.num_vertices() != fam.host().num_vertices()) throw BadParams("RHS table and family sizes differ");
  AdmissibleReport out;
  const ReprReport rep = is_representable(fam, {.cross_validate = false});
  const ForestFamily work = rep.auto_closed ? edge_consistent_closure(fam) : materialize(fam);
  const GsecPolytope p(work.host(), f);

  std::optional<Certificate> bounds_cert;
  out.representable = rep.representable;
  if (!rep.representable && !rep.certificates.empty()) bounds_cert = rep.certificates.front();
  if (rep.representable) {
    const auto lower = polytope_contains(GsecPolytope(work.host(), rep.ell.table()), p);
    const auto upper = polytope_contains(p, GsecPolytope(work.host(), *rep.u));
    out.lower_contains = lower.holds;
    out.upper_contained = upper.holds;
    if (!lower.holds) bounds_cert = lower.certificate;
    else if (!upper.holds) bounds_cert = upper.certificate;
  }
  const bool by_bounds = out.representable && out.lower_contains && out.upper_contained;
  const auto direct = represents(p, work);
  if (direct.holds != by_bounds)
    throw InternalMismatch("sandwich verdict and enumeration of P(f) disagree on admissibility");
  out.admissible = by_bounds;
  if (!by_bounds) out.certificate = direct.certificate ? direct.certificate : bounds_cert;
  return out;
}

ConditionedReport conditioned_representable(const ForestFamily& h_in, const ForestFamily& c_in,
                                            const std::optional<RhsTable>& f) {
  if (!(h_in.host() == c_in.host())) throw BadParams("families live on different graphs");
  const Graph& g = h_in.host();
  if (f && f->num_vertices() != g.num_vertices()) throw BadParams("RHS table and family sizes differ");
  const ForestFamily c = materialize(c_in);
  const ForestFamily h = materialize(h_in);
  const auto c_members = members(c);
  const auto h_members = members(h);
  if (c_members.empty()) throw PreconditionFailed("conditioning family C is empty");
  if (!is_edge_consistent(c).holds) throw PreconditionFailed("conditioning family C is not edge-consistent");
  if (!is_downward_closed(c).holds) throw PreconditionFailed("conditioning family C is not downward closed");
  if (!is_edge_consistent(h).holds) throw PreconditionFailed("target family H is not edge-consistent");
  for (const auto& m : h_members)
    if (!c.contains(m)) throw PreconditionFailed("target family H is not contained in C: " + describe(g, m));

  ConditionedReport out;
  out.ell = lower_bound_table(h, c);
  if (!h_members.empty()) out.u = upper_bound_table(h);

  out.condition_i = true;
  for (const auto& m : c_members)
    if (h.contains(m) != phi_contains(out.ell.values, g, m)) {
      out.condition_i = false;
      out.certificate = ForestWitness{m, "phi_mismatch"};
      break;
    }

  if (f) out.f_used = *f;
  else if (out.ell.valid) out.f_used = out.ell.table();

  if (out.f_used && out.u && out.ell.valid) {
    const GsecPolytope p(g, *out.f_used);
    const auto upper = polytope_contains(p, GsecPolytope(g, *out.u));
    const auto lower = polytope_contains(GsecPolytope(g, out.ell.table()), p);
    out.condition_ii = upper.holds && lower.holds;
    if (!out.certificate && !upper.holds) out.certificate = upper.certificate;
    if (!out.certificate && !lower.holds) out.certificate = lower.certificate;
  }
  out.holds = out.condition_i && out.condition_ii;

  if (out.f_used) {
    const auto c_edges = edge_sets_of(c_members);
    std::vector<EdgeSet> inside;
    for (EdgeSet es : integer_points(GsecPolytope(g, *out.f_used), false))
      if (std::binary_search(c_edges.begin(), c_edges.end(), es)) inside.push_back(es);
    const bool enumerated = inside == edge_sets_of(h_members);
    if (enumerated != out.holds)
      throw InternalMismatch("conditioned characterization and enumeration of P(f) ∩ C disagree");
  }
  return out;
}

CheckResult path_star_property(const PathFamily& r, const Graph& g) {
  const ForestFamily fam = materialize(ForestFamily::routes(g, r));
  const auto mins = minimal_infeasible(fam, ForestFamily::linear_forests(g));
  std::map<std::uint32_t, std::vector<PathSeq>> by_vertices;
  for (const auto& p : enumerate_paths(g))
    if (!p.empty()) by_vertices[p.vertex_set().bits()].push_back(p);
  for (const auto& m : mins) {
    const auto path = forest_to_path(g, m);
    if (!path) continue;
    for (const auto& other : by_vertices[m.verts.bits()])
      if (r.contains(other)) return CheckResult::fail(PathPair{*path, other, "star"});
  }
  return CheckResult::ok();
}

GhosalReport ghosal_conditions(const PathFamily& r, const Graph& g) {
  GhosalReport rep;
  auto record = [&](const CheckResult& c) {
    if (!c.holds) rep.certificates.push_back(*c.certificate);
    return c.holds;
  };
  rep.trivial_paths = record(contains_trivial_paths(r, g));
  rep.subpath_closed = record(is_subpath_closed(r, g));
  rep.subsequence_closed = record(is_subsequence_closed(r, g));
  rep.star = record(path_star_property(r, g));
  rep.vertex_consistent = record(is_vertex_consistent(r, g));
  rep.corollary_applies = rep.trivial_paths && rep.subpath_closed && rep.star;
  return rep;
}

bool claim_equal_components(const ForestFamily& in) {
  const ForestFamily fam = materialize(in);
  const LowerBound ell = lower_bound_table(fam);
  if (!has_mip_property(fam, ell).holds) throw PreconditionFailed("family lacks the minimal infeasibility property");
  std::map<std::uint32_t, int> seen;
  for (const auto& m : ell.minimal) {
    auto [it, fresh] = seen.emplace(m.verts.bits(), m.num_components());
    if (!fresh && it->second != m.num_components())
      throw InternalMismatch("minimal infeasible forests on the same vertex set differ in component count");
  }
  return true;
}

}  // namespace gsec
