#include "gsec/json_io.hpp"

#include <algorithm>

#include "gsec/errors.hpp"

namespace gsec {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

std::string kind_of(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) throw ParseError("field 'kind' must be a string");
  return k.get<std::string>();
}

std::vector<Rational> rational_list(const Json& j, const std::string& name) {
  if (!j.is_array()) throw ParseError("field '" + name + "' must be an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], name + "[" + std::to_string(i) + "]"));
  return out;
}

Json rational_list_json(std::span<const Rational> xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

Json vertex_list(VertexSet s) {
  Json a = Json::array();
  for (int v : s.indices()) a.push_back(v);
  return a;
}

Json edge_list(const Graph& g, EdgeSet es) {
  Json a = Json::array();
  for (int id : es.indices()) a.push_back(Json::array({g.edge(id).u, g.edge(id).v}));
  return a;
}

std::pair<int, int> edge_key(const std::string& key) {
  const auto dash = key.find('-');
  try {
    if (dash == std::string::npos) throw ParseError("");
    std::size_t used_a = 0, used_b = 0;
    const int a = std::stoi(key.substr(0, dash), &used_a);
    const int b = std::stoi(key.substr(dash + 1), &used_b);
    if (used_a != dash || used_b != key.size() - dash - 1) throw ParseError("");
    return {a, b};
  } catch (const std::exception&) {
    throw ParseError("edge key '" + key + "' is not of the form \"u-v\"");
  }
}

template <class F>
auto guarded(F&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& name) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError("field '" + name + "': " + e.what());
    }
  }
  throw ParseError("field '" + name + "' must be a \"p/q\" string or an integer");
}

Json to_json(const Rational& r) { return to_string(r); }

Graph graph_from_json(const Json& j) {
  return guarded([&] {
    const int n = int_field(j, "n");
    if (n < 0 || n > kMaxVertices) throw ParseError("graph size out of range");
    if (auto it = j.find("complete"); it != j.end() && it->is_boolean() && it->get<bool>()) return Graph::complete(n);
    std::vector<Edge> edges;
    for (const auto& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a [u, v] pair");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return Graph(n, std::move(edges));
  });
}

Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.num_vertices();
  j["edges"] = edge_list(g, g.all_edges());
  return j;
}

Forest forest_from_json(const Graph& g, const Json& j) {
  return guarded([&] {
    std::uint32_t verts = 0;
    EdgeSet edges;
    for (const auto& v : field(j, "verts")) {
      const int x = v.get<int>();
      if (x < 0 || x >= g.num_vertices()) throw ParseError("forest vertex " + std::to_string(x) + " out of range");
      verts |= std::uint32_t{1} << x;
    }
    if (auto it = j.find("edges"); it != j.end())
      for (const auto& e : *it) {
        if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a [u, v] pair");
        const auto id = g.edge_id(e[0].get<int>(), e[1].get<int>());
        if (!id) throw ParseError("forest edge is not an edge of the graph");
        edges = edges.with(*id);
      }
    return make_forest(g, VertexSet(verts), edges);
  });
}

Json to_json(const Graph& g, const Forest& f) {
  Json j;
  j["verts"] = vertex_list(f.verts);
  j["edges"] = edge_list(g, f.edges);
  return j;
}

Json path_to_json(const PathSeq& p) {
  Json a = Json::array();
  for (int v : p.verts()) a.push_back(v);
  return a;
}

SetFunction set_function_from_json(const Json& j, int n) {
  return guarded([&]() -> SetFunction {
    const std::string kind = kind_of(j);
    if (kind == "xos") {
      std::vector<std::vector<Rational>> ws;
      for (const auto& w : field(j, "weights")) ws.push_back(rational_list(w, "weights"));
      const int size = n >= 0 ? n : (ws.empty() ? 0 : static_cast<int>(ws.front().size()));
      return SetFunction::xos(size, std::move(ws));
    }
    if (kind == "budgeted")
      return SetFunction::budgeted(rational_list(field(j, "dbar"), "dbar"), rational_list(field(j, "dhat"), "dhat"),
                                   rational_from_json(field(j, "gamma"), "gamma"), rational_from_json(field(j, "Q"), "Q"));
    if (kind == "scenarios") {
      std::vector<std::vector<Rational>> ds;
      for (const auto& d : field(j, "ds")) ds.push_back(rational_list(d, "ds"));
      return SetFunction::scenarios(std::move(ds), rational_from_json(field(j, "Q"), "Q"));
    }
    if (kind == "singleton")
      return SetFunction::singleton(rational_list(field(j, "d"), "d"), rational_from_json(field(j, "Q"), "Q"));
    if (kind == "table") {
      const int size = j.contains("n") ? int_field(j, "n") : n;
      if (size < 0 || size > 20) throw ParseError("table set function needs a size 'n' in [0, 20]");
      std::vector<Rational> values(std::size_t{1} << size);
      std::vector<char> seen(values.size(), 0);
      seen[0] = 1;
      for (const auto& [key, val] : field(j, "values").items()) {
        std::size_t mask = 0;
        try {
          mask = std::stoul(key);
        } catch (const std::exception&) {
          throw ParseError("table key '" + key + "' is not a bitmask");
        }
        if (mask >= values.size()) throw ParseError("table key '" + key + "' out of range");
        values[mask] = rational_from_json(val, "values." + key);
        seen[mask] = 1;
      }
      if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw ParseError("table set function is missing subsets");
      return SetFunction::table(size, std::move(values));
    }
    throw ParseError("unknown set function kind '" + kind + "'");
  });
}

Json to_json(const SetFunction& g) {
  Json j;
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, XosFunction>) {
          j["kind"] = "xos";
          j["weights"] = Json::array();
          for (const auto& w : k.weights) j["weights"].push_back(rational_list_json(w));
        } else if constexpr (std::is_same_v<K, TableFunction>) {
          j["kind"] = "table";
          j["n"] = g.num_vertices();
          j["values"] = Json::object();
          for (std::size_t s = 1; s < k.values.size(); ++s) j["values"][std::to_string(s)] = to_json(k.values[s]);
        } else if constexpr (std::is_same_v<K, BudgetedFunction>) {
          j["kind"] = "budgeted";
          j["dbar"] = rational_list_json(k.dbar);
          j["dhat"] = rational_list_json(k.dhat);
          j["gamma"] = to_json(k.gamma);
          j["Q"] = to_json(k.capacity);
        } else {
          j["kind"] = "scenarios";
          j["ds"] = Json::array();
          for (const auto& d : k.scenarios) j["ds"].push_back(rational_list_json(d));
          j["Q"] = to_json(k.capacity);
        }
      },
      g.kind());
  return j;
}

RhsTable rhs_from_json(const Json& j, int n) {
  return guarded([&] {
    const int size = j.contains("n") ? int_field(j, "n") : n;
    if (size < 0 || size > 20) throw ParseError("RHS table needs a size 'n' in [0, 20]");
    const Json& vals = field(j, "values");
    std::vector<int> values(std::size_t{1} << size, 0);
    if (vals.is_array()) {
      if (vals.size() != values.size()) throw ParseError("RHS table array needs 2^n entries");
      for (std::size_t s = 0; s < values.size(); ++s) values[s] = vals[s].get<int>();
    } else {
      std::vector<char> seen(values.size(), 0);
      seen[0] = 1;
      for (const auto& [key, val] : vals.items()) {
        std::size_t mask = 0;
        try {
          mask = std::stoul(key);
        } catch (const std::exception&) {
          throw ParseError("table key '" + key + "' is not a bitmask");
        }
        if (mask >= values.size()) throw ParseError("table key '" + key + "' out of range");
        values[mask] = val.get<int>();
        seen[mask] = 1;
      }
      if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw ParseError("RHS table is missing subsets");
    }
    return RhsTable(size, std::move(values));
  });
}

Json table_to_json(std::span<const int> values) {
  Json j;
  j["kind"] = "table";
  j["n"] = std::countr_zero(values.size());
  j["values"] = Json::object();
  for (std::size_t s = 1; s < values.size(); ++s) j["values"][std::to_string(s)] = values[s];
  return j;
}

Json to_json(const RhsTable& f) { return table_to_json(f.values()); }

PathFamily path_family_from_json(const Json& j) {
  return guarded([&] {
    const std::string kind = kind_of(j);
    if (kind == "all") return PathFamily::all();
    if (kind == "explicit") {
      std::vector<PathSeq> paths;
      for (const auto& p : field(j, "paths")) paths.emplace_back(p.get<std::vector<int>>());
      return PathFamily::explicit_paths(std::move(paths));
    }
    if (kind == "brp")
      return PathFamily::brp(rational_list(field(j, "d"), "d"), rational_from_json(field(j, "Q"), "Q"));
    if (kind == "cvrp")
      return PathFamily::cvrp(rational_list(field(j, "d"), "d"), rational_from_json(field(j, "Q"), "Q"));
    throw ParseError("unknown path family kind '" + kind + "'");
  });
}

Json to_json(const PathFamily& r) {
  Json j;
  j["kind"] = r.kind_name();
  if (const auto* e = std::get_if<PathFamily::Explicit>(&r.kind())) {
    j["paths"] = Json::array();
    for (const auto& p : e->paths) j["paths"].push_back(path_to_json(p));
  } else if (const auto* b = std::get_if<PathFamily::Brp>(&r.kind())) {
    j["d"] = rational_list_json(b->d);
    j["Q"] = to_json(b->capacity);
  } else if (const auto* c = std::get_if<PathFamily::Cvrp>(&r.kind())) {
    j["d"] = rational_list_json(c->d);
    j["Q"] = to_json(c->capacity);
  }
  return j;
}

ForestFamily family_from_json(const Json& j, const Graph* host) {
  return guarded([&]() -> ForestFamily {
    Graph g;
    if (j.is_object() && j.contains("graph")) g = graph_from_json(j["graph"]);
    else if (host) g = *host;
    else throw ParseError("missing field 'graph'");
    const int n = g.num_vertices();
    const std::string kind = kind_of(j);
    if (kind == "all") return ForestFamily::all(g);
    if (kind == "explicit") {
      std::vector<Forest> fs;
      for (const auto& f : field(j, "forests")) fs.push_back(forest_from_json(g, f));
      return ForestFamily::explicit_forests(g, std::move(fs));
    }
    if (kind == "cmst")
      return ForestFamily::cmst(g, rational_list(field(j, "d"), "d"), rational_from_json(field(j, "Q"), "Q"));
    if (kind == "degree") return ForestFamily::degree_bounded(g, field(j, "b").get<std::vector<int>>());
    if (kind == "brp") return ForestFamily::brp(g, rational_list(field(j, "d"), "d"), rational_from_json(field(j, "Q"), "Q"));
    if (kind == "theta") return ForestFamily::theta(g, set_function_from_json(field(j, "g"), n));
    if (kind == "routes") return ForestFamily::routes(g, path_family_from_json(field(j, "routes")));
    if (kind == "path_restriction") return ForestFamily::path_restriction(family_from_json(field(j, "base"), &g));
    if (kind == "tree_closure") {
      const Json& t = field(j, "trees");
      const std::string tk = kind_of(t);
      if (tk == "theta") return ForestFamily::tree_closure(g, TreeFamily::theta(set_function_from_json(field(t, "g"), n)));
      if (tk == "paths") return ForestFamily::tree_closure(g, TreeFamily::paths(path_family_from_json(field(t, "routes"))));
      if (tk == "explicit") {
        std::vector<Forest> ts;
        for (const auto& f : field(t, "trees")) ts.push_back(forest_from_json(g, f));
        return ForestFamily::tree_closure(g, TreeFamily::explicit_trees(std::move(ts)));
      }
      throw ParseError("unknown tree family kind '" + tk + "'");
    }
    throw ParseError("unknown family kind '" + kind + "'");
  });
}

namespace {

Json tree_family_json(const Graph& g, const TreeFamily& t) {
  Json j;
  j["kind"] = t.kind_name();
  if (const auto* th = std::get_if<TreeFamily::Theta>(&t.kind())) j["g"] = to_json(th->g);
  if (const auto* p = std::get_if<TreeFamily::Paths>(&t.kind())) j["routes"] = to_json(p->routes);
  if (const auto* e = std::get_if<TreeFamily::ExplicitTrees>(&t.kind())) {
    j["trees"] = Json::array();
    for (const auto& f : e->trees) j["trees"].push_back(to_json(g, f));
  }
  return j;
}

Json family_body(const ForestFamily& fam) {
  const Graph& g = fam.host();
  Json j;
  j["kind"] = fam.kind_name();
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ForestFamily::Explicit>) {
          j["forests"] = Json::array();
          for (const auto& f : k.forests) j["forests"].push_back(to_json(g, f));
        } else if constexpr (std::is_same_v<K, ForestFamily::Cmst>) {
          j["d"] = rational_list_json(k.d);
          j["Q"] = to_json(k.capacity);
        } else if constexpr (std::is_same_v<K, ForestFamily::DegreeBounded>) {
          j["b"] = k.bounds;
        } else if constexpr (std::is_same_v<K, ForestFamily::TreeClosure>) {
          j["trees"] = tree_family_json(g, k.trees);
        } else if constexpr (std::is_same_v<K, ForestFamily::PathRestriction>) {
          j["base"] = family_body(*k.base);
        }
      },
      fam.kind());
  return j;
}

}  // namespace

Json to_json(const ForestFamily& fam) {
  Json j;
  j["graph"] = to_json(fam.host());
  const Json body = family_body(fam);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json to_json(const Graph& g, const Certificate& c) {
  return std::visit(
      [&](const auto& cert) -> Json {
        using C = std::decay_t<decltype(cert)>;
        Json j;
        if constexpr (std::is_same_v<C, ViolatedGsec>) {
          j["type"] = "violating_gsec";
          j["S"] = vertex_list(cert.subset);
          j["lhs"] = to_json(cert.lhs);
          j["rhs_value"] = cert.rhs_value;
          if (cert.forest) j["forest"] = to_json(g, *cert.forest);
        } else if constexpr (std::is_same_v<C, ExtraIntegerPoint>) {
          j["type"] = "extra_integer_point";
          j["edges"] = edge_list(g, cert.edges);
        } else if constexpr (std::is_same_v<C, SeparatingPoint>) {
          j["type"] = "separating_point";
          j["x"] = Json::object();
          for (int id = 0; id < g.num_edges(); ++id)
            if (cert.x[static_cast<std::size_t>(id)] != 0)
              j["x"][std::to_string(g.edge(id).u) + "-" + std::to_string(g.edge(id).v)] =
                  to_json(cert.x[static_cast<std::size_t>(id)]);
          j["S"] = vertex_list(cert.subset);
          j["lhs"] = to_json(cert.lhs);
          j["rhs_value"] = cert.rhs_value;
        } else if constexpr (std::is_same_v<C, ForestPair>) {
          j["type"] = "forest_pair";
          j["relation"] = cert.relation;
          j["first"] = to_json(g, cert.first);
          j["second"] = to_json(g, cert.second);
        } else if constexpr (std::is_same_v<C, ForestWitness>) {
          j["type"] = "forest_witness";
          j["reason"] = cert.reason;
          j["forest"] = to_json(g, cert.forest);
        } else if constexpr (std::is_same_v<C, SubsetPair>) {
          j["type"] = "subset_pair";
          j["a"] = vertex_list(cert.a);
          j["b"] = vertex_list(cert.b);
        } else {
          j["type"] = "path_pair";
          j["relation"] = cert.relation;
          j["first"] = path_to_json(cert.first);
          j["second"] = path_to_json(cert.second);
        }
        return j;
      },
      c);
}

Json to_json(const Graph& g, const ReprReport& r) {
  Json j;
  j["representable"] = r.representable;
  j["nonempty"] = r.nonempty;
  j["downward_closed"] = r.downward_closed;
  j["edge_consistent"] = r.edge_consistent;
  j["contains_edgeless"] = r.contains_edgeless;
  j["mip_property"] = r.mip_property;
  j["auto_closed"] = r.auto_closed;
  j["ell"] = table_to_json(r.ell.values);
  j["ell"]["valid"] = r.ell.valid;
  j["blocking"] = Json::array();
  for (VertexSet s : r.ell.blocking) j["blocking"].push_back(vertex_list(s));
  j["u"] = r.u ? to_json(*r.u) : Json(nullptr);
  j["certificates"] = Json::array();
  for (const auto& c : r.certificates) j["certificates"].push_back(to_json(g, c));
  return j;
}

VrpInstance vrp_from_json(const Json& j) {
  return guarded([&] {
    VrpInstance inst;
    inst.n = int_field(j, "n");
    inst.k = int_field(j, "k");
    if (inst.n < 1 || inst.n > kMaxVertices) throw ParseError("customer count out of range");
    inst.depot_costs = rational_list(field(j, "depot_costs"), "depot_costs");
    const Graph g = Graph::complete(inst.n);
    inst.edge_costs.assign(static_cast<std::size_t>(g.num_edges()), Rational(0));
    std::vector<char> seen(inst.edge_costs.size(), 0);
    for (const auto& [key, val] : field(j, "edge_costs").items()) {
      const auto [a, b] = edge_key(key);
      const auto id = (a >= 0 && b >= 0 && a < inst.n && b < inst.n) ? g.edge_id(a, b) : std::nullopt;
      if (!id) throw ParseError("edge key '" + key + "' is not a customer pair");
      inst.edge_costs[static_cast<std::size_t>(*id)] = rational_from_json(val, "edge_costs." + key);
      seen[static_cast<std::size_t>(*id)] = 1;
    }
    for (int id = 0; id < g.num_edges(); ++id)
      if (!seen[static_cast<std::size_t>(id)])
        throw ParseError("edge_costs is missing \"" + std::to_string(g.edge(id).u) + "-" + std::to_string(g.edge(id).v) +
                         "\"");
    inst.routes = j.contains("routes") ? path_family_from_json(j["routes"]) : PathFamily::all();
    const Json rhs = j.contains("rhs") ? j["rhs"] : Json("auto");
    if (rhs.is_string() && rhs.get<std::string>() == "auto") {
      if (const auto* b = std::get_if<PathFamily::Brp>(&inst.routes.kind()))
        inst.rhs = rhs_from_g(brp_load(b->d, b->capacity));
      else if (const auto* c = std::get_if<PathFamily::Cvrp>(&inst.routes.kind()))
        inst.rhs = rhs_from_g(cvrp_load(c->d, c->capacity));
      else if (std::holds_alternative<PathFamily::All>(inst.routes.kind()))
        inst.rhs = RhsTable::ones(inst.n);
      else
        throw ParseError("\"rhs\": \"auto\" needs brp, cvrp or all routes");
    } else {
      inst.rhs = rhs_from_json(rhs, inst.n);
    }
    if (const auto* b = std::get_if<PathFamily::Brp>(&inst.routes.kind()); b && b->d.size() != std::size_t(inst.n))
      throw ParseError("route demand vector length differs from n");
    if (const auto* c = std::get_if<PathFamily::Cvrp>(&inst.routes.kind()); c && c->d.size() != std::size_t(inst.n))
      throw ParseError("route demand vector length differs from n");
    return inst;
  });
}

RcmstInstance rcmst_from_json(const Json& j) {
  return guarded([&] {
    const int n = int_field(j, "n");
    if (n < 1 || n + 1 > kMaxVertices) throw ParseError("customer count out of range");
    std::vector<Edge> edges;
    std::vector<Rational> raw_costs;
    for (const auto& e : field(j, "edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("each RCMST edge must be [u, v, cost]");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
      raw_costs.push_back(rational_from_json(e[2], "edges.cost"));
    }
    RcmstInstance inst;
    inst.graph = Graph(n + 1, edges);
    inst.costs.assign(raw_costs.size(), Rational(0));
    for (std::size_t i = 0; i < edges.size(); ++i)
      inst.costs[static_cast<std::size_t>(*inst.graph.edge_id(edges[i].u, edges[i].v))] = raw_costs[i];
    inst.load = set_function_from_json(field(j, "uncertainty"), n);
    if (inst.load.num_vertices() != n) throw ParseError("uncertainty set size differs from n");
    return inst;
  });
}

Json to_json(const VrpSolution& s) {
  Json j;
  j["status"] = "optimal";
  j["cost"] = to_json(s.cost);
  j["cycles"] = s.cycles;
  Json x = Json::object();
  for (std::size_t v = 0; v < s.x.depot.size(); ++v)
    if (s.x.depot[v] != 0) x["0-" + std::to_string(v + 1)] = s.x.depot[v];
  const Graph g = Graph::complete(static_cast<int>(s.x.depot.size()));
  for (int id = 0; id < g.num_edges(); ++id)
    if (s.x.customer[static_cast<std::size_t>(id)] != 0)
      x[std::to_string(g.edge(id).u + 1) + "-" + std::to_string(g.edge(id).v + 1)] = s.x.customer[static_cast<std::size_t>(id)];
  j["x"] = x;
  return j;
}

Json to_json(const RcmstInstance& inst, const RcmstSolution& s) {
  Json j;
  j["status"] = "optimal";
  j["cost"] = to_json(s.cost);
  j["tree"] = edge_list(inst.graph, s.tree);
  return j;
}

}  // namespace gsec
