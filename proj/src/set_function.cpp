#include "gsec/set_function.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "gsec/errors.hpp"

namespace gsec {

namespace {

void require_size(std::size_t got, int n, const char* what) {
  if (got != static_cast<std::size_t>(n))
    throw BadParams(std::string(what) + ": expected " + std::to_string(n) + " entries, got " +
                    std::to_string(got));
}

struct Evaluator {
  VertexSet s;

  Rational operator()(const XosFunction& f) const {
    if (f.weights.empty()) return Rational(0);
    Rational best = sum_over(f.weights.front(), s.bits());
    for (std::size_t i = 1; i < f.weights.size(); ++i) best = std::max(best, sum_over(f.weights[i], s.bits()));
    return best;
  }

  Rational operator()(const TableFunction& f) const { return f.values[s.bits()]; }

  Rational operator()(const BudgetedFunction& f) const {
    std::vector<Rational> dev;
    for (int v : s.indices()) dev.push_back(f.dhat[static_cast<std::size_t>(v)]);
    std::sort(dev.begin(), dev.end(), std::greater<>());
    const std::int64_t whole = floor_int(f.gamma);
    const Rational frac = f.gamma - whole;
    Rational load = sum_over(f.dbar, s.bits());
    std::size_t i = 0;
    for (; i < dev.size() && static_cast<std::int64_t>(i) < whole; ++i) load += dev[i];
    if (i < dev.size()) load += frac * dev[i];
    return load / f.capacity;
  }

  Rational operator()(const ScenarioFunction& f) const {
    Rational best = sum_over(f.scenarios.front(), s.bits());
    for (std::size_t i = 1; i < f.scenarios.size(); ++i) best = std::max(best, sum_over(f.scenarios[i], s.bits()));
    return best / f.capacity;
  }
};

}  // namespace

SetFunction::SetFunction(int n, Kind kind) : n_(n), kind_(std::move(kind)) {
  if (n < 0 || n > kMaxVertices) throw BadParams("set function size must lie in [0, 32]");
  if (const auto* x = std::get_if<XosFunction>(&kind_)) {
    for (const auto& w : x->weights) require_size(w.size(), n, "xos weight vector");
  } else if (const auto* t = std::get_if<TableFunction>(&kind_)) {
    if (n > 20) throw BadParams("table set functions are limited to 20 vertices");
    require_size(t->values.size(), 1 << n, "table values");
    if (t->values[0] != 0) throw BadParams("table set function must vanish on the empty set");
  } else if (const auto* b = std::get_if<BudgetedFunction>(&kind_)) {
    require_size(b->dbar.size(), n, "budgeted dbar");
    require_size(b->dhat.size(), n, "budgeted dhat");
    if (b->capacity <= 0) throw BadParams("capacity Q must be positive");
    if (b->gamma < 0 || b->gamma > n) throw BadParams("budget gamma must lie in [0, n]");
    for (std::size_t v = 0; v < b->dbar.size(); ++v)
      if (b->dbar[v] < 0 || b->dhat[v] < 0) throw BadParams("budgeted demands must be nonnegative");
  } else if (const auto* sc = std::get_if<ScenarioFunction>(&kind_)) {
    if (sc->scenarios.empty()) throw BadParams("scenario list must be nonempty");
    if (sc->capacity <= 0) throw BadParams("capacity Q must be positive");
    for (const auto& d : sc->scenarios) require_size(d.size(), n, "scenario demand vector");
  }
}

SetFunction SetFunction::xos(int n, std::vector<std::vector<Rational>> weights) {
  return SetFunction(n, XosFunction{std::move(weights)});
}

SetFunction SetFunction::table(int n, std::vector<Rational> values) {
  return SetFunction(n, TableFunction{std::move(values)});
}

SetFunction SetFunction::budgeted(std::vector<Rational> dbar, std::vector<Rational> dhat, Rational gamma,
                                  Rational capacity) {
  const int n = static_cast<int>(dbar.size());
  return SetFunction(n, BudgetedFunction{std::move(dbar), std::move(dhat), std::move(gamma), std::move(capacity)});
}

SetFunction SetFunction::scenarios(std::vector<std::vector<Rational>> ds, Rational capacity) {
  if (ds.empty()) throw BadParams("scenario list must be nonempty");
  const int n = static_cast<int>(ds.front().size());
  return SetFunction(n, ScenarioFunction{std::move(ds), std::move(capacity)});
}

SetFunction SetFunction::singleton(std::vector<Rational> d, Rational capacity) {
  std::vector<std::vector<Rational>> ds;
  ds.push_back(std::move(d));
  return scenarios(std::move(ds), std::move(capacity));
}

SetFunction SetFunction::zero(int n) { return xos(n, {}); }

SetFunction SetFunction::cardinality(int n) {
  return xos(n, {std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))});
}

Rational SetFunction::operator()(VertexSet s) const {
  if (s.empty()) return Rational(0);
  if (!s.subset_of(VertexSet::full(n_))) throw BadParams("subset outside the set function's ground set");
  return std::visit(Evaluator{s}, kind_);
}

std::vector<Rational> SetFunction::tabulate() const {
  if (n_ > 20) throw BadParams("cannot tabulate a set function on more than 20 vertices");
  const std::size_t count = std::size_t{1} << n_;
  std::vector<Rational> out(count);
  for (std::size_t s = 1; s < count; ++s) out[s] = (*this)(VertexSet(static_cast<std::uint32_t>(s)));
  return out;
}

SetFunction brp_load(std::span<const Rational> d, const Rational& capacity) {
  if (capacity <= 0) throw BadParams("capacity Q must be positive");
  std::vector<Rational> plus, minus;
  for (const auto& x : d) {
    plus.push_back(x / capacity);
    minus.push_back(-x / capacity);
  }
  return SetFunction::xos(static_cast<int>(d.size()), {std::move(plus), std::move(minus)});
}

SetFunction cvrp_load(std::span<const Rational> d, const Rational& capacity) {
  if (capacity <= 0) throw BadParams("capacity Q must be positive");
  std::vector<Rational> w;
  for (const auto& x : d) w.push_back(x / capacity);
  return SetFunction::xos(static_cast<int>(d.size()), {std::move(w)});
}

SubadditivityReport is_subadditive(const SetFunction& g) {
  require_within_cap(g.num_vertices(), "is_subadditive");
  const auto values = g.tabulate();
  const std::uint32_t full = VertexSet::full(g.num_vertices()).bits();
  for (std::uint32_t a = 1; a <= full; ++a) {
    const std::uint32_t rest = full & ~a;
    for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
      if (b < a) continue;
      if (values[a | b] > values[a] + values[b]) return {false, std::pair{VertexSet(a), VertexSet(b)}};
    }
  }
  return {};
}

bool is_monotone(const SetFunction& g) {
  const auto values = g.tabulate();
  for (std::size_t s = 0; s < values.size(); ++s)
    for (int v = 0; v < g.num_vertices(); ++v)
      if (!((s >> v) & 1U) && values[s] > values[s | (std::size_t{1} << v)]) return false;
  return true;
}

bool is_rhs_table(int n, std::span<const int> values) {
  if (n < 0 || n > 20 || values.size() != (std::size_t{1} << n) || values[0] != 0) return false;
  for (std::size_t s = 1; s < values.size(); ++s)
    if (values[s] < 1 || values[s] > std::popcount(s)) return false;
  return true;
}

RhsTable::RhsTable(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  if (n < 0 || n > 20) throw OutOfRange("RHS tables are limited to 20 vertices");
  if (values_.size() != (std::size_t{1} << n))
    throw OutOfRange("RHS table needs 2^n entries, got " + std::to_string(values_.size()));
  if (values_[0] != 0) throw OutOfRange("RHS table must vanish on the empty set");
  for (std::size_t s = 1; s < values_.size(); ++s)
    if (values_[s] < 1 || values_[s] > std::popcount(s))
      throw OutOfRange("RHS value " + std::to_string(values_[s]) + " at subset mask " + std::to_string(s) +
                       " is outside [1, |S|]");
}

RhsTable RhsTable::ones(int n) {
  std::vector<int> v(std::size_t{1} << n, 1);
  v[0] = 0;
  return RhsTable(n, std::move(v));
}

RhsTable RhsTable::cardinality(int n) {
  std::vector<int> v(std::size_t{1} << n);
  for (std::size_t s = 0; s < v.size(); ++s) v[s] = std::popcount(s);
  return RhsTable(n, std::move(v));
}

RhsTable rhs_from_g(const SetFunction& g) {
  const auto values = g.tabulate();
  std::vector<int> f(values.size(), 0);
  for (std::size_t s = 1; s < values.size(); ++s) {
    const int card = std::popcount(s);
    if (values[s] > card)
      throw OutOfRange("g(S) = " + to_string(values[s]) + " exceeds |S| = " + std::to_string(card) +
                       " at subset mask " + std::to_string(s));
    f[s] = static_cast<int>(std::max<std::int64_t>(1, ceil_int(values[s])));
  }
  return RhsTable(g.num_vertices(), std::move(f));
}

bool pointwise_leq(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw BadParams("tables over different ground sets");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace gsec
