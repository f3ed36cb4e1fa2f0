#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "gsec/graph.hpp"
#include "gsec/rational.hpp"

namespace gsec {

/// Pointwise maximum of additive functions: g(S) = max_w w(S).
struct XosFunction {
  std::vector<std::vector<Rational>> weights;
};

/// Explicit values indexed by subset bitmask (size 2^n).
struct TableFunction {
  std::vector<Rational> values;
};

/// Worst-case load over the budgeted uncertainty set
///   { dbar + xi * dhat : xi in [0,1]^V, sum xi <= gamma },
/// divided by the capacity.
struct BudgetedFunction {
  std::vector<Rational> dbar;
  std::vector<Rational> dhat;
  Rational gamma;
  Rational capacity;
};

/// Worst-case load over a finite scenario list, divided by the capacity.
struct ScenarioFunction {
  std::vector<std::vector<Rational>> scenarios;
  Rational capacity;
};

/// Exact rational set function on subsets of {0, ..., n-1} with g(empty) = 0.
class SetFunction {
 public:
  using Kind = std::variant<XosFunction, TableFunction, BudgetedFunction, ScenarioFunction>;

  SetFunction(int n, Kind kind);

  static SetFunction xos(int n, std::vector<std::vector<Rational>> weights);
  static SetFunction table(int n, std::vector<Rational> values);
  static SetFunction budgeted(std::vector<Rational> dbar, std::vector<Rational> dhat, Rational gamma,
                              Rational capacity);
  static SetFunction scenarios(std::vector<std::vector<Rational>> ds, Rational capacity);
  static SetFunction singleton(std::vector<Rational> d, Rational capacity);
  static SetFunction zero(int n);
  static SetFunction cardinality(int n);

  int num_vertices() const { return n_; }
  const Kind& kind() const { return kind_; }

  Rational operator()(VertexSet s) const;

  /// All values indexed by bitmask.
  std::vector<Rational> tabulate() const;

 private:
  int n_;
  Kind kind_;
};

inline Rational eval(const SetFunction& g, VertexSet s) { return g(s); }

/// max{d(S)/Q, -d(S)/Q}
SetFunction brp_load(std::span<const Rational> d, const Rational& capacity);
/// d(S)/Q
SetFunction cvrp_load(std::span<const Rational> d, const Rational& capacity);

/// Witness of subadditivity failure: g(a | b) > g(a) + g(b) with a, b disjoint.
struct SubadditivityReport {
  bool subadditive = true;
  std::optional<std::pair<VertexSet, VertexSet>> violation;
};
SubadditivityReport is_subadditive(const SetFunction& g);

bool is_monotone(const SetFunction& g);

/// Integer table f with f(empty) = 0 and 1 <= f(S) <= |S| otherwise.
class RhsTable {
 public:
  /// Throws OutOfRange when the invariants fail.
  RhsTable(int n, std::vector<int> values);

  static RhsTable ones(int n);
  static RhsTable cardinality(int n);

  int num_vertices() const { return n_; }
  int operator()(VertexSet s) const { return values_[s.bits()]; }
  std::span<const int> values() const { return values_; }

  friend bool operator==(const RhsTable&, const RhsTable&) = default;

 private:
  int n_;
  std::vector<int> values_;
};

/// Checks the RHS invariants without throwing.
bool is_rhs_table(int n, std::span<const int> values);

/// f(S) = max{1, ceil(g(S))}. Throws OutOfRange naming S when g(S) > |S|.
RhsTable rhs_from_g(const SetFunction& g);

/// a(S) <= b(S) for every S.
bool pointwise_leq(std::span<const int> a, std::span<const int> b);
inline bool pointwise_leq(const RhsTable& a, const RhsTable& b) {
  return pointwise_leq(a.values(), b.values());
}

}  // namespace gsec
