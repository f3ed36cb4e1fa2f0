#include "gsec/simplex.hpp"

#include "gsec/errors.hpp"

namespace gsec {

LpResult maximize(const LpProblem& lp) {
  const std::size_t rows = lp.a.size(), cols = lp.c.size();
  if (lp.b.size() != rows) throw BadParams("LP right-hand side length mismatch");
  for (std::size_t i = 0; i < rows; ++i) {
    if (lp.a[i].size() != cols) throw BadParams("LP row length mismatch");
    if (lp.b[i] < 0) throw BadParams("LP needs a nonnegative right-hand side");
  }

  // Tableau columns: structural, then slack, then rhs. Objective row holds
  // reduced costs c_j - z_j; we pivot while some entry is positive.
  const std::size_t width = cols + rows + 1;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = lp.a[i][j];
    t[i][cols + i] = 1;
    t[i][width - 1] = lp.b[i];
    basis[i] = cols + i;
  }
  std::vector<Rational> obj(width);
  for (std::size_t j = 0; j < cols; ++j) obj[j] = lp.c[j];

  LpResult res;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == rows) {
      res.bounded = false;
      return res;
    }

    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= factor * t[leave][j];
    }
    if (obj[enter] != 0) {
      const Rational factor = obj[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) obj[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
    ++res.pivots;
  }

  res.x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) res.x[basis[i]] = t[i][width - 1];
  res.value = 0;
  for (std::size_t j = 0; j < cols; ++j) res.value += lp.c[j] * res.x[j];
  return res;
}

}  // namespace gsec
