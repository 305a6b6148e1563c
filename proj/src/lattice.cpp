#include "cpo/lattice.hpp"

#include <algorithm>
#include <utility>

namespace cpo::lattice {

namespace {

struct ExtGcd {
  BigInt g, p, q;  // g = p*a + q*b, g >= 0
};

ExtGcd ext_gcd(const BigInt& a, const BigInt& b) {
  BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

// A U = W with U unimodular and W lower echelon: column l < rank has its
// first nonzero entry (positive) in row pivot_rows[l], strictly increasing.
struct ColumnReduction {
  std::vector<IntVector> w;  // columns of W
  std::vector<IntVector> u;  // columns of U
  std::vector<std::size_t> pivot_rows;
};

ColumnReduction reduce_columns(const IntMatrix& a, std::size_t cols) {
  const std::size_t m = a.size();
  ColumnReduction cr;
  cr.w.assign(cols, IntVector(m));
  cr.u.assign(cols, IntVector(cols));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < cols; ++j) cr.w[j][i] = a[i][j];
  for (std::size_t j = 0; j < cols; ++j) cr.u[j][j] = 1;

  std::size_t c = 0;
  for (std::size_t i = 0; i < m && c < cols; ++i) {
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (cr.w[j][i] == 0) continue;
      if (cr.w[c][i] == 0) {
        std::swap(cr.w[c], cr.w[j]);
        std::swap(cr.u[c], cr.u[j]);
        continue;
      }
      const BigInt x = cr.w[c][i], y = cr.w[j][i];
      const auto [g, p, q] = ext_gcd(x, y);
      const BigInt xs = x / g, ys = y / g;
      auto combine = [&](IntVector& cc, IntVector& cj, std::size_t from) {
        for (std::size_t t = from; t < cc.size(); ++t) {
          BigInt nc = p * cc[t] + q * cj[t];
          cj[t] = xs * cj[t] - ys * cc[t];
          cc[t] = std::move(nc);
        }
      };
      combine(cr.w[c], cr.w[j], i);
      combine(cr.u[c], cr.u[j], 0);
    }
    if (cr.w[c][i] == 0) continue;
    if (cr.w[c][i] < 0) {
      for (std::size_t t = i; t < m; ++t) cr.w[c][t] = -cr.w[c][t];
      for (auto& e : cr.u[c]) e = -e;
    }
    cr.pivot_rows.push_back(i);
    ++c;
  }
  return cr;
}

IntMatrix kernel_rows(const ColumnReduction& cr) {
  IntMatrix k;
  for (std::size_t j = cr.pivot_rows.size(); j < cr.u.size(); ++j) k.push_back(cr.u[j]);
  return hermite_normal_form(std::move(k));
}

}  // namespace

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::size_t pivot_of(const IntVector& row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0) return j;
  return row.size();
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
  return kernel_rows(reduce_columns(a, cols));
}

std::optional<IntegerSolution> solve(const IntMatrix& a, const IntVector& b,
                                     std::size_t cols) {
  const auto cr = reduce_columns(a, cols);
  const std::size_t rank = cr.pivot_rows.size();
  IntVector y(rank);
  std::size_t next = 0;  // pivots with pivot row < i are already solved
  for (std::size_t i = 0; i < a.size(); ++i) {
    BigInt s = b[i];
    for (std::size_t l = 0; l < next; ++l) s -= cr.w[l][i] * y[l];
    if (next < rank && cr.pivot_rows[next] == i) {
      const BigInt& d = cr.w[next][i];
      if (s % d != 0) return std::nullopt;
      y[next] = s / d;
      ++next;
    } else if (s != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol;
  sol.particular.assign(cols, 0);
  for (std::size_t l = 0; l < rank; ++l)
    if (y[l] != 0)
      for (std::size_t t = 0; t < cols; ++t) sol.particular[t] += y[l] * cr.u[l][t];
  sol.kernel = kernel_rows(cr);
  sol.particular = reduce_trailing(std::move(sol.particular), sol.kernel);
  return sol;
}

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t t = r; t < rows.size(); ++t)
        if (rows[t][col] != 0 &&
            (best == rows.size() || abs(rows[t][col]) < abs(rows[best][col])))
          best = t;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t t = r + 1; t < rows.size(); ++t) {
        if (rows[t][col] == 0) continue;
        const BigInt q = floor_div(rows[t][col], rows[r][col]);
        for (std::size_t j = col; j < cols; ++j) rows[t][j] -= q * rows[r][j];
        if (rows[t][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0)
      for (auto& e : rows[r]) e = -e;
    for (std::size_t t = 0; t < r; ++t) {
      const BigInt q = floor_div(rows[t][col], rows[r][col]);
      if (q != 0)
        for (std::size_t j = col; j < cols; ++j) rows[t][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

IntVector reduce_trailing(IntVector x, const IntMatrix& basis) {
  if (basis.empty()) return x;
  IntMatrix rev = basis;
  for (auto& row : rev) std::reverse(row.begin(), row.end());
  std::reverse(x.begin(), x.end());
  for (const auto& row : hermite_normal_form(std::move(rev))) {
    const std::size_t p = pivot_of(row);
    const BigInt q = floor_div(x[p], row[p]);
    if (q != 0)
      for (std::size_t j = p; j < x.size(); ++j) x[j] -= q * row[j];
  }
  std::reverse(x.begin(), x.end());
  return x;
}

}  // namespace cpo::lattice
