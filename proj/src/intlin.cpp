#include "k3ns/intlin.hpp"

#include <cassert>
#include <cstdlib>

namespace k3ns {

namespace {

ZMat identity(size_t n) {
  ZMat m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void swap_rows(ZMat& m, size_t i, size_t j) {
  if (i == j) return;
  for (size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(ZMat& m, size_t i, size_t j) {
  if (i == j) return;
  for (size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row i -= q * row j
void row_axpy(ZMat& m, size_t i, size_t j, const Zi& q) {
  for (size_t c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(j, c);
}
void col_axpy(ZMat& m, size_t i, size_t j, const Zi& q) {
  for (size_t r = 0; r < m.rows; ++r) m.at(r, i) -= q * m.at(r, j);
}
void negate_row(ZMat& m, size_t i) {
  for (size_t c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

Snf smith_normal_form(ZMat a) {
  size_t n = a.rows, k = a.cols;
  ZMat u = identity(n), v = identity(k);
  size_t t = 0;
  while (t < n && t < k) {
    // pivot: entry of least nonzero absolute value in the trailing block
    size_t pi = t, pj = t;
    bool found = false;
    Zi best;
    for (size_t i = t; i < n; ++i)
      for (size_t j = t; j < k; ++j) {
        if (a.at(i, j) == 0) continue;
        Zi ab = abs(a.at(i, j));
        if (!found || ab < best) {
          best = ab;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    swap_rows(a, t, pi);
    swap_rows(u, t, pi);
    swap_cols(a, t, pj);
    swap_cols(v, t, pj);
    bool clean = true;
    for (size_t i = t + 1; i < n; ++i) {
      if (a.at(i, t) == 0) continue;
      Zi q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
      row_axpy(a, i, t, q);
      row_axpy(u, i, t, q);
      if (a.at(i, t) != 0) clean = false;
    }
    for (size_t j = t + 1; j < k; ++j) {
      if (a.at(t, j) == 0) continue;
      Zi q;
      mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
      col_axpy(a, j, t, q);
      col_axpy(v, j, t, q);
      if (a.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // re-pivot on the smaller remainders
    // ensure pivot divides the whole trailing block
    bool divides_all = true;
    for (size_t i = t + 1; i < n && divides_all; ++i)
      for (size_t j = t + 1; j < k && divides_all; ++j)
        if (a.at(i, j) % a.at(t, t) != 0) {
          // fold row i into row t and retry
          row_axpy(a, t, i, Zi(-1));
          row_axpy(u, t, i, Zi(-1));
          divides_all = false;
        }
    if (!divides_all) continue;
    if (a.at(t, t) < 0) {
      negate_row(a, t);
      negate_row(u, t);
    }
    ++t;
  }
  return Snf{std::move(a), std::move(u), std::move(v)};
}

std::optional<AffineSolution> solve_left(const ZMat& a, const std::vector<Zi>& b) {
  assert(b.size() == a.cols);
  size_t n = a.rows, k = a.cols;
  Snf s = smith_normal_form(a);
  // x A = b  <=>  (x U^-1) D = b V;  y := x U^-1, x = y U.
  std::vector<Zi> bv(k);
  for (size_t j = 0; j < k; ++j) {
    Zi acc = 0;
    for (size_t i = 0; i < k; ++i) acc += b[i] * s.v.at(i, j);
    bv[j] = acc;
  }
  std::vector<Zi> y(n);
  std::vector<bool> free_idx(n, true);
  for (size_t i = 0; i < n && i < k; ++i) {
    const Zi& d = s.d.at(i, i);
    if (d != 0) {
      if (bv[i] % d != 0) return std::nullopt;
      y[i] = bv[i] / d;
      free_idx[i] = false;
    }
  }
  for (size_t j = 0; j < k; ++j) {
    // components of bV with no matching nonzero pivot must vanish
    if (j < n && !free_idx[j]) continue;
    if (bv[j] != 0) return std::nullopt;
  }
  AffineSolution sol;
  sol.origin.assign(n, Zi(0));
  for (size_t c = 0; c < n; ++c) {
    Zi acc = 0;
    for (size_t i = 0; i < n; ++i) acc += y[i] * s.u.at(i, c);
    sol.origin[c] = acc;
  }
  for (size_t i = 0; i < n; ++i) {
    if (!free_idx[i]) continue;
    std::vector<Zi> row(n);
    for (size_t c = 0; c < n; ++c) row[c] = s.u.at(i, c);
    sol.basis.push_back(std::move(row));
  }
  return sol;
}

Zi det_bareiss(ZMat a) {
  assert(a.rows == a.cols);
  size_t n = a.rows;
  if (n == 0) return 1;
  Zi prev = 1;
  int sign = 1;
  for (size_t t = 0; t + 1 < n; ++t) {
    if (a.at(t, t) == 0) {
      size_t p = t + 1;
      while (p < n && a.at(p, t) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, t, p);
      sign = -sign;
    }
    for (size_t i = t + 1; i < n; ++i)
      for (size_t j = t + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(t, t) - a.at(i, t) * a.at(t, j)) / prev;
      }
    prev = a.at(t, t);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::vector<std::vector<Qi>> invert_rational(const ZMat& a) {
  assert(a.rows == a.cols);
  size_t n = a.rows;
  std::vector<std::vector<Qi>> m(n, std::vector<Qi>(2 * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = Qi(a.at(i, j));
    m[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) {
      std::abort();  // singular
    }
    std::swap(m[col], m[piv]);
    Qi inv = 1 / m[col][col];
    for (size_t j = 0; j < 2 * n; ++j) m[col][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Qi f = m[i][col];
      for (size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Qi>> inv(n, std::vector<Qi>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

std::vector<std::vector<Zi>> complete_primitive(const std::vector<Zi>& h) {
  size_t n = h.size();
  ZMat row(1, n);
  for (size_t j = 0; j < n; ++j) row.at(0, j) = h[j];
  Snf s = smith_normal_form(row);
  assert(s.d.at(0, 0) == 1 && "vector must be primitive");
  // h * V = e1, so h = first row of V^-1; the rows of V^-1 form a basis.
  ZMat vt(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) vt.at(i, j) = s.v.at(i, j);
  auto vinv = invert_rational(vt);
  std::vector<std::vector<Zi>> basis(n, std::vector<Zi>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      assert(vinv[i][j].get_den() == 1);
      basis[i][j] = vinv[i][j].get_num();
    }
  // V^-1 row 0 = h since (e1 V^-1) = h.
  return basis;
}

bool rows_generate_full_lattice(const ZMat& a) {
  if (a.rows < a.cols) return false;
  Snf s = smith_normal_form(a);
  for (size_t i = 0; i < a.cols; ++i)
    if (!(abs(s.d.at(i, i)) == 1)) return false;
  return true;
}

}  // namespace k3ns
