#include "k3ns/gflinalg.hpp"

namespace k3ns {

Rref rref(GfMat m) {
  Rref out;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t piv = row;
    while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows) continue;
    for (size_t j = 0; j < m.cols; ++j) std::swap(m.a[row * m.cols + j], m.a[piv * m.cols + j]);
    Gf inv = m.at(row, col).inv();
    for (size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Gf f = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    out.pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  out.mat = std::move(m);
  return out;
}

std::vector<GfVec> kernel_basis(const GfMat& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : r.pivot_col) is_pivot[c] = true;
  std::vector<GfVec> basis;
  for (size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    GfVec v(m.cols);
    v[free] = Gf::from_int(1);
    for (size_t prow = 0; prow < r.pivot_col.size(); ++prow) {
      int pc = r.pivot_col[prow];
      v[pc] = -r.mat.at(prow, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<GfVec> solve_particular(const GfMat& m, const GfVec& b) {
  GfMat aug(m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  Rref r = rref(std::move(aug));
  for (size_t i = 0; i < r.pivot_col.size(); ++i)
    if (r.pivot_col[i] == static_cast<int>(m.cols)) return std::nullopt;
  GfVec x(m.cols);
  for (size_t i = 0; i < r.pivot_col.size(); ++i) x[r.pivot_col[i]] = r.mat.at(i, m.cols);
  return x;
}

size_t rank(const GfMat& m) { return rref(m).rank(); }

GfMat3 mat3_mul(const GfMat3& a, const GfMat3& b) {
  GfMat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Gf s;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

Gf3 vec3_mul(const Gf3& v, const GfMat3& m) {
  Gf3 r{};
  for (int j = 0; j < 3; ++j) {
    Gf s;
    for (int k = 0; k < 3; ++k) s += v[k] * m[k][j];
    r[j] = s;
  }
  return r;
}

Gf mat3_det(const GfMat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::optional<GfMat3> mat3_inv(const GfMat3& m) {
  Gf d = mat3_det(m);
  if (d.is_zero()) return std::nullopt;
  Gf di = d.inv();
  GfMat3 r{};
  auto cof = [&](int i, int j) {
    int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
    return m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[j][i] = cof(i, j) * di;
  return r;
}

GfMat3 mat3_id() {
  GfMat3 r{};
  for (int i = 0; i < 3; ++i) r[i][i] = Gf::from_int(1);
  return r;
}

GfMat3 mat3_conj(const GfMat3& m) {
  GfMat3 r = m;
  for (auto& row : r)
    for (auto& x : row) x = x.frob();
  return r;
}

GfMat3 mat3_transpose(const GfMat3& m) {
  GfMat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

GfMat3 mat3_scaled(const GfMat3& m, Gf c) {
  GfMat3 r = m;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

}  // namespace k3ns
