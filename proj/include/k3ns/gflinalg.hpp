#ifndef K3NS_GFLINALG_HPP
#define K3NS_GFLINALG_HPP

// Dense linear algebra over GF(25): row reduction with a fixed pivot rule
// (first nonzero in column order), kernel bases, particular solutions.

#include <optional>
#include <vector>

#include "k3ns/gf25.hpp"

namespace k3ns {

using GfVec = std::vector<Gf>;

struct GfMat {
  size_t rows = 0, cols = 0;
  std::vector<Gf> a;  // row-major

  GfMat() = default;
  GfMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  Gf& at(size_t i, size_t j) { return a[i * cols + j]; }
  Gf at(size_t i, size_t j) const { return a[i * cols + j]; }
};

struct Rref {
  GfMat mat;
  std::vector<int> pivot_col;  // one entry per nonzero row
  size_t rank() const { return pivot_col.size(); }
};

Rref rref(GfMat m);

// Basis of { x : M x^t = 0 }, deterministic (free columns in increasing
// order, pivot entries back-substituted).
std::vector<GfVec> kernel_basis(const GfMat& m);

// One solution of M x^t = b^t, or nullopt when inconsistent.
std::optional<GfVec> solve_particular(const GfMat& m, const GfVec& b);

size_t rank(const GfMat& m);

// 3x3 helpers for projective transformations.
using Gf3 = std::array<Gf, 3>;
using GfMat3 = std::array<Gf3, 3>;

GfMat3 mat3_mul(const GfMat3& a, const GfMat3& b);
Gf3 vec3_mul(const Gf3& v, const GfMat3& m);  // row vector times matrix
Gf mat3_det(const GfMat3& m);
std::optional<GfMat3> mat3_inv(const GfMat3& m);
GfMat3 mat3_id();
GfMat3 mat3_conj(const GfMat3& m);       // entrywise Frobenius
GfMat3 mat3_transpose(const GfMat3& m);
GfMat3 mat3_scaled(const GfMat3& m, Gf c);

}  // namespace k3ns

#endif
