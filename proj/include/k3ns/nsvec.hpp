#ifndef K3NS_NSVEC_HPP
#define K3NS_NSVEC_HPP

// Row vectors in the fixed 22-line basis and the small dense matrices
// acting on them from the right.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace k3ns {

constexpr int kRank = 22;
using NSVec = std::array<int32_t, kRank>;
using Mat22 = std::array<std::array<int32_t, kRank>, kRank>;

inline NSVec nsvec_zero() { return NSVec{}; }

inline NSVec operator+(const NSVec& a, const NSVec& b) {
  NSVec r;
  for (int i = 0; i < kRank; ++i) r[i] = a[i] + b[i];
  return r;
}
inline NSVec operator-(const NSVec& a, const NSVec& b) {
  NSVec r;
  for (int i = 0; i < kRank; ++i) r[i] = a[i] - b[i];
  return r;
}
inline NSVec operator-(const NSVec& a) {
  NSVec r;
  for (int i = 0; i < kRank; ++i) r[i] = -a[i];
  return r;
}

inline NSVec mul(const NSVec& v, const Mat22& m) {
  NSVec r{};
  for (int i = 0; i < kRank; ++i) {
    int32_t vi = v[i];
    if (vi == 0) continue;
    for (int j = 0; j < kRank; ++j) r[j] += vi * m[i][j];
  }
  return r;
}

inline Mat22 mat_mul(const Mat22& a, const Mat22& b) {
  Mat22 r{};
  for (int i = 0; i < kRank; ++i)
    for (int k = 0; k < kRank; ++k) {
      int32_t aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < kRank; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

inline Mat22 mat_identity() {
  Mat22 r{};
  for (int i = 0; i < kRank; ++i) r[i][i] = 1;
  return r;
}

inline bool is_identity(const Mat22& m) { return m == mat_identity(); }

std::string nsvec_str(const NSVec& v);

}  // namespace k3ns

#endif
