// Small square matrices (n <= 3) over F_{q^2}, stored entrywise as
// discrete logs. Every routine takes the tower explicitly.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "distlab/field_tower.hpp"

namespace distlab {

inline constexpr int kMaxDim = 3;

struct Mat {
  std::array<Elem, kMaxDim * kMaxDim> a{};
  int n = 0;

  Elem& at(int i, int j) { return a[i * n + j]; }
  Elem at(int i, int j) const { return a[i * n + j]; }
  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.n != y.n) return false;
    for (int i = 0; i < x.n * x.n; ++i) {
      if (x.a[i] != y.a[i]) return false;
    }
    return true;
  }
};

Mat mat_identity(const FieldTower& t, int n);
Mat mat_zero(int n);
Mat mat_mul(const FieldTower& t, const Mat& x, const Mat& y);
Elem mat_det(const FieldTower& t, const Mat& x);
/// Inverse via the adjugate; throws FieldError when singular.
Mat mat_inv(const FieldTower& t, const Mat& x);
/// Entrywise frobenius, i.e. sigma(g).
Mat mat_frob(const FieldTower& t, const Mat& x);
Mat mat_transpose(const Mat& x);
Mat mat_scale(const FieldTower& t, Elem s, const Mat& x);
bool mat_is_identity(const FieldTower& t, const Mat& x);
bool mat_over_base(const FieldTower& t, const Mat& x);

/// Σ code(a_i)·Q^i over the row-major entries, Q = |F_{q^2}|.
std::uint64_t mat_key(const FieldTower& t, const Mat& x);
Mat mat_from_key(const FieldTower& t, int n, std::uint64_t key);

/// Characteristic polynomial det(xI - M), coefficients x^0 .. x^n.
std::vector<Elem> char_poly(const FieldTower& t, const Mat& x);
/// Minimal polynomial, monic, coefficients x^0 .. x^d.
std::vector<Elem> min_poly(const FieldTower& t, const Mat& x);
/// (char poly, min poly) codes; a complete GL_n(F_{q^2}) conjugacy
/// invariant for n <= 3.
std::vector<int> gl_conjugacy_key(const FieldTower& t, const Mat& x);

std::string mat_to_string(const FieldTower& t, const Mat& x);

}  // namespace distlab
