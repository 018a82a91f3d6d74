#include "distlab/matrix.hpp"

#include <sstream>

namespace distlab {

Mat mat_zero(int n) {
  Mat m;
  m.n = n;
  m.a.fill(Elem::zero());
  return m;
}

Mat mat_identity(const FieldTower& t, int n) {
  Mat m = mat_zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = t.one();
  return m;
}

Mat mat_mul(const FieldTower& t, const Mat& x, const Mat& y) {
  const int n = x.n;
  Mat r;
  r.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Elem s = Elem::zero();
      for (int k = 0; k < n; ++k) s = t.add(s, t.mul(x.a[i * n + k], y.a[k * n + j]));
      r.a[i * n + j] = s;
    }
  }
  return r;
}

Elem mat_det(const FieldTower& t, const Mat& x) {
  switch (x.n) {
    case 1:
      return x.a[0];
    case 2:
      return t.sub(t.mul(x.a[0], x.a[3]), t.mul(x.a[1], x.a[2]));
    case 3: {
      auto minor = [&](int r0, int r1, int c0, int c1) {
        return t.sub(t.mul(x.at(r0, c0), x.at(r1, c1)), t.mul(x.at(r0, c1), x.at(r1, c0)));
      };
      Elem d = t.mul(x.at(0, 0), minor(1, 2, 1, 2));
      d = t.sub(d, t.mul(x.at(0, 1), minor(1, 2, 0, 2)));
      return t.add(d, t.mul(x.at(0, 2), minor(1, 2, 0, 1)));
    }
    default:
      throw FieldError("mat_det: unsupported size");
  }
}

Mat mat_inv(const FieldTower& t, const Mat& x) {
  const Elem d = mat_det(t, x);
  if (d.is_zero()) throw FieldError("mat_inv: singular matrix");
  const Elem di = t.inv(d);
  const int n = x.n;
  Mat r = mat_zero(n);
  if (n == 1) {
    r.a[0] = di;
    return r;
  }
  if (n == 2) {
    r.a[0] = t.mul(x.a[3], di);
    r.a[1] = t.neg(t.mul(x.a[1], di));
    r.a[2] = t.neg(t.mul(x.a[2], di));
    r.a[3] = t.mul(x.a[0], di);
    return r;
  }
  // adj(x)_{ji} = cofactor_{ij}
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      const Elem c = t.sub(t.mul(x.at(r0, c0), x.at(r1, c1)), t.mul(x.at(r0, c1), x.at(r1, c0)));
      r.at(j, i) = t.mul(c, di);
    }
  }
  return r;
}

Mat mat_frob(const FieldTower& t, const Mat& x) {
  Mat r = x;
  for (int i = 0; i < x.n * x.n; ++i) r.a[i] = t.frobenius(x.a[i]);
  return r;
}

Mat mat_transpose(const Mat& x) {
  Mat r = x;
  for (int i = 0; i < x.n; ++i) {
    for (int j = 0; j < x.n; ++j) r.at(i, j) = x.at(j, i);
  }
  return r;
}

Mat mat_scale(const FieldTower& t, Elem s, const Mat& x) {
  Mat r = x;
  for (int i = 0; i < x.n * x.n; ++i) r.a[i] = t.mul(s, x.a[i]);
  return r;
}

bool mat_is_identity(const FieldTower& t, const Mat& x) { return x == mat_identity(t, x.n); }

bool mat_over_base(const FieldTower& t, const Mat& x) {
  for (int i = 0; i < x.n * x.n; ++i) {
    if (!t.in_base(x.a[i])) return false;
  }
  return true;
}

std::uint64_t mat_key(const FieldTower& t, const Mat& x) {
  std::uint64_t key = 0;
  const std::uint64_t base = static_cast<std::uint64_t>(t.big_q());
  for (int i = x.n * x.n - 1; i >= 0; --i) key = key * base + static_cast<std::uint64_t>(t.to_code(x.a[i]));
  return key;
}

Mat mat_from_key(const FieldTower& t, int n, std::uint64_t key) {
  Mat m = mat_zero(n);
  const std::uint64_t base = static_cast<std::uint64_t>(t.big_q());
  for (int i = 0; i < n * n; ++i) {
    m.a[i] = t.from_code(static_cast<int>(key % base));
    key /= base;
  }
  return m;
}

std::vector<Elem> char_poly(const FieldTower& t, const Mat& x) {
  const int n = x.n;
  if (n == 1) return {t.neg(x.a[0]), t.one()};
  Elem tr = Elem::zero();
  for (int i = 0; i < n; ++i) tr = t.add(tr, x.at(i, i));
  const Elem det = mat_det(t, x);
  if (n == 2) return {det, t.neg(tr), t.one()};
  // sum of principal 2x2 minors
  Elem c2 = Elem::zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      c2 = t.add(c2, t.sub(t.mul(x.at(i, i), x.at(j, j)), t.mul(x.at(i, j), x.at(j, i))));
    }
  }
  return {t.neg(det), c2, t.neg(tr), t.one()};
}

namespace {

// Solves Σ_k c_k v_k = target for c over the field, vectors of length len.
// Returns false when target is outside the span.
bool solve_span(const FieldTower& t, std::vector<std::vector<Elem>> cols, std::vector<Elem> target,
                std::vector<Elem>& coeffs) {
  const int rows = static_cast<int>(target.size());
  const int m = static_cast<int>(cols.size());
  // augmented rows x (m + 1)
  std::vector<std::vector<Elem>> a(rows, std::vector<Elem>(m + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < m; ++c) a[r][c] = cols[c][r];
    a[r][m] = target[r];
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < m && row < rows; ++c) {
    int piv = -1;
    for (int r = row; r < rows; ++r) {
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    const Elem inv = t.inv(a[row][c]);
    for (int k = c; k <= m; ++k) a[row][k] = t.mul(a[row][k], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const Elem f = a[r][c];
      for (int k = c; k <= m; ++k) a[r][k] = t.sub(a[r][k], t.mul(f, a[row][k]));
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < rows; ++r) {
    if (!a[r][m].is_zero()) return false;
  }
  coeffs.assign(m, Elem::zero());
  for (int i = 0; i < row; ++i) coeffs[pivot_col[i]] = a[i][m];
  return true;
}

std::vector<Elem> flatten(const Mat& x) { return std::vector<Elem>(x.a.begin(), x.a.begin() + x.n * x.n); }

}  // namespace

std::vector<Elem> min_poly(const FieldTower& t, const Mat& x) {
  std::vector<std::vector<Elem>> powers{flatten(mat_identity(t, x.n))};
  Mat p = x;
  for (int d = 1; d <= x.n; ++d) {
    std::vector<Elem> coeffs;
    if (solve_span(t, powers, flatten(p), coeffs)) {
      std::vector<Elem> out;
      for (const auto& c : coeffs) out.push_back(t.neg(c));
      out.push_back(t.one());
      return out;
    }
    powers.push_back(flatten(p));
    p = mat_mul(t, p, x);
  }
  throw std::logic_error("min_poly: Cayley-Hamilton violated");
}

std::vector<int> gl_conjugacy_key(const FieldTower& t, const Mat& x) {
  std::vector<int> key;
  for (const auto& c : char_poly(t, x)) key.push_back(t.to_code(c));
  key.push_back(-1);
  for (const auto& c : min_poly(t, x)) key.push_back(t.to_code(c));
  return key;
}

std::string mat_to_string(const FieldTower&, const Mat& x) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < x.n; ++i) {
    if (i) os << ";";
    for (int j = 0; j < x.n; ++j) {
      if (j) os << ",";
      const Elem e = x.at(i, j);
      if (e.is_zero()) {
        os << "0";
      } else {
        os << "g^" << e.log;
      }
    }
  }
  os << "]";
  return os.str();
}

}  // namespace distlab
