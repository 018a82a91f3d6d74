#include "distlab/double_cosets.hpp"

#include <map>
#include <numeric>
#include <unordered_map>

namespace distlab {

bool DoubleCosetReport::all_theta_stable() const {
  for (bool b : theta_stable) {
    if (!b) return false;
  }
  return true;
}

bool DoubleCosetReport::sizes_ok() const {
  return std::accumulate(coset_sizes.begin(), coset_sizes.end(), std::int64_t{0}) == g_order;
}

namespace {

// Basis of {y : rows·y = 0}.
std::vector<std::vector<Elem>> nullspace(const FieldTower& t, std::vector<std::vector<Elem>> a, int ncols) {
  std::vector<int> pivot_of_col(ncols, -1);
  int row = 0;
  const int nrows = static_cast<int>(a.size());
  for (int c = 0; c < ncols && row < nrows; ++c) {
    int piv = -1;
    for (int r = row; r < nrows; ++r) {
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    const Elem inv = t.inv(a[row][c]);
    for (int k = 0; k < ncols; ++k) a[row][k] = t.mul(a[row][k], inv);
    for (int r = 0; r < nrows; ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const Elem f = a[r][c];
      for (int k = 0; k < ncols; ++k) a[r][k] = t.sub(a[r][k], t.mul(f, a[row][k]));
    }
    pivot_of_col[c] = row++;
  }
  std::vector<std::vector<Elem>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Elem> v(ncols, Elem::zero());
    v[free] = t.one();
    for (int c = 0; c < ncols; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = t.neg(a[pivot_of_col[c]][free]);
    }
    basis.push_back(v);
  }
  return basis;
}

std::vector<Mat> group_gens(const MatrixGroup& g) {
  std::vector<Mat> out;
  for (int i : g.generators()) out.push_back(g.element(i));
  return out;
}

// Groups the elements of S (given by index) into H-conjugacy orbits.
// Returns orbit id per S element.
template <class IndexOf>
std::vector<int> h_orbits(const FieldTower& t, const std::vector<Mat>& s_elems, const MatrixGroup& h,
                          IndexOf index_of, int& count) {
  std::vector<std::pair<Mat, Mat>> conj;
  for (const auto& x : group_gens(h)) conj.emplace_back(x, mat_inv(t, x));
  std::vector<int> orbit(s_elems.size(), -1);
  count = 0;
  for (std::size_t i = 0; i < s_elems.size(); ++i) {
    if (orbit[i] >= 0) continue;
    const int id = count++;
    orbit[i] = id;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& [c, ci] : conj) {
        const int y = index_of(mat_mul(t, mat_mul(t, c, s_elems[x]), ci));
        if (y < 0) throw std::logic_error("S is not closed under H-conjugation");
        if (orbit[y] < 0) {
          orbit[y] = id;
          stack.push_back(static_cast<std::size_t>(y));
        }
      }
    }
  }
  return orbit;
}

// Every G-conjugacy class meets at most one H-orbit.
bool conjugacy_descends(const std::vector<std::vector<int>>& g_keys, const std::vector<int>& orbit) {
  std::map<std::vector<int>, int> seen;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    auto [it, fresh] = seen.emplace(g_keys[i], orbit[i]);
    if (!fresh && it->second != orbit[i]) return false;
  }
  return true;
}

}  // namespace

std::int64_t count_s_set(const FieldTower& t, int n) {
  const Elem eps = t.gen();
  const Elem tr = t.trace(eps), nm = t.norm(eps);
  const auto field = t.base_elements();
  const int nn = n * n;
  const Mat id = mat_identity(t, n);
  std::int64_t total = 1;
  for (int i = 0; i < nn; ++i) total *= static_cast<std::int64_t>(field.size());

  std::int64_t count = 0;
  std::vector<int> digit(nn, 0);
  Mat x = mat_zero(n);
  for (std::int64_t c = 0; c < total; ++c) {
    for (int i = 0; i < nn; ++i) x.a[i] = field[digit[i]];
    // centralizer of x: (xy - yx)_{ij} = Σ_k x_ik y_kj - y_ik x_kj
    std::vector<std::vector<Elem>> rows(nn, std::vector<Elem>(nn, Elem::zero()));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        auto& r = rows[i * n + j];
        for (int k = 0; k < n; ++k) {
          r[k * n + j] = t.add(r[k * n + j], x.at(i, k));
          r[i * n + k] = t.sub(r[i * n + k], x.at(k, j));
        }
      }
    }
    const auto basis = nullspace(t, rows, nn);
    const Mat x2 = mat_mul(t, x, x);
    const int dim = static_cast<int>(basis.size());
    std::vector<int> coef(dim, 0);
    std::int64_t combos = 1;
    for (int i = 0; i < dim; ++i) combos *= static_cast<std::int64_t>(field.size());
    for (std::int64_t m = 0; m < combos; ++m) {
      Mat y = mat_zero(n);
      for (int b = 0; b < dim; ++b) {
        if (coef[b] == 0) continue;
        for (int i = 0; i < nn; ++i) y.a[i] = t.add(y.a[i], t.mul(field[coef[b]], basis[b][i]));
      }
      const Mat xy = mat_mul(t, x, y), y2 = mat_mul(t, y, y);
      Mat lhs = x2;
      for (int i = 0; i < nn; ++i) {
        lhs.a[i] = t.add(lhs.a[i], t.add(t.mul(tr, xy.a[i]), t.mul(nm, y2.a[i])));
      }
      if (lhs == id) ++count;
      for (int b = 0; b < dim; ++b) {
        if (++coef[b] < static_cast<int>(field.size())) break;
        coef[b] = 0;
      }
    }
    for (int i = 0; i < nn; ++i) {
      if (++digit[i] < static_cast<int>(field.size())) break;
      digit[i] = 0;
    }
  }
  return count;
}

DoubleCosetReport double_cosets(const MatrixGroup& g, const ConjugacyClasses& gc, const MatrixGroup& h) {
  const FieldTower& t = g.tower();
  DoubleCosetReport rep;
  rep.route = "enumerated";
  rep.g_name = g.name();
  rep.h_name = h.name();
  rep.g_order = g.order();
  rep.h_order = h.order();
  for (const auto& x : h.elements()) {
    if (g.index_of(x) < 0) throw std::invalid_argument("double_cosets: H is not contained in G");
  }

  const auto hg = group_gens(h);
  const int order = static_cast<int>(g.order());
  std::vector<int> dc(order, -1);
  for (int i = 0; i < order; ++i) {
    if (dc[i] >= 0) continue;
    const int id = static_cast<int>(rep.coset_reps.size());
    rep.coset_reps.push_back(g.element(i));
    dc[i] = id;
    std::int64_t size = 1;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& s : hg) {
        for (const Mat& y : {mat_mul(t, s, g.element(x)), mat_mul(t, g.element(x), s)}) {
          const int yi = g.index_of(y);
          if (dc[yi] < 0) {
            dc[yi] = id;
            ++size;
            stack.push_back(yi);
          }
        }
      }
    }
    rep.coset_sizes.push_back(size);
  }
  for (std::size_t c = 0; c < rep.coset_reps.size(); ++c) {
    const int th = g.index_of(mat_inv(t, mat_frob(t, rep.coset_reps[c])));
    rep.theta_stable.push_back(th >= 0 && dc[th] == static_cast<int>(c));
  }

  rep.galois_pair = g.kind() == h.kind() && (g.kind() == GroupKind::GL || g.kind() == GroupKind::SL) &&
                    g.side() == Side::Ext && h.side() == Side::Base && g.n() == h.n();
  if (!rep.galois_pair) return rep;

  const Mat id = mat_identity(t, g.n());
  std::vector<int> s_pos(order, -1);
  std::vector<Mat> s_elems;
  for (int i = 0; i < order; ++i) {
    const Mat& x = g.element(i);
    if (mat_mul(t, x, mat_frob(t, x)) == id) {
      s_pos[i] = static_cast<int>(s_elems.size());
      s_elems.push_back(x);
    }
  }
  rep.s_set_size = static_cast<std::int64_t>(s_elems.size());
  rep.s_set_oracle = g.kind() == GroupKind::GL ? count_s_set(t, g.n()) : -1;

  // fibres of gH -> g·σ(g)^{-1}
  std::vector<std::int64_t> fibre(order, 0);
  for (int i = 0; i < order; ++i) {
    const Mat& x = g.element(i);
    ++fibre[g.index_of(mat_mul(t, x, mat_inv(t, mat_frob(t, x))))];
  }
  bool bij = rep.s_set_size * h.order() == g.order();
  for (int i = 0; i < order && bij; ++i) {
    bij = fibre[i] == (s_pos[i] >= 0 ? h.order() : 0);
  }
  rep.bijection_ok = bij;

  int norb = 0;
  auto orbit = h_orbits(t, s_elems, h, [&](const Mat& m) {
    const int gi = g.index_of(m);
    return gi < 0 ? -1 : s_pos[gi];
  }, norb);
  rep.h_orbits_on_s = norb;
  std::vector<std::vector<int>> keys;
  keys.reserve(s_elems.size());
  for (const auto& s : s_elems) keys.push_back({gc.class_of[g.index_of(s)]});
  rep.h_conjugacy_ok = conjugacy_descends(keys, orbit);
  return rep;
}

DoubleCosetReport double_cosets_via_s(const MatrixGroup& h) {
  if (h.kind() != GroupKind::GL || h.side() != Side::Base) {
    throw std::invalid_argument("double_cosets_via_s: H must be GL_n(F_q)");
  }
  const FieldTower& t = h.tower();
  const int n = h.n();
  DoubleCosetReport rep;
  rep.route = "s-set";
  rep.g_name = "GL_" + std::to_string(n) + "(" + std::to_string(t.big_q()) + ")";
  rep.h_name = h.name();
  rep.g_order = group_order_formula(t, GroupKind::GL, n, Side::Ext);
  rep.h_order = h.order();
  rep.galois_pair = true;

  // standard generators of GL_n(F_{q^2})
  std::vector<Mat> gens;
  Mat d = mat_identity(t, n);
  d.at(0, 0) = t.gen();
  gens.push_back(d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < 2 * t.f(); ++k) {
        Mat e = mat_identity(t, n);
        e.at(i, j) = Elem::from_log(k);
        gens.push_back(e);
      }
    }
  }
  std::vector<Mat> gens_sigma_inv;
  for (const auto& x : gens) gens_sigma_inv.push_back(mat_inv(t, mat_frob(t, x)));

  const Mat id = mat_identity(t, n);
  std::unordered_map<std::uint64_t, int> where;
  std::vector<Mat> s_elems{id}, g_of{id};
  where.emplace(mat_key(t, id), 0);
  for (std::size_t cur = 0; cur < s_elems.size(); ++cur) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Mat s = mat_mul(t, mat_mul(t, gens[k], s_elems[cur]), gens_sigma_inv[k]);
      if (where.emplace(mat_key(t, s), static_cast<int>(s_elems.size())).second) {
        s_elems.push_back(s);
        g_of.push_back(mat_mul(t, gens[k], g_of[cur]));
      }
    }
  }
  for (const auto& s : s_elems) {
    if (!(mat_mul(t, s, mat_frob(t, s)) == id)) throw std::logic_error("orbit left S");
  }
  const std::int64_t image = static_cast<std::int64_t>(s_elems.size());
  rep.s_set_oracle = count_s_set(t, n);
  rep.s_set_size = rep.s_set_oracle;
  rep.bijection_ok = image * rep.h_order == rep.g_order && image == rep.s_set_oracle;

  auto index_of = [&](const Mat& m) {
    auto it = where.find(mat_key(t, m));
    return it == where.end() ? -1 : it->second;
  };
  int norb = 0;
  auto orbit = h_orbits(t, s_elems, h, index_of, norb);
  rep.h_orbits_on_s = norb;
  std::vector<std::vector<int>> keys;
  keys.reserve(s_elems.size());
  for (const auto& s : s_elems) keys.push_back(gl_conjugacy_key(t, s));
  rep.h_conjugacy_ok = conjugacy_descends(keys, orbit);

  std::vector<int> first(norb, -1);
  std::vector<std::int64_t> orbit_size(norb, 0);
  for (std::size_t i = 0; i < s_elems.size(); ++i) {
    if (first[orbit[i]] < 0) first[orbit[i]] = static_cast<int>(i);
    ++orbit_size[orbit[i]];
  }
  for (int o = 0; o < norb; ++o) {
    const Mat& g = g_of[first[o]];
    const Mat& s = s_elems[first[o]];
    rep.coset_reps.push_back(g);
    rep.coset_sizes.push_back(orbit_size[o] * rep.h_order);
    // θ(g) = σ(g)^{-1} maps to g^{-1}·s·g
    const int ti = index_of(mat_mul(t, mat_mul(t, mat_inv(t, g), s), g));
    rep.theta_stable.push_back(ti >= 0 && orbit[ti] == o);
  }
  return rep;
}

}  // namespace distlab
