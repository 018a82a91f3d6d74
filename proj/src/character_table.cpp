#include "distlab/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "distlab/modular.hpp"

namespace distlab {

namespace {

using u64 = std::uint64_t;

std::vector<std::int64_t> value_key(const ClassFunction& v) {
  std::vector<std::int64_t> key;
  for (const auto& x : v) {
    key.push_back(x.order());
    key.push_back(static_cast<std::int64_t>(x.terms().size()));
    for (const auto& t : x.terms()) {
      key.push_back(t.exp);
      key.push_back(t.coeff);
    }
  }
  return key;
}

u64 isqrt(u64 x) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

struct ModMat {
  int k = 0;
  std::vector<u64> a;
  explicit ModMat(int n) : k(n), a(static_cast<std::size_t>(n) * n, 0) {}
  u64& at(int i, int j) { return a[static_cast<std::size_t>(i) * k + j]; }
  u64 at(int i, int j) const { return a[static_cast<std::size_t>(i) * k + j]; }
};

// A[l][k] = Σ_j c_j·#{x ∈ C_j, y ∈ C_l : x·y = z_k}, obtained as
// Σ_{w ∈ G} c_{class(w^{-1})} [w·z_k ∈ C_l].
ModMat class_algebra_matrix(const MatrixGroup& g, const ConjugacyClasses& cc, const std::vector<u64>& c, u64 ell,
                            int threads) {
  const int k = cc.count();
  const int order = static_cast<int>(g.order());
  const FieldTower& t = g.tower();
  std::vector<u64> cw(order);
  for (int w = 0; w < order; ++w) cw[w] = c[cc.inverse_class[cc.class_of[w]]];
  ModMat a(k);
  auto column = [&](int col) {
    std::vector<u64> acc(k, 0);
    const Mat& z = g.element(cc.reps[col]);
    for (int w = 0; w < order; ++w) {
      const int idx = g.index_of(mat_mul(t, g.element(w), z));
      acc[cc.class_of[idx]] += cw[w];
    }
    for (int l = 0; l < k; ++l) a.at(l, col) = acc[l] % ell;
  };
  if (threads <= 1) {
    for (int col = 0; col < k; ++col) column(col);
  } else {
    std::vector<std::thread> pool;
    for (int th = 0; th < threads; ++th) {
      pool.emplace_back([&, th] {
        for (int col = th; col < k; col += threads) column(col);
      });
    }
    for (auto& th : pool) th.join();
  }
  return a;
}

// Similarity reduction to upper Hessenberg form, H = T^{-1} A T.
// Returns false when a subdiagonal entry vanishes.
bool hessenberg(ModMat& h, ModMat& tr, u64 ell) {
  const int k = h.k;
  for (int i = 0; i < k; ++i) tr.at(i, i) = 1;
  for (int m = 0; m + 2 < k; ++m) {
    int piv = -1;
    for (int i = m + 1; i < k; ++i) {
      if (h.at(i, m) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return false;
    if (piv != m + 1) {
      for (int j = 0; j < k; ++j) std::swap(h.at(piv, j), h.at(m + 1, j));
      for (int i = 0; i < k; ++i) std::swap(h.at(i, piv), h.at(i, m + 1));
      for (int i = 0; i < k; ++i) std::swap(tr.at(i, piv), tr.at(i, m + 1));
    }
    const u64 inv = modp::inv(h.at(m + 1, m), ell);
    for (int r = m + 2; r < k; ++r) {
      if (h.at(r, m) == 0) continue;
      const u64 u = modp::mul(h.at(r, m), inv, ell);
      for (int j = m; j < k; ++j) {
        h.at(r, j) = modp::sub(h.at(r, j), modp::mul(u, h.at(m + 1, j), ell), ell);
      }
      for (int i = 0; i < k; ++i) {
        h.at(i, m + 1) = modp::add(h.at(i, m + 1), modp::mul(u, h.at(i, r), ell), ell);
        tr.at(i, m + 1) = modp::add(tr.at(i, m + 1), modp::mul(u, tr.at(i, r), ell), ell);
      }
    }
  }
  return k < 2 || h.at(k - 1, k - 2) != 0;
}

// det(xI - H) for upper Hessenberg H.
modp::Poly hessenberg_charpoly(const ModMat& h, u64 ell) {
  const int k = h.k;
  std::vector<modp::Poly> p(k + 1);
  p[0] = {1};
  for (int m = 1; m <= k; ++m) {
    modp::Poly cur(m + 1, 0);
    // (x - h_{m-1,m-1}) p_{m-1}
    for (std::size_t i = 0; i < p[m - 1].size(); ++i) {
      cur[i + 1] = modp::add(cur[i + 1], p[m - 1][i], ell);
      cur[i] = modp::sub(cur[i], modp::mul(h.at(m - 1, m - 1), p[m - 1][i], ell), ell);
    }
    u64 prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod = modp::mul(prod, h.at(i, i - 1), ell);
      const u64 coef = modp::mul(h.at(i - 1, m - 1), prod, ell);
      if (coef == 0) continue;
      for (std::size_t j = 0; j < p[i - 1].size(); ++j) {
        cur[j] = modp::sub(cur[j], modp::mul(coef, p[i - 1][j], ell), ell);
      }
    }
    p[m] = std::move(cur);
  }
  return p[k];
}

// Kernel vector of H - λ by back substitution along the subdiagonal.
std::optional<std::vector<u64>> hessenberg_eigenvector(const ModMat& h, u64 lambda, u64 ell) {
  const int k = h.k;
  std::vector<u64> x(k, 0);
  x[k - 1] = 1;
  for (int i = k - 1; i >= 1; --i) {
    u64 s = 0;
    for (int j = i; j < k; ++j) {
      u64 hij = h.at(i, j);
      if (j == i) hij = modp::sub(hij, lambda, ell);
      s = modp::add(s, modp::mul(hij, x[j], ell), ell);
    }
    x[i - 1] = modp::mul(modp::sub(0, s, ell), modp::inv(h.at(i, i - 1), ell), ell);
  }
  u64 s = 0;
  for (int j = 0; j < k; ++j) {
    u64 hj = h.at(0, j);
    if (j == 0) hj = modp::sub(hj, lambda, ell);
    s = modp::add(s, modp::mul(hj, x[j], ell), ell);
  }
  if (s != 0) return std::nullopt;
  return x;
}

struct RationalClasses {
  std::vector<int> reps;
  std::vector<std::pair<int, int>> member;  // class -> (rational rep, t) with class = rep^t
};

RationalClasses rational_classes(const ConjugacyClasses& cc) {
  RationalClasses rc;
  rc.member.assign(cc.count(), {-1, 0});
  for (int c = 0; c < cc.count(); ++c) {
    if (rc.member[c].first >= 0) continue;
    rc.reps.push_back(c);
    const int o = cc.orders[c];
    for (int t = 1; t <= o; ++t) {
      if (std::gcd(t, o) != 1) continue;
      const int d = cc.power_class(c, t);
      if (rc.member[d].first < 0) rc.member[d] = {c, t % o};
    }
  }
  return rc;
}

bool character_less(const Character& a, const Character& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  for (std::size_t c = 0; c < a.values.size(); ++c) {
    const auto& x = a.values[c].terms();
    const auto& y = b.values[c].terms();
    if (x != y) return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
  return false;
}

// One Dixon pass; nullopt when this random combination does not separate
// the central characters.
std::optional<std::vector<Character>> dixon_attempt(const MatrixGroup& g, const ConjugacyClasses& cc, u64 ell,
                                                    u64 z_e, std::uint64_t seed, int threads) {
  const int k = cc.count();
  const u64 order = static_cast<u64>(g.order());
  const u64 e = static_cast<u64>(cc.exponent);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<u64> dist(1, ell - 1);
  std::vector<u64> c(k);
  for (auto& x : c) x = dist(rng);

  ModMat h = class_algebra_matrix(g, cc, c, ell, threads);
  ModMat tr(k);
  if (k == 1) {
    return std::vector<Character>{{1, {CyclotomicValue::integer(1)}}};
  }
  if (!hessenberg(h, tr, ell)) return std::nullopt;
  const auto roots = modp::split_roots(hessenberg_charpoly(h, ell), ell, seed);
  if (static_cast<int>(roots.size()) != k) return std::nullopt;

  std::vector<u64> size_inv(k);
  for (int j = 0; j < k; ++j) size_inv[j] = modp::inv(static_cast<u64>(cc.sizes[j]) % ell, ell);
  const RationalClasses rc = rational_classes(cc);

  std::vector<Character> chars;
  for (u64 lambda : roots) {
    auto x = hessenberg_eigenvector(h, lambda, ell);
    if (!x) return std::nullopt;
    std::vector<u64> omega(k, 0);
    for (int i = 0; i < k; ++i) {
      u64 s = 0;
      for (int j = 0; j < k; ++j) s = modp::add(s, modp::mul(tr.at(i, j), (*x)[j], ell), ell);
      omega[i] = s;
    }
    if (omega[0] == 0) return std::nullopt;
    const u64 norm = modp::inv(omega[0], ell);
    for (auto& w : omega) w = modp::mul(w, norm, ell);

    // Σ_j ω_j ω_{j*} / |C_j| = |G| / d²
    u64 s = 0;
    for (int j = 0; j < k; ++j) {
      s = modp::add(s, modp::mul(modp::mul(omega[j], omega[cc.inverse_class[j]], ell), size_inv[j], ell), ell);
    }
    if (s == 0) return std::nullopt;
    const u64 d2 = modp::mul(order % ell, modp::inv(s, ell), ell);
    const u64 d = isqrt(d2);
    if (d * d != d2 || d == 0 || order % d != 0) return std::nullopt;

    std::vector<u64> val(k);
    for (int j = 0; j < k; ++j) val[j] = modp::mul(modp::mul(omega[j], d, ell), size_inv[j], ell);

    Character chi;
    chi.degree = static_cast<std::int64_t>(d);
    chi.values.resize(k);
    for (int r : rc.reps) {
      const int o = cc.orders[r];
      const u64 zeta = modp::pow(z_e, e / static_cast<u64>(o), ell);
      const u64 zinv = modp::inv(zeta, ell);
      std::vector<u64> zpow(o);
      zpow[0] = 1;
      for (int i = 1; i < o; ++i) zpow[i] = modp::mul(zpow[i - 1], zinv, ell);
      std::vector<u64> v(o);
      for (int t = 0; t < o; ++t) v[t] = val[cc.power_class(r, t)];
      const u64 o_inv = modp::inv(static_cast<u64>(o) % ell, ell);
      std::vector<std::int64_t> mult(o);
      std::int64_t total = 0;
      for (int j = 0; j < o; ++j) {
        u64 acc = 0;
        int idx = 0;
        for (int t = 0; t < o; ++t) {
          acc = modp::add(acc, modp::mul(v[t], zpow[idx], ell), ell);
          idx += j;
          if (idx >= o) idx -= o;
        }
        const u64 m = modp::mul(acc, o_inv, ell);
        if (m > d) return std::nullopt;
        mult[j] = static_cast<std::int64_t>(m);
        total += mult[j];
      }
      if (total != static_cast<std::int64_t>(d)) return std::nullopt;
      for (int cls = 0; cls < k; ++cls) {
        if (rc.member[cls].first != r) continue;
        const int t = rc.member[cls].second;
        std::vector<CycloTerm> terms;
        for (int j = 0; j < o; ++j) {
          if (mult[j]) terms.push_back({static_cast<std::uint32_t>((static_cast<std::int64_t>(j) * t) % o), mult[j]});
        }
        chi.values[cls] = CyclotomicValue::from_terms(static_cast<std::uint32_t>(o), std::move(terms));
      }
    }
    chars.push_back(std::move(chi));
  }
  std::sort(chars.begin(), chars.end(), character_less);
  return chars;
}

std::vector<std::int64_t> unit_group_generators(std::int64_t e) {
  std::vector<std::int64_t> gens;
  std::set<std::int64_t> sub{1 % std::max<std::int64_t>(e, 1)};
  for (std::int64_t t = 2; t < e; ++t) {
    if (std::gcd(t, e) != 1 || sub.count(t)) continue;
    gens.push_back(t);
    std::vector<std::int64_t> frontier(sub.begin(), sub.end());
    while (!frontier.empty()) {
      std::vector<std::int64_t> next;
      for (auto x : frontier) {
        for (auto gen : gens) {
          const std::int64_t y = x * gen % e;
          if (sub.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace

CharacterTable::CharacterTable(GroupPtr g, ClassesPtr cc, std::vector<Character> chars, TableMeta meta)
    : group_(std::move(g)), classes_(std::move(cc)), chars_(std::move(chars)), meta_(meta) {
  for (int i = 0; i < count(); ++i) lookup_.emplace(value_key(chars_[i].values), i);
}

std::optional<int> CharacterTable::find(const ClassFunction& values) const {
  auto it = lookup_.find(value_key(values));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

TablePtr character_table(GroupPtr g, ClassesPtr cc, const DixonOptions& opts) {
  const u64 order = static_cast<u64>(g->order());
  const u64 e = static_cast<u64>(cc->exponent);
  const u64 lower = std::max<u64>({2 * isqrt(order) + 2, e, u64{1} << 30});
  const u64 ell = modp::least_prime_one_mod(e, lower);
  if (ell >= (u64{1} << 32)) throw TableError("character_table: no suitable prime below 2^32");
  const u64 z_e = modp::pow(modp::primitive_root(ell), (ell - 1) / e, ell);
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(attempt);
    auto chars = dixon_attempt(*g, *cc, ell, z_e, seed, opts.threads);
    if (!chars) continue;
    TableMeta meta{ell, seed, attempt + 1, false};
    return std::make_shared<CharacterTable>(std::move(g), std::move(cc), std::move(*chars), meta);
  }
  throw TableError("character_table: eigenspaces did not separate after " + std::to_string(opts.max_attempts) +
                   " attempts");
}

TableValidation validate_table(const CharacterTable& tab, int exact_pair_limit) {
  TableValidation v;
  const auto& cc = tab.classes();
  const auto& g = tab.group();
  const int k = cc.count();
  const std::int64_t order = g.order();
  const std::int64_t e = cc.exponent;

  v.count_ok = tab.count() == k;
  if (!v.count_ok) {
    v.failure = "character count differs from class count";
    return v;
  }
  std::int64_t dsq = 0, dmax = 0;
  for (const auto& chi : tab.characters()) {
    dsq += chi.degree * chi.degree;
    dmax = std::max(dmax, chi.degree);
  }
  v.degrees_ok = dsq == order;
  if (!v.degrees_ok) v.failure = "sum of squared degrees is " + std::to_string(dsq);

  v.values_ok = true;
  for (const auto& chi : tab.characters()) {
    if (chi.values.size() != static_cast<std::size_t>(k)) {
      v.values_ok = false;
      break;
    }
    if (!chi.values[0].same_form(CyclotomicValue::integer(chi.degree))) v.values_ok = false;
    for (int c = 0; c < k && v.values_ok; ++c) {
      const auto& x = chi.values[c];
      const int o = cc.orders[c];
      if (static_cast<int>(x.order()) != o || x.coefficient_sum() != chi.degree) v.values_ok = false;
      for (const auto& term : x.terms()) {
        if (term.coeff < 0) v.values_ok = false;
      }
      // power maps: prime powers and the inverse
      for (auto p : modp::prime_factors(static_cast<u64>(o))) {
        const int t = static_cast<int>(p);
        const int d = cc.power_class(c, t);
        const int od = cc.orders[d];
        std::vector<CycloTerm> terms;
        for (const auto& term : x.terms()) {
          terms.push_back({static_cast<std::uint32_t>((static_cast<std::int64_t>(term.exp) * t % o) / (o / od)),
                           term.coeff});
        }
        if (!CyclotomicValue::from_terms(od, terms).same_form(chi.values[d])) v.values_ok = false;
      }
      if (!x.conj().same_form(chi.values[cc.inverse_class[c]])) v.values_ok = false;
    }
  }
  if (!v.values_ok && v.failure.empty()) v.failure = "class values inconsistent";

  v.galois_closed = true;
  for (auto t : unit_group_generators(e)) {
    for (const auto& chi : tab.characters()) {
      ClassFunction img(k);
      for (int c = 0; c < k; ++c) img[c] = chi.values[c].galois(t);
      if (!tab.find(img)) v.galois_closed = false;
    }
  }
  if (!v.galois_closed && v.failure.empty()) v.failure = "rows not closed under Galois action";

  // Orthogonality modulo P.
  const u64 bound = 2 * static_cast<u64>(order) * (static_cast<u64>(dmax * dmax) + 1);
  const u64 prime = modp::least_prime_one_mod(static_cast<u64>(e), std::max<u64>(bound, u64{1} << 31));
  v.verify_prime = prime;
  const u64 root = modp::pow(modp::primitive_root(prime), (prime - 1) / static_cast<u64>(e), prime);
  std::vector<u64> rpow(e);
  rpow[0] = 1;
  for (std::int64_t i = 1; i < e; ++i) rpow[i] = modp::mul(rpow[i - 1], root, prime);
  auto eval = [&](const CyclotomicValue& x, bool conj) {
    const std::int64_t scale = e / x.order();
    u64 s = 0;
    for (const auto& term : x.terms()) {
      std::int64_t idx = (static_cast<std::int64_t>(term.exp) * scale) % e;
      if (conj) idx = (e - idx) % e;
      std::int64_t c = term.coeff % static_cast<std::int64_t>(prime);
      if (c < 0) c += static_cast<std::int64_t>(prime);
      s = modp::add(s, modp::mul(rpow[idx], static_cast<u64>(c), prime), prime);
    }
    return s;
  };
  std::vector<std::vector<u64>> val(k, std::vector<u64>(k)), bar(k, std::vector<u64>(k));
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < k; ++c) {
      val[i][c] = eval(tab[i].values[c], false);
      bar[i][c] = eval(tab[i].values[c], true);
    }
  }
  const u64 gmod = static_cast<u64>(order) % prime;
  v.row_orthogonal = true;
  for (int i = 0; i < k && v.row_orthogonal; ++i) {
    std::vector<u64> w(k);
    for (int c = 0; c < k; ++c) w[c] = modp::mul(val[i][c], static_cast<u64>(cc.sizes[c]) % prime, prime);
    for (int j = 0; j < k; ++j) {
      u64 s = 0;
      for (int c = 0; c < k; ++c) s = (s + w[c] * bar[j][c]) % prime;
      if (s != (i == j ? gmod : 0)) {
        v.row_orthogonal = false;
        break;
      }
    }
  }
  if (!v.row_orthogonal && v.failure.empty()) v.failure = "row orthogonality fails";
  v.column_orthogonal = true;
  for (int c = 0; c < k && v.column_orthogonal; ++c) {
    const u64 expect = static_cast<u64>(order / cc.sizes[c]) % prime;
    for (int d = 0; d < k; ++d) {
      u64 s = 0;
      for (int i = 0; i < k; ++i) s = (s + val[i][c] * bar[i][d]) % prime;
      if (s != (c == d ? expect : 0)) {
        v.column_orthogonal = false;
        break;
      }
    }
  }
  if (!v.column_orthogonal && v.failure.empty()) v.failure = "column orthogonality fails";

  if (order <= 5000) {
    v.elementwise_run = true;
    std::vector<std::int64_t> cls(cc.class_of.begin(), cc.class_of.end());
    for (int i = 0; i < k && v.elementwise_ok; ++i) {
      for (int j = 0; j < k; ++j) {
        u64 s = 0;
        for (auto c : cls) s = (s + val[i][c] * bar[j][c]) % prime;
        if (s != (i == j ? gmod : 0)) {
          v.elementwise_ok = false;
          break;
        }
      }
    }
    if (!v.elementwise_ok && v.failure.empty()) v.failure = "elementwise Gram matrix disagrees";
  }

  if (k <= exact_pair_limit) {
    v.exact_pairs_run = true;
    for (int i = 0; i < k && v.exact_pairs_ok; ++i) {
      for (int j = i; j < k; ++j) {
        CycloAccumulator acc(static_cast<std::uint32_t>(e));
        for (int c = 0; c < k; ++c) acc.add_product_conj(tab[i].values[c], tab[j].values[c], cc.sizes[c]);
        if (acc.as_integer() != std::optional<std::int64_t>(i == j ? order : 0)) {
          v.exact_pairs_ok = false;
          break;
        }
      }
    }
    if (!v.exact_pairs_ok && v.failure.empty()) v.failure = "exact cyclotomic inner product fails";
  }
  return v;
}

std::int64_t inner_product(const CharacterTable& t, const ClassFunction& a, const ClassFunction& b) {
  const auto& cc = t.classes();
  std::uint64_t l = 1;
  for (int c = 0; c < cc.count(); ++c) l = modp::lcm(l, modp::lcm(a[c].order(), b[c].order()));
  CycloAccumulator acc(static_cast<std::uint32_t>(l));
  for (int c = 0; c < cc.count(); ++c) acc.add_product_conj(a[c], b[c], cc.sizes[c]);
  const auto v = acc.as_integer();
  if (!v || *v % t.group().order() != 0) {
    throw TableError("inner_product: result is not an integer");
  }
  return *v / t.group().order();
}

ClassFunction restrict_class_function(const ClassFunction& chi, const EmbeddingData& e) {
  ClassFunction out;
  out.reserve(e.h_class_to_g.size());
  for (int gc : e.h_class_to_g) out.push_back(chi[gc]);
  return out;
}

std::vector<std::int64_t> restrict_multiplicity(const ClassFunction& chi, const EmbeddingData& e,
                                                const CharacterTable& h_table) {
  const auto res = restrict_class_function(chi, e);
  std::vector<std::int64_t> m;
  for (const auto& psi : h_table.characters()) m.push_back(inner_product(h_table, res, psi.values));
  return m;
}

Character dual(const CharacterTable& t, const Character& chi) {
  Character out{chi.degree, {}};
  for (int c = 0; c < t.classes().count(); ++c) out.values.push_back(chi.values[t.classes().inverse_class[c]]);
  return out;
}

Character galois(const CharacterTable& t, const Character& chi) {
  const auto& gc = t.classes().galois_class;
  if (gc.empty()) throw std::invalid_argument("galois: group is not over F_{q^2}");
  Character out{chi.degree, {}};
  for (int c = 0; c < t.classes().count(); ++c) out.values.push_back(chi.values[gc[c]]);
  return out;
}

std::int64_t det_exponent_at_class(const CharacterTable& t, int c, const MultCharacter& mu) {
  const auto& g = t.group();
  const Elem d = mat_det(g.tower(), g.element(t.classes().reps[c]));
  const std::int64_t v = mu.value_exponent(g.tower(), d);
  const std::int64_t o = t.classes().orders[c];
  if ((v * o) % mu.modulus != 0) throw std::logic_error("det_exponent_at_class: order mismatch");
  return v * o / mu.modulus;
}

Character det_twist(const CharacterTable& t, const Character& chi, const MultCharacter& mu) {
  if ((mu.home == Side::Ext) != (t.group().side() == Side::Ext)) {
    throw std::invalid_argument("det_twist: character lives on the wrong field");
  }
  Character out{chi.degree, {}};
  for (int c = 0; c < t.classes().count(); ++c) {
    out.values.push_back(chi.values[c].times_root(det_exponent_at_class(t, c, mu)));
  }
  return out;
}

int index_of(const CharacterTable& t, const Character& chi) {
  auto i = t.find(chi.values);
  if (!i) throw TableError("transformed character is not an irreducible of the table");
  return *i;
}

WhittakerData::WhittakerData(const CharacterTable& t) : table_(&t) {
  const auto& g = t.group();
  if (g.side() != Side::Ext) throw std::invalid_argument("WhittakerData: group must be over F_{q^2}");
  const FieldTower& tw = g.tower();
  psi_ = additive_character_trivial_on_base(tw);
  const int n = g.n();
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  const auto field = tw.ext_elements();
  std::int64_t total = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) total *= static_cast<std::int64_t>(field.size());
  std::vector<int> digit(slots.size(), 0);
  for (std::int64_t c = 0; c < total; ++c) {
    Mat u = mat_identity(tw, n);
    for (std::size_t s = 0; s < slots.size(); ++s) u.at(slots[s].first, slots[s].second) = field[digit[s]];
    const int idx = g.index_of(u);
    if (idx < 0) throw std::logic_error("WhittakerData: unipotent element outside the group");
    u_class_.push_back(t.classes().class_of[idx]);
    Elem rest = Elem::zero();
    for (int i = 1; i + 1 < n; ++i) rest = tw.add(rest, u.at(i, i + 1));
    u_first_.push_back(n > 1 ? u.at(0, 1) : Elem::zero());
    u_rest_.push_back(rest);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (++digit[s] < static_cast<int>(field.size())) break;
      digit[s] = 0;
    }
  }
  n_order_ = total;
}

std::int64_t WhittakerData::dim(const ClassFunction& chi, Elem a) const {
  const FieldTower& tw = table_->group().tower();
  const int p = tw.p();
  std::map<std::pair<int, int>, std::int64_t> counts;
  for (std::size_t i = 0; i < u_class_.size(); ++i) {
    ++counts[{u_class_[i], psi_.value_exponent(tw, tw.add(tw.mul(a, u_first_[i]), u_rest_[i]))}];
  }
  std::uint64_t l = static_cast<std::uint64_t>(p);
  for (const auto& [key, cnt] : counts) l = modp::lcm(l, chi[key.first].order());
  CycloAccumulator acc(static_cast<std::uint32_t>(l));
  for (const auto& [key, cnt] : counts) {
    acc.add_product_conj(chi[key.first], CyclotomicValue::root(static_cast<std::uint32_t>(p), key.second), cnt);
  }
  const auto v = acc.as_integer();
  if (!v || *v % n_order_ != 0) throw TableError("whittaker dimension is not an integer");
  return *v / n_order_;
}

}  // namespace distlab
