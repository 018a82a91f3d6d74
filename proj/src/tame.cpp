#include "distlab/tame.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "distlab/modular.hpp"

namespace distlab {

namespace {

std::int64_t md(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(md(a, m)) * md(b, m) % m);
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool odd_prime_power(std::int64_t q) {
  if (q < 3 || q % 2 == 0) return false;
  return modp::prime_factors(static_cast<std::uint64_t>(q)).size() == 1;
}

std::pair<std::int64_t, std::int64_t> reduce(std::int64_t num, std::int64_t den) {
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

TameShape parse_shape(const std::string& s) {
  if (s == "unramified-E" || s == "UnramifiedE") return TameShape::UnramifiedE;
  if (s == "ramified-E" || s == "RamifiedE") return TameShape::RamifiedE;
  throw TameError("unknown shape '" + s + "' (expected unramified-E or ramified-E)");
}

std::string shape_name(TameShape s) { return s == TameShape::UnramifiedE ? "unramified-E" : "ramified-E"; }

std::int64_t TameTower::default_modulus(std::int64_t q, int n) {
  auto l = std::lcm(std::lcm(q - 1, q * q - 1), std::int64_t{2});
  return 4 * std::lcm(l, std::int64_t{n});
}

TameTower::TameTower(std::int64_t q, std::int64_t modulus, TameShape shape, int extra_degree)
    : q_(q), m_(modulus), shape_(shape) {
  if (!odd_prime_power(q)) throw TameError("q must be an odd prime power, got " + std::to_string(q));
  if (modulus <= 0 || modulus % 2 != 0 || modulus % (q * q - 1) != 0)
    throw TameError("modulus M insufficient: need 2(q^2-1) | M, got " + std::to_string(modulus));
  if (extra_degree < 0 || extra_degree > 4) throw TameError("degree of A must be in [1, 4]");
  auto mk = [&](std::string label, int e, int f) { fields_.push_back({std::move(label), e, f, ipow(q, f)}); };
  mk("F", 1, 1);
  if (shape == TameShape::UnramifiedE) {
    mk("E", 1, 2);
    mk("K", 2, 1);
  } else {
    mk("E", 2, 1);
    mk("K", 1, 2);
  }
  mk("L", 2, 2);
  if (extra_degree > 0) {
    const auto& e = fields_[1];
    mk("A", e.e, e.f * extra_degree);
  }
}

TameCharacter TameTower::make(int fld, std::int64_t u, std::int64_t r) const {
  return {fld, md(u, m_), md(r, field(fld).residue - 1)};
}

TameCharacter TameTower::mul(const TameCharacter& a, const TameCharacter& b) const {
  if (a.field != b.field) throw TameError("characters of different fields");
  return make(a.field, a.u + b.u, a.r + b.r);
}

TameCharacter TameTower::inv(const TameCharacter& a) const { return make(a.field, -a.u, -a.r); }

TameCharacter TameTower::power(const TameCharacter& a, std::int64_t k) const {
  const auto n = field(a.field).residue - 1;
  return make(a.field, mulmod(a.u, k, m_), mulmod(a.r, k, n));
}

std::int64_t TameTower::order(const TameCharacter& a) const {
  const auto n = field(a.field).residue - 1;
  return std::lcm(m_ / std::gcd(a.u, m_), n / std::gcd(a.r, n));
}

std::int64_t TameTower::count(int fld) const { return m_ * (field(fld).residue - 1); }

TameCharacter TameTower::nth(int fld, std::int64_t i) const {
  const auto n = field(fld).residue - 1;
  return {fld, i / n, i % n};
}

TameTower::Step TameTower::step(int lower, int upper) const {
  const auto &lo = field(lower), &up = field(upper);
  if (up.e == lo.e && up.f % lo.f == 0 && up.f > lo.f) return {false, up.f / lo.f};
  if (up.e == 2 * lo.e && up.f == lo.f) return {true, 2};
  throw TameError(lo.label + " < " + up.label + " is not a single tame step");
}

std::vector<int> TameTower::path(int lower, int upper) const {
  if (lower == upper) return {lower};
  try {
    step(lower, upper);
    return {lower, upper};
  } catch (const TameError&) {
  }
  if (lower == F() && (upper == L() || upper == A())) return {F(), E(), upper};
  throw TameError(field(lower).label + " is not below " + field(upper).label);
}

TameCharacter TameTower::pullback(const TameCharacter& chi, int upper) const {
  const auto p = path(chi.field, upper);
  TameCharacter c = chi;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const auto s = step(p[i - 1], p[i]);
    const auto& lo = field(p[i - 1]);
    if (!s.ramified) {
      // N(ϖ) = ϖ^d, N on residue units is x ↦ x^{(Q^d-1)/(Q-1)}
      const auto up_res = field(p[i]).residue;
      c = make(p[i], c.u * s.degree, c.r * ((up_res - 1) / (lo.residue - 1)));
    } else {
      // N(ϖ_up) = -ϖ_lo, N(t) = t^2; χ(-1) = (-1)^r
      c = make(p[i], c.u + (c.r % 2) * (m_ / 2), 2 * c.r);
    }
  }
  return c;
}

TameCharacter TameTower::restrict(const TameCharacter& chi, int lower) const {
  auto p = path(lower, chi.field);
  TameCharacter c = chi;
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    const auto s = step(p[i - 1], p[i]);
    const auto& lo = field(p[i - 1]);
    if (!s.ramified)
      c = make(p[i - 1], c.u, c.r % (lo.residue - 1));
    else
      c = make(p[i - 1], 2 * c.u, c.r);  // ϖ_lo = ϖ_up^2
  }
  return c;
}

int TameTower::galois_degree(int lower, int upper) const { return step(lower, upper).degree; }

TameCharacter TameTower::galois(const TameCharacter& chi, int lower, std::int64_t k) const {
  const auto s = step(lower, chi.field);
  k = md(k, s.degree);
  if (!s.ramified) {
    const auto n = field(chi.field).residue - 1;
    std::int64_t r = chi.r;
    for (std::int64_t i = 0; i < k; ++i) r = mulmod(r, field(lower).residue, n);
    return make(chi.field, chi.u, r);
  }
  if (k % 2 == 0) return chi;
  return make(chi.field, chi.u + (chi.r % 2) * (m_ / 2), chi.r);  // γ(ϖ) = -ϖ
}

std::vector<TameCharacter> TameTower::norm_kernel(int lower, int upper) const {
  std::vector<TameCharacter> out;
  for (std::int64_t i = 0; i < count(lower); ++i) {
    const auto c = nth(lower, i);
    if (!is_trivial(c) && is_trivial(pullback(c, upper))) out.push_back(c);
  }
  return out;
}

TameCharacter TameTower::quadratic_character(int lower, int upper) const {
  const auto k = norm_kernel(lower, upper);
  if (k.size() != 1) throw TameError("extension is not quadratic or modulus too small");
  return k.front();
}

std::string TameTower::describe(const TameCharacter& c) const {
  return field(c.field).label + "(u=" + std::to_string(c.u) + "/" + std::to_string(m_) + ",r=" + std::to_string(c.r) +
         "/" + std::to_string(field(c.field).residue - 1) + ")";
}

namespace {

std::vector<TameCharacter> orbit(const TameTower& t, const InducedParameter& rho) {
  std::vector<TameCharacter> o;
  const int d = t.galois_degree(rho.base, rho.ext);
  for (int k = 0; k < d; ++k) o.push_back(t.galois(rho.eta, rho.base, k));
  return o;
}

}  // namespace

bool is_regular(const TameTower& t, const InducedParameter& rho) {
  auto o = orbit(t, rho);
  std::sort(o.begin(), o.end());
  return std::adjacent_find(o.begin(), o.end()) == o.end();
}

InducedParameter base_change_param(const TameTower& t, const InducedParameter& rho0) {
  if (rho0.base != t.F() || rho0.ext != t.K() || rho0.eta.field != t.K())
    throw TameError("base change expects a parameter induced from K to F");
  return {t.E(), t.L(), t.pullback(rho0.eta, t.L())};
}

std::vector<TameCharacter> TameTwistSets::y_cap_yprime() const {
  std::vector<TameCharacter> out;
  std::set_intersection(Y.begin(), Y.end(), Yprime.begin(), Yprime.end(), std::back_inserter(out));
  return out;
}

TameTwistSets twist_sets(const TameTower& t, const InducedParameter& rho) {
  if (rho.base != t.E()) throw TameError("twist sets are taken over E");
  auto o = orbit(t, rho);
  std::sort(o.begin(), o.end());
  std::set<TameCharacter> norms;
  for (std::int64_t i = 0; i < t.count(t.F()); ++i) norms.insert(t.pullback(t.nth(t.F(), i), t.E()));
  TameTwistSets s;
  s.bound = t.modulus();
  for (std::int64_t i = 0; i < t.count(t.E()); ++i) {
    const auto mu = t.nth(t.E(), i);
    const auto tw = t.mul(rho.eta, t.pullback(mu, rho.ext));
    if (!std::binary_search(o.begin(), o.end(), tw)) continue;
    s.Z.push_back(mu);
    if (t.is_trivial(t.restrict(mu, t.F()))) s.Y.push_back(mu);
    if (norms.count(mu)) s.Yprime.push_back(mu);
  }
  return s;
}

bool EvenExampleReport::ok() const {
  return applicable && eta8_nontrivial && eta_trivial_on_F && pi0_regular && supercuspidal && equivariant &&
         z_size == 2 && y_eq_yprime && z_is_1_omega && bound_num == 2 && bound_den == 1 && q_point == 2 &&
         stable_under_doubling;
}

namespace {

bool suitable_eta(const TameTower& t, const TameCharacter& eta) {
  return t.is_trivial(t.restrict(eta, t.F())) && !t.is_trivial(t.power(eta, 8));
}

std::optional<TameCharacter> find_eta(const TameTower& t, std::int64_t target_order) {
  std::optional<TameCharacter> best, fallback;
  std::int64_t best_ord = 0, fallback_ord = 0;
  for (std::int64_t i = 0; i < t.count(t.K()); ++i) {
    const auto c = t.nth(t.K(), i);
    if (!suitable_eta(t, c)) continue;
    const auto o = t.order(c);
    if (o >= target_order && (!best || o < best_ord)) best = c, best_ord = o;
    if (!fallback || o > fallback_ord) fallback = c, fallback_ord = o;
  }
  return best ? best : fallback;
}

}  // namespace

EvenExampleReport even_dihedral_example(std::int64_t q, std::optional<std::int64_t> modulus, TameShape shape,
                                std::int64_t target_order,
                                std::optional<std::pair<std::int64_t, std::int64_t>> eta_override) {
  EvenExampleReport rep;
  rep.q = q;
  rep.modulus = modulus.value_or(TameTower::default_modulus(q));
  rep.shape = shape_name(shape);
  TameTower t(q, rep.modulus, shape);

  std::optional<TameCharacter> eta;
  if (eta_override) {
    eta = t.make(t.K(), eta_override->first, eta_override->second);
  } else {
    eta = find_eta(t, target_order);
  }
  if (!eta || !suitable_eta(t, *eta)) {
    rep.applicable = false;
    if (eta) {
      rep.eta = eta;
      rep.eta_order = t.order(*eta);
      rep.eta_trivial_on_F = t.is_trivial(t.restrict(*eta, t.F()));
      rep.eta8_nontrivial = !t.is_trivial(t.power(*eta, 8));
      rep.reason = "supplied eta fails the hypotheses (trivial on F^*, eta^8 != 1)";
    } else {
      rep.reason = "no character of K^* trivial on F^* with eta^8 != 1 at this q";
    }
    for (std::int64_t qq = 3; qq <= 25; qq += 2) {
      if (!odd_prime_power(qq)) continue;
      TameTower tt(qq, TameTower::default_modulus(qq), shape);
      if (find_eta(tt, 1)) rep.feasible_q.push_back(qq);
    }
    return rep;
  }

  rep.applicable = true;
  rep.eta = eta;
  rep.eta_order = t.order(*eta);
  rep.eta_trivial_on_F = true;
  rep.eta8_nontrivial = true;
  const InducedParameter rho0{t.F(), t.K(), *eta};
  rep.pi0_regular = is_regular(t, rho0);
  const auto rho = base_change_param(t, rho0);
  rep.eta_L = rho.eta;
  rep.supercuspidal = is_regular(t, rho);
  rep.equivariant = t.pullback(t.galois(*eta, t.F()), t.L()) == t.galois(rho.eta, t.E());

  const auto s = twist_sets(t, rho);
  rep.z_size = s.Z.size();
  rep.y_size = s.Y.size();
  rep.yprime_size = s.Yprime.size();
  rep.y_eq_yprime = s.y_eq_yprime();
  for (const auto& z : s.Z) rep.z_desc.push_back(t.describe(z));
  std::vector<TameCharacter> expect{t.trivial(t.E()), t.quadratic_character(t.E(), t.L())};
  std::sort(expect.begin(), expect.end());
  rep.z_is_1_omega = s.Z == expect;
  std::tie(rep.bound_num, rep.bound_den) =
      reduce(static_cast<std::int64_t>(s.Y.size() * s.Yprime.size()), static_cast<std::int64_t>(s.Z.size()));
  // if X → Y' is onto, q = |Y||Y'|/|Z|
  rep.q_point = rep.bound_den == 1 ? rep.bound_num : -1;
  rep.q_point_conjecture_based = true;

  TameTower t2(q, 2 * rep.modulus, shape);
  const InducedParameter rho2{t2.E(), t2.L(), t2.make(t2.L(), 2 * rho.eta.u, rho.eta.r)};
  const auto s2 = twist_sets(t2, rho2);
  rep.stable_under_doubling =
      s2.Z.size() == s.Z.size() && s2.Y.size() == s.Y.size() && s2.Yprime.size() == s.Yprime.size();
  return rep;
}

bool InjectionReport::ok() const {
  if (static_cast<int>(cases.size()) != count) return false;
  return std::all_of(cases.begin(), cases.end(), [](const InjectionCase& c) { return c.ok; });
}

InjectionCase injection_case(const TameTower& t, int n, const TameCharacter& eta, const std::string& kind) {
  if (t.A() < 0 || t.shape() != TameShape::UnramifiedE || t.field(t.A()).f != 2 * n)
    throw TameError("thm11 needs A unramified of degree n over an unramified E");
  InjectionCase c;
  c.eta = eta;
  c.kind = kind;
  const InducedParameter rho{t.E(), t.A(), eta};
  c.regular = is_regular(t, rho);
  const auto s = twist_sets(t, rho);
  c.z = s.Z.size();
  c.y = s.Y.size();
  c.yprime = s.Yprime.size();
  c.y_cap_trivial = s.y_cap_yprime() == std::vector<TameCharacter>{t.trivial(t.E())};

  std::map<TameCharacter, TameCharacter> lift;
  for (std::int64_t i = 0; i < t.count(t.E()); ++i) {
    const auto mu = t.nth(t.E(), i);
    lift.emplace(t.restrict(mu, t.F()), mu);
  }
  auto omega = t.restrict(eta, t.E());
  if (n % 2 == 0) omega = t.mul(omega, t.make(t.E(), t.modulus() / 2, 0));
  const auto omega_f = t.restrict(omega, t.F());

  std::vector<TameCharacter> xhat;
  for (std::int64_t i = 0; i < t.count(t.F()); ++i) {
    const auto chi = t.nth(t.F(), i);
    if (t.power(chi, n) != omega_f) continue;
    const auto it = lift.find(chi);
    if (it == lift.end()) {
      c.xhat_bound_hit = true;
      continue;
    }
    // π'⊗μ̃^{-1} has parameter η' = η·(μ̃^{-1}∘N); need η'^{-1} among the σ-conjugates of η'
    const auto e1 = t.mul(eta, t.pullback(t.inv(it->second), t.A()));
    const auto target = t.inv(e1);
    bool hit = false;
    for (int k = 1; k < 2 * n && !hit; k += 2) hit = t.galois(e1, t.F(), k) == target;
    if (hit) xhat.push_back(chi);
  }
  c.xhat = xhat.size();

  if (!xhat.empty()) {
    std::set<TameCharacter> images;
    const auto x0 = xhat.front();
    for (const auto& chi : xhat) {
      const auto img = t.pullback(t.mul(chi, t.inv(x0)), t.E());
      if (!std::binary_search(s.Yprime.begin(), s.Yprime.end(), img)) c.into_yprime = false;
      images.insert(img);
    }
    c.injective = images.size() == xhat.size();
  }

  const auto zs = static_cast<std::int64_t>(s.Z.size());
  std::tie(c.bound_x_num, c.bound_x_den) = reduce(static_cast<std::int64_t>(xhat.size() * s.Y.size()), zs);
  std::tie(c.bound_y_num, c.bound_y_den) = reduce(static_cast<std::int64_t>(s.Y.size() * s.Yprime.size()), zs);
  c.verdict_max = std::min(c.bound_x_num / c.bound_x_den, c.bound_y_num / c.bound_y_den);
  c.ok = c.regular && !c.xhat_bound_hit && c.into_yprime && c.injective;
  if (n % 2 == 1) c.ok = c.ok && c.y_cap_trivial && c.verdict_max <= 1;
  return c;
}

InjectionReport injection_suite(std::int64_t q, int n, int count, std::uint64_t seed, std::optional<std::int64_t> modulus) {
  if (n < 2 || n > 4) throw TameError("n must be 2, 3 or 4");
  if (count < 1) throw TameError("count must be positive");
  InjectionReport rep;
  rep.q = q;
  rep.n = n;
  rep.count = count;
  rep.seed = seed;
  rep.modulus = modulus.value_or(TameTower::default_modulus(q, n));
  TameTower t(q, rep.modulus, TameShape::UnramifiedE, n);
  const int a = t.A();
  const auto res = t.field(a).residue - 1;
  const auto m = t.modulus();
  const auto Q = t.field(t.E()).residue;
  std::mt19937_64 rng(seed);
  auto uni = [&](std::int64_t lim) { return std::uniform_int_distribution<std::int64_t>(0, lim - 1)(rng); };

  // self-dual: η^{φ^j} = η^{-1} for an odd j
  const int j = n % 2 == 1 ? n : n - 1;
  const auto sd_step = res / std::gcd(ipow(q, j) + 1, res);
  // self-twist: η^γ/η = μ∘N_{A/E} for some μ of E
  const auto S = res / (Q - 1);
  const auto g = std::gcd(S, Q - 1);
  const auto st_step = S / g;

  for (int i = 0; i < count; ++i) {
    std::string kind = i % 3 == 0 ? "random" : i % 3 == 1 ? "self-dual" : "self-twist";
    if (kind == "self-twist" && g == 1) kind = "random";
    // for even n every odd power of φ generates Gal(A/E) with φ^2, so a
    // σ-self-dual η is never regular
    if (kind == "self-dual" && n % 2 == 0) kind = "random";
    TameCharacter eta;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) throw TameError("could not draw a regular parameter");
      if (kind == "random")
        eta = t.make(a, uni(m), uni(res));
      else if (kind == "self-dual")
        eta = t.make(a, uni(2) * (m / 2), (1 + uni(res / sd_step - 1)) * sd_step);
      else
        eta = t.make(a, uni(m), (1 + uni(res / st_step - 1)) * st_step);
      if (is_regular(t, {t.E(), a, eta})) break;
    }
    auto c = injection_case(t, n, eta, kind);
    rep.nonvacuous += c.xhat > 0;
    rep.nontrivial_z += c.z > 1;
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

}  // namespace distlab
