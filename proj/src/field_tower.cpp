#include "distlab/field_tower.hpp"

#include <numeric>
#include <sstream>

#include "distlab/modular.hpp"

namespace distlab {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Multiplies the element with polynomial code `code` by x modulo the monic
// modulus of degree `deg`.
int times_x(int code, const std::vector<int>& modulus, int p, int deg) {
  std::vector<int> digits(deg + 1, 0);
  for (int i = 0; i < deg; ++i) {
    digits[i + 1] = code % p;
    code /= p;
  }
  const int top = digits[deg];
  int out = 0;
  for (int i = deg - 1; i >= 0; --i) {
    int c = (digits[i] - top * modulus[i]) % p;
    if (c < 0) c += p;
    out = out * p + c;
  }
  return out;
}

int add_codes(int a, int b, int p) {
  int out = 0, scale = 1;
  while (a > 0 || b > 0) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

}  // namespace

std::shared_ptr<const FieldTower> FieldTower::build(int p, int f, std::int64_t ceiling) {
  if (p < 2 || !modp::is_prime(static_cast<std::uint64_t>(p))) {
    throw FieldError("build_tower: p = " + std::to_string(p) + " is not prime");
  }
  if (f < 1) throw FieldError("build_tower: f must be positive");
  const int deg = 2 * f;
  const std::int64_t size = ipow(p, deg);
  if (size > ceiling || size > (1 << 26)) {
    throw FieldError("build_tower: p^(2f) = " + std::to_string(size) + " exceeds the ceiling");
  }
  std::shared_ptr<FieldTower> t(new FieldTower());
  t->p_ = p;
  t->f_ = f;
  t->q_ = static_cast<int>(ipow(p, f));
  t->big_q_ = static_cast<int>(size);
  const int units = t->big_q_ - 1;

  // Least monic primitive polynomial, coefficients read as a base-p integer.
  std::vector<int> code_of_log(units);
  bool found = false;
  for (std::int64_t c = 0; c < size && !found; ++c) {
    std::vector<int> modulus(deg + 1, 0);
    std::int64_t rest = c;
    for (int i = 0; i < deg; ++i) {
      modulus[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    modulus[deg] = 1;
    if (modulus[0] == 0) continue;
    // x has order units iff its first `units` powers are distinct nonzero
    // and the next one returns to 1.
    std::vector<char> seen(size, 0);
    int cur = 1;
    bool ok = true;
    for (int k = 0; k < units; ++k) {
      if (seen[cur] || cur == 0) {
        ok = false;
        break;
      }
      seen[cur] = 1;
      code_of_log[k] = cur;
      cur = times_x(cur, modulus, p, deg);
    }
    if (ok && cur == 1) {
      t->modulus_ = modulus;
      found = true;
    }
  }
  if (!found) throw FieldError("build_tower: no primitive polynomial found");

  t->code_of_log_ = code_of_log;
  t->log_of_code_.assign(size, -1);
  for (int k = 0; k < units; ++k) t->log_of_code_[code_of_log[k]] = k;
  t->zech_.assign(units, -1);
  for (int k = 0; k < units; ++k) {
    const int s = add_codes(code_of_log[k], 1, p);
    t->zech_[k] = t->log_of_code_[s];
  }
  t->minus_one_log_ = (p == 2) ? 0 : units / 2;

  // Absolute trace: Σ_{i<2f} a^{p^i}, which lies in the prime field.
  t->abs_trace_.assign(units, 0);
  for (int k = 0; k < units; ++k) {
    Elem acc = Elem::zero();
    std::int64_t e = k;
    for (int i = 0; i < deg; ++i) {
      acc = t->add(acc, Elem::from_log(static_cast<std::int32_t>(e % units)));
      e = (e * p) % units;
    }
    t->abs_trace_[k] = t->to_code(acc);
    if (t->abs_trace_[k] >= p) throw std::logic_error("absolute trace outside the prime field");
  }
  return t;
}

Elem FieldTower::pow(Elem a, std::int64_t k) const {
  if (a.is_zero()) {
    if (k <= 0) throw FieldError("FieldTower::pow: zero to non-positive power");
    return a;
  }
  const std::int64_t e = (static_cast<std::int64_t>(a.log) * (k % units())) % units();
  return Elem::from_log(reduce(e));
}

std::int64_t FieldTower::order(Elem a) const {
  if (a.is_zero()) throw FieldError("FieldTower::order: zero");
  return units() / static_cast<std::int64_t>(std::gcd(a.log, units()));
}

Elem FieldTower::from_int(std::int64_t v) const {
  std::int64_t r = v % p_;
  if (r < 0) r += p_;
  return from_code(static_cast<int>(r));
}

std::vector<Elem> FieldTower::base_elements() const {
  std::vector<Elem> out{Elem::zero()};
  for (int k = 0; k < units(); k += q_ + 1) out.push_back(Elem::from_log(k));
  return out;
}

std::vector<Elem> FieldTower::ext_elements() const {
  std::vector<Elem> out{Elem::zero()};
  for (int k = 0; k < units(); ++k) out.push_back(Elem::from_log(k));
  return out;
}

std::string FieldTower::describe() const {
  std::ostringstream os;
  os << "F_" << q_ << " < F_" << big_q_ << " (p=" << p_ << ", f=" << f_ << ")";
  return os.str();
}

NormTrace norm_trace(const FieldTower& t, Elem x) { return {t.norm(x), t.trace(x)}; }

int subgroup_step(const FieldTower& t, UnitSubgroup which, int n) {
  const int units = t.units();
  switch (which) {
    case UnitSubgroup::Norms:
      return t.q() + 1;
    case UnitSubgroup::Squares:
      return std::gcd(2, units);
    case UnitSubgroup::BaseTimesNthPowers:
      if (n < 1) throw FieldError("subgroup_membership: n must be positive");
      return std::gcd(std::gcd(t.q() + 1, n), units);
  }
  return 1;
}

bool subgroup_membership(const FieldTower& t, Elem x, UnitSubgroup which, int n) {
  if (x.is_zero()) throw FieldError("subgroup_membership: x must be nonzero");
  return x.log % subgroup_step(t, which, n) == 0;
}

MultCharacter MultCharacter::trivial(const FieldTower& t, Side home) { return from_exponent(t, home, 0); }

MultCharacter MultCharacter::from_exponent(const FieldTower& t, Side home, std::int64_t exponent) {
  MultCharacter c;
  c.home = home;
  c.modulus = home == Side::Base ? t.q() - 1 : t.units();
  std::int64_t e = exponent % c.modulus;
  c.exponent = static_cast<int>(e < 0 ? e + c.modulus : e);
  return c;
}

MultCharacter MultCharacter::operator*(const MultCharacter& o) const {
  if (home != o.home || modulus != o.modulus) throw FieldError("MultCharacter: different home groups");
  MultCharacter c = *this;
  c.exponent = (exponent + o.exponent) % modulus;
  return c;
}

MultCharacter MultCharacter::inverse() const {
  MultCharacter c = *this;
  c.exponent = (modulus - exponent) % modulus;
  return c;
}

MultCharacter MultCharacter::power(std::int64_t k) const {
  MultCharacter c = *this;
  std::int64_t e = (static_cast<std::int64_t>(exponent) * (k % modulus)) % modulus;
  c.exponent = static_cast<int>(e < 0 ? e + modulus : e);
  return c;
}

std::int64_t MultCharacter::value_exponent(const FieldTower& t, Elem x) const {
  if (x.is_zero()) throw FieldError("MultCharacter: character of zero");
  std::int64_t k = x.log;
  if (home == Side::Base) {
    if (!t.in_base(x)) throw FieldError("MultCharacter: element outside F_q^*");
    k /= (t.q() + 1);
  }
  return (k * exponent) % modulus;
}

CyclotomicValue MultCharacter::value(const FieldTower& t, Elem x) const {
  return CyclotomicValue::root(static_cast<std::uint32_t>(modulus), value_exponent(t, x));
}

MultCharacter MultCharacter::restrict_to_base(const FieldTower& t) const {
  if (home != Side::Ext) throw FieldError("restrict_to_base: character already on F_q^*");
  // ζ_{q^2-1}^{(q+1)e} = ζ_{q-1}^e on base_gen = gen^{q+1}
  return from_exponent(t, Side::Base, exponent);
}

MultCharacter MultCharacter::compose_norm(const FieldTower& t) const {
  if (home != Side::Base) throw FieldError("compose_norm: expects a character of F_q^*");
  // N(gen) = base_gen and ζ_{q-1} = ζ_{q^2-1}^{q+1}
  return from_exponent(t, Side::Ext, static_cast<std::int64_t>(exponent) * (t.q() + 1));
}

int MultCharacter::order() const { return modulus / std::gcd(modulus, exponent == 0 ? modulus : exponent); }

int AddCharacter::value_exponent(const FieldTower& t, Elem x) const { return t.absolute_trace(t.mul(delta, x)); }

CyclotomicValue AddCharacter::value(const FieldTower& t, Elem x) const {
  return CyclotomicValue::root(static_cast<std::uint32_t>(t.p()), value_exponent(t, x));
}

AddCharacter additive_character_trivial_on_base(const FieldTower& t) {
  for (int k = 0; k < t.units(); ++k) {
    const Elem d = Elem::from_log(k);
    if (t.trace(d).is_zero()) return AddCharacter{d};
  }
  throw std::logic_error("no trace-zero element found");
}

}  // namespace distlab
