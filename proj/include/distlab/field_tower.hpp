// The quadratic tower F_q ⊂ F_{q^2}: elements as discrete logarithms with
// a Zech table for addition, norm and trace, and the multiplicative and
// additive character groups used by the rest of the library.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "distlab/cyclotomic.hpp"

namespace distlab {

/// Element of F_{q^2}: discrete log with respect to the tower generator,
/// or the zero marker.
struct Elem {
  static constexpr std::int32_t kZeroLog = -1;
  std::int32_t log = kZeroLog;

  static constexpr Elem zero() { return Elem{kZeroLog}; }
  static constexpr Elem from_log(std::int32_t k) { return Elem{k}; }
  constexpr bool is_zero() const { return log == kZeroLog; }
  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Which field of the tower a group or character lives over.
enum class Side { Base, Ext };

/// Subgroups of F_{q^2}^* recognised by subgroup_membership.
enum class UnitSubgroup { Norms, Squares, BaseTimesNthPowers };

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::int64_t kDefaultFieldCeiling = 1 << 20;

class FieldTower {
 public:
  /// Builds F_{p^f} ⊂ F_{p^{2f}}. Throws FieldError for non-prime p or when
  /// p^{2f} exceeds `ceiling`.
  static std::shared_ptr<const FieldTower> build(int p, int f,
                                                 std::int64_t ceiling = kDefaultFieldCeiling);

  int p() const { return p_; }
  int f() const { return f_; }
  /// Size of the base field F_q.
  int q() const { return q_; }
  /// Size of the extension F_{q^2}.
  int big_q() const { return big_q_; }
  /// |F_{q^2}^*| = q^2 - 1.
  int units() const { return big_q_ - 1; }

  /// Monic modulus, coefficients of x^0 .. x^{2f}.
  const std::vector<int>& modulus() const { return modulus_; }
  Elem gen() const { return Elem::from_log(1 % units()); }
  Elem base_gen() const { return Elem::from_log((q_ + 1) % units()); }
  Elem one() const { return Elem::from_log(0); }

  Elem mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return Elem::zero();
    return Elem::from_log(reduce(a.log + b.log));
  }
  Elem add(Elem a, Elem b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::int32_t z = zech_[reduce(a.log - b.log + units())];
    if (z < 0) return Elem::zero();
    return Elem::from_log(reduce(b.log + z));
  }
  Elem neg(Elem a) const {
    if (a.is_zero()) return a;
    return Elem::from_log(reduce(a.log + minus_one_log_));
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const {
    if (a.is_zero()) throw FieldError("FieldTower::inv: zero is not invertible");
    return Elem::from_log(reduce(units() - a.log));
  }
  Elem pow(Elem a, std::int64_t k) const;
  /// x -> x^q, the nontrivial automorphism of F_{q^2}/F_q.
  Elem frobenius(Elem a) const {
    if (a.is_zero()) return a;
    return Elem::from_log(static_cast<std::int32_t>((static_cast<std::int64_t>(a.log) * q_) % units()));
  }
  Elem norm(Elem a) const { return mul(a, frobenius(a)); }
  Elem trace(Elem a) const { return add(a, frobenius(a)); }
  bool in_base(Elem a) const { return a.is_zero() || a.log % (q_ + 1) == 0; }
  /// Multiplicative order of a nonzero element.
  std::int64_t order(Elem a) const;

  /// Polynomial code Σ c_i p^i of the element (zero maps to 0).
  int to_code(Elem a) const { return a.is_zero() ? 0 : code_of_log_[a.log]; }
  Elem from_code(int code) const {
    const std::int32_t k = log_of_code_.at(code);
    return k < 0 ? Elem::zero() : Elem::from_log(k);
  }
  /// Image of an integer in the prime field.
  Elem from_int(std::int64_t v) const;
  /// Tr_{F_{q^2}/F_p}(a) as an integer in [0, p).
  int absolute_trace(Elem a) const { return a.is_zero() ? 0 : abs_trace_[a.log]; }

  /// All elements of the base field (zero first, then by log).
  std::vector<Elem> base_elements() const;
  /// All elements of F_{q^2} (zero first, then by log).
  std::vector<Elem> ext_elements() const;
  std::vector<Elem> elements(Side side) const {
    return side == Side::Base ? base_elements() : ext_elements();
  }

  std::string describe() const;

 private:
  FieldTower() = default;
  std::int32_t reduce(std::int64_t k) const {
    std::int64_t r = k % units();
    return static_cast<std::int32_t>(r < 0 ? r + units() : r);
  }

  int p_ = 0, f_ = 0, q_ = 0, big_q_ = 0;
  std::int32_t minus_one_log_ = 0;
  std::vector<int> modulus_;
  std::vector<std::int32_t> zech_;         // log(1 + g^k), -1 for zero
  std::vector<int> code_of_log_;           // polynomial code of g^k
  std::vector<std::int32_t> log_of_code_;  // inverse, -1 for the zero code
  std::vector<int> abs_trace_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Norm and trace of F_{q^2}/F_q.
struct NormTrace {
  Elem norm;
  Elem trace;
};
NormTrace norm_trace(const FieldTower& t, Elem x);

/// Membership of a nonzero x in a subgroup of F_{q^2}^*, decided by
/// discrete-log divisibility. `n` is only used for BaseTimesNthPowers.
bool subgroup_membership(const FieldTower& t, Elem x, UnitSubgroup which, int n = 2);
/// Log-step a with subgroup = <gen^a>.
int subgroup_step(const FieldTower& t, UnitSubgroup which, int n = 2);

/// Character of F_q^* (home = Base) or F_{q^2}^* (home = Ext):
/// χ(h^k) = ζ_m^{k·exponent}, h the home generator and m the home order.
struct MultCharacter {
  Side home = Side::Ext;
  int modulus = 1;   // order of the home group
  int exponent = 0;  // mod `modulus`

  static MultCharacter trivial(const FieldTower& t, Side home);
  static MultCharacter from_exponent(const FieldTower& t, Side home, std::int64_t exponent);

  bool is_trivial() const { return exponent == 0; }
  MultCharacter operator*(const MultCharacter& o) const;
  MultCharacter inverse() const;
  MultCharacter power(std::int64_t k) const;
  friend bool operator==(const MultCharacter&, const MultCharacter&) = default;

  /// χ(x) as a root of unity; x must lie in the home group.
  CyclotomicValue value(const FieldTower& t, Elem x) const;
  /// Exponent s with χ(x) = ζ_modulus^s.
  std::int64_t value_exponent(const FieldTower& t, Elem x) const;
  /// Restriction of a character of F_{q^2}^* to F_q^*.
  MultCharacter restrict_to_base(const FieldTower& t) const;
  /// χ∘N for a character of F_q^*, as a character of F_{q^2}^*.
  MultCharacter compose_norm(const FieldTower& t) const;
  /// Order of the character as a group element.
  int order() const;
};

/// ψ(x) = ε^{Tr_{F_{q^2}/F_p}(δ·x)} with Tr_{F_{q^2}/F_q}(δ) = 0.
struct AddCharacter {
  Elem delta;
  /// ψ(x) as a p-th root of unity.
  CyclotomicValue value(const FieldTower& t, Elem x) const;
  /// Exponent s with ψ(x) = ζ_p^s.
  int value_exponent(const FieldTower& t, Elem x) const;
};

/// Nontrivial additive character of F_{q^2} trivial on F_q; δ is the
/// trace-zero element with the least discrete log.
AddCharacter additive_character_trivial_on_base(const FieldTower& t);

}  // namespace distlab
