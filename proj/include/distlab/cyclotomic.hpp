// Exact cyclotomic numbers Σ_j c_j ζ_m^j in eigenvalue-multiplicity form.
//
// A value carries its root-of-unity order m and a sparse list of
// (exponent, coefficient) terms. For a character value at an element of
// order m the coefficients are the eigenvalue multiplicities and sum to the
// degree. The representation is not canonical as a field element, so
// operator== decides equality in Q(ζ_m) by reduction modulo the m-th
// cyclotomic polynomial.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace distlab {

struct CycloTerm {
  std::uint32_t exp = 0;
  std::int64_t coeff = 0;
  friend bool operator==(const CycloTerm&, const CycloTerm&) = default;
  friend auto operator<=>(const CycloTerm&, const CycloTerm&) = default;
};

/// Coefficients of Φ_n, constant term first. Cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);
std::uint32_t euler_phi(std::uint32_t n);

class CyclotomicValue {
 public:
  CyclotomicValue() = default;
  static CyclotomicValue integer(std::int64_t v);
  /// ζ_order^exp.
  static CyclotomicValue root(std::uint32_t order, std::int64_t exp);
  /// Normalizes exponents mod order, merges equal exponents, drops zeros.
  static CyclotomicValue from_terms(std::uint32_t order, std::vector<CycloTerm> terms);

  std::uint32_t order() const { return order_; }
  const std::vector<CycloTerm>& terms() const { return terms_; }
  std::int64_t coefficient_sum() const;

  CyclotomicValue conj() const { return galois(-1); }
  /// σ_t: ζ -> ζ^t; t must be coprime to the order.
  CyclotomicValue galois(std::int64_t t) const;
  /// Multiplication by ζ_order^shift.
  CyclotomicValue times_root(std::int64_t shift) const;
  /// Same number written over ζ_{new_order}; new_order must be a multiple.
  CyclotomicValue lifted(std::uint32_t new_order) const;

  /// Coefficients after reduction modulo Φ_order (length φ(order)).
  std::vector<std::int64_t> reduced() const;
  std::optional<std::int64_t> as_integer() const;

  /// Field equality in Q(ζ_lcm).
  friend bool operator==(const CyclotomicValue& a, const CyclotomicValue& b);
  /// Equality of the multiplicity representation itself.
  bool same_form(const CyclotomicValue& o) const {
    return order_ == o.order_ && terms_ == o.terms_;
  }

  friend CyclotomicValue operator+(const CyclotomicValue& a, const CyclotomicValue& b);
  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);

  /// Image under Z[ζ_L] -> F_P, ζ_L -> root_L, where L is a multiple of order().
  std::uint64_t evaluate_mod(std::uint64_t prime, std::uint64_t root_l, std::uint32_t l) const;

  std::string to_string() const;

 private:
  std::uint32_t order_ = 1;
  std::vector<CycloTerm> terms_;
};

/// Dense accumulator in Z[x]/(x^L - 1) for sums of products of cyclotomic
/// values whose orders divide L.
class CycloAccumulator {
 public:
  explicit CycloAccumulator(std::uint32_t order);
  std::uint32_t order() const { return order_; }

  void add(const CyclotomicValue& v, std::int64_t weight = 1);
  /// Adds weight · a · conj(b).
  void add_product_conj(const CyclotomicValue& a, const CyclotomicValue& b, std::int64_t weight = 1);
  /// Adds weight · a · b.
  void add_product(const CyclotomicValue& a, const CyclotomicValue& b, std::int64_t weight = 1);
  void add_root(std::int64_t exp, std::int64_t weight = 1);

  std::vector<std::int64_t> reduced() const;
  /// The accumulated number when it is a rational integer.
  std::optional<std::int64_t> as_integer() const;
  CyclotomicValue value() const;

 private:
  std::uint32_t order_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace distlab
