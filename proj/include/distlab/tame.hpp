// Tame characters of p-adic fields modelled as (u mod M, r mod residue-1):
// value ζ_M^u on the fixed uniformizer and r on the Teichmüller generator of
// the residue units. Norm, restriction and Galois action follow the
// conventions tabulated in docs/tame_conventions.md.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distlab {

enum class TameShape {
  UnramifiedE,  // E/F unramified, K/F ramified
  RamifiedE,    // E/F ramified, K/F unramified
};
TameShape parse_shape(const std::string& s);
std::string shape_name(TameShape s);

struct TameField {
  std::string label;
  int e = 1;  // ramification index over F
  int f = 1;  // residue degree over F
  std::int64_t residue = 0;
};

struct TameCharacter {
  int field = 0;
  std::int64_t u = 0;
  std::int64_t r = 0;
  friend bool operator==(const TameCharacter&, const TameCharacter&) = default;
  friend auto operator<=>(const TameCharacter&, const TameCharacter&) = default;
};

class TameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class TameTower {
 public:
  /// extra_degree > 0 adds A, unramified of that degree over E.
  TameTower(std::int64_t q, std::int64_t modulus, TameShape shape, int extra_degree = 0);
  static std::int64_t default_modulus(std::int64_t q, int n = 2);

  std::int64_t q() const { return q_; }
  std::int64_t modulus() const { return m_; }
  TameShape shape() const { return shape_; }
  int F() const { return 0; }
  int E() const { return 1; }
  int K() const { return 2; }
  int L() const { return 3; }
  int A() const { return fields_.size() > 4 ? 4 : -1; }
  const TameField& field(int i) const { return fields_.at(i); }

  TameCharacter make(int field, std::int64_t u, std::int64_t r) const;
  TameCharacter trivial(int field) const { return make(field, 0, 0); }
  TameCharacter mul(const TameCharacter& a, const TameCharacter& b) const;
  TameCharacter inv(const TameCharacter& a) const;
  TameCharacter power(const TameCharacter& a, std::int64_t k) const;
  std::int64_t order(const TameCharacter& a) const;
  bool is_trivial(const TameCharacter& a) const { return a.u == 0 && a.r == 0; }
  std::int64_t count(int field) const;
  TameCharacter nth(int field, std::int64_t i) const;  // enumeration order: r fastest

  /// χ∘N_{upper/χ.field}.
  TameCharacter pullback(const TameCharacter& chi, int upper) const;
  /// χ|_{lower^*}.
  TameCharacter restrict(const TameCharacter& chi, int lower) const;
  /// χ∘γ^k for γ the generator of Gal(χ.field / lower) (Frobenius or the sign
  /// automorphism); defined for one-step extensions.
  TameCharacter galois(const TameCharacter& chi, int lower, std::int64_t k = 1) const;
  int galois_degree(int lower, int upper) const;
  /// The nontrivial characters of `lower` trivial on norms from `upper`.
  std::vector<TameCharacter> norm_kernel(int lower, int upper) const;
  /// ω_{upper/lower} for a quadratic step.
  TameCharacter quadratic_character(int lower, int upper) const;

  std::string describe(const TameCharacter& c) const;

 private:
  struct Step {
    bool ramified;
    int degree;
  };
  Step step(int lower, int upper) const;
  std::vector<int> path(int lower, int upper) const;

  std::int64_t q_, m_;
  TameShape shape_;
  std::vector<TameField> fields_;
};

// Ind from `ext` to `base` of η.
struct InducedParameter {
  int base = 0, ext = 0;
  TameCharacter eta;
};

bool is_regular(const TameTower& t, const InducedParameter& rho);
// (F via K) ↦ (E via L), η_L = η∘N_{L/K}.
InducedParameter base_change_param(const TameTower& t, const InducedParameter& rho0);

struct TameTwistSets {
  std::vector<TameCharacter> Z, Y, Yprime;
  std::int64_t bound = 0;  // characters enumerated have order dividing `bound` on ϖ
  bool y_eq_yprime() const { return Y == Yprime; }
  std::vector<TameCharacter> y_cap_yprime() const;
};
// Z = {μ : η·(μ∘N) is Galois conjugate to η}, Y = {μ ∈ Z : μ|_F = 1},
// Y' = {μ ∈ Z : μ = χ∘N_{E/F}} over characters of E of the tower's bound.
TameTwistSets twist_sets(const TameTower& t, const InducedParameter& rho);

struct EvenExampleReport {
  std::int64_t q = 0, modulus = 0;
  std::string shape;
  bool applicable = false;
  std::string reason;
  std::vector<std::int64_t> feasible_q;  // odd q <= 25 with a suitable η in this shape
  std::optional<TameCharacter> eta, eta_L;
  std::int64_t eta_order = 0;
  bool eta8_nontrivial = false;
  bool eta_trivial_on_F = false;
  bool supercuspidal = false;  // η_L regular for L/E
  bool pi0_regular = false;
  bool equivariant = false;    // BC(η^γ) = BC(η)^γ'
  std::size_t z_size = 0, y_size = 0, yprime_size = 0;
  bool y_eq_yprime = false;
  bool z_is_1_omega = false;   // Z = {1, ω_{L/E}}
  std::int64_t bound_num = 0, bound_den = 1;  // |Y||Y'|/|Z|
  std::int64_t q_point = 0;
  bool q_point_conjecture_based = true;
  bool stable_under_doubling = false;
  std::vector<std::string> z_desc;
  bool ok() const;
};

EvenExampleReport even_dihedral_example(std::int64_t q, std::optional<std::int64_t> modulus = std::nullopt,
                                TameShape shape = TameShape::RamifiedE, std::int64_t target_order = 12,
                                std::optional<std::pair<std::int64_t, std::int64_t>> eta_override = std::nullopt);

struct InjectionCase {
  TameCharacter eta;
  std::string kind;  // "random", "self-dual", "self-twist"
  bool regular = false;
  std::size_t z = 0, y = 0, yprime = 0, xhat = 0;
  bool xhat_bound_hit = false;
  bool into_yprime = true;
  bool injective = true;
  bool y_cap_trivial = true;
  std::int64_t bound_x_num = 0, bound_x_den = 1;
  std::int64_t bound_y_num = 0, bound_y_den = 1;
  std::int64_t verdict_max = 0;  // q ∈ [0, verdict_max]
  bool ok = true;
};

struct InjectionReport {
  std::int64_t q = 0, modulus = 0;
  int n = 0, count = 0;
  std::uint64_t seed = 0;
  std::vector<InjectionCase> cases;
  int nonvacuous = 0;   // cases with X̂ nonempty
  int nontrivial_z = 0;
  bool ok() const;
};

// Random regular parameters induced from A (unramified of degree n over an
// unramified E) and the X̂ → Y' injection argument on each.
InjectionReport injection_suite(std::int64_t q, int n, int count, std::uint64_t seed,
                        std::optional<std::int64_t> modulus = std::nullopt);
InjectionCase injection_case(const TameTower& t, int n, const TameCharacter& eta, const std::string& kind);

}  // namespace distlab
