#include <set>

#include "distlab/tame.hpp"
#include "doctest.h"

using namespace distlab;

TEST_CASE("tower construction and errors") {
  CHECK_THROWS_AS(TameTower(9, 4, TameShape::UnramifiedE), TameError);  // M too small
  CHECK_THROWS_AS(TameTower(4, 60, TameShape::UnramifiedE), TameError);
  CHECK_THROWS_AS(TameTower(15, TameTower::default_modulus(15), TameShape::UnramifiedE), TameError);
  CHECK(TameTower::default_modulus(11) == 480);
  TameTower t(11, 480, TameShape::UnramifiedE);
  CHECK(t.field(t.E()).residue == 121);
  CHECK(t.field(t.K()).residue == 11);
  CHECK(t.field(t.L()).residue == 121);
  CHECK(t.A() == -1);
  CHECK(parse_shape("ramified-E") == TameShape::RamifiedE);
  CHECK_THROWS(parse_shape("both"));
}

TEST_CASE("norms, restrictions and galois are consistent") {
  for (auto shape : {TameShape::UnramifiedE, TameShape::RamifiedE}) {
    for (std::int64_t q : {3, 5, 9}) {
      TameTower t(q, TameTower::default_modulus(q), shape);
      // both routes from F to L agree
      for (std::int64_t i = 0; i < t.count(t.F()); i += 7) {
        const auto c = t.nth(t.F(), i);
        CHECK(t.pullback(t.pullback(c, t.E()), t.L()) == t.pullback(t.pullback(c, t.K()), t.L()));
      }
      for (std::int64_t i = 0; i < t.count(t.L()); i += 97) {
        const auto c = t.nth(t.L(), i);
        CHECK(t.restrict(t.restrict(c, t.E()), t.F()) == t.restrict(t.restrict(c, t.K()), t.F()));
      }
      for (int lo : {t.F()}) {
        for (int up : {t.E(), t.K()}) {
          for (std::int64_t i = 0; i < t.count(up); i += 13) {
            const auto mu = t.nth(up, i);
            // μ∘N restricted back is μ·μ^γ, and χ∘N restricted is χ^2
            CHECK(t.pullback(t.restrict(mu, lo), up) == t.mul(mu, t.galois(mu, lo)));
            CHECK(t.galois(t.galois(mu, lo), lo) == mu);
            CHECK(t.restrict(t.galois(mu, lo), lo) == t.restrict(mu, lo));
          }
          for (std::int64_t i = 0; i < t.count(lo); i += 5) {
            const auto chi = t.nth(lo, i);
            CHECK(t.restrict(t.pullback(chi, up), lo) == t.power(chi, 2));
            CHECK(t.galois(t.pullback(chi, up), lo) == t.pullback(chi, up));
          }
        }
      }
      // Gal(L/E) restricted to K is Gal(K/F)
      for (std::int64_t i = 0; i < t.count(t.K()); i += 11) {
        const auto eta = t.nth(t.K(), i);
        CHECK(t.pullback(t.galois(eta, t.F()), t.L()) == t.galois(t.pullback(eta, t.L()), t.E()));
      }
    }
  }
}

TEST_CASE("χ ↦ χ∘N_{E/F} has kernel {1, ω_{E/F}}") {
  for (auto shape : {TameShape::UnramifiedE, TameShape::RamifiedE}) {
    TameTower t(5, TameTower::default_modulus(5), shape);
    const auto ker = t.norm_kernel(t.F(), t.E());
    REQUIRE(ker.size() == 1);
    CHECK(t.order(ker[0]) == 2);
    const auto wk = t.quadratic_character(t.F(), t.K());
    CHECK(t.order(wk) == 2);
    CHECK(wk != ker[0]);
    // the three quadratic characters of F^* are ω_E, ω_K and their product
    const auto kl = t.norm_kernel(t.F(), t.L());
    CHECK(kl.size() == 3);
    CHECK(std::set<TameCharacter>(kl.begin(), kl.end()) ==
          std::set<TameCharacter>{wk, ker[0], t.mul(wk, ker[0])});
  }
  TameTower t(5, TameTower::default_modulus(5), TameShape::UnramifiedE);
  // ω_{K/F} for ramified K is the Legendre symbol on units; q = 1 mod 4 puts it trivial on ϖ_F
  const auto wk = t.quadratic_character(t.F(), t.K());
  CHECK(wk.u == 0);
  CHECK(wk.r == 2);
  TameTower t3(3, TameTower::default_modulus(3), TameShape::UnramifiedE);
  const auto wk3 = t3.quadratic_character(t3.F(), t3.K());
  CHECK(wk3.r == 1);
  CHECK(wk3.u == t3.modulus() / 2);  // trivial on -ϖ_F = N(ϖ_K)
}

TEST_CASE("base change of dihedral parameters") {
  TameTower t(7, TameTower::default_modulus(7), TameShape::UnramifiedE);
  int checked = 0;
  for (std::int64_t i = 1; i < t.count(t.K()); i += 17) {
    const auto eta = t.nth(t.K(), i);
    const InducedParameter rho0{t.F(), t.K(), eta};
    if (!is_regular(t, rho0)) continue;
    const auto rho = base_change_param(t, rho0);
    CHECK(rho.base == t.E());
    CHECK(rho.ext == t.L());
    // BC(ρ0 ⊗ χ) = BC(ρ0) ⊗ (χ∘N_{E/F})
    const auto chi = t.nth(t.F(), i % t.count(t.F()));
    const auto lhs = base_change_param(t, {t.F(), t.K(), t.mul(eta, t.pullback(chi, t.K()))});
    CHECK(lhs.eta == t.mul(rho.eta, t.pullback(t.pullback(chi, t.E()), t.L())));
    ++checked;
  }
  CHECK(checked > 10);
  CHECK_THROWS_AS(base_change_param(t, {t.E(), t.L(), t.trivial(t.L())}), TameError);
}

TEST_CASE("twist sets of a regular parameter") {
  TameTower t(5, TameTower::default_modulus(5), TameShape::UnramifiedE);
  const auto eta = t.make(t.L(), 1, 1);
  const InducedParameter rho{t.E(), t.L(), eta};
  REQUIRE(is_regular(t, rho));
  const auto s = twist_sets(t, rho);
  REQUIRE(!s.Z.empty());
  CHECK(s.Z.front() == t.trivial(t.E()));
  for (const auto& m : s.Z) {
    for (const auto& n : s.Z) CHECK(std::binary_search(s.Z.begin(), s.Z.end(), t.mul(m, n)));
  }
  CHECK(std::binary_search(s.Z.begin(), s.Z.end(), t.quadratic_character(t.E(), t.L())));
}

TEST_CASE("the even example at q = 11") {
  const auto r = even_dihedral_example(11);
  CHECK(r.applicable);
  CHECK(r.shape == "ramified-E");
  CHECK(r.eta_order == 12);
  CHECK(r.eta8_nontrivial);
  CHECK(r.supercuspidal);
  CHECK(r.pi0_regular);
  CHECK(r.equivariant);
  CHECK(r.z_size == 2);
  CHECK(r.y_size == 2);
  CHECK(r.yprime_size == 2);
  CHECK(r.y_eq_yprime);
  CHECK(r.z_is_1_omega);
  CHECK(r.bound_num == 2);
  CHECK(r.bound_den == 1);
  CHECK(r.q_point == 2);
  CHECK(r.q_point_conjecture_based);
  CHECK(r.stable_under_doubling);
  CHECK(r.ok());
}

TEST_CASE("the even example where it does not apply") {
  const auto r3 = even_dihedral_example(3);
  CHECK_FALSE(r3.applicable);
  CHECK_FALSE(r3.feasible_q.empty());
  CHECK(std::find(r3.feasible_q.begin(), r3.feasible_q.end(), 11) != r3.feasible_q.end());
  CHECK(std::find(r3.feasible_q.begin(), r3.feasible_q.end(), 3) == r3.feasible_q.end());
  // with K ramified η is at most quadratic, so no q works
  const auto ru = even_dihedral_example(11, std::nullopt, TameShape::UnramifiedE);
  CHECK_FALSE(ru.applicable);
  CHECK(ru.feasible_q.empty());
  // η of order 4 has η^8 = 1
  const auto bad = even_dihedral_example(11, std::nullopt, TameShape::RamifiedE, 12, std::make_pair(0LL, 30LL));
  CHECK_FALSE(bad.applicable);
  CHECK(bad.eta_trivial_on_F);
  CHECK_FALSE(bad.eta8_nontrivial);
}

TEST_CASE("odd n: the X-hat to Y' injection and the bound") {
  const auto rep = injection_suite(5, 3, 120, 7);
  CHECK(rep.cases.size() == 120);
  CHECK(rep.ok());
  CHECK(rep.nonvacuous > 0);
  CHECK(rep.nontrivial_z > 0);
  std::set<std::string> kinds;
  for (const auto& c : rep.cases) {
    kinds.insert(c.kind);
    CHECK(c.regular);
    CHECK(c.y_cap_trivial);
    CHECK(c.verdict_max <= 1);
    CHECK(c.verdict_max >= 0);
  }
  CHECK(kinds.size() == 3);
  const auto again = injection_suite(5, 3, 120, 7);
  for (std::size_t i = 0; i < rep.cases.size(); ++i) CHECK(again.cases[i].eta == rep.cases[i].eta);
}

TEST_CASE("n = 2 through the same machinery") {
  const auto rep = injection_suite(3, 2, 30, 3);
  CHECK(rep.cases.size() == 30);
  for (const auto& c : rep.cases) {
    CHECK(c.regular);
    CHECK(c.into_yprime);
  }
}
