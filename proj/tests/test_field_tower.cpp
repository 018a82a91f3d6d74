#include <random>
#include <set>

#include "distlab/field_tower.hpp"
#include "doctest.h"

using namespace distlab;

namespace {

// Digitwise addition of polynomial codes, independent of the Zech table.
int code_add(int a, int b, int p) {
  int out = 0, scale = 1;
  while (a || b) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::int64_t value_sum_exponent_check(const FieldTower& t, const MultCharacter& chi) {
  // Σ_x χ(x) as an integer, via the accumulator.
  CycloAccumulator acc(static_cast<std::uint32_t>(chi.modulus));
  for (auto x : t.elements(chi.home)) {
    if (!x.is_zero()) acc.add_root(chi.value_exponent(t, x));
  }
  return acc.as_integer().value();
}

}  // namespace

TEST_CASE("tower sizes and generators") {
  auto t = FieldTower::build(3, 1);
  CHECK(t->q() == 3);
  CHECK(t->units() == 8);
  CHECK(t->order(t->gen()) == 8);
  CHECK(t->order(t->base_gen()) == 2);
  CHECK(t->base_elements().size() == 3);
  auto t9 = FieldTower::build(3, 2);
  CHECK(t9->q() == 9);
  CHECK(t9->big_q() == 81);
  CHECK(t9->order(t9->base_gen()) == 8);
}

TEST_CASE("invalid towers are rejected") {
  CHECK_THROWS_AS(FieldTower::build(4, 1), FieldError);
  CHECK_THROWS_AS(FieldTower::build(3, 0), FieldError);
  CHECK_THROWS_AS(FieldTower::build(101, 2, 1 << 20), FieldError);
}

TEST_CASE("frobenius is an involution fixing exactly F_q") {
  for (auto [p, f] : {std::pair{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
    auto t = FieldTower::build(p, f);
    int fixed = 0;
    for (auto x : t->ext_elements()) {
      CHECK(t->frobenius(t->frobenius(x)) == x);
      if (t->frobenius(x) == x) {
        ++fixed;
        CHECK(t->in_base(x));
      }
    }
    CHECK(fixed == t->q());
  }
}

TEST_CASE("norm: multiplicative, surjective, kernel of size q+1") {
  for (auto [p, f] : {std::pair{2, 1}, {3, 1}, {5, 1}, {3, 2}}) {
    auto t = FieldTower::build(p, f);
    std::set<std::int32_t> image;
    int kernel = 0;
    for (auto x : t->ext_elements()) {
      if (x.is_zero()) continue;
      const auto nt = norm_trace(*t, x);
      CHECK(t->in_base(nt.norm));
      CHECK(t->in_base(nt.trace));
      image.insert(nt.norm.log);
      if (nt.norm == t->one()) ++kernel;
    }
    CHECK(static_cast<int>(image.size()) == t->q() - 1);
    CHECK(kernel == t->q() + 1);
  }
  auto t2 = FieldTower::build(2, 1);
  for (auto x : t2->ext_elements()) {
    if (!x.is_zero()) CHECK(t2->norm(x) == t2->one());
  }
  auto t3 = FieldTower::build(3, 1);
  CHECK(norm_trace(*t3, Elem::zero()).norm.is_zero());
  CHECK(norm_trace(*t3, Elem::zero()).trace.is_zero());
  for (auto x : t3->base_elements()) {
    CHECK(t3->norm(x) == t3->mul(x, x));
    CHECK(t3->trace(x) == t3->add(x, x));
  }
}

TEST_CASE("norm and trace homomorphism properties") {
  auto t = FieldTower::build(5, 1);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, t->big_q() - 1);
  for (int i = 0; i < 500; ++i) {
    const Elem x = t->from_code(pick(rng)), y = t->from_code(pick(rng));
    CHECK(t->norm(t->mul(x, y)) == t->mul(t->norm(x), t->norm(y)));
    CHECK(t->trace(t->add(x, y)) == t->add(t->trace(x), t->trace(y)));
  }
}

TEST_CASE("Zech addition agrees with polynomial addition") {
  for (auto [p, f] : {std::pair{2, 2}, {3, 2}, {5, 1}, {7, 1}}) {
    auto t = FieldTower::build(p, f);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, t->big_q() - 1);
    for (int i = 0; i < 1000; ++i) {
      const int a = pick(rng), b = pick(rng);
      CHECK(t->to_code(t->add(t->from_code(a), t->from_code(b))) == code_add(a, b, p));
    }
  }
}

TEST_CASE("multiplicative characters") {
  auto t = FieldTower::build(3, 1);
  for (int e = 0; e < t->units(); ++e) {
    auto chi = MultCharacter::from_exponent(*t, Side::Ext, e);
    CHECK(value_sum_exponent_check(*t, chi) == (e == 0 ? t->units() : 0));
    CHECK((chi * chi.inverse()).is_trivial());
  }
  for (int e = 0; e < t->q() - 1; ++e) {
    auto chi = MultCharacter::from_exponent(*t, Side::Base, e);
    CHECK(value_sum_exponent_check(*t, chi) == (e == 0 ? t->q() - 1 : 0));
    // χ∘N trivial iff χ trivial (norm is onto)
    CHECK(chi.compose_norm(*t).is_trivial() == chi.is_trivial());
    // (χ∘N)|_F = χ^2
    CHECK(chi.compose_norm(*t).restrict_to_base(*t) == chi.power(2));
  }
  auto t9 = FieldTower::build(3, 2);
  auto mu = MultCharacter::from_exponent(*t9, Side::Ext, 7);
  auto chi = MultCharacter::from_exponent(*t9, Side::Base, 3);
  for (auto x : t9->ext_elements()) {
    if (x.is_zero()) continue;
    // composition with norm agrees with evaluating at the norm
    CHECK(chi.compose_norm(*t9).value(*t9, x) == chi.value(*t9, t9->norm(x)));
    if (t9->in_base(x)) {
      const auto r = mu.restrict_to_base(*t9);
      CHECK(r.value(*t9, x) == mu.value(*t9, x));
    }
  }
}

TEST_CASE("additive character trivial on the base") {
  for (auto [p, f] : {std::pair{3, 1}, {5, 1}, {2, 1}, {3, 2}}) {
    auto t = FieldTower::build(p, f);
    auto psi = additive_character_trivial_on_base(*t);
    CHECK(t->trace(psi.delta).is_zero());
    for (auto x : t->base_elements()) CHECK(psi.value_exponent(*t, x) == 0);
    bool nontrivial = false;
    CycloAccumulator acc(static_cast<std::uint32_t>(p));
    for (auto x : t->ext_elements()) {
      const int v = psi.value_exponent(*t, x);
      nontrivial |= v != 0;
      acc.add_root(v);
    }
    CHECK(nontrivial);
    CHECK(acc.as_integer() == 0);
  }
  // q = 5: the nonzero trace-zero elements form one F_5^*-orbit of size 4
  auto t = FieldTower::build(5, 1);
  std::vector<Elem> deltas;
  for (auto x : t->ext_elements()) {
    if (!x.is_zero() && t->trace(x).is_zero()) deltas.push_back(x);
  }
  CHECK(deltas.size() == 4);
  std::set<std::int32_t> orbit;
  for (auto c : t->base_elements()) {
    if (!c.is_zero()) orbit.insert(t->mul(c, deltas[0]).log);
  }
  CHECK(orbit.size() == 4);
}

TEST_CASE("subgroup membership") {
  auto t = FieldTower::build(3, 1);
  // F^*·(E^*)^2 has index 2 in F_9^*
  int members = 0;
  for (auto x : t->ext_elements()) {
    if (!x.is_zero() && subgroup_membership(*t, x, UnitSubgroup::BaseTimesNthPowers, 2)) ++members;
  }
  CHECK(t->units() / members == 2);
  // oracle: generated by base_gen and gen^2
  std::set<std::int32_t> gen;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) gen.insert(t->mul(t->pow(t->base_gen(), a), t->pow(t->gen(), 2 * b)).log);
  }
  CHECK(static_cast<int>(gen.size()) == members);
  int norms = 0;
  for (auto x : t->ext_elements()) {
    if (!x.is_zero() && subgroup_membership(*t, x, UnitSubgroup::Norms)) ++norms;
  }
  CHECK(norms == t->q() - 1);
  auto t4 = FieldTower::build(2, 1);
  for (auto x : t4->ext_elements()) {
    if (!x.is_zero()) CHECK(subgroup_membership(*t4, x, UnitSubgroup::Squares));
  }
  CHECK_THROWS_AS(subgroup_membership(*t, Elem::zero(), UnitSubgroup::Squares), FieldError);
}
