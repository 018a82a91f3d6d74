#include "distlab/cyclotomic.hpp"
#include "doctest.h"

using namespace distlab;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(euler_phi(240) == 64);
  // Φ_105 famously has a coefficient -2
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
}

TEST_CASE("field equality differs from form equality") {
  // 1 + ζ3 + ζ3^2 = 0
  auto s = CyclotomicValue::from_terms(3, {{0, 1}, {1, 1}, {2, 1}});
  CHECK(s == CyclotomicValue::integer(0));
  CHECK_FALSE(s.same_form(CyclotomicValue::integer(0)));
  // ζ4^2 = -1 and ζ8^4 = -1
  CHECK(CyclotomicValue::root(4, 2) == CyclotomicValue::root(8, 4));
  CHECK(CyclotomicValue::root(4, 2) == CyclotomicValue::integer(-1));
  CHECK(CyclotomicValue::root(5, 1).as_integer() == std::nullopt);
}

TEST_CASE("arithmetic and galois action") {
  auto z = CyclotomicValue::root(12, 1);
  auto w = z * z.conj();
  CHECK(w.as_integer() == 1);
  auto sum = z + z.galois(5) + z.galois(7) + z.galois(11);
  CHECK(sum.as_integer() == 0);  // sum of primitive 12th roots = μ(12) = 0
  auto g = CyclotomicValue::root(8, 1) + CyclotomicValue::root(8, 7);  // √2
  CHECK((g * g).as_integer() == 2);
}

TEST_CASE("accumulator") {
  CycloAccumulator acc(6);
  auto a = CyclotomicValue::from_terms(3, {{0, 2}, {1, 1}});
  acc.add_product_conj(a, a);
  // |2 + ω|^2 = 4 + 2(ω + ω^2) + 1 = 3
  CHECK(acc.as_integer() == 3);
}

TEST_CASE("evaluation modulo a split prime") {
  // P = 13 = 1 mod 12, 2 has order 12 mod 13
  auto v = CyclotomicValue::root(4, 1);  // i
  const auto x = v.evaluate_mod(13, 2, 12);
  CHECK((x * x) % 13 == 12);
}
