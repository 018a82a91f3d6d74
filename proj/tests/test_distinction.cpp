#include <algorithm>
#include <set>

#include "distlab/distinction.hpp"
#include "doctest.h"

using namespace distlab;

namespace {

Lab& lab3() {
  static Lab lab(FieldTower::build(3, 1));
  return lab;
}

int trivial_index(const CharacterTable& t) {
  for (int i = 0; i < t.count(); ++i) {
    bool one = true;
    for (const auto& v : t[i].values) one = one && v.as_integer() == std::optional<std::int64_t>(1);
    if (one) return i;
  }
  return -1;
}

}  // namespace

TEST_CASE("hom_dim basics and the elementwise oracle") {
  auto& lab = lab3();
  const auto& g = lab.bundle(GroupKind::GL, 2, Side::Ext);
  const auto& h = lab.bundle(GroupKind::GL, 2, Side::Base);
  const auto& e = lab.embedding(g, h);
  const int triv = trivial_index(*g.t);
  REQUIRE(triv == 0);
  CHECK(hom_dim(h, e, (*g.t)[0].values) == 1);
  const int st = steinberg_index(*g.t);
  CHECK((*g.t)[st].degree == 9);
  CHECK(hom_dim(h, e, (*g.t)[st].values) == 1);
  CHECK(hom_dim_elementwise(g, h, e, (*g.t)[st].values) == 1);
  const auto& tw = lab.tower();
  for (int i = 0; i < g.t->count(); ++i) {
    for (int c = 0; c < 2; ++c) {
      const auto chi = MultCharacter::from_exponent(tw, Side::Base, c);
      const auto d = hom_dim(h, e, (*g.t)[i].values, chi);
      CHECK(d >= 0);
      CHECK(d <= 1);
      CHECK(d == hom_dim_elementwise(g, h, e, (*g.t)[i].values, chi));
    }
  }
  CHECK_THROWS_AS(det_character(h, MultCharacter::trivial(tw, Side::Ext)), std::invalid_argument);
}

TEST_CASE("pair scans at q = 3") {
  auto& lab = lab3();
  const auto gl = pair_scan(lab, PairKind::GL_GL, 2);
  CHECK(gl.rows.size() == 80);
  CHECK(gl.gelfand_ok);
  CHECK(gl.oracle_ok);
  CHECK(gl.criterion_ok);
  CHECK(gl.ok());
  const auto u = pair_scan(lab, PairKind::GL_U, 2);
  CHECK(u.ok());
  // Shintani: galois-invariant irreducibles correspond to the 8 classes of GL_2(F_3)
  CHECK(u.distinguished == 8);
  const auto sl = pair_scan(lab, PairKind::SL_SL, 2);
  CHECK(sl.tadic_ok == std::optional<bool>(true));
  CHECK(sl.oracle_ok);
  // multiplicity two does occur for this pair
  CHECK(sl.max_dim == 2);
  CHECK_FALSE(sl.gelfand_ok);
  CHECK(parse_pair("GL:U") == PairKind::GL_U);
  CHECK_THROWS(parse_pair("GL:SL"));
}

TEST_CASE("twist sets") {
  auto& lab = lab3();
  PacketContext ctx(lab, 2);
  const auto& t = *ctx.gl().t;
  const auto triv = ctx.packet(0);
  CHECK(triv.Z == std::vector<int>{0});  // μ∘det = 1 forces μ = 1
  CHECK(triv.X == std::vector<int>{0});
  CHECK(triv.q_num == 1);
  CHECK(triv.q_den == 1);

  int generic_ps = 0;
  for (int i = 0; i < t.count(); ++i) {
    const auto r = ctx.packet(i);
    for (int m : r.Z) CHECK((m * 2) % 8 == 0);
    CHECK(r.Z.size() == r.sl.size());
    if (r.X.empty()) {
      CHECK(r.q_num == 0);
      CHECK(r.strong_classes == 0);
    }
    if (r.degree == 10 && r.Z.size() == 1) {
      ++generic_ps;
      CHECK(r.sl.size() == 1);
    }
  }
  CHECK(generic_ps > 0);
}

TEST_CASE("packets of SL_2(F_9)") {
  auto& lab = lab3();
  const auto suite = packet_suite(lab, 2);
  CHECK(suite.packets.size() == 80);
  CHECK(suite.discrepancies == 0);
  CHECK(suite.ok());

  PacketContext ctx(lab, 2);
  const int st = steinberg_index(*ctx.gl().t);
  const auto& sp = suite.packets[st];
  CHECK(sp.sl.size() == 1);
  CHECK(sp.generic);
  CHECK(sp.formula_applicable);
  CHECK(sp.sl[0].hom_dim == 1);

  int two = 0, q_two = 0;
  for (const auto& r : suite.packets) {
    CHECK(r.q_integral());
    CHECK(r.strong_classes == r.q_num);
    if (r.q_num == 2) ++q_two;
    if (r.Z.size() != 2 || !r.generic) continue;
    ++two;
    // each constituent is ψ_a-generic for exactly one square class of a
    REQUIRE(r.sl.size() == 2);
    std::set<int> all;
    for (const auto& c : r.sl) {
      CHECK(c.generic_a.size() == 4);
      for (int a : c.generic_a) {
        CHECK(a % 2 == c.generic_a.front() % 2);
        all.insert(a);
      }
    }
    CHECK(all.size() == 8);
    // exactly one constituent sits in π⁺; the other has LHS = RHS = 0
    int in_plus = 0;
    for (const auto& c : r.sl) {
      in_plus += c.in_plus;
      if (!c.in_plus) {
        CHECK(c.rhs_num == 0);
        CHECK(c.hom_dim == 0);
      }
    }
    CHECK(in_plus == 1);
  }
  CHECK(two > 0);
  CHECK(q_two > 0);
  CHECK_THROWS_AS(ctx.packet(80), std::out_of_range);
}

TEST_CASE("unitary relation at q = 3") {
  auto& lab = lab3();
  const auto r = unitary_relation(lab, 2);
  CHECK(r.ok());
  CHECK(r.cosets_conjugate);
  REQUIRE(r.rows.size() == 80);
  CHECK(r.rows[0].applicable);
  CHECK(r.rows[0].mu == 0);
  CHECK(r.rows[0].u_dim == 1);
  CHECK(r.rows[0].mu_dim == 1);
  int not_applicable = 0;
  for (const auto& row : r.rows) {
    if (!row.applicable) {
      ++not_applicable;
      CHECK(row.u_dim == 0);
    }
  }
  CHECK(not_applicable > 0);
  CHECK_THROWS_AS(unitary_relation(lab, 3), std::invalid_argument);
}

TEST_CASE("characteristic two, n = 3") {
  Lab lab(FieldTower::build(2, 1));
  const auto sl = pair_scan(lab, PairKind::SL_SL, 3);
  CHECK(sl.gelfand_ok);
  CHECK(sl.ok());
  const auto suite = packet_suite(lab, 3);
  CHECK(suite.ok());
}
