#include <algorithm>
#include <set>

#include "distlab/character_table.hpp"
#include "doctest.h"

using namespace distlab;

namespace {

struct Built {
  GroupPtr g;
  ClassesPtr cc;
  TablePtr t;
};

Built make(int p, int f, GroupKind kind, int n, Side side) {
  auto tw = FieldTower::build(p, f);
  auto g = MatrixGroup::build(tw, kind, n, side);
  auto cc = conjugacy_classes(*g);
  auto t = character_table(g, cc);
  return {g, cc, t};
}

std::vector<std::int64_t> degrees(const CharacterTable& t) {
  std::vector<std::int64_t> d;
  for (const auto& chi : t.characters()) d.push_back(chi.degree);
  return d;
}

}  // namespace

TEST_CASE("trivial group") {
  auto b = make(2, 1, GroupKind::GL, 1, Side::Base);
  REQUIRE(b.t->count() == 1);
  CHECK(b.t->characters()[0].degree == 1);
  CHECK(validate_table(*b.t).ok());
}

TEST_CASE("GL_2(3) degrees and validation") {
  auto b = make(3, 1, GroupKind::GL, 2, Side::Base);
  CHECK(degrees(*b.t) == std::vector<std::int64_t>{1, 1, 2, 2, 2, 3, 3, 4});
  const auto v = validate_table(*b.t);
  CHECK(v.ok());
  CHECK(v.elementwise_run);
  CHECK(v.exact_pairs_run);
  // trivial character first
  for (const auto& x : b.t->characters()[0].values) CHECK(x.as_integer() == std::optional<std::int64_t>(1));
}

TEST_CASE("GL_2(2) is S_3") {
  auto b = make(2, 1, GroupKind::GL, 2, Side::Base);
  CHECK(degrees(*b.t) == std::vector<std::int64_t>{1, 1, 2});
  CHECK(validate_table(*b.t).ok());
}

TEST_CASE("SL_2(9)") {
  auto b = make(3, 1, GroupKind::SL, 2, Side::Ext);
  CHECK(b.t->count() == 13);
  std::int64_t s = 0;
  for (auto d : degrees(*b.t)) s += d * d;
  CHECK(s == 720);
  CHECK(validate_table(*b.t).ok());
}

TEST_CASE("GL_2(9): regular character, transforms, Brauer count") {
  auto b = make(3, 1, GroupKind::GL, 2, Side::Ext);
  const auto& t = *b.t;
  CHECK(t.count() == 80);
  const auto v = validate_table(t);
  CHECK(v.ok());
  CHECK_FALSE(v.elementwise_run);

  ClassFunction reg(t.classes().count(), CyclotomicValue::integer(0));
  reg[0] = CyclotomicValue::integer(b.g->order());
  for (int i = 0; i < t.count(); i += 7) CHECK(inner_product(t, reg, t[i].values) == t[i].degree);

  const auto& tw = b.g->tower();
  const auto triv = MultCharacter::trivial(tw, Side::Ext);
  const auto mu = MultCharacter::from_exponent(tw, Side::Ext, 3);
  int galois_fixed = 0;
  for (int i = 0; i < t.count(); ++i) {
    CHECK(index_of(t, dual(t, dual(t, t[i]))) == i);
    CHECK(index_of(t, det_twist(t, t[i], triv)) == i);
    CHECK(index_of(t, galois(t, galois(t, t[i]))) == i);
    const int j = index_of(t, det_twist(t, t[i], mu));
    CHECK(t[j].degree == t[i].degree);
    if (index_of(t, galois(t, t[i])) == i) ++galois_fixed;
  }
  int stable_classes = 0;
  for (int c = 0; c < t.classes().count(); ++c) stable_classes += t.classes().galois_class[c] == c;
  CHECK(galois_fixed == stable_classes);
}

TEST_CASE("Whittaker models") {
  auto b = make(3, 1, GroupKind::GL, 2, Side::Ext);
  const auto& t = *b.t;
  WhittakerData w(t);
  CHECK(w.n_order() == 9);
  const Elem one = b.g->tower().one();
  int generic = 0;
  ClassFunction gg(t.classes().count(), CyclotomicValue::integer(0));
  for (const auto& chi : t.characters()) {
    const auto d = w.dim(chi.values, one);
    CHECK(d >= 0);
    CHECK(d <= 1);
    generic += d == 1;
  }
  // non-degenerate ψ_a for every a ≠ 0 gives the same dimension
  for (int i = 0; i < t.count(); i += 5) {
    CHECK(w.dim(t[i].values, b.g->tower().gen()) == w.dim(t[i].values, one));
  }
  // degree-1 characters are not generic, Steinberg-type degree q² ones are
  for (const auto& chi : t.characters()) {
    if (chi.degree == 1) CHECK(w.dim(chi.values, one) == 0);
    if (chi.degree == 9) CHECK(w.dim(chi.values, one) == 1);
  }
  // GL_2: all non-linear irreducibles are generic
  int nonlinear = 0;
  for (const auto& chi : t.characters()) nonlinear += chi.degree > 1;
  CHECK(generic == nonlinear);
}

TEST_CASE("restriction GL_2(9) to SL_2(9) and GL_2(3)") {
  auto tw = FieldTower::build(3, 1);
  auto g = MatrixGroup::build(tw, GroupKind::GL, 2, Side::Ext);
  auto gc = conjugacy_classes(*g);
  auto gt = character_table(g, gc);
  auto s = MatrixGroup::build(tw, GroupKind::SL, 2, Side::Ext);
  auto sc = conjugacy_classes(*s);
  auto st = character_table(s, sc);
  const auto emb = embed_subgroup(*g, *gc, *s, *sc);
  for (const auto& chi : gt->characters()) {
    const auto m = restrict_multiplicity(chi.values, emb, *st);
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(m[i] <= 1);
      deg += m[i] * (*st)[static_cast<int>(i)].degree;
    }
    CHECK(deg == chi.degree);
  }
  auto h = MatrixGroup::build(tw, GroupKind::GL, 2, Side::Base);
  auto hc = conjugacy_classes(*h);
  auto ht = character_table(h, hc);
  const auto eh = embed_subgroup(*g, *gc, *h, *hc);
  std::int64_t total = 0;
  for (const auto& chi : gt->characters()) {
    const auto m = restrict_multiplicity(chi.values, eh, *ht);
    total += m[0];
  }
  // number of GL_2(3)-distinguished irreducibles of GL_2(9) is finite and positive
  CHECK(total > 0);
}

TEST_CASE("deterministic across runs and seeds") {
  auto tw = FieldTower::build(2, 1);
  auto g = MatrixGroup::build(tw, GroupKind::GL, 2, Side::Ext);
  auto cc = conjugacy_classes(*g);
  DixonOptions a, b;
  b.seed = 99;
  auto ta = character_table(g, cc, a);
  auto tb = character_table(g, cc, b);
  REQUIRE(ta->count() == tb->count());
  for (int i = 0; i < ta->count(); ++i) {
    for (int c = 0; c < cc->count(); ++c) CHECK((*ta)[i].values[c].same_form((*tb)[i].values[c]));
  }
  DixonOptions th;
  th.threads = 2;
  auto tc = character_table(g, cc, th);
  for (int i = 0; i < ta->count(); ++i) CHECK(tc->find((*ta)[i].values) == std::optional<int>(i));
}
