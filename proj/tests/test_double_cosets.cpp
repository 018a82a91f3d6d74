#include <algorithm>

#include "distlab/double_cosets.hpp"
#include "doctest.h"

using namespace distlab;

namespace {

void check_prop21(const DoubleCosetReport& r) {
  CHECK(r.sizes_ok());
  CHECK(r.all_theta_stable());
  CHECK(r.galois_pair);
  CHECK(r.bijection_ok);
  CHECK(r.h_conjugacy_ok);
  CHECK(r.s_set_size * r.h_order == r.g_order);
  CHECK(r.s_set_oracle == r.s_set_size);
  CHECK(r.h_orbits_on_s == static_cast<std::int64_t>(r.coset_reps.size()));
}

std::vector<std::int64_t> sorted_sizes(const DoubleCosetReport& r) {
  auto s = r.coset_sizes;
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST_CASE("S-set oracle counts") {
  // |GL_n(q^2)| / |GL_n(q)|
  CHECK(count_s_set(*FieldTower::build(2, 1), 1) == 3);
  CHECK(count_s_set(*FieldTower::build(3, 1), 2) == 120);
  CHECK(count_s_set(*FieldTower::build(2, 1), 2) == 30);
  CHECK(count_s_set(*FieldTower::build(2, 1), 3) == 1080);
}

TEST_CASE("theta-stable double cosets and the S-set on enumerated groups") {
  for (auto [p, n] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    auto t = FieldTower::build(p, 1);
    auto g = MatrixGroup::build(t, GroupKind::GL, n, Side::Ext);
    auto h = MatrixGroup::build(t, GroupKind::GL, n, Side::Base);
    auto r = double_cosets(*g, *conjugacy_classes(*g), *h);
    check_prop21(r);
    // the S-route sees the same double cosets
    auto rs = double_cosets_via_s(*h);
    check_prop21(rs);
    CHECK(sorted_sizes(r) == sorted_sizes(rs));
  }
}

TEST_CASE("GL_3(F_9) over GL_3(F_3) via S") {
  auto t = FieldTower::build(3, 1);
  auto h = MatrixGroup::build(t, GroupKind::GL, 3, Side::Base);
  auto r = double_cosets_via_s(*h);
  CHECK(r.s_set_size == 30240);
  check_prop21(r);
}

TEST_CASE("degenerate pair H = G") {
  auto t = FieldTower::build(3, 1);
  auto g = MatrixGroup::build(t, GroupKind::GL, 2, Side::Base);
  auto r = double_cosets(*g, *conjugacy_classes(*g), *g);
  CHECK(r.coset_reps.size() == 1);
  CHECK(r.all_theta_stable());
  CHECK(r.sizes_ok());
  CHECK_FALSE(r.galois_pair);
}

TEST_CASE("SL pairs") {
  auto t = FieldTower::build(3, 1);
  auto g = MatrixGroup::build(t, GroupKind::SL, 2, Side::Ext);
  auto h = MatrixGroup::build(t, GroupKind::SL, 2, Side::Base);
  auto r = double_cosets(*g, *conjugacy_classes(*g), *h);
  CHECK(r.sizes_ok());
  CHECK(r.bijection_ok);
  CHECK(r.s_set_oracle == -1);
}
