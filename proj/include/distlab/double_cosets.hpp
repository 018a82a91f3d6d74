// H\G/H for H = GL_n(F_q) inside G = GL_n(F_{q^2}) and the involution
// machinery around S = {g : g·σ(g) = 1}.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "distlab/matrix_group.hpp"

namespace distlab {

struct DoubleCosetReport {
  std::string g_name, h_name;
  std::string route;  // "enumerated" or "s-set"
  std::int64_t g_order = 0, h_order = 0;
  std::vector<Mat> coset_reps;
  std::vector<std::int64_t> coset_sizes;
  std::vector<bool> theta_stable;  // σ(rep)^{-1} ∈ H·rep·H
  bool galois_pair = false;        // H is the σ-fixed subgroup of G
  std::int64_t s_set_size = 0;     // via the route's own enumeration
  std::int64_t s_set_oracle = 0;   // independent count through s = X + εY
  std::int64_t h_orbits_on_s = 0;
  bool bijection_ok = false;
  bool h_conjugacy_ok = false;

  bool all_theta_stable() const;
  bool sizes_ok() const;
};

/// |{s ∈ GL_n(F_{q^2}) : s·σ(s) = 1}| by writing s = X + εY with X, Y over
/// F_q: the condition becomes XY = YX and X² + T·XY + N·Y² = 1 where
/// T, N are the trace and norm of ε.
std::int64_t count_s_set(const FieldTower& t, int n);

/// Direct partition of an enumerated G into H-double cosets.
DoubleCosetReport double_cosets(const MatrixGroup& g, const ConjugacyClasses& gc, const MatrixGroup& h);

/// The same report for G = GL_n(F_{q^2}) without enumerating G: G/H is
/// realised as the orbit of 1 under x·s = x·s·σ(x)^{-1}.
DoubleCosetReport double_cosets_via_s(const MatrixGroup& h);

}  // namespace distlab
