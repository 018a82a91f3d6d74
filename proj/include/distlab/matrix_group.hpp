// Enumerated matrix groups GL_n, SL_n, U_n and GL_n^+ inside the tower,
// their conjugacy classes, and subgroup embeddings.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "distlab/field_tower.hpp"
#include "distlab/matrix.hpp"

namespace distlab {

enum class GroupKind { GL, SL, U, GLplus };

std::string kind_name(GroupKind k);
GroupKind parse_kind(const std::string& s);

inline constexpr std::int64_t kDefaultGroupCeiling = 10'000'000;

/// Ceiling exceeded or another resource limit hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed-form order; U and GLplus are taken over the extension.
std::int64_t group_order_formula(const FieldTower& t, GroupKind kind, int n, Side side);

/// Membership predicate used for enumeration and embedding checks.
bool group_member(const FieldTower& t, GroupKind kind, Side side, const Mat& g);

class MatrixGroup {
 public:
  static std::shared_ptr<const MatrixGroup> build(TowerPtr tower, GroupKind kind, int n, Side side,
                                                  std::int64_t ceiling = kDefaultGroupCeiling,
                                                  std::uint64_t seed = 1);

  const FieldTower& tower() const { return *tower_; }
  const TowerPtr& tower_ptr() const { return tower_; }
  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  Side side() const { return side_; }
  /// Size of the field the group is defined over.
  int field_size() const { return side_ == Side::Base ? tower_->q() : tower_->big_q(); }
  std::int64_t order() const { return static_cast<std::int64_t>(elems_.size()); }
  /// e.g. "GL_2(9)", "U_2(3)", "GLplus_2(9)".
  std::string name() const;

  const std::vector<Mat>& elements() const { return elems_; }
  const Mat& element(int i) const { return elems_[i]; }
  std::uint64_t key(int i) const { return keys_[i]; }
  /// Position of g, or -1 when g is not a member.
  int index_of(const Mat& g) const { return index_of_key(mat_key(*tower_, g)); }
  int index_of_key(std::uint64_t key) const;
  int identity_index() const { return identity_; }
  const std::vector<int>& generators() const { return gens_; }
  int mul(int i, int j) const { return index_of(mat_mul(*tower_, elems_[i], elems_[j])); }

 private:
  MatrixGroup() = default;
  void enumerate(std::int64_t scan_limit);
  void build_index();
  void choose_generators(std::uint64_t seed);

  TowerPtr tower_;
  GroupKind kind_ = GroupKind::GL;
  int n_ = 0;
  Side side_ = Side::Base;
  std::vector<Mat> elems_;       // sorted by key
  std::vector<std::uint64_t> keys_;
  std::vector<std::int32_t> dense_;
  std::unordered_map<std::uint64_t, std::int32_t> sparse_;
  int identity_ = 0;
  std::vector<int> gens_;
};

using GroupPtr = std::shared_ptr<const MatrixGroup>;

struct ConjugacyClasses {
  std::vector<int> reps;                // element index of the representative
  std::vector<std::int64_t> sizes;
  std::vector<std::int32_t> class_of;   // per element
  std::vector<int> orders;              // element order per class
  std::vector<int> inverse_class;
  std::vector<int> galois_class;        // empty for groups over F_q
  std::vector<std::vector<int>> powers; // powers[c][k] = class of rep^k, k < orders[c]
  std::int64_t exponent = 1;

  int count() const { return static_cast<int>(reps.size()); }
  int power_class(int c, std::int64_t k) const {
    const std::int64_t o = orders[c];
    std::int64_t r = k % o;
    return powers[c][r < 0 ? r + o : r];
  }
};

using ClassesPtr = std::shared_ptr<const ConjugacyClasses>;

/// Orbit partition under conjugation by the generators. Class 0 is the
/// identity; the rest follow the order of their least element index.
ClassesPtr conjugacy_classes(const MatrixGroup& g);

struct EmbeddingData {
  std::vector<int> g_index;        // per element of H: its index in G
  std::vector<int> h_class_to_g;   // per class of H: the G-class containing it
};

/// Throws std::invalid_argument if some element of H is not in G.
EmbeddingData embed_subgroup(const MatrixGroup& g, const ConjugacyClasses& gc, const MatrixGroup& h,
                             const ConjugacyClasses& hc);

}  // namespace distlab
