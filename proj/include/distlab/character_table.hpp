// Exact irreducible character tables by the Burnside-Dixon method: class
// sums act on the centre of the group algebra mod a prime l = 1 (mod e),
// simultaneous eigenvectors give central characters, and eigenvalue
// multiplicities lift the values to Z[ζ_e].
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "distlab/cyclotomic.hpp"
#include "distlab/matrix_group.hpp"

namespace distlab {

using ClassFunction = std::vector<CyclotomicValue>;

struct Character {
  std::int64_t degree = 0;
  ClassFunction values;  // one per class, multiplicity form over ζ_{order of the class}
};

struct TableMeta {
  std::uint64_t ell = 0;
  std::uint64_t seed = 0;
  int attempts = 0;
  bool from_cache = false;
};

class CharacterTable {
 public:
  CharacterTable(GroupPtr g, ClassesPtr cc, std::vector<Character> chars, TableMeta meta);

  const MatrixGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const ConjugacyClasses& classes() const { return *classes_; }
  const ClassesPtr& classes_ptr() const { return classes_; }
  const std::vector<Character>& characters() const { return chars_; }
  const Character& operator[](int i) const { return chars_[i]; }
  int count() const { return static_cast<int>(chars_.size()); }
  std::int64_t exponent() const { return classes_->exponent; }
  const TableMeta& meta() const { return meta_; }

  /// Row whose multiplicity form equals `values` exactly.
  std::optional<int> find(const ClassFunction& values) const;

 private:
  GroupPtr group_;
  ClassesPtr classes_;
  std::vector<Character> chars_;
  TableMeta meta_;
  std::map<std::vector<std::int64_t>, int> lookup_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

struct DixonOptions {
  std::uint64_t seed = 1;
  int max_attempts = 8;
  int threads = 1;
};

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TablePtr character_table(GroupPtr g, ClassesPtr cc, const DixonOptions& opts = {});

struct TableValidation {
  bool count_ok = false;
  bool degrees_ok = false;        // Σ d² = |G|
  bool values_ok = false;         // identity values, multiplicity sums, power maps
  bool galois_closed = false;
  bool row_orthogonal = false;
  bool column_orthogonal = false;
  bool elementwise_ok = true;     // Gram matrix by summing over elements, |G| <= 5000
  bool elementwise_run = false;
  bool exact_pairs_ok = true;     // all pairs in Q(ζ_e), small tables
  bool exact_pairs_run = false;
  std::uint64_t verify_prime = 0;
  std::string failure;

  bool ok() const {
    return count_ok && degrees_ok && values_ok && galois_closed && row_orthogonal && column_orthogonal &&
           elementwise_ok && exact_pairs_ok;
  }
};

/// Exact validation. Orthogonality is checked modulo a prime P = 1 (mod e)
/// larger than |G|·(dmax² + 1); together with Galois closure of the rows
/// this is an exact proof.
TableValidation validate_table(const CharacterTable& t, int exact_pair_limit = 100);

/// (1/|G|) Σ_C |C| a(C) conj(b(C)); throws TableError unless it is an integer.
std::int64_t inner_product(const CharacterTable& t, const ClassFunction& a, const ClassFunction& b);

/// Values of Res_H χ on the classes of H.
ClassFunction restrict_class_function(const ClassFunction& chi, const EmbeddingData& e);
/// ⟨Res_H χ, ψ_i⟩_H for every irreducible ψ_i of H.
std::vector<std::int64_t> restrict_multiplicity(const ClassFunction& chi, const EmbeddingData& e,
                                                const CharacterTable& h_table);

Character dual(const CharacterTable& t, const Character& chi);
Character galois(const CharacterTable& t, const Character& chi);
/// χ ⊗ (μ∘det); μ must be a character of F_{q^2}^* (Ext) or F_q^* (Base)
/// matching the side of the group.
Character det_twist(const CharacterTable& t, const Character& chi, const MultCharacter& mu);
/// Index of a transformed irreducible, throwing if it is not in the table.
int index_of(const CharacterTable& t, const Character& chi);

/// The exponent s with μ(det g_C) = ζ_{o_C}^s for the class representative.
std::int64_t det_exponent_at_class(const CharacterTable& t, int c, const MultCharacter& mu);

/// dim Hom_N(χ, ψ_a) for N the upper unitriangular subgroup and
/// ψ_a(u) = ψ(a·u_{12} + u_{23} + ... + u_{n-1,n}), ψ trivial on F_q; this is
/// the generic character ψ(Σ u_{i,i+1}) conjugated by diag(a, 1, ..., 1).
class WhittakerData {
 public:
  explicit WhittakerData(const CharacterTable& t);
  std::int64_t dim(const ClassFunction& chi, Elem a) const;
  std::int64_t n_order() const { return n_order_; }

 private:
  const CharacterTable* table_;
  std::int64_t n_order_ = 0;
  std::vector<int> u_class_;
  std::vector<Elem> u_first_, u_rest_;
  AddCharacter psi_;
};

}  // namespace distlab
