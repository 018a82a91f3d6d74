// Distinction dimensions for (GL_n(E), GL_n(F)), (GL_n(E), U(n)) and
// (SL_n(E), SL_n(F)) with E/F = F_{q^2}/F_q, plus L-packets of SL_n(E),
// the twist sets X, Y, Y', Z, q(π) and the multiplicity formula.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "distlab/character_table.hpp"

namespace distlab {

struct LabOptions {
  std::string cache_dir;
  int threads = 1;
  std::int64_t ceiling = kDefaultGroupCeiling;
  std::uint64_t seed = 1;
};

struct Bundle {
  GroupPtr g;
  ClassesPtr cc;
  TablePtr t;
  TableValidation validation;
};

// Lazily built groups, tables and embeddings over one tower.
class Lab {
 public:
  explicit Lab(TowerPtr tower, LabOptions opts = {});

  const FieldTower& tower() const { return *tower_; }
  const LabOptions& options() const { return opts_; }
  const Bundle& bundle(GroupKind kind, int n, Side side);
  const EmbeddingData& embedding(const Bundle& big, const Bundle& small);
  std::vector<const Bundle*> built() const;
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  TowerPtr tower_;
  LabOptions opts_;
  std::map<std::string, std::unique_ptr<Bundle>> bundles_;
  std::map<std::pair<std::string, std::string>, EmbeddingData> embeddings_;
  std::vector<std::string> notes_;
};

// The class function h ↦ μ(det h) on H.
ClassFunction det_character(const Bundle& h, const MultCharacter& mu);

// ⟨Res_H χ, μ∘det⟩_H, μ trivial when omitted.
std::int64_t hom_dim(const Bundle& h, const EmbeddingData& e, const ClassFunction& chi,
                     const std::optional<MultCharacter>& mu = std::nullopt);
// Same number by summing over the elements of H.
std::int64_t hom_dim_elementwise(const Bundle& g, const Bundle& h, const EmbeddingData& e, const ClassFunction& chi,
                                 const std::optional<MultCharacter>& mu = std::nullopt);

enum class PairKind { GL_GL, GL_U, SL_SL };
PairKind parse_pair(const std::string& s);
std::string pair_name(PairKind k);

struct ScanRow {
  int id = 0;
  std::int64_t degree = 0;
  std::int64_t dim = 0;
  std::int64_t dim_oracle = -1;
  bool galois_invariant = false;  // π^σ ≅ π
  bool sigma_dual = false;        // π^σ ≅ π^∨
  bool criterion = true;          // per-row criterion for the pair
};

struct PairScanReport {
  std::string pair, g_name, h_name, criterion;
  int n = 0, p = 0, f = 0;
  std::vector<ScanRow> rows;
  bool gelfand_ok = false;
  bool oracle_ok = false;
  bool criterion_ok = false;
  std::int64_t max_dim = 0;
  int distinguished = 0;
  std::optional<bool> tadic_ok;   // SL pairs: restriction from GL_n(E) multiplicity free
  std::vector<std::pair<std::string, bool>> tables;  // validation verdict per table used

  bool ok() const { return gelfand_ok && oracle_ok && criterion_ok && tadic_ok.value_or(true) && tables_ok(); }
  bool tables_ok() const;
};

// GL:GL checks dim ≠ 0 ⟺ π^σ ≅ π^∨; GL:U checks dim ≠ 0 ⟺ π^σ ≅ π;
// SL:SL checks restriction from GL_n(E) is multiplicity free.
PairScanReport pair_scan(Lab& lab, PairKind pair, int n);

struct SlConstituent {
  int sl_id = 0;
  std::int64_t degree = 0;
  std::int64_t hom_dim = 0;
  std::int64_t hom_dim_oracle = -1;
  std::vector<int> generic_a;  // discrete logs a with dim Hom_N(π, ψ_a) = 1
  bool whittaker_le_one = true;
  int witness = -1;            // least such a
  bool in_plus = false;
  std::vector<int> plus_parents;
  std::vector<std::int64_t> pairing;  // μ(a) as exponent of ζ_{Q-1}, μ over Y
  bool pairing_well_defined = true;
  std::int64_t pairing_sum = 0;       // Σ_{μ∈Y} ⟨μ,π⟩
  std::int64_t rhs_num = 0, rhs_den = 1;
  bool indicator_ok = true;           // (1/|Y|)Σ⟨μ,π⟩ = [π ⊂ π⁺]
  bool formula_equal = true;
};

struct PlusConstituent {
  int plus_id = 0;
  std::int64_t degree = 0;
  std::int64_t whittaker_dim = 0;
  std::vector<int> sl_ids;
  bool equidistributed = true;
};

struct PacketReport {
  std::string g_name;
  int anchor = 0;
  std::int64_t degree = 0;
  bool generic = false;
  std::vector<int> X;  // exponents of characters of F_q^*
  std::vector<std::int64_t> x_dims;
  std::vector<int> Y, Yprime, Z;  // exponents of characters of F_{q^2}^*
  std::int64_t q_num = 0, q_den = 1;
  int x_orbits = 0;
  bool free_action_ok = true;
  std::vector<SlConstituent> sl;
  std::vector<PlusConstituent> plus;
  int plus_generic = -1;  // index into `plus`
  bool tadic_ok = true;
  bool packet_size_ok = true;
  bool degree_ok = true;
  std::int64_t sl_f_dim = 0;
  bool clifford_ok = true;
  bool additivity_ok = true;
  bool equidistributed = true;
  bool subsets_ok = true;
  bool z_power_ok = true;
  bool formula_applicable = false;
  bool formula_ok = true;
  int strong_classes = 0;
  bool strong_count_ok = true;
  bool oracle_ok = true;
  std::vector<std::string> discrepancies;

  bool q_integral() const { return q_den == 1; }
  bool ok() const {
    return tadic_ok && packet_size_ok && degree_ok && clifford_ok && additivity_ok && equidistributed && subsets_ok &&
           z_power_ok && free_action_ok && formula_ok && strong_count_ok && oracle_ok && discrepancies.empty();
  }
};

// Everything needed for packets of GL_n(F_{q^2}); built once per lab.
class PacketContext {
 public:
  PacketContext(Lab& lab, int n);
  PacketReport packet(int anchor) const;
  int count() const { return gl_->t->count(); }
  const Bundle& gl() const { return *gl_; }
  const Bundle& sl() const { return *sl_; }

 private:
  Lab* lab_;
  int n_;
  const Bundle *gl_, *glf_, *sl_, *slf_, *plus_;
  const EmbeddingData *e_glf_, *e_sl_, *e_slf_in_sl_, *e_slf_in_gl_, *e_plus_, *e_sl_in_plus_;
  std::unique_ptr<WhittakerData> wh_gl_, wh_sl_, wh_plus_;
  std::vector<std::int64_t> distinguished_;  // dim Hom_{GL_n(F)}(π,1) per irreducible of GL_n(E)
  std::vector<std::int64_t> sl_hom_, sl_hom_oracle_;
  std::vector<std::vector<int>> sl_generic_;
  std::vector<bool> sl_wh_ok_;
};

struct PacketSuite {
  std::string g_name;
  std::vector<PacketReport> packets;
  int discrepancies = 0;
  bool ok() const;
};
PacketSuite packet_suite(Lab& lab, int n);

struct UnitaryRow {
  int id = 0;
  bool applicable = false;
  int mu = -1;  // μ with ω_π = μ∘N
  std::int64_t u_dim = 0, u_dim_oracle = -1, mu_dim = 0;
  bool equivalent = true;  // U-distinguished ⟺ μ-distinguished
  bool dims_equal = true;
};

struct UnitaryReport {
  std::string g_name, u_name, h_name;
  std::vector<UnitaryRow> rows;
  int applicable = 0;
  bool equivalence_ok = true;
  bool dims_equal = true;
  bool oracle_ok = true;
  bool cosets_conjugate = false;  // E*·GL_2(F) and E*·U(2) conjugate in GL_2(E)
  bool ok() const { return equivalence_ok && oracle_ok && cosets_conjugate; }
};
UnitaryReport unitary_relation(Lab& lab, int n);

// The Steinberg character of GL_2(F): degree = field size, trivial on the
// centre and 1 at diag(gen, 1).
int steinberg_index(const CharacterTable& t);

}  // namespace distlab
