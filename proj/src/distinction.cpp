#include "distlab/distinction.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "distlab/modular.hpp"
#include "distlab/table_cache.hpp"

namespace distlab {

namespace {

constexpr std::int64_t kOracleLimit = 200000;

std::string bundle_key(GroupKind kind, int n, Side side) {
  return kind_name(kind) + "/" + std::to_string(n) + "/" + (side == Side::Ext ? "E" : "F");
}

std::int64_t checked_quotient(std::optional<std::int64_t> v, std::int64_t d, const char* what) {
  if (!v || *v % d != 0) throw TableError(std::string(what) + ": result is not an integer");
  return *v / d;
}

std::vector<std::int64_t> restrict_all(const ClassFunction& chi, const EmbeddingData& e, const CharacterTable& h) {
  return restrict_multiplicity(chi, e, h);
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Lab::Lab(TowerPtr tower, LabOptions opts) : tower_(std::move(tower)), opts_(std::move(opts)) {}

const Bundle& Lab::bundle(GroupKind kind, int n, Side side) {
  const std::string key = bundle_key(kind, n, side);
  auto it = bundles_.find(key);
  if (it != bundles_.end()) return *it->second;
  auto b = std::make_unique<Bundle>();
  b->g = MatrixGroup::build(tower_, kind, n, side, opts_.ceiling, opts_.seed);
  b->cc = conjugacy_classes(*b->g);
  DixonOptions dx;
  dx.seed = opts_.seed;
  dx.threads = opts_.threads;
  std::string note;
  b->t = cached_character_table(b->g, b->cc, opts_.cache_dir, dx, &note);
  if (!note.empty()) notes_.push_back(b->g->name() + ": " + note);
  b->validation = validate_table(*b->t);
  return *(bundles_[key] = std::move(b));
}

const EmbeddingData& Lab::embedding(const Bundle& big, const Bundle& small) {
  const auto key = std::make_pair(big.g->name(), small.g->name());
  auto it = embeddings_.find(key);
  if (it != embeddings_.end()) return it->second;
  return embeddings_[key] = embed_subgroup(*big.g, *big.cc, *small.g, *small.cc);
}

std::vector<const Bundle*> Lab::built() const {
  std::vector<const Bundle*> out;
  for (const auto& [k, b] : bundles_) out.push_back(b.get());
  return out;
}

ClassFunction det_character(const Bundle& h, const MultCharacter& mu) {
  const FieldTower& t = h.g->tower();
  const Side det_side = h.g->side();
  if (mu.home != det_side) throw std::invalid_argument("det_character: character lives on the wrong field");
  ClassFunction out;
  for (int c = 0; c < h.cc->count(); ++c) {
    const Elem d = mat_det(t, h.g->element(h.cc->reps[c]));
    out.push_back(CyclotomicValue::root(static_cast<std::uint32_t>(mu.modulus), mu.value_exponent(t, d)));
  }
  return out;
}

std::int64_t hom_dim(const Bundle& h, const EmbeddingData& e, const ClassFunction& chi,
                     const std::optional<MultCharacter>& mu) {
  const auto res = restrict_class_function(chi, e);
  if (mu) return inner_product(*h.t, res, det_character(h, *mu));
  ClassFunction one(h.cc->count(), CyclotomicValue::integer(1));
  return inner_product(*h.t, res, one);
}

std::int64_t hom_dim_elementwise(const Bundle& g, const Bundle& h, const EmbeddingData& e, const ClassFunction& chi,
                                 const std::optional<MultCharacter>& mu) {
  const FieldTower& t = h.g->tower();
  std::map<std::pair<int, std::int64_t>, std::int64_t> counts;
  for (int i = 0; i < static_cast<int>(h.g->order()); ++i) {
    const int gc = g.cc->class_of[e.g_index[i]];
    const std::int64_t v = mu ? mu->value_exponent(t, mat_det(t, h.g->element(i))) : 0;
    ++counts[{gc, v}];
  }
  std::uint64_t l = mu ? static_cast<std::uint64_t>(mu->modulus) : 1;
  for (const auto& [key, cnt] : counts) l = modp::lcm(l, chi[key.first].order());
  CycloAccumulator acc(static_cast<std::uint32_t>(l));
  const std::uint32_t m = mu ? static_cast<std::uint32_t>(mu->modulus) : 1;
  for (const auto& [key, cnt] : counts) acc.add_product_conj(chi[key.first], CyclotomicValue::root(m, key.second), cnt);
  return checked_quotient(acc.as_integer(), h.g->order(), "hom_dim_elementwise");
}

PairKind parse_pair(const std::string& s) {
  if (s == "GL:GL") return PairKind::GL_GL;
  if (s == "GL:U") return PairKind::GL_U;
  if (s == "SL:SL") return PairKind::SL_SL;
  throw std::invalid_argument("unknown pair '" + s + "' (expected GL:GL, GL:U or SL:SL)");
}

std::string pair_name(PairKind k) {
  switch (k) {
    case PairKind::GL_GL:
      return "GL:GL";
    case PairKind::GL_U:
      return "GL:U";
    case PairKind::SL_SL:
      return "SL:SL";
  }
  return "?";
}

bool PairScanReport::tables_ok() const {
  return std::all_of(tables.begin(), tables.end(), [](const auto& t) { return t.second; });
}

PairScanReport pair_scan(Lab& lab, PairKind pair, int n) {
  const GroupKind gk = pair == PairKind::SL_SL ? GroupKind::SL : GroupKind::GL;
  const Bundle& g = lab.bundle(gk, n, Side::Ext);
  const Bundle& h = pair == PairKind::GL_U ? lab.bundle(GroupKind::U, n, Side::Ext)
                    : pair == PairKind::SL_SL ? lab.bundle(GroupKind::SL, n, Side::Base)
                                              : lab.bundle(GroupKind::GL, n, Side::Base);
  const EmbeddingData& e = lab.embedding(g, h);
  const auto& t = *g.t;

  PairScanReport r;
  r.pair = pair_name(pair);
  r.g_name = g.g->name();
  r.h_name = h.g->name();
  r.n = n;
  r.p = lab.tower().p();
  r.f = lab.tower().f();
  r.criterion = pair == PairKind::GL_GL ? "gow_sigma_dual" : pair == PairKind::GL_U ? "shintani" : "tadic_multfree";
  r.gelfand_ok = true;
  r.oracle_ok = true;
  r.criterion_ok = true;
  const bool run_oracle = h.g->order() <= kOracleLimit;
  for (int i = 0; i < t.count(); ++i) {
    ScanRow row;
    row.id = i;
    row.degree = t[i].degree;
    row.dim = hom_dim(h, e, t[i].values);
    if (run_oracle) {
      row.dim_oracle = hom_dim_elementwise(g, h, e, t[i].values);
      if (row.dim_oracle != row.dim) r.oracle_ok = false;
    }
    const int gal = index_of(t, galois(t, t[i]));
    row.galois_invariant = gal == i;
    row.sigma_dual = gal == index_of(t, dual(t, t[i]));
    if (pair == PairKind::GL_GL) row.criterion = (row.dim != 0) == row.sigma_dual;
    if (pair == PairKind::GL_U) row.criterion = (row.dim != 0) == row.galois_invariant;
    r.criterion_ok = r.criterion_ok && row.criterion;
    r.gelfand_ok = r.gelfand_ok && row.dim >= 0 && row.dim <= 1;
    r.max_dim = std::max(r.max_dim, row.dim);
    r.distinguished += row.dim != 0;
    r.rows.push_back(row);
  }
  std::vector<const Bundle*> used{&g, &h};
  if (pair == PairKind::SL_SL) {
    const Bundle& gl = lab.bundle(GroupKind::GL, n, Side::Ext);
    const EmbeddingData& es = lab.embedding(gl, g);
    bool ok = true;
    for (const auto& chi : gl.t->characters()) {
      const auto m = restrict_all(chi.values, es, t);
      std::int64_t deg = 0;
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] > 1) ok = false;
        deg += m[j] * t[static_cast<int>(j)].degree;
      }
      if (deg != chi.degree) ok = false;
    }
    r.tadic_ok = ok;
    r.criterion_ok = ok;
    used.push_back(&gl);
  }
  for (const Bundle* b : used) r.tables.emplace_back(b->g->name(), b->validation.ok());
  return r;
}

PacketContext::PacketContext(Lab& lab, int n) : lab_(&lab), n_(n) {
  gl_ = &lab.bundle(GroupKind::GL, n, Side::Ext);
  glf_ = &lab.bundle(GroupKind::GL, n, Side::Base);
  sl_ = &lab.bundle(GroupKind::SL, n, Side::Ext);
  slf_ = &lab.bundle(GroupKind::SL, n, Side::Base);
  plus_ = &lab.bundle(GroupKind::GLplus, n, Side::Ext);
  e_glf_ = &lab.embedding(*gl_, *glf_);
  e_sl_ = &lab.embedding(*gl_, *sl_);
  e_slf_in_sl_ = &lab.embedding(*sl_, *slf_);
  e_slf_in_gl_ = &lab.embedding(*gl_, *slf_);
  e_plus_ = &lab.embedding(*gl_, *plus_);
  e_sl_in_plus_ = &lab.embedding(*plus_, *sl_);
  wh_gl_ = std::make_unique<WhittakerData>(*gl_->t);
  wh_sl_ = std::make_unique<WhittakerData>(*sl_->t);
  wh_plus_ = std::make_unique<WhittakerData>(*plus_->t);

  for (const auto& chi : gl_->t->characters()) distinguished_.push_back(hom_dim(*glf_, *e_glf_, chi.values));
  const int units = lab.tower().units();
  for (const auto& chi : sl_->t->characters()) {
    sl_hom_.push_back(hom_dim(*slf_, *e_slf_in_sl_, chi.values));
    sl_hom_oracle_.push_back(hom_dim_elementwise(*sl_, *slf_, *e_slf_in_sl_, chi.values));
    std::vector<int> gen;
    bool le_one = true;
    for (int a = 0; a < units; ++a) {
      const auto d = wh_sl_->dim(chi.values, Elem::from_log(a));
      if (d > 1) le_one = false;
      if (d >= 1) gen.push_back(a);
    }
    sl_generic_.push_back(std::move(gen));
    sl_wh_ok_.push_back(le_one);
  }
}

PacketReport PacketContext::packet(int anchor) const {
  const FieldTower& tw = lab_->tower();
  const auto& gt = *gl_->t;
  if (anchor < 0 || anchor >= gt.count()) throw std::out_of_range("packet: no irreducible with id " + std::to_string(anchor));
  const auto& pi = gt[anchor];
  const int q = tw.q();
  const int units = tw.units();
  PacketReport r;
  r.g_name = gl_->g->name();
  r.anchor = anchor;
  r.degree = pi.degree;
  r.generic = wh_gl_->dim(pi.values, tw.one()) == 1;
  auto dump = [&](const std::string& s) { r.discrepancies.push_back(s); };

  // X
  std::int64_t x_sum = 0;
  bool x_le_one = true;
  for (int c = 0; c < q - 1; ++c) {
    const auto chi = MultCharacter::from_exponent(tw, Side::Base, c);
    const auto d = hom_dim(*glf_, *e_glf_, pi.values, chi);
    if (hom_dim_elementwise(*gl_, *glf_, *e_glf_, pi.values, chi) != d) r.oracle_ok = false;
    r.x_dims.push_back(d);
    x_sum += d;
    if (d > 1) x_le_one = false;
    if (d > 0) r.X.push_back(c);
  }
  if (!x_le_one) dump("dim Hom_GL_n(F)(pi', chi) exceeds 1");

  // Z, Y, Y'
  for (int m = 0; m < units; ++m) {
    const auto mu = MultCharacter::from_exponent(tw, Side::Ext, m);
    if (index_of(gt, det_twist(gt, pi, mu)) != anchor) continue;
    r.Z.push_back(m);
    if (m % (q - 1) == 0) r.Y.push_back(m);
    if (m % (q + 1) == 0) r.Yprime.push_back(m);
    if ((static_cast<std::int64_t>(m) * n_) % units != 0) r.z_power_ok = false;
  }
  {
    const std::set<int> zs(r.Z.begin(), r.Z.end());
    for (int a : r.Z) {
      for (int b : r.Z) {
        if (!zs.count((a + b) % units)) r.subsets_ok = false;
      }
    }
    for (int y : r.Y) r.subsets_ok = r.subsets_ok && zs.count(y);
    for (int y : r.Yprime) r.subsets_ok = r.subsets_ok && zs.count(y);
  }

  // q and the action of Z/Y on X
  {
    const std::int64_t num = static_cast<std::int64_t>(r.X.size()) * static_cast<std::int64_t>(r.Y.size());
    const std::int64_t den = static_cast<std::int64_t>(r.Z.size());
    const std::int64_t g = std::gcd(num, den);
    r.q_num = num / g;
    r.q_den = den / g;
    const std::set<int> xs(r.X.begin(), r.X.end());
    std::set<int> seen;
    const std::size_t expect = r.Z.size() / std::max<std::size_t>(r.Y.size(), 1);
    for (int x : r.X) {
      if (seen.count(x)) continue;
      ++r.x_orbits;
      std::set<int> orbit;
      for (int m : r.Z) {
        const int img = (x + MultCharacter::from_exponent(tw, Side::Ext, m).restrict_to_base(tw).exponent) % (q - 1);
        if (!xs.count(img)) r.free_action_ok = false;
        orbit.insert(img);
      }
      if (orbit.size() != expect) r.free_action_ok = false;
      seen.insert(orbit.begin(), orbit.end());
    }
    if (!r.X.empty() && r.q_num != static_cast<std::int64_t>(r.x_orbits) * r.q_den) r.free_action_ok = false;
  }

  // SL_n(E) constituents
  const auto& st = *sl_->t;
  const auto m_sl = restrict_multiplicity(pi.values, *e_sl_, st);
  std::vector<int> sl_ids;
  for (std::size_t j = 0; j < m_sl.size(); ++j) {
    if (m_sl[j] > 1) r.tadic_ok = false;
    if (m_sl[j] > 0) sl_ids.push_back(static_cast<int>(j));
  }
  if (!r.tadic_ok) dump("restriction to " + sl_->g->name() + " is not multiplicity free");
  r.packet_size_ok = sl_ids.size() == r.Z.size();
  for (int j : sl_ids) {
    if (st[j].degree != st[sl_ids[0]].degree) r.degree_ok = false;
  }
  if (!sl_ids.empty()) r.degree_ok = r.degree_ok && st[sl_ids[0]].degree * static_cast<std::int64_t>(sl_ids.size()) == pi.degree;

  // GL_n(E)^+ constituents
  const auto& pt = *plus_->t;
  const auto m_plus = restrict_multiplicity(pi.values, *e_plus_, pt);
  for (std::size_t j = 0; j < m_plus.size(); ++j) {
    if (m_plus[j] == 0) continue;
    if (m_plus[j] > 1) r.tadic_ok = false;
    PlusConstituent pc;
    pc.plus_id = static_cast<int>(j);
    pc.degree = pt[pc.plus_id].degree;
    pc.whittaker_dim = wh_plus_->dim(pt[pc.plus_id].values, tw.one());
    const auto ms = restrict_multiplicity(pt[pc.plus_id].values, *e_sl_in_plus_, st);
    for (std::size_t k = 0; k < ms.size(); ++k) {
      if (ms[k] > 0) pc.sl_ids.push_back(static_cast<int>(k));
    }
    for (int k : pc.sl_ids) pc.equidistributed = pc.equidistributed && sl_hom_[k] == sl_hom_[pc.sl_ids[0]];
    r.equidistributed = r.equidistributed && pc.equidistributed;
    if (pc.whittaker_dim == 1) {
      if (r.plus_generic >= 0) dump("more than one psi-generic constituent over GL_n(E)^+");
      r.plus_generic = static_cast<int>(r.plus.size());
    }
    r.plus.push_back(std::move(pc));
  }
  if (r.generic && r.plus_generic < 0) dump("generic pi' without a psi-generic constituent over GL_n(E)^+");
  if (r.plus.size() != r.Y.size()) dump("number of GL_n(E)^+ constituents differs from |Y|");

  // Clifford identity and additivity
  r.sl_f_dim = hom_dim(*slf_, *e_slf_in_gl_, pi.values);
  r.clifford_ok = r.sl_f_dim == x_sum && (!x_le_one || r.sl_f_dim == static_cast<std::int64_t>(r.X.size()));
  std::int64_t sum_sl = 0;
  for (int j : sl_ids) sum_sl += sl_hom_[j];
  r.additivity_ok = sum_sl == r.sl_f_dim;

  // multiplicity formula per constituent
  r.formula_applicable = r.generic;
  for (int j : sl_ids) {
    SlConstituent c;
    c.sl_id = j;
    c.degree = st[j].degree;
    c.hom_dim = sl_hom_[j];
    c.hom_dim_oracle = sl_hom_oracle_[j];
    if (c.hom_dim_oracle != c.hom_dim) r.oracle_ok = false;
    c.generic_a = sl_generic_[j];
    c.whittaker_le_one = sl_wh_ok_[j];
    c.witness = c.generic_a.empty() ? -1 : c.generic_a.front();
    for (std::size_t k = 0; k < r.plus.size(); ++k) {
      const auto& ids = r.plus[k].sl_ids;
      if (std::find(ids.begin(), ids.end(), j) != ids.end()) {
        c.plus_parents.push_back(static_cast<int>(k));
        if (static_cast<int>(k) == r.plus_generic) c.in_plus = true;
      }
    }
    if (r.formula_applicable) {
      if (c.witness < 0) {
        if (c.hom_dim != 0) dump("sl " + std::to_string(j) + ": no genericity witness but nonzero Hom");
        c.formula_equal = c.hom_dim == 0;
      } else {
        CycloAccumulator acc(static_cast<std::uint32_t>(units));
        for (int m : r.Y) {
          const std::int64_t v = static_cast<std::int64_t>(c.witness) * m % units;
          c.pairing.push_back(v);
          acc.add_root(v);
          for (int a : c.generic_a) {
            if (static_cast<std::int64_t>(a) * m % units != v) c.pairing_well_defined = false;
          }
        }
        c.pairing_sum = checked_quotient(acc.as_integer(), 1, "pairing sum");
        // RHS = q/|Y| · S = |X|·S/|Z|
        std::int64_t num = static_cast<std::int64_t>(r.X.size()) * c.pairing_sum;
        std::int64_t den = static_cast<std::int64_t>(r.Z.size());
        const std::int64_t g = std::gcd(num, den);
        c.rhs_num = num / (g ? g : 1);
        c.rhs_den = den / (g ? g : 1);
        c.formula_equal = c.hom_dim * c.rhs_den == c.rhs_num;
        c.indicator_ok = c.pairing_sum == (c.in_plus ? static_cast<std::int64_t>(r.Y.size()) : 0);
        if (!c.pairing_well_defined) dump("sl " + std::to_string(j) + ": pairing depends on the witness");
      }
      if (!c.formula_equal) {
        std::ostringstream os;
        os << "formula: sl " << j << " lhs " << c.hom_dim << " rhs " << c.rhs_num << "/" << c.rhs_den << " |X| "
           << r.X.size() << " |Y| " << r.Y.size() << " |Z| " << r.Z.size() << " witness " << c.witness;
        dump(os.str());
      }
      r.formula_ok = r.formula_ok && c.formula_equal && c.indicator_ok && c.pairing_well_defined;
    }
    r.sl.push_back(std::move(c));
  }

  // strong classes among distinguished twists
  {
    std::vector<int> twist(units);
    for (int m = 0; m < units; ++m) {
      twist[m] = index_of(gt, det_twist(gt, pi, MultCharacter::from_exponent(tw, Side::Ext, m)));
    }
    DisjointSets ds(gt.count());
    std::set<int> dist;
    for (int m = 0; m < units; ++m) {
      if (distinguished_[twist[m]] > 0) dist.insert(twist[m]);
    }
    for (int m = 0; m < units; ++m) {
      for (int s = 0; s < units; s += q - 1) {
        ds.unite(twist[m], twist[(m + s) % units]);
      }
    }
    std::set<int> roots;
    for (int j : dist) roots.insert(ds.find(j));
    r.strong_classes = static_cast<int>(roots.size());
    r.strong_count_ok = static_cast<std::int64_t>(r.strong_classes) * r.q_den == r.q_num;
  }
  return r;
}

bool PacketSuite::ok() const {
  return std::all_of(packets.begin(), packets.end(), [](const PacketReport& p) { return p.ok(); });
}

PacketSuite packet_suite(Lab& lab, int n) {
  PacketContext ctx(lab, n);
  PacketSuite s;
  s.g_name = ctx.gl().g->name();
  for (int i = 0; i < ctx.count(); ++i) {
    s.packets.push_back(ctx.packet(i));
    if (!s.packets.back().ok()) ++s.discrepancies;
  }
  return s;
}

UnitaryReport unitary_relation(Lab& lab, int n) {
  if (n != 2) throw std::invalid_argument("unitary_relation: only n = 2");
  const FieldTower& tw = lab.tower();
  const Bundle& g = lab.bundle(GroupKind::GL, n, Side::Ext);
  const Bundle& u = lab.bundle(GroupKind::U, n, Side::Ext);
  const Bundle& h = lab.bundle(GroupKind::GL, n, Side::Base);
  const EmbeddingData& eu = lab.embedding(g, u);
  const EmbeddingData& eh = lab.embedding(g, h);
  const auto& t = *g.t;
  const int q = tw.q();
  const int units = tw.units();
  UnitaryReport r;
  r.g_name = g.g->name();
  r.u_name = u.g->name();
  r.h_name = h.g->name();

  const int zc = g.cc->class_of[g.g->index_of(mat_scale(tw, tw.gen(), mat_identity(tw, n)))];
  for (int i = 0; i < t.count(); ++i) {
    UnitaryRow row;
    row.id = i;
    const auto& v = t[i].values[zc];
    if (v.terms().size() != 1) throw TableError("unitary_relation: scalar value is not a multiple of a root of unity");
    const std::int64_t omega = static_cast<std::int64_t>(v.terms()[0].exp) * units / v.order();
    row.u_dim = hom_dim(u, eu, t[i].values);
    row.u_dim_oracle = hom_dim_elementwise(g, u, eu, t[i].values);
    if (row.u_dim_oracle != row.u_dim) r.oracle_ok = false;
    row.applicable = omega % (q + 1) == 0;
    if (row.applicable) {
      ++r.applicable;
      const auto mu = MultCharacter::from_exponent(tw, Side::Base, omega / (q + 1));
      if (mu.compose_norm(tw).exponent != omega) throw std::logic_error("unitary_relation: ω ≠ μ∘N");
      row.mu = mu.exponent;
      row.mu_dim = hom_dim(h, eh, t[i].values, mu);
      row.equivalent = (row.u_dim != 0) == (row.mu_dim != 0);
      row.dims_equal = row.u_dim == row.mu_dim;
    } else {
      row.equivalent = row.u_dim == 0;
    }
    r.equivalence_ok = r.equivalence_ok && row.equivalent;
    r.dims_equal = r.dims_equal && row.dims_equal;
    r.rows.push_back(row);
  }

  // E*·GL_2(F) against E*·U(2), up to conjugacy in GL_2(E)
  const auto order = static_cast<int>(g.g->order());
  std::vector<char> in_a(order, 0), in_b(order, 0);
  std::vector<int> a_list;
  for (int k = 0; k < units; ++k) {
    const Mat z = mat_scale(tw, Elem::from_log(k), mat_identity(tw, n));
    for (int x : eh.g_index) {
      const int idx = g.g->index_of(mat_mul(tw, z, g.g->element(x)));
      if (!in_a[idx]) a_list.push_back(idx);
      in_a[idx] = 1;
    }
    for (int x : eu.g_index) in_b[g.g->index_of(mat_mul(tw, z, g.g->element(x)))] = 1;
  }
  const auto b_size = std::count(in_b.begin(), in_b.end(), 1);
  if (static_cast<std::int64_t>(a_list.size()) == b_size) {
    for (int s = 0; s < order && !r.cosets_conjugate; ++s) {
      const Mat& x = g.g->element(s);
      const Mat xi = mat_inv(tw, x);
      bool all = true;
      for (int a : a_list) {
        if (!in_b[g.g->index_of(mat_mul(tw, mat_mul(tw, x, g.g->element(a)), xi))]) {
          all = false;
          break;
        }
      }
      r.cosets_conjugate = all;
    }
  }
  return r;
}

int steinberg_index(const CharacterTable& t) {
  const auto& g = t.group();
  const FieldTower& tw = g.tower();
  if (g.n() != 2 || g.kind() != GroupKind::GL) throw std::invalid_argument("steinberg_index: GL_2 only");
  const int fs = g.field_size();
  const int step = g.side() == Side::Ext ? 1 : tw.q() + 1;
  const int units = g.side() == Side::Ext ? tw.units() : tw.q() - 1;
  std::vector<int> scalar_classes;
  for (int k = 0; k < units; ++k) {
    const Mat z = mat_scale(tw, Elem::from_log(k * step), mat_identity(tw, 2));
    scalar_classes.push_back(t.classes().class_of[g.index_of(z)]);
  }
  Mat d = mat_identity(tw, 2);
  d.at(0, 0) = Elem::from_log(step % tw.units());
  const int dc = t.classes().class_of[g.index_of(d)];
  int found = -1;
  for (int i = 0; i < t.count(); ++i) {
    if (t[i].degree != fs) continue;
    bool ok = t[i].values[dc].as_integer() == std::optional<std::int64_t>(1);
    for (int c : scalar_classes) ok = ok && t[i].values[c].as_integer() == std::optional<std::int64_t>(fs);
    if (ok) {
      if (found >= 0) throw TableError("steinberg_index: not unique");
      found = i;
    }
  }
  if (found < 0) throw TableError("steinberg_index: not found");
  return found;
}

}  // namespace distlab
