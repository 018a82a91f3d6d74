#include "distlab/matrix_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace distlab {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// b^e, saturating at 2^62.
std::int64_t sat_pow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) {
    if (r > (std::int64_t{1} << 62) / b) return std::int64_t{1} << 62;
    r *= b;
  }
  return r;
}

std::int64_t gl_order(std::int64_t s, int n) {
  std::int64_t r = 1;
  for (int i = 0; i < n; ++i) r *= ipow(s, n) - ipow(s, i);
  return r;
}

constexpr std::int64_t kScanLimit = std::int64_t{1} << 28;
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 24;

Elem hermitian(const FieldTower& t, const std::vector<Elem>& x, const std::vector<Elem>& y) {
  Elem s = Elem::zero();
  for (std::size_t i = 0; i < x.size(); ++i) s = t.add(s, t.mul(t.frobenius(x[i]), y[i]));
  return s;
}

}  // namespace

std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::GL:
      return "GL";
    case GroupKind::SL:
      return "SL";
    case GroupKind::U:
      return "U";
    case GroupKind::GLplus:
      return "GLplus";
  }
  return "?";
}

GroupKind parse_kind(const std::string& s) {
  if (s == "GL") return GroupKind::GL;
  if (s == "SL") return GroupKind::SL;
  if (s == "U") return GroupKind::U;
  if (s == "GLplus") return GroupKind::GLplus;
  throw std::invalid_argument("unknown group kind '" + s + "'");
}

std::int64_t group_order_formula(const FieldTower& t, GroupKind kind, int n, Side side) {
  const std::int64_t s = side == Side::Base ? t.q() : t.big_q();
  switch (kind) {
    case GroupKind::GL:
      return gl_order(s, n);
    case GroupKind::SL:
      return gl_order(s, n) / (s - 1);
    case GroupKind::U: {
      const std::int64_t q = t.q();
      std::int64_t r = ipow(q, n * (n - 1) / 2);
      for (int i = 1; i <= n; ++i) r *= ipow(q, i) - (i % 2 == 0 ? 1 : -1);
      return r;
    }
    case GroupKind::GLplus:
      return gl_order(s, n) / subgroup_step(t, UnitSubgroup::BaseTimesNthPowers, n);
  }
  return 0;
}

bool group_member(const FieldTower& t, GroupKind kind, Side side, const Mat& g) {
  if (side == Side::Base && !mat_over_base(t, g)) return false;
  const Elem d = mat_det(t, g);
  if (d.is_zero()) return false;
  switch (kind) {
    case GroupKind::GL:
      return true;
    case GroupKind::SL:
      return d == t.one();
    case GroupKind::U:
      return mat_is_identity(t, mat_mul(t, mat_transpose(mat_frob(t, g)), g));
    case GroupKind::GLplus:
      return subgroup_membership(t, d, UnitSubgroup::BaseTimesNthPowers, g.n);
  }
  return false;
}

std::shared_ptr<const MatrixGroup> MatrixGroup::build(TowerPtr tower, GroupKind kind, int n, Side side,
                                                      std::int64_t ceiling, std::uint64_t seed) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("build_group: n must be 1, 2 or 3");
  if ((kind == GroupKind::U || kind == GroupKind::GLplus) && side != Side::Ext) {
    throw std::invalid_argument("build_group: " + kind_name(kind) + " requires the extension side");
  }
  const std::int64_t projected = group_order_formula(*tower, kind, n, side);
  if (projected > ceiling) {
    throw ResourceError("build_group: projected order " + std::to_string(projected) + " exceeds ceiling " +
                        std::to_string(ceiling));
  }
  if (sat_pow(tower->big_q(), n * n) >= (std::int64_t{1} << 62)) {
    throw ResourceError("build_group: matrix keys do not fit in 64 bits");
  }
  std::shared_ptr<MatrixGroup> g(new MatrixGroup());
  g->tower_ = std::move(tower);
  g->kind_ = kind;
  g->n_ = n;
  g->side_ = side;
  g->enumerate(kScanLimit);
  if (g->order() != projected) {
    throw std::logic_error("build_group: enumerated " + std::to_string(g->order()) + " elements, formula gives " +
                           std::to_string(projected));
  }
  g->build_index();
  g->identity_ = g->index_of(mat_identity(*g->tower_, n));
  g->choose_generators(seed);
  return g;
}

std::string MatrixGroup::name() const {
  return kind_name(kind_) + "_" + std::to_string(n_) + "(" +
         std::to_string(kind_ == GroupKind::U ? tower_->q() : field_size()) + ")";
}

void MatrixGroup::enumerate(std::int64_t scan_limit) {
  const FieldTower& t = *tower_;
  const int nn = n_ * n_;
  if (kind_ == GroupKind::U) {
    // Columns orthonormal for the standard hermitian form.
    const auto field = t.ext_elements();
    const std::int64_t nvec = ipow(static_cast<std::int64_t>(field.size()), n_);
    if (nvec > scan_limit) throw ResourceError("build_group: unitary vector scan too large");
    std::vector<std::vector<Elem>> units;
    std::vector<Elem> v(n_);
    for (std::int64_t c = 0; c < nvec; ++c) {
      std::int64_t r = c;
      for (int i = 0; i < n_; ++i) {
        v[i] = field[r % field.size()];
        r /= static_cast<std::int64_t>(field.size());
      }
      if (hermitian(t, v, v) == t.one()) units.push_back(v);
    }
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int col) -> void {
      if (col == n_) {
        Mat m = mat_zero(n_);
        for (int j = 0; j < n_; ++j) {
          for (int i = 0; i < n_; ++i) m.at(i, j) = units[chosen[j]][i];
        }
        elems_.push_back(m);
        return;
      }
      for (int u = 0; u < static_cast<int>(units.size()); ++u) {
        bool ok = true;
        for (int prev : chosen) {
          if (!hermitian(t, units[prev], units[u]).is_zero()) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        chosen.push_back(u);
        self(self, col + 1);
        chosen.pop_back();
      }
    };
    rec(rec, 0);
  } else {
    const auto field = t.elements(side_);
    const std::int64_t total = ipow(static_cast<std::int64_t>(field.size()), nn);
    if (total > scan_limit) throw ResourceError("build_group: matrix scan too large");
    std::vector<int> digit(nn, 0);
    Mat m = mat_zero(n_);
    for (int i = 0; i < nn; ++i) m.a[i] = field[0];
    for (std::int64_t c = 0; c < total; ++c) {
      if (group_member(t, kind_, side_, m)) elems_.push_back(m);
      for (int i = 0; i < nn; ++i) {
        if (++digit[i] < static_cast<int>(field.size())) {
          m.a[i] = field[digit[i]];
          break;
        }
        digit[i] = 0;
        m.a[i] = field[0];
      }
    }
  }
  std::vector<std::pair<std::uint64_t, int>> order;
  order.reserve(elems_.size());
  for (int i = 0; i < static_cast<int>(elems_.size()); ++i) order.emplace_back(mat_key(t, elems_[i]), i);
  std::sort(order.begin(), order.end());
  std::vector<Mat> sorted;
  sorted.reserve(elems_.size());
  keys_.clear();
  for (const auto& [k, i] : order) {
    sorted.push_back(elems_[i]);
    keys_.push_back(k);
  }
  elems_ = std::move(sorted);
}

void MatrixGroup::build_index() {
  const std::int64_t span = ipow(tower_->big_q(), n_ * n_);
  if (static_cast<std::uint64_t>(span) <= kDenseLimit) {
    dense_.assign(static_cast<std::size_t>(span), -1);
    for (int i = 0; i < static_cast<int>(keys_.size()); ++i) dense_[keys_[i]] = i;
  } else {
    sparse_.reserve(keys_.size() * 2);
    for (int i = 0; i < static_cast<int>(keys_.size()); ++i) sparse_.emplace(keys_[i], i);
  }
}

int MatrixGroup::index_of_key(std::uint64_t key) const {
  if (!dense_.empty()) return key < dense_.size() ? dense_[key] : -1;
  auto it = sparse_.find(key);
  return it == sparse_.end() ? -1 : it->second;
}

void MatrixGroup::choose_generators(std::uint64_t seed) {
  gens_.clear();
  if (order() == 1) return;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(order()) - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    gens_.push_back(pick(rng));
    if (gens_.size() < 2 && order() > 2) continue;
    // closure from the identity
    std::vector<char> seen(order(), 0);
    std::vector<int> frontier{identity_};
    seen[identity_] = 1;
    std::int64_t reached = 1;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier) {
        for (int gi : gens_) {
          const int y = mul(x, gi);
          if (!seen[y]) {
            seen[y] = 1;
            ++reached;
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    if (reached == order()) return;
  }
  throw std::logic_error("choose_generators: no generating set found");
}

ClassesPtr conjugacy_classes(const MatrixGroup& g) {
  const FieldTower& t = g.tower();
  auto cc = std::make_shared<ConjugacyClasses>();
  const int order = static_cast<int>(g.order());
  cc->class_of.assign(order, -1);
  std::vector<std::pair<Mat, Mat>> conj;
  for (int gi : g.generators()) conj.emplace_back(g.element(gi), mat_inv(t, g.element(gi)));

  auto orbit = [&](int start) {
    const int id = cc->count();
    cc->reps.push_back(start);
    cc->class_of[start] = id;
    std::vector<int> stack{start};
    std::int64_t size = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (const auto& [s, si] : conj) {
        const int y = g.index_of(mat_mul(t, mat_mul(t, s, g.element(x)), si));
        if (cc->class_of[y] < 0) {
          cc->class_of[y] = id;
          ++size;
          stack.push_back(y);
        }
      }
    }
    cc->sizes.push_back(size);
  };
  orbit(g.identity_index());
  for (int i = 0; i < order; ++i) {
    if (cc->class_of[i] < 0) orbit(i);
  }

  const int k = cc->count();
  cc->orders.resize(k);
  cc->powers.resize(k);
  cc->inverse_class.resize(k);
  std::int64_t e = 1;
  for (int c = 0; c < k; ++c) {
    const Mat& x = g.element(cc->reps[c]);
    Mat p = mat_identity(t, g.n());
    std::vector<int> pw;
    do {
      pw.push_back(cc->class_of[g.index_of(p)]);
      p = mat_mul(t, p, x);
    } while (!mat_is_identity(t, p));
    cc->orders[c] = static_cast<int>(pw.size());
    cc->powers[c] = std::move(pw);
    cc->inverse_class[c] = cc->class_of[g.index_of(mat_inv(t, x))];
    e = std::lcm(e, static_cast<std::int64_t>(cc->orders[c]));
  }
  cc->exponent = e;
  if (g.side() == Side::Ext) {
    cc->galois_class.resize(k);
    for (int c = 0; c < k; ++c) {
      cc->galois_class[c] = cc->class_of[g.index_of(mat_frob(t, g.element(cc->reps[c])))];
    }
  }
  return cc;
}

EmbeddingData embed_subgroup(const MatrixGroup& g, const ConjugacyClasses& gc, const MatrixGroup& h,
                             const ConjugacyClasses& hc) {
  if (g.tower().p() != h.tower().p() || g.tower().f() != h.tower().f()) {
    throw std::invalid_argument("embed_subgroup: groups live in different towers");
  }
  EmbeddingData e;
  e.g_index.resize(h.order());
  for (int i = 0; i < static_cast<int>(h.order()); ++i) {
    const int j = g.index_of(h.element(i));
    if (j < 0) throw std::invalid_argument("embed_subgroup: " + h.name() + " is not contained in " + g.name());
    e.g_index[i] = j;
  }
  e.h_class_to_g.resize(hc.count());
  for (int c = 0; c < hc.count(); ++c) e.h_class_to_g[c] = gc.class_of[e.g_index[hc.reps[c]]];
  return e;
}

}  // namespace distlab
