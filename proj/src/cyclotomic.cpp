#include "distlab/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "distlab/modular.hpp"

namespace distlab {

namespace {

std::uint32_t mod_exp(std::int64_t e, std::uint32_t m) {
  std::int64_t r = e % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

std::vector<std::int64_t> reduce_dense(const std::vector<std::int64_t>& coeffs, std::uint32_t order) {
  const auto& phi = cyclotomic_polynomial(order);
  const std::size_t deg = phi.size() - 1;
  std::vector<__int128> work(coeffs.begin(), coeffs.end());
  for (std::size_t i = work.size(); i-- > deg;) {
    const __int128 c = work[i];
    if (c == 0) continue;
    const std::size_t shift = i - deg;
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) work[shift + j] -= c * phi[j];
    }
    work[i] = 0;
  }
  std::vector<std::int64_t> out(deg, 0);
  for (std::size_t j = 0; j < deg && j < work.size(); ++j) {
    if (work[j] > INT64_MAX || work[j] < INT64_MIN) {
      throw std::overflow_error("cyclotomic reduction overflow");
    }
    out[j] = static_cast<std::int64_t>(work[j]);
  }
  return out;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // x^n - 1 divided by Φ_d for every proper divisor d.
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<std::int64_t> quotient(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      const std::int64_t c = poly[i];
      quotient[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) poly[i - dd + j] -= c * divisor[j];
    }
    poly = std::move(quotient);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (auto p : modp::prime_factors(n)) result = result / p * (p - 1);
  return result;
}

CyclotomicValue CyclotomicValue::integer(std::int64_t v) {
  CyclotomicValue out;
  if (v != 0) out.terms_.push_back({0, v});
  return out;
}

CyclotomicValue CyclotomicValue::root(std::uint32_t order, std::int64_t exp) {
  if (order == 0) throw std::invalid_argument("CyclotomicValue::root: order 0");
  CyclotomicValue out;
  out.order_ = order;
  out.terms_.push_back({mod_exp(exp, order), 1});
  return out;
}

CyclotomicValue CyclotomicValue::from_terms(std::uint32_t order, std::vector<CycloTerm> terms) {
  if (order == 0) throw std::invalid_argument("CyclotomicValue: order 0");
  for (auto& t : terms) t.exp %= order;
  std::sort(terms.begin(), terms.end(), [](const CycloTerm& a, const CycloTerm& b) { return a.exp < b.exp; });
  CyclotomicValue out;
  out.order_ = order;
  for (const auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exp == t.exp) {
      out.terms_.back().coeff += t.coeff;
    } else {
      out.terms_.push_back(t);
    }
  }
  std::erase_if(out.terms_, [](const CycloTerm& t) { return t.coeff == 0; });
  return out;
}

std::int64_t CyclotomicValue::coefficient_sum() const {
  std::int64_t s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

CyclotomicValue CyclotomicValue::galois(std::int64_t t) const {
  std::vector<CycloTerm> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    out.push_back({mod_exp(static_cast<std::int64_t>(term.exp) * t, order_), term.coeff});
  }
  return from_terms(order_, std::move(out));
}

CyclotomicValue CyclotomicValue::times_root(std::int64_t shift) const {
  std::vector<CycloTerm> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    out.push_back({mod_exp(static_cast<std::int64_t>(term.exp) + shift, order_), term.coeff});
  }
  return from_terms(order_, std::move(out));
}

CyclotomicValue CyclotomicValue::lifted(std::uint32_t new_order) const {
  if (new_order % order_ != 0) throw std::invalid_argument("CyclotomicValue::lifted: not a multiple");
  const std::uint32_t scale = new_order / order_;
  std::vector<CycloTerm> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) out.push_back({term.exp * scale, term.coeff});
  return from_terms(new_order, std::move(out));
}

std::vector<std::int64_t> CyclotomicValue::reduced() const {
  std::vector<std::int64_t> dense(order_, 0);
  for (const auto& t : terms_) dense[t.exp] += t.coeff;
  return reduce_dense(dense, order_);
}

std::optional<std::int64_t> CyclotomicValue::as_integer() const {
  const auto r = reduced();
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return r.empty() ? 0 : r[0];
}

bool operator==(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.same_form(b)) return true;
  const auto l = static_cast<std::uint32_t>(modp::lcm(a.order_, b.order_));
  CycloAccumulator acc(l);
  acc.add(a, 1);
  acc.add(b, -1);
  const auto r = acc.reduced();
  return std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; });
}

CyclotomicValue operator+(const CyclotomicValue& a, const CyclotomicValue& b) {
  const auto l = static_cast<std::uint32_t>(modp::lcm(a.order_, b.order_));
  auto la = a.lifted(l);
  const auto lb = b.lifted(l);
  std::vector<CycloTerm> terms = la.terms_;
  terms.insert(terms.end(), lb.terms_.begin(), lb.terms_.end());
  return CyclotomicValue::from_terms(l, std::move(terms));
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
  const auto l = static_cast<std::uint32_t>(modp::lcm(a.order_, b.order_));
  const std::uint32_t sa = l / a.order_, sb = l / b.order_;
  std::vector<CycloTerm> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      terms.push_back({(x.exp * sa + y.exp * sb) % l, x.coeff * y.coeff});
    }
  }
  return CyclotomicValue::from_terms(l, std::move(terms));
}

std::uint64_t CyclotomicValue::evaluate_mod(std::uint64_t prime, std::uint64_t root_l, std::uint32_t l) const {
  if (l % order_ != 0) throw std::invalid_argument("evaluate_mod: order does not divide L");
  const std::uint32_t scale = l / order_;
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    const std::uint64_t z = modp::pow(root_l, static_cast<std::uint64_t>(t.exp) * scale, prime);
    std::int64_t c = t.coeff % static_cast<std::int64_t>(prime);
    if (c < 0) c += static_cast<std::int64_t>(prime);
    acc = modp::add(acc, modp::mul(z, static_cast<std::uint64_t>(c), prime), prime);
  }
  return acc;
}

std::string CyclotomicValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    if (t.exp == 0) {
      os << t.coeff;
    } else {
      if (t.coeff != 1) os << t.coeff << "*";
      os << "z" << order_ << "^" << t.exp;
    }
  }
  return os.str();
}

CycloAccumulator::CycloAccumulator(std::uint32_t order) : order_(order), coeffs_(order, 0) {
  if (order == 0) throw std::invalid_argument("CycloAccumulator: order 0");
}

void CycloAccumulator::add(const CyclotomicValue& v, std::int64_t weight) {
  if (order_ % v.order() != 0) throw std::invalid_argument("CycloAccumulator::add: order mismatch");
  const std::uint32_t scale = order_ / v.order();
  for (const auto& t : v.terms()) coeffs_[t.exp * scale] += weight * t.coeff;
}

void CycloAccumulator::add_product_conj(const CyclotomicValue& a, const CyclotomicValue& b, std::int64_t weight) {
  if (order_ % a.order() != 0 || order_ % b.order() != 0) {
    throw std::invalid_argument("CycloAccumulator::add_product_conj: order mismatch");
  }
  const std::uint32_t sa = order_ / a.order(), sb = order_ / b.order();
  for (const auto& x : a.terms()) {
    const std::uint32_t ex = x.exp * sa;
    for (const auto& y : b.terms()) {
      const std::uint32_t ey = y.exp * sb;
      const std::uint32_t e = ex >= ey ? ex - ey : ex + order_ - ey;
      coeffs_[e] += weight * x.coeff * y.coeff;
    }
  }
}

void CycloAccumulator::add_product(const CyclotomicValue& a, const CyclotomicValue& b, std::int64_t weight) {
  if (order_ % a.order() != 0 || order_ % b.order() != 0) {
    throw std::invalid_argument("CycloAccumulator::add_product: order mismatch");
  }
  const std::uint32_t sa = order_ / a.order(), sb = order_ / b.order();
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) {
      coeffs_[(x.exp * sa + y.exp * sb) % order_] += weight * x.coeff * y.coeff;
    }
  }
}

void CycloAccumulator::add_root(std::int64_t exp, std::int64_t weight) { coeffs_[mod_exp(exp, order_)] += weight; }

std::vector<std::int64_t> CycloAccumulator::reduced() const { return reduce_dense(coeffs_, order_); }

std::optional<std::int64_t> CycloAccumulator::as_integer() const {
  const auto r = reduced();
  for (std::size_t i = 1; i < r.size(); ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return r.empty() ? 0 : r[0];
}

CyclotomicValue CycloAccumulator::value() const {
  std::vector<CycloTerm> terms;
  for (std::uint32_t j = 0; j < order_; ++j) {
    if (coeffs_[j] != 0) terms.push_back({j, coeffs_[j]});
  }
  return CyclotomicValue::from_terms(order_, std::move(terms));
}

}  // namespace distlab
