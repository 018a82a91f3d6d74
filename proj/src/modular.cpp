#include "distlab/modular.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace distlab::modp {

u64 pow(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul(result, base, m);
    base = mul(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv(u64 a, u64 m) {
  if (a % m == 0) throw std::domain_error("modp::inv: zero has no inverse");
  return pow(a, m - 2, m);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 f : factors) {
      if (pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

u64 least_prime_one_mod(u64 step, u64 lower) {
  u64 k = lower / step + 1;
  for (;; ++k) {
    const u64 candidate = k * step + 1;
    if (candidate > lower && is_prime(candidate)) return candidate;
  }
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, u64 p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  if (a.size() < m.size()) return a;
  const u64 lead_inv = inv(m.back(), p);
  for (std::size_t i = a.size(); i-- > dm;) {
    if (a[i] == 0) continue;
    const u64 c = mul(a[i], lead_inv, p);
    const std::size_t shift = i - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = sub(a[shift + j], mul(c, m[j], p), p);
    }
  }
  a.resize(dm);
  trim(a);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  // Accumulate without reduction while it is safe to do so.
  const bool small = p < (1ULL << 31);
  std::vector<u64> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (small) {
        prod[i + j] += a[i] * b[j];
        if (prod[i + j] >= (1ULL << 63)) prod[i + j] %= p;
      } else {
        prod[i + j] = add(prod[i + j], mul(a[i], b[j], p), p);
      }
    }
  }
  for (auto& c : prod) c %= p;
  return poly_mod(std::move(prod), m, p);
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 li = inv(a.back(), p);
    for (auto& c : a) c = mul(c, li, p);
  }
  return a;
}

namespace {

Poly poly_powmod(Poly base, u64 exp, const Poly& m, u64 p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (exp) {
    if (exp & 1) result = poly_mulmod(result, base, m, p);
    base = poly_mulmod(base, base, m, p);
    exp >>= 1;
  }
  return result;
}

// Quotient of f by a monic divisor g.
Poly poly_divexact(Poly f, const Poly& g, u64 p) {
  const std::size_t dg = g.size() - 1;
  Poly quotient(f.size() - dg, 0);
  for (std::size_t i = f.size(); i-- > dg;) {
    const u64 c = f[i];
    quotient[i - dg] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      f[i - dg + j] = sub(f[i - dg + j], mul(c, g[j], p), p);
    }
  }
  return quotient;
}

void split_into(const Poly& f, u64 p, std::mt19937_64& rng, std::vector<u64>& roots) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return;
  if (deg == 1) {
    // f = f1 x + f0, monic
    roots.push_back(sub(0, f[0], p));
    return;
  }
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const u64 a = dist(rng);
    Poly h = poly_powmod(Poly{a, 1}, (p - 1) / 2, f, p);
    if (h.empty()) h = {0};
    h[0] = sub(h[0], 1, p);
    Poly g = poly_gcd(f, h, p);
    if (g.size() > 1 && g.size() < f.size()) {
      Poly quotient = poly_divexact(f, g, p);
      split_into(g, p, rng, roots);
      split_into(quotient, p, rng, roots);
      return;
    }
  }
  throw std::runtime_error("split_roots: equal-degree splitting did not converge");
}

}  // namespace

std::vector<u64> split_roots(const Poly& f, u64 p, u64 seed) {
  std::mt19937_64 rng(seed);
  // Keep only the part of f that splits into distinct linear factors.
  Poly xp = poly_powmod(Poly{0, 1}, p, f, p);
  xp.resize(std::max<std::size_t>(xp.size(), 2), 0);
  xp[1] = sub(xp[1], 1, p);
  Poly g = poly_gcd(f, xp, p);
  std::vector<u64> roots;
  if (g.size() <= 1) return roots;
  split_into(g, p, rng, roots);
  return roots;
}

}  // namespace distlab::modp
