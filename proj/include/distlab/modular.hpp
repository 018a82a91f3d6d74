// Arithmetic modulo a word-sized prime, plus the polynomial routines the
// modular character-table construction needs (characteristic polynomial
// roots by equal-degree splitting).
#pragma once

#include <cstdint>
#include <vector>

namespace distlab::modp {

using u64 = std::uint64_t;

inline u64 mul(u64 a, u64 b, u64 m) {
  if (m <= 0xFFFFFFFFULL) return (a * b) % m;
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}
inline u64 add(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}
inline u64 sub(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

u64 pow(u64 base, u64 exp, u64 m);
/// Inverse modulo a prime.
u64 inv(u64 a, u64 m);
/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(u64 n);
/// Distinct prime factors in increasing order.
std::vector<u64> prime_factors(u64 n);
/// Least primitive root of the prime p.
u64 primitive_root(u64 p);
/// Least prime l with l = 1 (mod step) and l > lower.
u64 least_prime_one_mod(u64 step, u64 lower);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);

// Dense polynomials over F_m, coefficient i is the x^i coefficient.
using Poly = std::vector<u64>;

void trim(Poly& f);
Poly poly_mod(Poly a, const Poly& m, u64 p);
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p);
Poly poly_gcd(Poly a, Poly b, u64 p);

/// All roots of f in F_p, assuming f is monic, squarefree and splits
/// completely; returns fewer roots than deg f otherwise.
std::vector<u64> split_roots(const Poly& f, u64 p, u64 seed);

}  // namespace distlab::modp
