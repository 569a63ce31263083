#pragma once

// Exact integer helpers: primality, factorization, prime sets and
// primitive prime divisors. Everything stays inside 64-bit arithmetic;
// products are formed in unsigned __int128.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "cdgraph/error.hpp"

namespace cdg {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace nt {

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Deterministic Miller-Rabin; the first twelve primes as witnesses are
// sufficient for every n < 2^64.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (u64 a : kWitnesses) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

// Brent's variant of Pollard rho with a deterministic sequence of
// increments. Returns a non-trivial factor of the odd composite n.
inline u64 rho_factor(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      }
      r <<= 1U;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  u64 d = rho_factor(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace detail

// Prime factorization as ascending (prime, exponent) pairs.
inline std::vector<std::pair<u64, int>> factorize(u64 n) {
  if (n == 0) throw InvalidArgument("factorize: n must be positive");
  std::vector<u64> primes;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  detail::factor_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<u64, int>> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

// Largest power of the prime p dividing n.
inline u64 p_part(u64 n, u64 p) {
  if (n == 0) throw InvalidArgument("p_part: n must be positive");
  u64 part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

inline u64 checked_mul(u64 a, u64 b) {
  u128 r = static_cast<u128>(a) * b;
  if (r >> 64U) throw InvalidArgument("integer overflow in 64-bit product");
  return static_cast<u64>(r);
}

inline u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

inline u64 lcm(u64 a, u64 b) { return checked_mul(a / std::gcd(a, b), b); }

}  // namespace nt

// Sorted set of distinct primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<u64> primes) : PrimeSet(std::vector<u64>(primes)) {}

  explicit PrimeSet(std::vector<u64> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    for (u64 p : primes_) {
      if (!nt::is_prime(p)) throw InvalidArgument("PrimeSet: " + std::to_string(p) + " is not prime");
    }
  }

  const std::vector<u64>& values() const noexcept { return primes_; }
  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }
  bool contains(u64 p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

  bool is_subset_of(const PrimeSet& other) const {
    return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
  }

  PrimeSet operator|(const PrimeSet& other) const {
    std::vector<u64> out;
    std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                   std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  PrimeSet operator-(const PrimeSet& other) const {
    std::vector<u64> out;
    std::set_difference(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  PrimeSet operator&(const PrimeSet& other) const {
    std::vector<u64> out;
    std::set_intersection(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

  friend std::ostream& operator<<(std::ostream& os, const PrimeSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.primes_.size(); ++i) os << (i ? "," : "") << s.primes_[i];
    return os << '}';
  }

 private:
  static PrimeSet from_sorted(std::vector<u64> sorted) {
    PrimeSet s;
    s.primes_ = std::move(sorted);
    return s;
  }

  std::vector<u64> primes_;
};

// pi(n): the distinct primes dividing n.
inline PrimeSet prime_set(u64 n) {
  if (n == 0) throw InvalidArgument("prime_set: n must be positive");
  std::vector<u64> out;
  for (auto [p, e] : nt::factorize(n)) out.push_back(p);
  return PrimeSet(std::move(out));
}

struct PrimePower {
  u64 prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline std::optional<PrimePower> is_prime_power(u64 n) {
  if (n < 2) throw InvalidArgument("is_prime_power: n must be at least 2");
  auto f = nt::factorize(n);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f.front().first, f.front().second};
}

namespace nt {

// Integer coefficients (lowest degree first) of the d-th cyclotomic
// polynomial, by exact division of x^d - 1 by Phi_e for all proper e | d.
inline std::vector<std::int64_t> cyclotomic_polynomial(unsigned d) {
  if (d == 0) throw InvalidArgument("cyclotomic_polynomial: d must be positive");
  std::vector<std::int64_t> num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  for (unsigned e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto den = cyclotomic_polynomial(e);
    // Divide num by the monic den.
    const int top = static_cast<int>(num.size()) - 1;
    const int den_deg = static_cast<int>(den.size()) - 1;
    std::vector<std::int64_t> quot(static_cast<std::size_t>(top - den_deg + 1), 0);
    for (int i = top; i >= den_deg; --i) {
      const std::int64_t c = num[static_cast<std::size_t>(i)];
      quot[static_cast<std::size_t>(i - den_deg)] = c;
      for (int j = 0; j <= den_deg; ++j) {
        num[static_cast<std::size_t>(i - den_deg + j)] -= c * den[static_cast<std::size_t>(j)];
      }
    }
    num = std::move(quot);
  }
  return num;
}

// Phi_d(m), which must fit in 64 bits.
inline u64 cyclotomic_value(unsigned d, u64 m) {
  auto coeffs = cyclotomic_polynomial(d);
  __int128 acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * static_cast<__int128>(m) + coeffs[i];
    if (acc > static_cast<__int128>(UINT64_MAX) || acc < -static_cast<__int128>(UINT64_MAX)) {
      throw InvalidArgument("cyclotomic value exceeds 64 bits");
    }
  }
  if (acc <= 0) throw InternalError("cyclotomic value must be positive for m >= 2");
  return static_cast<u64>(acc);
}

}  // namespace nt

// All primes q dividing m^n - 1 such that q does not divide m^b - 1 for
// 1 <= b < n. m^n - 1 is factored completely through its cyclotomic
// factors Phi_d(m), d | n, so values beyond 2^64 are still handled.
inline PrimeSet primitive_prime_divisors(u64 m, unsigned n) {
  if (m < 2 || n < 2) throw InvalidArgument("primitive_prime_divisors: need m >= 2 and n >= 2");
  std::vector<u64> candidates;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    for (u64 q : prime_set(nt::cyclotomic_value(d, m))) candidates.push_back(q);
  }
  std::vector<u64> out;
  for (u64 q : PrimeSet(std::move(candidates))) {
    if (m % q == 0) continue;
    bool primitive = nt::pow_mod(m, n, q) == 1;
    for (unsigned b = 1; primitive && b < n; ++b) {
      if (nt::pow_mod(m, b, q) == 1) primitive = false;
    }
    if (primitive) out.push_back(q);
  }
  return PrimeSet(std::move(out));
}

}  // namespace cdg
