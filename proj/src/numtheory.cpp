#include "buffon/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "buffon/error.hpp"

namespace buffon {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw InvalidInput("factorize needs a positive integer");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw InvalidInput("valuation of zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  std::int64_t r;
  if (__builtin_mul_overflow(a / g, b, &r)) throw ResourceLimit("lcm overflows 64 bits");
  return r < 0 ? -r : r;
}

std::int64_t ipow(std::int64_t base, int exponent) {
  if (exponent < 0) throw InvalidInput("negative integer exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i)
    if (__builtin_mul_overflow(r, base, &r)) throw ResourceLimit("integer power overflows 64 bits");
  return r;
}

}  // namespace buffon
