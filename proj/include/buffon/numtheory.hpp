#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace buffon {

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t totient(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::int64_t> prime_divisors(std::int64_t n);
bool is_prime(std::int64_t n);

/// Exponent of p in n (n != 0).
int valuation(std::int64_t n, std::int64_t p);

std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

/// Exact integer power; throws ResourceLimit on int64 overflow.
std::int64_t ipow(std::int64_t base, int exponent);

}  // namespace buffon
