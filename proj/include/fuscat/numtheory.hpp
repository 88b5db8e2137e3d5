#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fuscat {

using BigInt = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Distinct prime divisors of n, ascending. Empty for n <= 1.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// If n = p^k with k >= 1 returns p, otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);

/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

bool divides(std::uint64_t p, const BigInt& n);

std::string to_string(const BigInt& n);
std::string to_string(const Rational& q);

}  // namespace fuscat
