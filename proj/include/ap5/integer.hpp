#pragma once

// Exact integer helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ap5 {

using Int = mpz_class;
using Rat = mpq_class;

/// Deterministic Miller-Rabin for 64-bit inputs.
[[nodiscard]] bool is_prime_u64(std::uint64_t n);

/// Primality for arbitrary integers (BPSW through GMP; exact below 2^64).
[[nodiscard]] bool is_prime(const Int& n);

/// All primes p with lo <= p <= hi.
[[nodiscard]] std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

/// The y with y^n == v, if one exists. Odd n admits negative v.
[[nodiscard]] std::optional<Int> exact_root(const Int& v, unsigned long n);

/// Distinct prime divisors of |n| in increasing order. n must be nonzero.
[[nodiscard]] std::vector<Int> prime_divisors(const Int& n);

[[nodiscard]] Int ipow(const Int& base, unsigned long e);

[[nodiscard]] std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
[[nodiscard]] std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Convert to int64, throwing if the value does not fit.
[[nodiscard]] std::int64_t to_i64(const Int& v);

[[nodiscard]] std::string to_string(const Int& v);
[[nodiscard]] std::string to_string(const Rat& v);

}  // namespace ap5
