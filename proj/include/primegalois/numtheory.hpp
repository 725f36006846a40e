#ifndef PRIMEGALOIS_NUMTHEORY_HPP
#define PRIMEGALOIS_NUMTHEORY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace primegalois {

/// Deterministic for n < 3.317e24 (fixed Miller-Rabin base set), 64 rounds
/// of random bases above that.
bool is_prime(const mpz_class& n);
bool is_prime(std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Smallest prime q = 1 + (2k-1)n over k = 1, 2, ...; such q satisfy
/// q = 1 (mod n) with (q-1)/n odd.  SearchExhausted past `limit`.
std::uint64_t find_q(std::uint64_t n, std::uint64_t limit = 1000000);

/// Smallest primitive root mod prime q.
std::uint64_t primitive_root(std::uint64_t q);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Primes in increasing order starting from `from` (inclusive).
std::vector<std::uint64_t> primes_from(std::uint64_t from, int count);

} // namespace primegalois

#endif
