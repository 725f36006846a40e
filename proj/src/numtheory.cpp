#include "primegalois/numtheory.hpp"

#include "primegalois/errors.hpp"

#include <algorithm>

namespace primegalois {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

bool miller_rabin_u64(u64 n, u64 a) {
    if (a % n == 0)
        return true;
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    u64 x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

// Verified deterministic for n < 3.317e24, which covers u64 with room to spare.
constexpr u64 kMrBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 0)
        fail(errc::invalid_parameters, "modulus must be positive");
    if (mod == 1)
        return 0;
    u64 r = 1;
    base %= mod;
    while (exp) {
        if (exp & 1)
            r = mul_mod(r, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    for (u64 a : kMrBases)
        if (!miller_rabin_u64(n, a))
            return false;
    return true;
}

bool is_prime(const mpz_class& n) {
    if (n < 2)
        return false;
    if (n.fits_ulong_p())
        return is_prime(static_cast<u64>(n.get_ui()));

    static const mpz_class kDetLimit("3317044064679887385961981"); // > 3.317e24
    mpz_class n1 = n - 1, d = n1;
    unsigned long r = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++r;
    }
    auto witness_passes = [&](const mpz_class& a) {
        mpz_class x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n1)
            return true;
        for (unsigned long i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n1)
                return true;
        }
        return false;
    };

    if (n < kDetLimit) {
        for (u64 a : kMrBases) {
            if (n % a == 0)
                return n == a;
            if (!witness_passes(mpz_class(a)))
                return false;
        }
        return true;
    }
    // Probabilistic fallback; fixed seed keeps the result reproducible.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(12345);
    for (int i = 0; i < 64; ++i) {
        mpz_class a = rng.get_z_range(n - 3) + 2;
        if (!witness_passes(a))
            return false;
    }
    return true;
}

std::uint64_t find_q(std::uint64_t n, std::uint64_t limit) {
    if (n < 1)
        fail(errc::invalid_parameters, "find_q needs n >= 1");
    for (u64 k = 1;; ++k) {
        u128 cand = (u128)(2 * k - 1) * n + 1;
        if (cand > limit)
            fail(errc::search_exhausted, "no prime q = 1 (mod n) with (q-1)/n odd up to limit");
        u64 q = static_cast<u64>(cand);
        if (is_prime(q))
            return q;
    }
}

std::uint64_t primitive_root(std::uint64_t q) {
    if (!is_prime(q))
        fail(errc::not_prime, "primitive root needs a prime modulus");
    if (q == 2)
        return 1;
    u64 phi = q - 1;
    // distinct prime factors of q-1
    std::vector<u64> fac;
    u64 m = phi;
    for (u64 p = 2; (u128)p * p <= m; ++p) {
        if (m % p == 0) {
            fac.push_back(p);
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        fac.push_back(m);
    for (u64 g = 2; g < q; ++g) {
        bool ok = true;
        for (u64 p : fac) {
            if (mod_pow(g, phi / p, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok)
            return g;
    }
    fail(errc::not_prime, "no primitive root found"); // unreachable for prime q
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<u64> out;
    for (u64 d = 1; (u128)d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d)
                out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    u64 result = n;
    u64 m = n;
    for (u64 p = 2; (u128)p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0)
                m /= p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

std::vector<std::uint64_t> primes_from(std::uint64_t from, int count) {
    std::vector<u64> out;
    u64 n = std::max<u64>(from, 2);
    while (static_cast<int>(out.size()) < count) {
        if (is_prime(n))
            out.push_back(n);
        ++n;
    }
    return out;
}

} // namespace primegalois
