#include "primegalois/reduction.hpp"

#include "primegalois/errors.hpp"
#include "primegalois/numtheory.hpp"

#include <algorithm>

namespace primegalois {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Polynomial over F_ell, coefficients low to high, trimmed.
struct FpPoly {
    std::vector<u64> c;
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
};

void trim(FpPoly& f) {
    while (!f.c.empty() && f.c.back() == 0)
        f.c.pop_back();
}

u64 inv_mod(u64 a, u64 ell) { return mod_pow(a, ell - 2, ell); }

FpPoly reduce_mod(const IntPoly& f, u64 ell) {
    FpPoly g;
    g.c.reserve(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i)
        g.c.push_back(mpz_fdiv_ui(f.coeff(i).get_mpz_t(), ell));
    trim(g);
    return g;
}

FpPoly make_monic(FpPoly f, u64 ell) {
    if (f.zero() || f.c.back() == 1)
        return f;
    u64 s = inv_mod(f.c.back(), ell);
    for (auto& x : f.c)
        x = static_cast<u64>((u128)x * s % ell);
    return f;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, u64 ell) {
    if (a.zero() || b.zero())
        return {};
    FpPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0)
            continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = static_cast<u64>((r.c[i + j] + (u128)a.c[i] * b.c[j]) % ell);
    }
    trim(r);
    return r;
}

/// Remainder of a by monic m.
FpPoly rem(FpPoly a, const FpPoly& m, u64 ell) {
    int dm = m.deg();
    while (a.deg() >= dm) {
        u64 top = a.c.back();
        int shift = a.deg() - dm;
        if (top != 0)
            for (int j = 0; j < dm; ++j) {
                u64 sub = static_cast<u64>((u128)top * m.c[static_cast<size_t>(j)] % ell);
                u64& tgt = a.c[static_cast<size_t>(shift + j)];
                tgt = (tgt + ell - sub) % ell;
            }
        a.c.pop_back();
        trim(a);
    }
    return a;
}

/// Exact quotient of a by b (both nonzero, b | a), b monic.
FpPoly quot(FpPoly a, const FpPoly& b, u64 ell) {
    FpPoly q;
    q.c.assign(static_cast<size_t>(a.deg() - b.deg() + 1), 0);
    int db = b.deg();
    while (a.deg() >= db) {
        u64 top = a.c.back();
        int shift = a.deg() - db;
        q.c[static_cast<size_t>(shift)] = top;
        for (int j = 0; j <= db; ++j) {
            u64 sub = static_cast<u64>((u128)top * b.c[static_cast<size_t>(j)] % ell);
            u64& tgt = a.c[static_cast<size_t>(shift + j)];
            tgt = (tgt + ell - sub) % ell;
        }
        trim(a);
    }
    trim(q);
    return q;
}

FpPoly gcd(FpPoly a, FpPoly b, u64 ell) {
    while (!b.zero()) {
        b = make_monic(std::move(b), ell);
        FpPoly r = rem(std::move(a), b, ell);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), ell);
}

FpPoly deriv(const FpPoly& f, u64 ell) {
    FpPoly d;
    if (f.deg() < 1)
        return d;
    d.c.reserve(static_cast<size_t>(f.deg()));
    for (int i = 1; i <= f.deg(); ++i)
        d.c.push_back(static_cast<u64>((u128)f.c[static_cast<size_t>(i)] * (i % ell) % ell));
    trim(d);
    return d;
}

FpPoly pow_mod(FpPoly base, u64 e, const FpPoly& m, u64 ell) {
    FpPoly r{{1}};
    base = rem(std::move(base), m, ell);
    while (e) {
        if (e & 1)
            r = rem(mul(r, base, ell), m, ell);
        base = rem(mul(base, base, ell), m, ell);
        e >>= 1;
    }
    return r;
}

} // namespace

CycleType factor_degrees_mod_p(const IntPoly& f, std::uint64_t ell) {
    if (!is_prime(ell))
        fail(errc::invalid_parameters, "modulus " + std::to_string(ell) + " is not prime");
    if (mpz_fdiv_ui(f.lc().get_mpz_t(), ell) == 0)
        fail(errc::leading_coefficient_vanishes,
             "leading coefficient vanishes mod " + std::to_string(ell));

    FpPoly g = make_monic(reduce_mod(f, ell), ell);
    FpPoly d = deriv(g, ell);
    if (d.zero() || gcd(g, d, ell).deg() > 0)
        fail(errc::not_squarefree, "repeated factors mod " + std::to_string(ell));

    // Distinct-degree factorization: x^(ell^d) - x collects every
    // irreducible factor of degree dividing d.
    std::vector<int> parts;
    FpPoly x{{0, 1}};
    FpPoly xq = rem(x, g, ell);
    for (int dd = 1; 2 * dd <= g.deg(); ++dd) {
        xq = pow_mod(std::move(xq), ell, g, ell);
        FpPoly diff = xq;
        // subtract x
        if (diff.c.size() < 2)
            diff.c.resize(2, 0);
        diff.c[1] = (diff.c[1] + ell - 1) % ell;
        trim(diff);
        FpPoly c = gcd(g, diff, ell);
        if (c.deg() > 0) {
            for (int i = 0; i < c.deg() / dd; ++i)
                parts.push_back(dd);
            g = make_monic(quot(std::move(g), c, ell), ell);
            xq = rem(std::move(xq), g, ell);
        }
    }
    if (g.deg() > 0)
        parts.push_back(g.deg());
    return CycleType(std::move(parts));
}

IdentifyResult identify_group(const IntPoly& f, bool disc_square, const IdentifyOptions& opt) {
    const GroupTable& table = group_table(f.degree());

    std::vector<const GroupEntry*> alive;
    for (const auto& e : table.entries)
        if (e.in_alternating == disc_square)
            alive.push_back(&e);

    IdentifyResult res;
    auto apply_sample = [&](u64 ell) -> bool {
        CycleType t;
        try {
            t = factor_degrees_mod_p(f, ell);
        } catch (const Error& err) {
            if (err.code() == errc::leading_coefficient_vanishes ||
                err.code() == errc::not_squarefree)
                return false; // unusable prime, does not count
            throw;
        }
        res.evidence.push_back({ell, t});
        std::vector<const GroupEntry*> next;
        for (const GroupEntry* e : alive)
            if (e->has_type(t))
                next.push_back(e);
        alive = std::move(next);
        if (alive.empty())
            fail(errc::inconsistent_evidence,
                 "no candidate admits factor pattern (" + t.str() + ") at ell = " +
                     std::to_string(ell));
        return true;
    };

    if (!opt.primes.empty()) {
        for (u64 ell : opt.primes)
            apply_sample(ell);
    } else {
        int used = 0;
        u64 ell = 2;
        while (used < opt.prime_budget) {
            if (apply_sample(ell))
                ++used;
            ell = primes_from(ell + 1, 1)[0];
        }
    }

    for (const GroupEntry* e : alive)
        res.survivors.push_back(e->id);
    res.pick = res.survivors.front();
    res.exact = res.survivors.size() == 1;
    return res;
}

} // namespace primegalois
