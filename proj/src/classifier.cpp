#include "primegalois/classifier.hpp"

#include "primegalois/errors.hpp"
#include "primegalois/numtheory.hpp"
#include "primegalois/sturm.hpp"

#include <sstream>

namespace primegalois {

namespace {

/// Small prime factors of |n| by trial division (plus the cofactor when it
/// is itself prime).  Enough for Eisenstein candidates.
std::vector<mpz_class> small_prime_factors(mpz_class n) {
    std::vector<mpz_class> out;
    n = abs(n);
    if (n <= 1)
        return out;
    for (std::uint64_t p = 2; p <= 100000 && mpz_class(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        if (n % p == 0) {
            out.emplace_back(p);
            while (n % p == 0)
                n /= p;
        }
    }
    if (n > 1) {
        if (n < 100000 || is_prime(n))
            out.push_back(n);
    }
    return out;
}

bool eisenstein_witness(const IntPoly& f, mpz_class& prime_out) {
    int d = f.degree();
    mpz_class g(0);
    for (int i = 0; i < d; ++i)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.coeff(i).get_mpz_t());
    if (g <= 1)
        return false;
    for (const mpz_class& p : small_prime_factors(g)) {
        if (f.lc() % p == 0)
            continue;
        if (f.coeff(0) % (p * p) != 0) {
            prime_out = p;
            return true;
        }
    }
    return false;
}

} // namespace

IrreducibilityCertificate certify_irreducible(const IntPoly& f, int effort) {
    if (f.is_zero())
        fail(errc::zero_polynomial, "cannot certify the zero polynomial");
    if (f.degree() < 1)
        fail(errc::degree_too_small, "constants are not irreducible");
    if (effort < 1)
        fail(errc::invalid_parameters, "effort must be positive");
    if (f.degree() >= 2 && gcd_poly(f, derivative(f)).degree() > 0)
        fail(errc::uncertified, "repeated factor: " + to_string(f) + " is reducible");

    IrreducibilityCertificate cert;
    mpz_class p;
    if (eisenstein_witness(f, p)) {
        cert.method = IrreducibilityCertificate::Method::eisenstein;
        cert.prime = p.get_ui();
        cert.shift = 0;
        cert.text = "eisenstein p=" + p.get_str() + " shift=0";
        return cert;
    }

    // Reduction mod ell: irreducible there forces irreducible over Q.
    int used = 0;
    std::uint64_t ell = 2;
    while (used < effort) {
        bool usable = true;
        CycleType t;
        try {
            t = factor_degrees_mod_p(f, ell);
        } catch (const Error& err) {
            if (err.code() != errc::leading_coefficient_vanishes &&
                err.code() != errc::not_squarefree)
                throw;
            usable = false;
        }
        if (usable) {
            ++used;
            if (t.parts.size() == 1) {
                cert.method = IrreducibilityCertificate::Method::mod_prime;
                cert.prime = ell;
                cert.text = "irreducible mod " + std::to_string(ell);
                return cert;
            }
        }
        ell = primes_from(ell + 1, 1)[0];
    }

    for (long s = 1; s <= effort; ++s) {
        for (long sign : {1L, -1L}) {
            IntPoly g = f.shifted(mpz_class(sign * s));
            if (eisenstein_witness(g, p)) {
                cert.method = IrreducibilityCertificate::Method::eisenstein;
                cert.prime = p.get_ui();
                cert.shift = sign * s;
                cert.text =
                    "eisenstein p=" + p.get_str() + " shift=" + std::to_string(sign * s);
                return cert;
            }
        }
    }
    fail(errc::uncertified, "no irreducibility certificate found for " + to_string(f));
}

const char* to_string(Branch b) {
    switch (b) {
    case Branch::complex_roots: return "complex_roots";
    case Branch::reduction: return "reduction";
    }
    return "?";
}

const char* to_string(Solvability s) {
    switch (s) {
    case Solvability::not_solvable: return "not_solvable";
    case Solvability::solvable_frobenius: return "solvable_frobenius";
    case Solvability::solvable_cyclic_or_frobenius: return "solvable_cyclic_or_frobenius";
    case Solvability::undetermined: return "undetermined";
    }
    return "?";
}

Solvability solvability_verdict(int p, int r, int k,
                                const std::optional<GroupId>& verdict) {
    if (r + 2 * k != p || r < 0 || k < 0)
        fail(errc::inconsistent_counts,
             "root counts r=" + std::to_string(r) + ", k=" + std::to_string(k) +
                 " do not fit degree " + std::to_string(p));
    // Solvable of prime degree means all roots real or exactly one.
    if (k > 0 && r > 1)
        return Solvability::not_solvable;
    if (!verdict)
        return Solvability::undetermined;
    bool solvable_kind =
        verdict->kind == GroupKind::cyclic || verdict->kind == GroupKind::frobenius;
    if (!solvable_kind)
        return Solvability::not_solvable;
    if (k > 0)
        return Solvability::solvable_frobenius;
    return Solvability::solvable_cyclic_or_frobenius;
}

ClassificationReport classify(const IntPoly& f, const ClassifyOptions& opt) {
    ClassificationReport rep;
    rep.input = to_string(f);

    int p = f.degree();
    if (p < 1)
        fail(errc::degree_too_small, "degree must be at least 1");
    mpz_class pz(p);
    if (!is_prime(pz))
        fail(errc::non_prime_degree, "degree " + std::to_string(p) + " is not prime");
    if (p < 5)
        fail(errc::unsupported_degree, "classification needs degree >= 5");
    rep.degree = p;

    if (opt.assume_irreducible) {
        rep.certificate = "assumed";
    } else {
        rep.certificate = certify_irreducible(f, opt.effort).text;
    }

    rep.real_roots = count_real_roots(f);
    rep.complex_pairs = (p - rep.real_roots) / 2;
    rep.disc = discriminant(f);
    rep.disc_square = is_perfect_square(rep.disc);

    int k = rep.complex_pairs;
    if (k > 0 && p >= 4 * k + 1) {
        rep.branch = Branch::complex_roots;
        if (k % 2 == 1)
            rep.group = symmetric_id(p);
        else
            rep.group = rep.disc_square ? alternating_id(p) : symmetric_id(p);
        rep.exact = true;
        rep.survivors = {rep.group};
    } else {
        rep.branch = Branch::reduction;
        IdentifyOptions io;
        io.prime_budget = opt.prime_budget;
        io.primes = opt.primes;
        IdentifyResult idr = identify_group(f, rep.disc_square, io);
        rep.group = idr.pick;
        rep.exact = idr.exact;
        rep.survivors = std::move(idr.survivors);
        rep.evidence = std::move(idr.evidence);
    }
    rep.solvability = solvability_verdict(p, rep.real_roots, k, rep.group);
    return rep;
}

} // namespace primegalois
