#include "primegalois/cyclotomic.hpp"

#include "primegalois/errors.hpp"
#include "primegalois/numtheory.hpp"

namespace primegalois {

namespace {

void check_same(const CyclotomicElement& a, const CyclotomicElement& b) {
    if (a.conductor() != b.conductor())
        fail(errc::mixed_conductor, "operands live in different cyclotomic fields");
}

} // namespace

CyclotomicElement::CyclotomicElement(std::uint64_t q) : q_(q) {
    if (!is_prime(q))
        fail(errc::not_prime, "conductor " + std::to_string(q) + " is not prime");
    c_.assign(q - 1, mpz_class(0));
}

CyclotomicElement CyclotomicElement::zeta_power(std::uint64_t q, std::uint64_t e) {
    CyclotomicElement a(q);
    e %= q;
    if (e == q - 1) {
        // zeta^(q-1) = -(1 + zeta + ... + zeta^(q-2))
        for (auto& z : a.c_)
            z = -1;
    } else {
        a.c_[e] = 1;
    }
    return a;
}

CyclotomicElement CyclotomicElement::integer(std::uint64_t q, mpz_class v) {
    CyclotomicElement a(q);
    a.c_[0] = std::move(v);
    return a;
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement& o) const {
    check_same(*this, o);
    CyclotomicElement r(*this);
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i] += o.c_[i];
    return r;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement& o) const {
    check_same(*this, o);
    CyclotomicElement r(*this);
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i] -= o.c_[i];
    return r;
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement r(*this);
    for (auto& z : r.c_)
        z = -z;
    return r;
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement& o) const {
    check_same(*this, o);
    // accumulate with exponents mod q, then eliminate zeta^(q-1)
    std::vector<mpz_class> acc(q_, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            acc[(i + j) % q_] += c_[i] * o.c_[j];
    }
    CyclotomicElement r(q_);
    const mpz_class& top = acc[q_ - 1];
    for (size_t i = 0; i + 1 < q_; ++i)
        r.c_[i] = acc[i] - top;
    return r;
}

CyclotomicElement CyclotomicElement::galois_apply(std::uint64_t t) const {
    t %= q_;
    if (gcd_u64(t, q_) != 1)
        fail(errc::not_coprime, "automorphism exponent shares a factor with the conductor");
    std::vector<mpz_class> acc(q_, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        acc[static_cast<size_t>(i * t % q_)] += c_[i];
    CyclotomicElement r(q_);
    const mpz_class& top = acc[q_ - 1];
    for (size_t i = 0; i + 1 < q_; ++i)
        r.c_[i] = acc[i] - top;
    return r;
}

bool CyclotomicElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

mpz_class CyclotomicElement::rational_value() const {
    if (!is_rational())
        fail(errc::non_rational_coefficient, "element is not rational");
    return c_[0];
}

bool is_real(const CyclotomicElement& a) { return a == a.galois_apply(a.conductor() - 1); }

CyclotomicElement gaussian_period(std::uint64_t q, std::uint64_t n, std::uint64_t m) {
    if (!is_prime(q))
        fail(errc::not_prime, "conductor " + std::to_string(q) + " is not prime");
    if (n < 1 || (q - 1) % n != 0)
        fail(errc::invalid_parameters, "period length must divide q - 1");
    if (m % q == 0)
        fail(errc::invalid_parameters, "m must be a primitive root mod q");
    for (std::uint64_t d : divisors(q - 1)) // order of m must be exactly q-1
        if (d < q - 1 && mod_pow(m % q, d, q) == 1)
            fail(errc::invalid_parameters, "m must be a primitive root mod q");

    std::uint64_t f = (q - 1) / n;
    std::uint64_t step = mod_pow(m % q, n, q);
    CyclotomicElement sum(q);
    std::uint64_t e = 1;
    for (std::uint64_t j = 0; j < f; ++j) {
        sum = sum + CyclotomicElement::zeta_power(q, e);
        e = static_cast<std::uint64_t>((unsigned __int128)e * step % q);
    }
    return sum;
}

IntPoly minimal_polynomial(const CyclotomicElement& a, int n, std::uint64_t t) {
    if (n < 1)
        fail(errc::invalid_parameters, "degree must be positive");
    std::uint64_t q = a.conductor();
    t %= q;
    if (gcd_u64(t, q) != 1)
        fail(errc::not_coprime, "automorphism exponent shares a factor with the conductor");

    // conjugates a, sigma(a), ..., sigma^(n-1)(a); sigma^n must fix a
    std::vector<CyclotomicElement> conj;
    conj.reserve(static_cast<size_t>(n));
    CyclotomicElement cur = a;
    for (int j = 0; j < n; ++j) {
        conj.push_back(cur);
        cur = cur.galois_apply(t);
    }
    if (!(cur == a))
        fail(errc::not_fixed, "element is not fixed by sigma^n");

    // expand prod (X - conj_j) with coefficients in Z[zeta_q]
    std::vector<CyclotomicElement> poly;
    poly.push_back(CyclotomicElement::integer(q, 1));
    for (const auto& c : conj) {
        std::vector<CyclotomicElement> next(poly.size() + 1, CyclotomicElement(q));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];       // X * poly
            next[i] = next[i] - poly[i] * c;           // -c * poly
        }
        poly = std::move(next);
    }

    std::vector<mpz_class> coeffs;
    coeffs.reserve(poly.size());
    for (const auto& ce : poly) {
        if (!ce.is_rational())
            fail(errc::non_rational_coefficient,
                 "expanded coefficient does not descend to the rationals");
        coeffs.push_back(ce.rational_value());
    }
    return IntPoly(std::move(coeffs));
}

} // namespace primegalois
