#include "primegalois/intpoly.hpp"

#include "primegalois/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace primegalois {

const char* errc_name(errc c) noexcept {
    switch (c) {
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::not_squarefree: return "NotSquarefree";
    case errc::search_exhausted: return "SearchExhausted";
    case errc::not_prime: return "NotPrime";
    case errc::mixed_conductor: return "MixedConductor";
    case errc::not_coprime: return "NotCoprime";
    case errc::invalid_parameters: return "InvalidParameters";
    case errc::not_fixed: return "NotFixed";
    case errc::non_rational_coefficient: return "NonRationalCoefficient";
    case errc::leading_coefficient_vanishes: return "LeadingCoefficientVanishes";
    case errc::unsupported_degree: return "UnsupportedDegree";
    case errc::inconsistent_evidence: return "InconsistentEvidence";
    case errc::non_prime_degree: return "NonPrimeDegree";
    case errc::uncertified: return "Uncertified";
    case errc::inconsistent_counts: return "InconsistentCounts";
    case errc::verification_failed: return "VerificationFailed";
    case errc::parse_error: return "ParseError";
    case errc::non_univariate: return "NonUnivariate";
    }
    return "UnknownError";
}

IntPoly IntPoly::monomial(int k, mpz_class c) {
    if (k < 0 || c == 0)
        return IntPoly();
    std::vector<mpz_class> v(static_cast<size_t>(k) + 1, mpz_class(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
    mpz_class acc(0);
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * x + c_[i];
    return acc;
}

mpq_class IntPoly::operator()(const mpq_class& x) const {
    mpq_class acc(0);
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> v(c_);
    for (auto& z : v)
        z = -z;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator+(const IntPoly& g) const {
    std::vector<mpz_class> v(std::max(c_.size(), g.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i)
        v[i] += g.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& g) const {
    std::vector<mpz_class> v(std::max(c_.size(), g.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        v[i] = c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i)
        v[i] -= g.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& g) const {
    if (is_zero() || g.is_zero())
        return IntPoly();
    std::vector<mpz_class> v(c_.size() + g.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < g.c_.size(); ++j)
            v[i + j] += c_[i] * g.c_[j];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const mpz_class& s) const {
    std::vector<mpz_class> v(c_);
    for (auto& z : v)
        z *= s;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(const mpz_class& s) const {
    // Horner with f read highest coefficient first, x replaced by (x + s).
    IntPoly xs(std::vector<mpz_class>{s, 1});
    IntPoly acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * xs;
        acc = acc + IntPoly(std::vector<mpz_class>{c_[i]});
    }
    return acc;
}

IntPoly IntPoly::reversed() const {
    std::vector<mpz_class> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

IntPoly derivative(const IntPoly& f) {
    if (f.degree() < 1)
        return IntPoly();
    std::vector<mpz_class> v;
    v.reserve(static_cast<size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i)
        v.push_back(f.coeff(i) * i);
    return IntPoly(std::move(v));
}

ContentSplit content_primitive(const IntPoly& f) {
    if (f.is_zero())
        return {mpz_class(0), IntPoly()};
    mpz_class g(0);
    for (const auto& c : f.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (f.lc() < 0)
        g = -g;
    std::vector<mpz_class> v(f.coeffs());
    for (auto& z : v)
        mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return {g, IntPoly(std::move(v))};
}

namespace {

mpz_class zpow(const mpz_class& b, int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

mpz_class zdivexact(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// prem(f, g): remainder of lc(g)^(deg f - deg g + 1) * f divided by g,
/// integral by construction.  Requires deg f >= deg g >= 0.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    int df = f.degree(), dg = g.degree();
    std::vector<mpz_class> r(f.coeffs());
    const mpz_class& glc = g.lc();
    for (int k = df; k >= dg; --k) {
        mpz_class top = r[static_cast<size_t>(k)];
        for (auto& z : r)
            z *= glc;
        if (top != 0)
            for (int j = 0; j < dg; ++j)
                r[static_cast<size_t>(k - dg + j)] -= top * g.coeff(j);
        r[static_cast<size_t>(k)] = 0;
    }
    r.resize(static_cast<size_t>(dg));
    return IntPoly(std::move(r));
}

IntPoly poly_divexact(const IntPoly& f, const mpz_class& d) {
    std::vector<mpz_class> v(f.coeffs());
    for (auto& z : v)
        mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), d.get_mpz_t());
    return IntPoly(std::move(v));
}

} // namespace

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero())
        return 0;
    if (f.degree() == 0 && g.degree() == 0)
        return 1;
    if (f.degree() == 0)
        return zpow(f.lc(), g.degree());
    if (g.degree() == 0)
        return zpow(g.lc(), f.degree());

    // Subresultant pseudo-remainder sequence; s tracks the sign flips from
    // Res(A,B) = (-1)^(deg A * deg B) Res(B,A) along the swaps.
    IntPoly A = f, B = g;
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() & 1) && (B.degree() & 1))
            s = -s;
        std::swap(A, B);
    }
    ContentSplit ca = content_primitive(A), cb = content_primitive(B);
    // content carries the sign of lc, so t absorbs both scalings exactly
    mpz_class t = zpow(ca.content, B.degree()) * zpow(cb.content, A.degree());
    A = ca.primitive;
    B = cb.primitive;

    mpz_class gg(1), hh(1);
    while (true) {
        int da = A.degree(), db = B.degree();
        int delta = da - db;
        if ((da & 1) && (db & 1))
            s = -s;
        IntPoly R = pseudo_rem(A, B);
        A = B;
        if (R.is_zero())
            return 0; // positive-degree common factor
        B = poly_divexact(R, gg * zpow(hh, delta));
        gg = A.lc();
        if (delta > 0)
            hh = zdivexact(zpow(gg, delta), zpow(hh, delta - 1));
        if (B.degree() <= 0)
            break;
    }
    int da = A.degree(); // >= 1
    mpz_class h2 = zdivexact(zpow(B.lc(), da), zpow(hh, da - 1));
    return s * t * h2;
}

mpq_class discriminant(const IntPoly& f) {
    if (f.is_zero())
        fail(errc::zero_polynomial, "discriminant of the zero polynomial");
    int d = f.degree();
    if (d < 1)
        fail(errc::degree_too_small, "discriminant requires degree >= 1");
    mpz_class res = resultant(f, derivative(f));
    int sign = ((static_cast<long>(d) * (d - 1) / 2) % 2 == 0) ? 1 : -1;
    mpq_class out(res * sign, f.lc());
    out.canonicalize();
    return out;
}

IntPoly gcd_poly(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero())
        return content_primitive(g).primitive;
    if (g.is_zero())
        return content_primitive(f).primitive;
    IntPoly a = content_primitive(f).primitive;
    IntPoly b = content_primitive(g).primitive;
    if (a.degree() < b.degree())
        std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = b;
        b = content_primitive(r).primitive;
        if (a.degree() < b.degree())
            std::swap(a, b);
    }
    return content_primitive(a).primitive;
}

bool is_perfect_square(const mpz_class& n) {
    if (n < 0)
        return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_perfect_square(const mpq_class& q) {
    return is_perfect_square(mpz_class(q.get_num())) && is_perfect_square(mpz_class(q.get_den()));
}

std::string to_string(const IntPoly& f) {
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const mpz_class& c = f.coeff(i);
        if (c == 0)
            continue;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1)
                os << a.get_str() << "*";
            os << "x";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << to_string(f); }

} // namespace primegalois
