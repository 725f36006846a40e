#include "primegalois/sturm.hpp"

#include "primegalois/errors.hpp"

namespace primegalois {

namespace {

/// Divide by the positive content, keeping the sign of the polynomial.
IntPoly positive_primitive(const IntPoly& f) {
    if (f.is_zero())
        return f;
    mpz_class g(0);
    for (const auto& c : f.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    std::vector<mpz_class> v(f.coeffs());
    for (auto& z : v)
        mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

/// Pseudo-remainder scaled so the multiplier on f is positive, i.e. a
/// positive rational multiple of rem(f, g).  Requires deg f >= deg g >= 0.
IntPoly positive_pseudo_rem(const IntPoly& f, const IntPoly& g) {
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
    IntPoly out{std::move(r)};
    // multiplier was lc(g)^(df-dg+1); flip when that is negative
    if (glc < 0 && ((df - dg + 1) & 1))
        return -out;
    return out;
}

int sgn(const mpz_class& z) { return mpz_sgn(z.get_mpz_t()); }
int sgn(const mpq_class& q) { return mpq_sgn(q.get_mpq_t()); }

int count_variations(const std::vector<int>& signs) {
    int var = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++var;
        last = s;
    }
    return var;
}

} // namespace

std::vector<IntPoly> sturm_sequence(const IntPoly& f) {
    if (f.is_zero())
        fail(errc::zero_polynomial, "Sturm sequence of the zero polynomial");
    std::vector<IntPoly> seq;
    seq.push_back(positive_primitive(f));
    if (f.degree() == 0)
        return seq;
    IntPoly d = positive_primitive(derivative(f));
    seq.push_back(d);
    while (seq.back().degree() > 0) {
        const IntPoly& a = seq[seq.size() - 2];
        const IntPoly& b = seq.back();
        IntPoly r = -positive_pseudo_rem(a, b);
        if (r.is_zero())
            break;
        seq.push_back(positive_primitive(r));
    }
    return seq;
}

int sign_variations(const std::vector<IntPoly>& seq, const mpq_class& x) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& s : seq)
        signs.push_back(sgn(s(x)));
    return count_variations(signs);
}

int sign_variations_neg_inf(const std::vector<IntPoly>& seq) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& s : seq) {
        int lead = sgn(s.lc());
        signs.push_back((s.degree() & 1) ? -lead : lead);
    }
    return count_variations(signs);
}

int sign_variations_pos_inf(const std::vector<IntPoly>& seq) {
    std::vector<int> signs;
    signs.reserve(seq.size());
    for (const auto& s : seq)
        signs.push_back(sgn(s.lc()));
    return count_variations(signs);
}

bool is_squarefree(const IntPoly& f) {
    if (f.is_zero())
        return false;
    if (f.degree() == 0)
        return true;
    return gcd_poly(f, derivative(f)).degree() == 0;
}

int count_real_roots(const IntPoly& f) {
    if (f.is_zero())
        fail(errc::zero_polynomial, "root count of the zero polynomial");
    if (f.degree() == 0)
        return 0;
    auto seq = sturm_sequence(f);
    if (seq.back().degree() > 0)
        fail(errc::not_squarefree, "polynomial has repeated roots");
    return sign_variations_neg_inf(seq) - sign_variations_pos_inf(seq);
}

int count_real_roots_between(const IntPoly& f, const mpq_class& a, const mpq_class& b) {
    if (f.is_zero())
        fail(errc::zero_polynomial, "root count of the zero polynomial");
    if (f.degree() == 0)
        return 0;
    if (a > b)
        fail(errc::invalid_parameters, "interval endpoints out of order");
    auto seq = sturm_sequence(f);
    if (seq.back().degree() > 0)
        fail(errc::not_squarefree, "polynomial has repeated roots");
    return sign_variations(seq, a) - sign_variations(seq, b);
}

} // namespace primegalois
