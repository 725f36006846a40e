#ifndef PRIMEGALOIS_INTPOLY_HPP
#define PRIMEGALOIS_INTPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace primegalois {

/// Dense univariate polynomial with integer coefficients, stored low to
/// high degree.  Trailing zeros are trimmed on construction so that
/// degree() is always exact; the zero polynomial has degree -1.
class IntPoly {
  public:
    IntPoly() = default;

    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs)
            c_.emplace_back(v);
        trim();
    }

    /// c * x^k
    static IntPoly monomial(int k, mpz_class c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i (zero beyond the degree).
    const mpz_class& coeff(int i) const {
        static const mpz_class zero(0);
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return zero;
        return c_[static_cast<size_t>(i)];
    }

    /// Leading coefficient; zero for the zero polynomial.
    const mpz_class& lc() const { return coeff(degree()); }

    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class operator()(const mpz_class& x) const;
    mpq_class operator()(const mpq_class& x) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& g) const;
    IntPoly operator-(const IntPoly& g) const;
    IntPoly operator*(const IntPoly& g) const;
    IntPoly operator*(const mpz_class& s) const;

    bool operator==(const IntPoly& g) const { return c_ == g.c_; }
    bool operator!=(const IntPoly& g) const { return c_ != g.c_; }

    /// f(x + s)
    IntPoly shifted(const mpz_class& s) const;

    /// x^deg(f) * f(1/x)
    IntPoly reversed() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<mpz_class> c_;
};

IntPoly derivative(const IntPoly& f);

/// Splits f as content * primitive part, with the primitive part's leading
/// coefficient positive.  content(0) = 0.
struct ContentSplit {
    mpz_class content;
    IntPoly primitive;
};
ContentSplit content_primitive(const IntPoly& f);

/// Resultant of f and g via the subresultant pseudo-remainder sequence.
/// Res(f, g) = 0 when either argument is zero and the other has positive
/// degree; Res of two nonzero constants is 1.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f), exact over the rationals
/// (integral whenever f is monic).  Requires deg f >= 1.
mpq_class discriminant(const IntPoly& f);

/// Primitive gcd with positive leading coefficient.
IntPoly gcd_poly(const IntPoly& f, const IntPoly& g);

bool is_perfect_square(const mpz_class& n);
bool is_perfect_square(const mpq_class& q);

/// Human-readable form, highest degree first: "x^5 - 4*x + 2".
std::string to_string(const IntPoly& f);
std::ostream& operator<<(std::ostream& os, const IntPoly& f);

} // namespace primegalois

#endif
