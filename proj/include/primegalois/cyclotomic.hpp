#ifndef PRIMEGALOIS_CYCLOTOMIC_HPP
#define PRIMEGALOIS_CYCLOTOMIC_HPP

#include "primegalois/intpoly.hpp"

#include <cstdint>
#include <vector>

namespace primegalois {

/// Element of Z[zeta_q] for prime q, written on the power basis
/// 1, zeta, ..., zeta^(q-2); zeta^(q-1) is eliminated through
/// 1 + zeta + ... + zeta^(q-1) = 0.
class CyclotomicElement {
  public:
    /// Zero element of conductor q (q prime, q >= 2: NotPrime otherwise).
    explicit CyclotomicElement(std::uint64_t q);

    static CyclotomicElement zeta_power(std::uint64_t q, std::uint64_t e);
    static CyclotomicElement integer(std::uint64_t q, mpz_class v);

    std::uint64_t conductor() const { return q_; }
    const std::vector<mpz_class>& coords() const { return c_; }

    CyclotomicElement operator+(const CyclotomicElement& o) const; // MixedConductor
    CyclotomicElement operator-(const CyclotomicElement& o) const;
    CyclotomicElement operator*(const CyclotomicElement& o) const;
    CyclotomicElement operator-() const;

    bool operator==(const CyclotomicElement& o) const = default;

    /// zeta -> zeta^t for gcd(t, q) = 1 (NotCoprime otherwise).
    CyclotomicElement galois_apply(std::uint64_t t) const;

    bool is_rational() const;
    /// The value when is_rational(); NonRationalCoefficient otherwise.
    mpz_class rational_value() const;

  private:
    std::uint64_t q_ = 0;
    std::vector<mpz_class> c_;
};

/// Complex conjugation is zeta -> zeta^(q-1).
bool is_real(const CyclotomicElement& a);

/// Gaussian period of length (q-1)/n: sum of zeta^(m^(j n)) over
/// j = 0..(q-1)/n - 1, for m a primitive root mod q and n | q-1.
/// NotPrime / InvalidParameters on bad input.
CyclotomicElement gaussian_period(std::uint64_t q, std::uint64_t n, std::uint64_t m);

/// prod_{j=0}^{n-1} (X - sigma^j(a)) for sigma: zeta -> zeta^t, expanded and
/// checked to have integer coefficients.  NotFixed when sigma^n moves a;
/// NonRationalCoefficient when a coefficient lies outside Z.
IntPoly minimal_polynomial(const CyclotomicElement& a, int n, std::uint64_t t);

} // namespace primegalois

#endif
