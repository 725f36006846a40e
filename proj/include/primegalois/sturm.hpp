#ifndef PRIMEGALOIS_STURM_HPP
#define PRIMEGALOIS_STURM_HPP

#include "primegalois/intpoly.hpp"

#include <vector>

namespace primegalois {

/// Sturm sequence of f: starts with the primitive parts of f and f', each
/// further entry is the negated remainder of the previous two, scaled by a
/// positive rational to stay integral and primitive.  Ends with the last
/// nonzero entry; that entry is constant iff f is squarefree.
std::vector<IntPoly> sturm_sequence(const IntPoly& f);

/// Sign variations of the sequence evaluated at x (zeros skipped).
int sign_variations(const std::vector<IntPoly>& seq, const mpq_class& x);

/// Variations at -inf/+inf, read off the leading coefficients.
int sign_variations_neg_inf(const std::vector<IntPoly>& seq);
int sign_variations_pos_inf(const std::vector<IntPoly>& seq);

bool is_squarefree(const IntPoly& f);

/// Number of distinct real roots of a squarefree f.
int count_real_roots(const IntPoly& f);

/// Number of real roots in the half-open interval (a, b], a <= b.
int count_real_roots_between(const IntPoly& f, const mpq_class& a, const mpq_class& b);

} // namespace primegalois

#endif
