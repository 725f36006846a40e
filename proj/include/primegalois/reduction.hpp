#ifndef PRIMEGALOIS_REDUCTION_HPP
#define PRIMEGALOIS_REDUCTION_HPP

#include "primegalois/group_table.hpp"
#include "primegalois/intpoly.hpp"
#include "primegalois/permutation.hpp"

#include <cstdint>
#include <vector>

namespace primegalois {

/// Multiset of irreducible factor degrees of f mod ell, i.e. the cycle type
/// of the Frobenius at ell once f is separable there.  Errors:
/// InvalidParameters (ell not prime), LeadingCoefficientVanishes (ell | lc),
/// NotSquarefree (repeated factors mod ell).
CycleType factor_degrees_mod_p(const IntPoly& f, std::uint64_t ell);

struct ReductionSample {
    std::uint64_t ell;
    CycleType type;
};

struct IdentifyOptions {
    int prime_budget = 100;
    /// When nonempty, exactly these primes are tried (unusable ones skipped)
    /// instead of the ascending stream; budget is ignored.
    std::vector<std::uint64_t> primes;
};

struct IdentifyResult {
    GroupId pick;      // smallest-order surviving candidate
    bool exact;        // true when a single candidate survives
    std::vector<GroupId> survivors; // in table order
    std::vector<ReductionSample> evidence;
};

/// Frobenius-sampling identification: filters the degree-p candidate table
/// by the discriminant-square constraint, then eliminates candidates missing
/// an observed factor-degree pattern.  Primes dividing lc(f) or making f
/// inseparable are skipped without counting against the budget.
/// InconsistentEvidence when no candidate survives.
IdentifyResult identify_group(const IntPoly& f, bool disc_square,
                              const IdentifyOptions& opt = {});

} // namespace primegalois

#endif
