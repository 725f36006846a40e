#ifndef PRIMEGALOIS_REALIZE_HPP
#define PRIMEGALOIS_REALIZE_HPP

#include "primegalois/classifier.hpp"
#include "primegalois/cyclotomic.hpp"
#include "primegalois/intpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace primegalois {

enum class EmbeddingStatus { complete, base_step_only };

/// Gaussian-period data behind a cyclic construction.
struct PeriodConstruction {
    std::uint64_t q = 0;
    std::uint64_t m = 0; // primitive root mod q used for the period
    std::uint64_t n = 0;
    CyclotomicElement alpha;
};

/// Radical data behind a full Frobenius construction x^p - a.
struct PowerConstruction {
    int p = 0;
    mpz_class a;
};

enum class TargetKind { cyclic, frobenius };

struct RealizationResult {
    TargetKind kind = TargetKind::cyclic;
    int target_p = 0; // Frobenius kernel degree (frobenius targets)
    int target_n = 0; // cyclic degree / Frobenius complement order
    std::string target; // display label: "C6", "F20", "D14", ...
    IntPoly polynomial;
    EmbeddingStatus embedding = EmbeddingStatus::complete;
    std::string note; // set when embedding == base_step_only
    std::optional<PeriodConstruction> period;
    std::optional<PowerConstruction> power;
    std::optional<ClassificationReport> verification;
};

/// Degree-n cyclic extension of Q that is not totally real, realized by the
/// minimal polynomial of a Gaussian period in Q(zeta_q) for the smallest
/// prime q = 1 (mod n) with (q-1)/n odd.  Requires n >= 2 even
/// (InvalidParameters); SearchExhausted if no q is found below the limit.
RealizationResult realize_cyclic_nonreal(int n, std::uint64_t q_limit = 1000000);

/// F_{p n} for even n | p-1.  For n = p-1 the construction is complete:
/// x^p - 2 has Galois group F_{p(p-1)}, checked with the classifier
/// (VerificationFailed if it disagrees).  For n < p-1 only the degree-n
/// cyclic base step is constructed and the result says so.
RealizationResult realize_frobenius(int p, int n);

/// realize_frobenius(p, p-1).
RealizationResult realize_full_frobenius(int p);

struct ConsistencyReport {
    bool pass = true;
    std::vector<std::pair<std::string, bool>> checks;
};

/// Re-derives every claim in the result from its polynomial: root counts by
/// Sturm, solvability pattern, period minimality and replay for cyclic
/// constructions.  Trusts nothing the result asserts about itself.
ConsistencyReport realization_consistency_check(const RealizationResult& r);

} // namespace primegalois

#endif
