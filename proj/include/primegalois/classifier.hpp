#ifndef PRIMEGALOIS_CLASSIFIER_HPP
#define PRIMEGALOIS_CLASSIFIER_HPP

#include "primegalois/intpoly.hpp"
#include "primegalois/reduction.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace primegalois {

struct IrreducibilityCertificate {
    enum class Method { eisenstein, mod_prime, assumed };
    Method method = Method::assumed;
    std::uint64_t prime = 0; // Eisenstein or reduction prime
    long shift = 0;          // Eisenstein witness found for f(x + shift)
    std::string text;        // e.g. "eisenstein p=2 shift=0", "irreducible mod 7"
};

/// Proves irreducibility over Q: Eisenstein on f, then reduction mod the
/// first `effort` usable primes, then Eisenstein on f(x+s) for 0 < |s| <=
/// effort.  Uncertified when every route fails; ZeroPolynomial/
/// DegreeTooSmall for degenerate input.
IrreducibilityCertificate certify_irreducible(const IntPoly& f, int effort = 20);

enum class Branch { complex_roots, reduction };

enum class Solvability {
    not_solvable,
    solvable_frobenius,
    solvable_cyclic_or_frobenius,
    undetermined,
};

const char* to_string(Branch b);
const char* to_string(Solvability s);

/// Solvability by root-pattern: an irreducible solvable polynomial of prime
/// degree has all roots real or exactly one.  InconsistentCounts when
/// r + 2k != p.  The group verdict, when known, refines the call.
Solvability solvability_verdict(int p, int r, int k, const std::optional<GroupId>& verdict);

struct ClassifyOptions {
    int prime_budget = 100;
    bool assume_irreducible = false;
    int effort = 20;
    /// Explicit reduction primes (testing hook); empty = ascending stream.
    std::vector<std::uint64_t> primes;
};

struct ClassificationReport {
    std::string input; // printed form of the polynomial
    int degree = 0;
    int real_roots = 0;
    int complex_pairs = 0;
    mpq_class disc;
    bool disc_square = false;
    Branch branch = Branch::reduction;
    GroupId group;                  // picked verdict
    bool exact = false;             // single surviving candidate
    std::vector<GroupId> survivors; // = {group} on the complex-roots branch
    Solvability solvability = Solvability::undetermined;
    std::vector<ReductionSample> evidence; // reduction branch only
    std::string certificate;
};

/// Full pipeline: certify irreducibility, count real roots, take the
/// complex-roots shortcut when k > 0 and p >= 4k + 1 (k odd forces S_p,
/// otherwise the discriminant square test splits A_p from S_p), and fall
/// back to Frobenius sampling against the candidate table otherwise.
ClassificationReport classify(const IntPoly& f, const ClassifyOptions& opt = {});

} // namespace primegalois

#endif
