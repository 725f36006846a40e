#ifndef PRIMEGALOIS_PERMUTATION_HPP
#define PRIMEGALOIS_PERMUTATION_HPP

#include <gmpxx.h>

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace primegalois {

/// Permutation of {0, ..., n-1} as an image array: p[i] is where i goes.
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_identity(const Perm& p);

/// Apply a first, then b: result[i] = b[a[i]].
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);

/// Partition of n by cycle lengths, parts descending.
struct CycleType {
    std::vector<int> parts;

    CycleType() = default;
    explicit CycleType(std::vector<int> p);

    int sum() const;
    /// Parity of any permutation with this type: even iff sum - #parts is even.
    bool even() const;
    /// Space-separated parts, e.g. "4 1".
    std::string str() const;

    bool operator==(const CycleType&) const = default;
    auto operator<=>(const CycleType&) const = default;
};

CycleType cycle_type(const Perm& p);

/// Stabilizer chain (Schreier-Sims).  Supports exact order computation,
/// membership tests, and full element enumeration without storing elements.
class StabChain {
  public:
    static StabChain build(const std::vector<Perm>& gens, int n);

    int degree() const { return n_; }
    mpz_class order() const;
    bool contains(const Perm& g) const;

    /// Visits every group element exactly once.
    void for_each_element(const std::function<void(const Perm&)>& fn) const;

  private:
    struct Level {
        int beta = 0;
        std::vector<Perm> gens;
        std::vector<int> orbit;           // BFS order, orbit[0] == beta
        std::vector<Perm> trans_by_point; // point -> coset rep (empty if outside orbit)
    };

    void add_generator(size_t lvl, Perm g);
    /// All generators installed at levels >= lvl; they fix the base prefix
    /// before lvl, so together they generate that level's stabilizer.
    std::vector<Perm> gens_from(size_t lvl) const;
    void rebuild_orbit(size_t lvl);
    /// Strips g through levels >= lvl; returns the residue and the level it
    /// stopped at (residue is identity iff g was already in the subgroup).
    std::pair<Perm, size_t> sift_from(size_t lvl, Perm g) const;
    /// True if every Schreier generator at lvl sifts to the identity; on the
    /// first failure, installs the residue as a deeper generator and returns
    /// false so the caller can restart the scan.
    bool close_level(size_t lvl);

    int n_ = 0;
    std::vector<Level> levels_;
};

} // namespace primegalois

#endif
