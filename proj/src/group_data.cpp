#include "primegalois/errors.hpp"
#include "primegalois/group_table.hpp"

#include <map>

namespace primegalois {

// Exceptional (neither C_p/F_{p n} nor A_p/S_p) transitive groups of prime
// degree p exist only for p in {7, 11, 13, 17, 23}; their generators below
// are given as image arrays on {0..p-1}.

namespace {

std::vector<ExceptionalGroup> make_exceptional(int p) {
    switch (p) {
    case 7:
        // Action of PSL(3,2) on the 7 points of the Fano plane.
        return {{"PSL(3,2)",
                 mpz_class(168),
                 {{0, 5, 6, 3, 4, 1, 2}, {3, 0, 4, 1, 5, 2, 6}}}};
    case 11:
        // PSL(2,11) acting on the 11 cosets of an A5 subgroup; M11 natural.
        return {{"PSL(2,11)",
                 mpz_class(660),
                 {{1, 2, 3, 8, 5, 6, 7, 9, 4, 10, 0}, {0, 1, 10, 6, 5, 4, 3, 9, 8, 7, 2}}},
                {"M11",
                 mpz_class(7920),
                 {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 0}, {0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7}}}};
    case 13:
        // PSL(3,3) on the 13 points of PG(2,3).
        return {{"PSL(3,3)",
                 mpz_class(5616),
                 {{0, 7, 8, 9, 4, 5, 6, 10, 12, 11, 1, 3, 2},
                  {4, 0, 5, 6, 1, 7, 10, 2, 8, 12, 3, 9, 11}}}};
    case 17: {
        // PSL(2,16) on the projective line over F_16 (point 16 = infinity),
        // generated by x -> x+1, x -> gx, x -> 1/x; the extensions adjoin
        // field automorphisms x -> x^4 and x -> x^2.
        Perm add1 = {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14, 16};
        Perm mult = {0, 2, 4, 6, 8, 10, 12, 14, 3, 1, 7, 5, 11, 9, 15, 13, 16};
        Perm recip = {16, 1, 9, 14, 13, 11, 7, 6, 15, 2, 12, 5, 10, 4, 3, 8, 0};
        Perm frob2 = {0, 1, 3, 2, 5, 4, 6, 7, 15, 14, 12, 13, 10, 11, 9, 8, 16};
        Perm frob = {0, 1, 4, 5, 3, 2, 7, 6, 12, 13, 8, 9, 15, 14, 11, 10, 16};
        return {{"PSL(2,16)", mpz_class(4080), {add1, mult, recip}},
                {"PSL(2,16):2", mpz_class(8160), {add1, mult, recip, frob2}},
                {"PSL(2,16):4", mpz_class(16320), {add1, mult, recip, frob}}};
    }
    case 23:
        return {{"M23",
                 mpz_class(10200960),
                 {{1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12,
                   13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 0},
                  {0,  1, 16, 12, 3,  5,  8,  17, 2,  6,  11, 22,
                   13, 18, 19, 14, 9,  10, 4,  21, 15, 20, 7}}}};
    default:
        return {};
    }
}

} // namespace

const std::vector<ExceptionalGroup>& exceptional_groups(int p) {
    static std::map<int, std::vector<ExceptionalGroup>> cache;
    auto it = cache.find(p);
    if (it == cache.end())
        it = cache.emplace(p, make_exceptional(p)).first;
    return it->second;
}

} // namespace primegalois
