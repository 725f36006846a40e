#ifndef PRIMEGALOIS_GROUP_TABLE_HPP
#define PRIMEGALOIS_GROUP_TABLE_HPP

#include "primegalois/permutation.hpp"

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace primegalois {

enum class GroupKind { cyclic, frobenius, exceptional, alternating, symmetric };

/// Identifies a transitive group of prime degree.  `n` is the Frobenius
/// complement order F_{p n} = C_p : C_n (zero for the other kinds); `label`
/// is the display name: C5, D10, F20, PSL(3,2), M11, A7, S7, ...
struct GroupId {
    GroupKind kind = GroupKind::symmetric;
    int degree = 0;
    int n = 0;
    std::string label;

    bool operator==(const GroupId&) const = default;
};

GroupId cyclic_id(int p);
GroupId frobenius_id(int p, int n); // n = 2 is labeled D(2p)
GroupId alternating_id(int p);
GroupId symmetric_id(int p);

struct GroupEntry {
    GroupId id;
    mpz_class order;
    bool in_alternating = false;
    /// All cycle types of elements, sorted; aligned counts (empty for tables
    /// read back from text form, which does not carry counts).
    std::vector<CycleType> types;
    std::vector<mpz_class> counts;

    bool has_type(const CycleType& t) const;
};

struct GroupTable {
    int degree = 0;
    std::vector<GroupEntry> entries; // ascending by (order, label)

    const GroupEntry* find(const std::string& label) const;
};

/// Degrees with a complete candidate list.
const std::vector<int>& supported_degrees();

/// Cycle-type table of every transitive group of prime degree p, built from
/// scratch: analytic formulas for C_p, F_{p n}, A_p, S_p; stabilizer-chain
/// enumeration for the finitely many exceptional groups.  Cached per degree.
/// UnsupportedDegree for primes outside supported_degrees().
const GroupTable& group_table(int p);

/// Generators for each exceptional transitive group of degree p (used by the
/// table builder and by tests).
struct ExceptionalGroup {
    std::string label;
    mpz_class order;
    std::vector<Perm> gens;
};
const std::vector<ExceptionalGroup>& exceptional_groups(int p);

/// Text form:
///   degree <p>
///   group <label> order <N> in_ap <0|1>
///   type <part> <part> ...
/// with each group's type lines following its group line.
std::string export_table(const GroupTable& t);
GroupTable import_table(const std::string& text); // ParseError on malformed input

} // namespace primegalois

#endif
