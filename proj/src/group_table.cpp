#include "primegalois/group_table.hpp"

#include "primegalois/errors.hpp"
#include "primegalois/numtheory.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace primegalois {

GroupId cyclic_id(int p) { return {GroupKind::cyclic, p, 0, "C" + std::to_string(p)}; }

GroupId frobenius_id(int p, int n) {
    std::string label =
        (n == 2) ? "D" + std::to_string(2 * p) : "F" + std::to_string(p * n);
    return {GroupKind::frobenius, p, n, label};
}

GroupId alternating_id(int p) { return {GroupKind::alternating, p, 0, "A" + std::to_string(p)}; }

GroupId symmetric_id(int p) { return {GroupKind::symmetric, p, 0, "S" + std::to_string(p)}; }

bool GroupEntry::has_type(const CycleType& t) const {
    return std::binary_search(types.begin(), types.end(), t);
}

const GroupEntry* GroupTable::find(const std::string& label) const {
    for (const auto& e : entries)
        if (e.id.label == label)
            return &e;
    return nullptr;
}

const std::vector<int>& supported_degrees() {
    static const std::vector<int> degs = {5, 7, 11, 13, 17, 19, 23};
    return degs;
}

namespace {

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

/// All partitions of n, parts descending within each partition.
void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

/// Number of permutations in S_n with the given cycle type:
/// n! / (prod parts * prod multiplicity!).
mpz_class type_count_in_sym(int n, const std::vector<int>& parts) {
    mpz_class denom(1);
    std::map<int, int> mult;
    for (int k : parts) {
        denom *= k;
        ++mult[k];
    }
    for (auto& [k, m] : mult) {
        (void)k;
        denom *= factorial(m);
    }
    return factorial(n) / denom;
}

void finalize(GroupEntry& e) {
    // sort types with counts attached, set membership in A_p
    std::vector<size_t> idx(e.types.size());
    for (size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return e.types[a] < e.types[b]; });
    std::vector<CycleType> st;
    std::vector<mpz_class> sc;
    st.reserve(idx.size());
    for (size_t i : idx) {
        st.push_back(e.types[i]);
        if (!e.counts.empty())
            sc.push_back(e.counts[i]);
    }
    e.types = std::move(st);
    e.counts = std::move(sc);
    e.in_alternating = std::all_of(e.types.begin(), e.types.end(),
                                   [](const CycleType& t) { return t.even(); });
}

GroupEntry make_cyclic(int p) {
    GroupEntry e;
    e.id = cyclic_id(p);
    e.order = p;
    e.types.push_back(CycleType(std::vector<int>(static_cast<size_t>(p), 1)));
    e.counts.emplace_back(1);
    e.types.push_back(CycleType({p}));
    e.counts.emplace_back(p - 1);
    finalize(e);
    return e;
}

/// F_{p n} = C_p : C_n for n | p-1: the identity, p-1 full cycles, and for
/// each divisor d > 1 of n exactly p*phi(d) elements fixing one point and
/// splitting the rest into (p-1)/d cycles of length d.
GroupEntry make_frobenius(int p, int n) {
    GroupEntry e;
    e.id = frobenius_id(p, n);
    e.order = mpz_class(p) * n;
    e.types.push_back(CycleType(std::vector<int>(static_cast<size_t>(p), 1)));
    e.counts.emplace_back(1);
    e.types.push_back(CycleType({p}));
    e.counts.emplace_back(p - 1);
    for (std::uint64_t d : divisors(static_cast<std::uint64_t>(n))) {
        if (d == 1)
            continue;
        std::vector<int> parts(static_cast<size_t>((p - 1) / d), static_cast<int>(d));
        parts.push_back(1);
        e.types.push_back(CycleType(std::move(parts)));
        e.counts.push_back(mpz_class(p) * static_cast<unsigned long>(euler_phi(d)));
    }
    finalize(e);
    return e;
}

GroupEntry make_alternating(int p) {
    GroupEntry e;
    e.id = alternating_id(p);
    e.order = factorial(p) / 2;
    for (const auto& parts : partitions(p)) {
        CycleType t{std::vector<int>(parts)};
        if (!t.even())
            continue;
        e.counts.push_back(type_count_in_sym(p, parts));
        e.types.push_back(std::move(t));
    }
    finalize(e);
    return e;
}

GroupEntry make_symmetric(int p) {
    GroupEntry e;
    e.id = symmetric_id(p);
    e.order = factorial(p);
    for (const auto& parts : partitions(p)) {
        e.types.push_back(CycleType(std::vector<int>(parts)));
        e.counts.push_back(type_count_in_sym(p, parts));
    }
    finalize(e);
    return e;
}

GroupEntry make_exceptional_entry(int p, const ExceptionalGroup& g) {
    StabChain chain = StabChain::build(g.gens, p);
    if (chain.order() != g.order)
        throw std::logic_error("group " + g.label + " has wrong order");
    std::map<CycleType, mpz_class> tally;
    chain.for_each_element([&](const Perm& e) { ++tally[cycle_type(e)]; });
    GroupEntry e;
    e.id = {GroupKind::exceptional, p, 0, g.label};
    e.order = g.order;
    for (auto& [t, c] : tally) {
        e.types.push_back(t);
        e.counts.push_back(c);
    }
    finalize(e);
    return e;
}

GroupTable build_table(int p) {
    GroupTable t;
    t.degree = p;
    t.entries.push_back(make_cyclic(p));
    for (std::uint64_t n : divisors(static_cast<std::uint64_t>(p - 1)))
        if (n > 1)
            t.entries.push_back(make_frobenius(p, static_cast<int>(n)));
    for (const auto& g : exceptional_groups(p))
        t.entries.push_back(make_exceptional_entry(p, g));
    t.entries.push_back(make_alternating(p));
    t.entries.push_back(make_symmetric(p));
    std::sort(t.entries.begin(), t.entries.end(), [](const GroupEntry& a, const GroupEntry& b) {
        if (a.order != b.order)
            return a.order < b.order;
        return a.id.label < b.id.label;
    });
    return t;
}

} // namespace

const GroupTable& group_table(int p) {
    if (std::find(supported_degrees().begin(), supported_degrees().end(), p) ==
        supported_degrees().end())
        fail(errc::unsupported_degree,
             "no candidate table for degree " + std::to_string(p));
    static std::map<int, GroupTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it == cache.end())
        it = cache.emplace(p, build_table(p)).first;
    return it->second;
}

std::string export_table(const GroupTable& t) {
    std::ostringstream os;
    os << "degree " << t.degree << "\n";
    for (const auto& e : t.entries) {
        os << "group " << e.id.label << " order " << e.order.get_str() << " in_ap "
           << (e.in_alternating ? 1 : 0) << "\n";
        for (const auto& ty : e.types)
            os << "type " << ty.str() << "\n";
    }
    return os.str();
}

namespace {

GroupKind kind_from_label(const std::string& label, int degree, int& n_out) {
    n_out = 0;
    if (label == "C" + std::to_string(degree))
        return GroupKind::cyclic;
    if (label == "A" + std::to_string(degree))
        return GroupKind::alternating;
    if (label == "S" + std::to_string(degree))
        return GroupKind::symmetric;
    if (label.size() > 1 && (label[0] == 'D' || label[0] == 'F') &&
        label.find_first_not_of("0123456789", 1) == std::string::npos) {
        long v = std::stol(label.substr(1));
        if (label[0] == 'D' && v == 2 * degree) {
            n_out = 2;
            return GroupKind::frobenius;
        }
        if (label[0] == 'F' && v % degree == 0) {
            n_out = static_cast<int>(v / degree);
            return GroupKind::frobenius;
        }
    }
    return GroupKind::exceptional;
}

} // namespace

GroupTable import_table(const std::string& text) {
    GroupTable t;
    std::istringstream is(text);
    std::string line;
    bool have_degree = false;
    int lineno = 0;
    auto bad = [&](const std::string& why) {
        fail(errc::parse_error, "table line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok))
            continue; // blank line
        if (tok == "degree") {
            if (have_degree)
                bad("duplicate degree line");
            if (!(ls >> t.degree) || t.degree < 2)
                bad("malformed degree");
            have_degree = true;
        } else if (tok == "group") {
            if (!have_degree)
                bad("group before degree");
            GroupEntry e;
            std::string label, kw1, ord, kw2;
            int inap = -1;
            if (!(ls >> label >> kw1 >> ord >> kw2 >> inap) || kw1 != "order" ||
                kw2 != "in_ap" || (inap != 0 && inap != 1))
                bad("malformed group line");
            if (ord.find_first_not_of("0123456789") != std::string::npos || ord.empty())
                bad("malformed order");
            e.id.label = label;
            e.id.degree = t.degree;
            e.id.kind = kind_from_label(label, t.degree, e.id.n);
            e.order = mpz_class(ord);
            e.in_alternating = (inap == 1);
            t.entries.push_back(std::move(e));
        } else if (tok == "type") {
            if (t.entries.empty())
                bad("type before any group");
            std::vector<int> parts;
            int v;
            while (ls >> v)
                parts.push_back(v);
            if (!ls.eof())
                bad("malformed type parts");
            if (parts.empty())
                bad("empty type");
            for (int x : parts)
                if (x < 1)
                    bad("nonpositive part");
            CycleType ty(std::move(parts));
            if (ty.sum() != t.degree)
                bad("type does not partition the degree");
            t.entries.back().types.push_back(std::move(ty));
        } else {
            bad("unknown directive '" + tok + "'");
        }
    }
    if (!have_degree)
        fail(errc::parse_error, "table: missing degree line");
    for (auto& e : t.entries) {
        if (e.types.empty())
            fail(errc::parse_error, "table: group " + e.id.label + " has no types");
        std::sort(e.types.begin(), e.types.end());
        e.types.erase(std::unique(e.types.begin(), e.types.end()), e.types.end());
    }
    return t;
}

} // namespace primegalois
