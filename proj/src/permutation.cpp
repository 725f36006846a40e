#include "primegalois/permutation.hpp"

#include "primegalois/errors.hpp"

#include <algorithm>
#include <sstream>

namespace primegalois {

Perm identity_perm(int n) {
    Perm p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<size_t>(i)] = i;
    return p;
}

bool is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i))
            return false;
    return true;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[i] = b[static_cast<size_t>(a[i])];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        r[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return r;
}

CycleType::CycleType(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
        if (v < 1)
            fail(errc::invalid_parameters, "cycle type parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int CycleType::sum() const {
    int s = 0;
    for (int v : parts)
        s += v;
    return s;
}

bool CycleType::even() const { return ((sum() - static_cast<int>(parts.size())) & 1) == 0; }

std::string CycleType::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i)
            os << ' ';
        os << parts[i];
    }
    return os.str();
}

CycleType cycle_type(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::vector<int> parts;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(p[j]);
            ++len;
        }
        parts.push_back(len);
    }
    return CycleType(std::move(parts));
}

StabChain StabChain::build(const std::vector<Perm>& gens, int n) {
    StabChain c;
    c.n_ = n;
    for (const Perm& g : gens) {
        if (static_cast<int>(g.size()) != n)
            fail(errc::invalid_parameters, "generator degree mismatch");
        if (!is_identity(g))
            c.add_generator(0, g);
    }
    // Fixpoint closure: every Schreier generator of every level must sift to
    // the identity through the deeper levels.  Each failure strictly grows
    // the orbit product, so this terminates.
    bool closed = false;
    while (!closed) {
        closed = true;
        for (size_t lvl = 0; lvl < c.levels_.size() && closed; ++lvl)
            closed = c.close_level(lvl);
    }
    return c;
}

std::vector<Perm> StabChain::gens_from(size_t lvl) const {
    std::vector<Perm> out;
    for (size_t i = lvl; i < levels_.size(); ++i)
        out.insert(out.end(), levels_[i].gens.begin(), levels_[i].gens.end());
    return out;
}

void StabChain::rebuild_orbit(size_t lvl) {
    Level& L = levels_[lvl];
    const std::vector<Perm> gens = gens_from(lvl);
    L.orbit.clear();
    L.trans_by_point.assign(static_cast<size_t>(n_), Perm());
    L.orbit.push_back(L.beta);
    L.trans_by_point[static_cast<size_t>(L.beta)] = identity_perm(n_);
    for (size_t idx = 0; idx < L.orbit.size(); ++idx) {
        int pt = L.orbit[idx];
        for (const Perm& s : gens) {
            int img = s[static_cast<size_t>(pt)];
            if (L.trans_by_point[static_cast<size_t>(img)].empty()) {
                L.trans_by_point[static_cast<size_t>(img)] =
                    compose(L.trans_by_point[static_cast<size_t>(pt)], s);
                L.orbit.push_back(img);
            }
        }
    }
}

std::pair<Perm, size_t> StabChain::sift_from(size_t lvl, Perm g) const {
    for (size_t i = lvl; i < levels_.size(); ++i) {
        if (is_identity(g))
            return {std::move(g), i};
        const Level& L = levels_[i];
        int img = g[static_cast<size_t>(L.beta)];
        const Perm& u = L.trans_by_point[static_cast<size_t>(img)];
        if (u.empty())
            return {std::move(g), i};
        g = compose(g, inverse(u));
    }
    return {std::move(g), levels_.size()};
}

void StabChain::add_generator(size_t lvl, Perm g) {
    if (is_identity(g))
        return;
    if (lvl >= levels_.size()) {
        lvl = levels_.size();
        Level L;
        for (int i = 0; i < n_; ++i) {
            if (g[static_cast<size_t>(i)] != i) {
                L.beta = i;
                break;
            }
        }
        levels_.push_back(std::move(L));
    }
    levels_[lvl].gens.push_back(std::move(g));
    // The new generator also belongs to every shallower stabilizer, so all
    // orbits up to lvl may grow.
    for (size_t i = 0; i <= lvl; ++i)
        rebuild_orbit(i);
}

bool StabChain::close_level(size_t lvl) {
    const std::vector<Perm> gens = gens_from(lvl);
    for (size_t oi = 0; oi < levels_[lvl].orbit.size(); ++oi) {
        int pt = levels_[lvl].orbit[oi];
        for (size_t si = 0; si < gens.size(); ++si) {
            const Level& L = levels_[lvl];
            Perm us = compose(L.trans_by_point[static_cast<size_t>(pt)], gens[si]);
            int img = us[static_cast<size_t>(L.beta)];
            Perm h = compose(us, inverse(L.trans_by_point[static_cast<size_t>(img)]));
            if (is_identity(h))
                continue;
            auto [residue, j] = sift_from(lvl + 1, std::move(h));
            if (!is_identity(residue)) {
                add_generator(j, std::move(residue));
                return false;
            }
        }
    }
    return true;
}

mpz_class StabChain::order() const {
    mpz_class o(1);
    for (const auto& L : levels_)
        o *= static_cast<unsigned long>(L.orbit.size());
    return o;
}

bool StabChain::contains(const Perm& g) const {
    if (static_cast<int>(g.size()) != n_)
        return false;
    auto [residue, lvl] = sift_from(0, g);
    (void)lvl;
    return is_identity(residue);
}

void StabChain::for_each_element(const std::function<void(const Perm&)>& fn) const {
    if (levels_.empty()) {
        fn(identity_perm(n_));
        return;
    }
    // Element = u_k * ... * u_1 * u_0 (deepest transversal applied first);
    // recurse from the deepest level so the largest orbit is the inner loop.
    std::function<void(size_t, const Perm&)> walk = [&](size_t lvl, const Perm& partial) {
        const Level& L = levels_[lvl];
        for (int pt : L.orbit) {
            Perm next = compose(partial, L.trans_by_point[static_cast<size_t>(pt)]);
            if (lvl == 0)
                fn(next);
            else
                walk(lvl - 1, next);
        }
    };
    walk(levels_.size() - 1, identity_perm(n_));
}

} // namespace primegalois
