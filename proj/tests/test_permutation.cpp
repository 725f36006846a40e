#include <primegalois/errors.hpp>
#include <primegalois/group_table.hpp>
#include <primegalois/permutation.hpp>

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

using namespace primegalois;

namespace {

Perm random_perm(std::mt19937_64& rng, int n) {
    Perm p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

Perm cycle(int n, std::vector<int> pts) {
    Perm p = identity_perm(n);
    for (size_t i = 0; i < pts.size(); ++i)
        p[static_cast<size_t>(pts[i])] = pts[(i + 1) % pts.size()];
    return p;
}

} // namespace

TEST_CASE("composition and inversion") {
    std::mt19937_64 rng(0x5eed201);
    for (int trial = 0; trial < 300; ++trial) {
        Perm a = random_perm(rng, 9);
        Perm b = random_perm(rng, 9);
        Perm c = random_perm(rng, 9);
        CHECK(compose(a, inverse(a)) == identity_perm(9));
        CHECK(compose(inverse(a), a) == identity_perm(9));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        // result[i] = b[a[i]]: apply a first
        for (int i = 0; i < 9; ++i)
            CHECK(compose(a, b)[static_cast<size_t>(i)] ==
                  b[static_cast<size_t>(a[static_cast<size_t>(i)])]);
        // cycle type is a conjugation invariant
        Perm conj = compose(compose(inverse(b), a), b);
        CHECK(cycle_type(conj) == cycle_type(a));
    }
}

TEST_CASE("cycle types") {
    CHECK(cycle_type(identity_perm(5)).parts == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(cycle_type(cycle(5, {0, 1, 2, 3, 4})).parts == std::vector<int>{5});
    Perm p = compose(cycle(5, {0, 1}), cycle(5, {2, 3}));
    CHECK(cycle_type(p).parts == std::vector<int>{2, 2, 1});
    CHECK(cycle_type(p).str() == "2 2 1");
    CHECK(cycle_type(p).sum() == 5);
    CHECK(cycle_type(p).even());
    CHECK(CycleType{{5}}.even());
    CHECK_FALSE(CycleType{{4, 1}}.even());
    CHECK(CycleType{{3, 1, 1}}.even());
    CHECK_FALSE(CycleType{{2, 1, 1, 1}}.even());
    CHECK_FALSE(CycleType{{3, 2}}.even());
    CHECK(CycleType{{2, 2, 1}} < CycleType{{3, 1, 1}});
}

TEST_CASE("stabilizer chain orders") {
    Perm c5 = cycle(5, {0, 1, 2, 3, 4});
    Perm t = cycle(5, {0, 1});
    Perm three = cycle(5, {0, 1, 2});
    // i -> 2i mod 5
    Perm mult2 = {0, 2, 4, 1, 3};

    CHECK(StabChain::build({c5, t}, 5).order() == 120);
    CHECK(StabChain::build({c5, three}, 5).order() == 60);
    CHECK(StabChain::build({c5, mult2}, 5).order() == 20);
    CHECK(StabChain::build({c5}, 5).order() == 5);
    CHECK(StabChain::build({}, 5).order() == 1);
    CHECK(StabChain::build({identity_perm(5)}, 5).order() == 1);

    // Orbits must absorb generators discovered at deeper levels; this pair
    // once produced a bogus order of 2268.
    Perm c7 = cycle(7, {0, 1, 2, 3, 4, 5, 6});
    Perm t7 = cycle(7, {0, 1});
    auto s7 = StabChain::build({c7, t7}, 7);
    CHECK(s7.order() == 5040);
    std::mt19937_64 rng(0x5eed203);
    for (int trial = 0; trial < 50; ++trial)
        CHECK(s7.contains(random_perm(rng, 7)));
    CHECK(StabChain::build({cycle(11, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}),
                            cycle(11, {0, 1})},
                           11)
              .order() == mpz_class("39916800"));
}

TEST_CASE("membership") {
    Perm c5 = cycle(5, {0, 1, 2, 3, 4});
    Perm three = cycle(5, {0, 1, 2});
    auto a5 = StabChain::build({c5, three}, 5);
    CHECK(a5.contains(identity_perm(5)));
    CHECK(a5.contains(compose(c5, three)));
    CHECK_FALSE(a5.contains(cycle(5, {0, 1}))); // odd

    std::mt19937_64 rng(0x5eed202);
    for (int trial = 0; trial < 100; ++trial) {
        Perm g = random_perm(rng, 5);
        CHECK(a5.contains(g) == cycle_type(g).even());
    }
}

TEST_CASE("element enumeration tallies S4") {
    Perm c4 = cycle(4, {0, 1, 2, 3});
    Perm t = cycle(4, {0, 1});
    auto s4 = StabChain::build({c4, t}, 4);
    REQUIRE(s4.order() == 24);

    std::map<CycleType, int> tally;
    s4.for_each_element([&](const Perm& g) { tally[cycle_type(g)] += 1; });
    CHECK(tally.size() == 5);
    CHECK(tally[CycleType{{1, 1, 1, 1}}] == 1);
    CHECK(tally[CycleType{{2, 1, 1}}] == 6);
    CHECK(tally[CycleType{{2, 2}}] == 3);
    CHECK(tally[CycleType{{3, 1}}] == 8);
    CHECK(tally[CycleType{{4}}] == 6);
}

TEST_CASE("exceptional group generators have the advertised orders") {
    for (int p : {7, 11, 13, 17, 23}) {
        for (const auto& eg : exceptional_groups(p)) {
            CAPTURE(eg.label);
            auto chain = StabChain::build(eg.gens, p);
            REQUIRE(chain.order() == eg.order);
            for (const auto& g : eg.gens)
                REQUIRE(chain.contains(g));
        }
    }
    CHECK(exceptional_groups(5).empty());
    CHECK(exceptional_groups(19).empty());

    auto labels = [](int p) {
        std::vector<std::string> out;
        for (const auto& eg : exceptional_groups(p))
            out.push_back(eg.label);
        return out;
    };
    CHECK(labels(7) == std::vector<std::string>{"PSL(3,2)"});
    CHECK(labels(11) == std::vector<std::string>{"PSL(2,11)", "M11"});
    CHECK(labels(13) == std::vector<std::string>{"PSL(3,3)"});
    CHECK(labels(17) ==
          std::vector<std::string>{"PSL(2,16)", "PSL(2,16):2", "PSL(2,16):4"});
    CHECK(labels(23) == std::vector<std::string>{"M23"});
}

TEST_CASE("M23 cycle types") {
    const auto& table = group_table(23);
    const GroupEntry* m23 = table.find("M23");
    REQUIRE(m23 != nullptr);
    CHECK(m23->order == mpz_class(10200960));
    CHECK(m23->in_alternating);

    std::vector<CycleType> want;
    auto add = [&](std::vector<int> parts) { want.emplace_back(std::move(parts)); };
    add({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    add({2, 2, 2, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1});
    add({3, 3, 3, 3, 3, 3, 1, 1, 1, 1, 1});
    add({4, 4, 4, 4, 2, 2, 1, 1, 1});
    add({5, 5, 5, 5, 1, 1, 1});
    add({6, 6, 3, 3, 2, 2, 1});
    add({7, 7, 7, 1, 1});
    add({8, 8, 4, 2, 1});
    add({11, 11, 1});
    add({14, 7, 2});
    add({15, 5, 3});
    add({23});
    std::sort(want.begin(), want.end());
    CHECK(m23->types == want);

    REQUIRE(m23->counts.size() == m23->types.size());
    mpz_class total = 0;
    for (const auto& c : m23->counts)
        total += c;
    CHECK(total == m23->order);
    for (size_t i = 0; i < m23->types.size(); ++i)
        if (m23->types[i].parts == std::vector<int>(23, 1))
            CHECK(m23->counts[i] == 1);
}
