// Acceptance suite: one line per criterion, nonzero exit if any fail.
#include "oracles.hpp"

#include <primegalois/classifier.hpp>
#include <primegalois/cli.hpp>
#include <primegalois/cyclotomic.hpp>
#include <primegalois/errors.hpp>
#include <primegalois/group_table.hpp>
#include <primegalois/numtheory.hpp>
#include <primegalois/parse.hpp>
#include <primegalois/realize.hpp>
#include <primegalois/sturm.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace primegalois;

namespace {

int failures = 0;

void report(int num, const std::string& what, bool ok,
            const std::string& detail = {}) {
    std::cout << "criterion " << num << ": " << (ok ? "PASS" : "FAIL") << " - " << what;
    if (!ok && !detail.empty())
        std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok)
        ++failures;
}

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// 1. x^5 - 4x + 2 resolves to S5 on the complex-roots shortcut.
void criterion1() {
    Check c;
    try {
        auto r = classify(parse_poly("x^5 - 4*x + 2"));
        c.require(r.real_roots == 3 && r.complex_pairs == 1, "root counts");
        c.require(r.disc == mpq_class(-212144), "discriminant");
        c.require(!r.disc_square, "discriminant square flag");
        c.require(r.branch == Branch::complex_roots, "branch");
        c.require(r.group == symmetric_id(5) && r.exact, "verdict");
        c.require(r.solvability == Solvability::not_solvable, "solvability");
        c.require(r.certificate == "eisenstein p=2 shift=0", "certificate");
    } catch (const std::exception& e) {
        c.require(false, e.what());
    }
    report(1, "x^5 - 4x + 2 is S5 via the complex-roots shortcut", c.ok, c.detail);
}

// 2. x^5 - x - 1 resolves to S5 by Frobenius sampling alone.
void criterion2() {
    Check c;
    try {
        auto r = classify(parse_poly("x^5 - x - 1"));
        c.require(r.branch == Branch::reduction, "branch");
        c.require(r.disc == mpq_class(2869), "discriminant");
        c.require(r.group == symmetric_id(5) && r.exact, "verdict");
        c.require(r.solvability == Solvability::not_solvable, "solvability");
    } catch (const std::exception& e) {
        c.require(false, e.what());
    }
    report(2, "x^5 - x - 1 is exactly S5 by reduction sampling", c.ok, c.detail);
}

// 3. x^5 - 2 narrows to {F20, S5} with F20 picked and tagged solvable.
void criterion3() {
    Check c;
    try {
        auto r = classify(parse_poly("x^5 - 2"));
        c.require(r.real_roots == 1 && r.complex_pairs == 2, "root counts");
        c.require(r.branch == Branch::reduction, "branch");
        c.require(r.group == frobenius_id(5, 4), "pick");
        c.require(!r.exact, "exactness");
        c.require(r.survivors.size() == 2 && r.survivors[0] == frobenius_id(5, 4) &&
                      r.survivors[1] == symmetric_id(5),
                  "candidate set");
        c.require(r.solvability == Solvability::solvable_frobenius, "solvability");
    } catch (const std::exception& e) {
        c.require(false, e.what());
    }
    report(3, "x^5 - 2 narrows to {F20, S5} with F20 picked", c.ok, c.detail);
}

// 4. The 2cos(2pi/11) quintic: all roots real, C5 picked, solvable.
void criterion4() {
    Check c;
    try {
        auto r = classify(parse_poly("x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1"));
        c.require(r.real_roots == 5 && r.complex_pairs == 0, "root counts");
        c.require(r.disc == mpq_class(14641) && r.disc_square, "discriminant");
        c.require(r.branch == Branch::reduction, "branch");
        c.require(r.group == cyclic_id(5), "pick");
        c.require(r.survivors.size() == 3, "candidate set");
        c.require(r.solvability == Solvability::solvable_cyclic_or_frobenius,
                  "solvability");
    } catch (const std::exception& e) {
        c.require(false, e.what());
    }
    report(4, "the 2cos(2pi/11) quintic has all roots real and picks C5", c.ok,
           c.detail);
}

// 5. On random shortcut-eligible inputs the shortcut verdict agrees with
//    independent Frobenius sampling.
void criterion5() {
    Check c;
    std::mt19937_64 rng(0xacce5501);
    std::uniform_int_distribution<long> cdist(-20, 20);

    auto sample = [&](int p, int want_r, int count) {
        int collected = 0;
        int attempts = 0;
        while (collected < count && attempts < 40000 && c.ok) {
            ++attempts;
            std::vector<mpz_class> coeffs(static_cast<size_t>(p) + 1);
            for (int i = 0; i < p; ++i)
                coeffs[static_cast<size_t>(i)] = cdist(rng);
            coeffs[static_cast<size_t>(p)] = 1;
            IntPoly f(std::move(coeffs));
            try {
                certify_irreducible(f, 6);
            } catch (const Error&) {
                continue;
            }
            if (count_real_roots(f) != want_r)
                continue;
            ++collected;

            ClassifyOptions opt;
            opt.assume_irreducible = true;
            auto r = classify(f, opt);
            c.require(r.branch == Branch::complex_roots,
                      "expected the shortcut on " + to_string(f));
            int k = (p - want_r) / 2;
            if (k % 2 == 1)
                c.require(r.group == symmetric_id(p), "odd k forces S_p on " + to_string(f));

            auto ind = identify_group(f, r.disc_square);
            c.require(ind.pick == r.group,
                      "sampling pick disagrees on " + to_string(f) + ": " +
                          ind.pick.label + " vs " + r.group.label);
        }
        c.require(collected == count,
                  "only collected " + std::to_string(collected) + " degree-" +
                      std::to_string(p) + " samples");
    };

    sample(5, 3, 100); // k = 1, 5 >= 4k+1
    sample(7, 5, 100); // k = 1, 7 >= 4k+1
    report(5, "shortcut verdicts match independent sampling on 200 random inputs",
           c.ok, c.detail);
}

// 6. Gaussian periods: right degree, reality law, cyclic realizations verify.
void criterion6() {
    Check c;
    int pairs = 0;
    try {
        for (std::uint64_t q : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                                29ull, 31ull, 37ull, 41ull, 43ull, 47ull}) {
            std::uint64_t m = primitive_root(q);
            for (std::uint64_t n : divisors(q - 1)) {
                if (n == 0 || n > q - 1)
                    continue;
                auto alpha = gaussian_period(q, n, m);
                auto g = minimal_polynomial(alpha, static_cast<int>(n), m);
                ++pairs;
                c.require(g.degree() == static_cast<int>(n),
                          "degree at q=" + std::to_string(q) + " n=" + std::to_string(n));
                bool real = is_real(alpha);
                bool want = (q - 1) / 2 % n == 0;
                c.require(real == want,
                          "reality at q=" + std::to_string(q) + " n=" + std::to_string(n));
                if (n >= 2)
                    c.require(is_squarefree(g), "separability at q=" + std::to_string(q) +
                                                    " n=" + std::to_string(n));
            }
        }
        for (int n : {2, 4, 6, 8, 10, 12}) {
            auto r = realize_cyclic_nonreal(n);
            auto cc = realization_consistency_check(r);
            c.require(cc.pass, "cyclic consistency at n=" + std::to_string(n));
            c.require(count_real_roots(r.polynomial) == 0,
                      "nonreal at n=" + std::to_string(n));
        }
        c.require(pairs >= 25, "too few (q, n) pairs");
    } catch (const std::exception& e) {
        c.require(false, e.what());
    }
    report(6, "gaussian periods across " + std::to_string(pairs) +
                  " (q, n) pairs obey degree and reality laws",
           c.ok, c.detail);
}

// 7. The candidate tables agree with brute-force group enumeration.
void criterion7() {
    Check c;
    try {
        for (int p : supported_degrees()) {
            const auto& table = group_table(p);
            CycleType identity{std::vector<int>(static_cast<size_t>(p), 1)};
            CycleType full{{p}};
            for (const auto& e : table.entries) {
                c.require(e.types.size() == e.counts.size(), e.id.label + " count alignment");
                mpz_class total = 0;
                for (const auto& n : e.counts)
                    total += n;
                c.require(total == e.order, e.id.label + " counts sum to the order");
                c.require(e.has_type(identity), e.id.label + " has the identity type");
                c.require(e.has_type(full), e.id.label + " has the p-cycle type");
                bool all_even = true;
                for (const auto& t : e.types)
                    all_even = all_even && t.even();
                c.require(e.in_alternating == all_even, e.id.label + " parity flag");
            }
        }

        // Frobenius entries vs. brute force over the concrete group
        // <x -> x+1, x -> cx> with c of order n
        for (int p : supported_degrees()) {
            const auto& table = group_table(p);
            for (int n = 2; n <= p - 1; ++n) {
                if ((p - 1) % n != 0)
                    continue;
                std::uint64_t g = primitive_root(static_cast<std::uint64_t>(p));
                std::uint64_t cmul =
                    mod_pow(g, static_cast<std::uint64_t>((p - 1) / n),
                            static_cast<std::uint64_t>(p));
                Perm shift(static_cast<size_t>(p)), mult(static_cast<size_t>(p));
                for (int i = 0; i < p; ++i) {
                    shift[static_cast<size_t>(i)] = (i + 1) % p;
                    mult[static_cast<size_t>(i)] =
                        static_cast<int>(static_cast<std::uint64_t>(i) * cmul %
                                         static_cast<std::uint64_t>(p));
                }
                auto chain = StabChain::build({shift, mult}, p);
                c.require(chain.order() == mpz_class(p) * n,
                          "F_" + std::to_string(p) + "," + std::to_string(n) + " order");
                std::map<CycleType, mpz_class> tally;
                chain.for_each_element([&](const Perm& el) { tally[cycle_type(el)] += 1; });

                const GroupEntry* e = table.find(frobenius_id(p, n).label);
                c.require(e != nullptr, frobenius_id(p, n).label + " present");
                if (!e)
                    continue;
                std::map<CycleType, mpz_class> want;
                for (size_t i = 0; i < e->types.size(); ++i)
                    want[e->types[i]] = e->counts[i];
                c.require(tally == want, frobenius_id(p, n).label + " cycle counts");
            }
        }

        // A5, S5, A7, S7 vs. brute force
        auto tally_of = [](const StabChain& chain) {
            std::map<CycleType, mpz_class> tally;
            chain.for_each_element([&](const Perm& el) { tally[cycle_type(el)] += 1; });
            return tally;
        };
        auto entry_map = [&c](int p, const std::string& label) {
            std::map<CycleType, mpz_class> want;
            const GroupEntry* e = group_table(p).find(label);
            c.require(e != nullptr, label + " present");
            if (e)
                for (size_t i = 0; i < e->types.size(); ++i)
                    want[e->types[i]] = e->counts[i];
            return want;
        };
        auto cyc = [](int n, int len) {
            Perm p = identity_perm(n);
            for (int i = 0; i < len; ++i)
                p[static_cast<size_t>(i)] = (i + 1) % len;
            return p;
        };
        auto transp = [](int n) {
            Perm p = identity_perm(n);
            p[0] = 1;
            p[1] = 0;
            return p;
        };
        auto three = [](int n) {
            Perm p = identity_perm(n);
            p[0] = 1;
            p[1] = 2;
            p[2] = 0;
            return p;
        };
        auto even_shift = [](int n) { // (0 1 ... n-1) for odd n is even
            Perm p(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                p[static_cast<size_t>(i)] = (i + 1) % n;
            return p;
        };
        c.require(tally_of(StabChain::build({cyc(5, 5), transp(5)}, 5)) ==
                      entry_map(5, "S5"),
                  "S5 enumeration");
        c.require(tally_of(StabChain::build({even_shift(5), three(5)}, 5)) ==
                      entry_map(5, "A5"),
                  "A5 enumeration");
        c.require(tally_of(StabChain::build({cyc(7, 7), transp(7)}, 7)) ==
                      entry_map(7, "S7"),
                  "S7 enumeration");
        c.require(tally_of(StabChain::build({even_shift(7), three(7)}, 7)) ==
                      entry_map(7, "A7"),
                  "A7 enumeration");

        // exceptional groups: frozen orders, table counts from enumeration
        std::map<std::string, mpz_class> orders = {
            {"PSL(3,2)", 168},         {"PSL(2,11)", 660},  {"M11", 7920},
            {"PSL(3,3)", 5616},        {"PSL(2,16)", 4080}, {"PSL(2,16):2", 8160},
            {"PSL(2,16):4", 16320},    {"M23", 10200960},
        };
        int seen = 0;
        for (int p : supported_degrees())
            for (const auto& eg : exceptional_groups(p)) {
                ++seen;
                auto it = orders.find(eg.label);
                c.require(it != orders.end() && it->second == eg.order,
                          eg.label + " frozen order");
                const GroupEntry* e = group_table(p).find(eg.label);
                c.require(e != nullptr && e->order == eg.order, eg.label + " table entry");
            }
        c.require(seen == 8, "exceptional group census");

        // M23's twelve cycle types, frozen
        const GroupEntry* m23 = group_table(23).find("M23");
        c.require(m23 != nullptr, "M23 present");
        if (m23) {
            c.require(m23->types.size() == 12, "M23 type count");
            std::vector<CycleType> want;
            auto add = [&](std::vector<int> parts) { want.emplace_back(std::move(parts)); };
            add(std::vector<int>(23, 1));
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
            c.require(m23->types == want, "M23 frozen types");
        }
    } catch (const std::exception& e) {
        c.require(false, e.what());
    }
    report(7, "candidate tables agree with brute-force enumeration", c.ok, c.detail);
}

// 8. Full Frobenius realizations verify for every supported degree.
void criterion8() {
    Check c;
    try {
        for (int p : supported_degrees()) {
            auto r = realize_full_frobenius(p);
            c.require(r.embedding == EmbeddingStatus::complete,
                      "completeness at p=" + std::to_string(p));
            c.require(r.verification.has_value() &&
                          r.verification->group == frobenius_id(p, p - 1),
                      "verification at p=" + std::to_string(p));
            auto cc = realization_consistency_check(r);
            c.require(cc.pass, "consistency at p=" + std::to_string(p));
        }
    } catch (const std::exception& e) {
        c.require(false, e.what());
    }
    report(8, "realize_full_frobenius verifies for p in {5,7,11,13,17,19,23}", c.ok,
           c.detail);
}

// 9. The CLI: exit codes, deterministic output, faithful export/import.
void criterion9() {
    Check c;
    auto run = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return std::pair<int, std::string>(code, out.str());
    };
    try {
        auto [c1, o1] = run({"classify", "x^5 - 4*x + 2"});
        c.require(c1 == 0, "classify exit code");
        size_t end = o1.find_last_not_of('\n');
        size_t start = o1.find_last_of('\n', end);
        std::string last = o1.substr(start + 1, end - start);
        c.require(last == "Galois group: S5", "final report line");

        c.require(run({"classify", "x^4 - 2"}).first == 1, "math error exit code");
        c.require(run({"classify", "x +* 2"}).first == 2, "parse error exit code");
        c.require(run({"frobnicate"}).first == 2, "unknown subcommand exit code");
        c.require(run({"realize", "--cyclic", "7"}).first == 1, "odd cyclic exit code");

        auto j1 = run({"classify", "x^5 - 2", "--json"});
        auto j2 = run({"classify", "x^5 - 2", "--json"});
        c.require(j1.first == 0 && j1.second == j2.second, "deterministic JSON");

        auto t1 = run({"table", "--p", "11"});
        namespace fs = std::filesystem;
        fs::path tmp = fs::temp_directory_path() / "primegalois_acceptance_table.txt";
        auto e1 = run({"table", "--p", "11", "--export", tmp.string()});
        auto i1 = run({"table", "--import", tmp.string()});
        c.require(t1.first == 0 && e1.first == 0 && i1.first == 0, "table exit codes");
        c.require(i1.second == t1.second, "export/import round-trip");
        fs::remove(tmp);

        auto p1 = run({"periods", "--q", "11", "--n", "5"});
        c.require(p1.first == 0 &&
                      p1.second.find("x^5 + x^4 - 4*x^3 - 3*x^2 + 3*x + 1") !=
                          std::string::npos,
                  "periods output");
    } catch (const std::exception& e) {
        c.require(false, e.what());
    }
    report(9, "CLI exit codes, determinism, and table round-trip", c.ok, c.detail);
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures == 0) {
        std::cout << "all acceptance criteria pass\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
