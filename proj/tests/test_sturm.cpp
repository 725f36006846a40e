#include "oracles.hpp"

#include <primegalois/errors.hpp>
#include <primegalois/sturm.hpp>

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

using namespace primegalois;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg, int coeff_bound) {
    std::uniform_int_distribution<int> deg_dist(1, max_deg);
    std::uniform_int_distribution<long> cdist(-coeff_bound, coeff_bound);
    int d = deg_dist(rng);
    std::vector<mpz_class> c(static_cast<size_t>(d) + 1);
    for (auto& x : c)
        x = cdist(rng);
    while (c.back() == 0)
        c.back() = cdist(rng);
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("sturm sequence of x^5 - 4x + 2") {
    IntPoly f{2, -4, 0, 0, 0, 1};
    auto seq = sturm_sequence(f);
    REQUIRE(seq.size() == 4);
    CHECK(seq[0] == f);
    CHECK(seq[1] == IntPoly{-4, 0, 0, 0, 5});
    CHECK(seq[2].degree() == 1);
    CHECK(seq[3].degree() == 0);
    CHECK(seq[2] == IntPoly{-5, 8});
    CHECK(seq[3].coeff(0) > 0);
}

TEST_CASE("frozen real root counts") {
    CHECK(count_real_roots(IntPoly{2, -4, 0, 0, 0, 1}) == 3);  // x^5 - 4x + 2
    CHECK(count_real_roots(IntPoly{-1, -1, 0, 0, 0, 1}) == 1); // x^5 - x - 1
    CHECK(count_real_roots(IntPoly{-2, 0, 0, 0, 0, 1}) == 1);  // x^5 - 2
    CHECK(count_real_roots(IntPoly{1, 3, -3, -4, 1, 1}) == 5); // 2cos(2pi/11) minpoly
    CHECK(count_real_roots(IntPoly{1, 0, 1}) == 0);            // x^2 + 1
    CHECK(count_real_roots(IntPoly{-2, 0, 1}) == 2);           // x^2 - 2
    CHECK(count_real_roots(IntPoly{0, 1}) == 1);               // x
    CHECK(count_real_roots(IntPoly{5}) == 0);
}

TEST_CASE("squarefree detection") {
    CHECK(is_squarefree(IntPoly{2, -4, 0, 0, 0, 1}));
    CHECK_FALSE(is_squarefree(IntPoly{1, -2, 1})); // (x-1)^2
    CHECK_FALSE(is_squarefree(IntPoly{0, 0, 1}));  // x^2
    CHECK(is_squarefree(IntPoly{0, 1}));
    CHECK_THROWS_AS((void)count_real_roots(IntPoly{1, -2, 1}), Error);
    try {
        count_real_roots(IntPoly{0, 0, 1});
        FAIL("expected NotSquarefree");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_squarefree);
    }
}

TEST_CASE("root counts agree with exact bisection") {
    std::mt19937_64 rng(0x5eed101);
    int checked = 0;
    while (checked < 500) {
        IntPoly f = random_poly(rng, 6, 9);
        if (f.degree() < 1)
            continue;
        if (oracle::sylvester_discriminant(f) == 0)
            continue;
        CAPTURE(to_string(f));
        REQUIRE(is_squarefree(f));
        REQUIRE(count_real_roots(f) == oracle::bisection_real_roots(f));
        ++checked;
    }
}

TEST_CASE("interval counts add up") {
    std::mt19937_64 rng(0x5eed102);
    std::uniform_int_distribution<long> pt(-12, 12);
    int checked = 0;
    while (checked < 200) {
        IntPoly f = random_poly(rng, 6, 9);
        if (f.degree() < 1 || oracle::sylvester_discriminant(f) == 0)
            continue;
        long xs[3] = {pt(rng), pt(rng), pt(rng)};
        std::sort(xs, xs + 3);
        mpq_class a(xs[0]), b(xs[1]), c(xs[2]);
        CHECK(count_real_roots_between(f, a, b) + count_real_roots_between(f, b, c) ==
              count_real_roots_between(f, a, c));

        // Cauchy bound: all roots lie in (-B, B]
        mpq_class bound(1);
        for (int i = 0; i < f.degree(); ++i) {
            mpq_class m(abs(f.coeff(i)), abs(f.lc()));
            if (m > bound)
                bound = m;
        }
        bound += 1;
        CHECK(count_real_roots_between(f, -bound, bound) == count_real_roots(f));
        ++checked;
    }
}

TEST_CASE("sign variations at infinity") {
    IntPoly f{2, -4, 0, 0, 0, 1};
    auto seq = sturm_sequence(f);
    CHECK(sign_variations_neg_inf(seq) - sign_variations_pos_inf(seq) == 3);
    mpq_class big(1000000);
    CHECK(sign_variations(seq, -big) == sign_variations_neg_inf(seq));
    CHECK(sign_variations(seq, big) == sign_variations_pos_inf(seq));
}
