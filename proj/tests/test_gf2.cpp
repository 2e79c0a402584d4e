#include <doctest.h>

#include "cyclift/errors.hpp"
#include "cyclift/gf2.hpp"
#include "cyclift/lifting.hpp"
#include "testutil.hpp"

using namespace cyclift;

TEST_CASE("rank of the identity is k") {
    for (int k : {1, 3, 17, 64, 100}) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < k; ++i) e.emplace_back(i, i);
        CHECK(gf2_rank(ParityCheckMatrix(k, k, std::move(e))) == k);
    }
}

TEST_CASE("duplicating a row keeps the rank") {
    ParityCheckMatrix H = testutil::random_pcm(6, 10, 1, 3, 3);
    int r = gf2_rank(H);
    auto entries = H.entries();
    for (int j : H.row(2)) entries.emplace_back(6, j);  // row 6 := row 2
    ParityCheckMatrix H2(7, 10, std::move(entries));
    CHECK(gf2_rank(H2) == r);
}

TEST_CASE("Tanner fixture has rank 91 and rate 64/155") {
    ParityCheckMatrix H = testutil::make_tanner_155();
    CHECK(gf2_rank(H) == 91);
    Rational r = code_rate(H);
    CHECK(r == Rational{64, 155});
    CHECK(r.to_double() == doctest::Approx(0.412903).epsilon(1e-5));
}

TEST_CASE("zero matrix has rate 1") {
    ParityCheckMatrix H(2, 5, {});
    CHECK(code_rate(H) == Rational{1, 1});
}

TEST_CASE("full-rank square-ish code has the expected rate") {
    ParityCheckMatrix H(2, 4, {{0, 0}, {0, 2}, {1, 1}, {1, 3}});
    CHECK(code_rate(H) == Rational{1, 2});
}

TEST_CASE("nullspace vectors satisfy the checks") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        ParityCheckMatrix H = testutil::random_pcm(8, 14, 1, 3, 50 + seed);
        Gf2Matrix M(H);
        auto basis = M.nullspace_basis();
        CHECK(static_cast<int>(basis.size()) == H.n() - gf2_rank(H));
        for (const auto& vec : basis) {
            for (int i = 0; i < H.m(); ++i) {
                unsigned parity = 0;
                for (int j : H.row(i)) parity ^= (vec[j >> 6] >> (j & 63)) & 1u;
                CHECK(parity == 0);
            }
        }
    }
}

TEST_CASE("minimum distance by brute force") {
    SUBCASE("[7,4] Hamming code") {
        CHECK(min_distance_bruteforce(testutil::make_hamming_7_4()) == 3);
    }
    SUBCASE("repetition codes") {
        for (int n : {2, 5, 9}) {
            CHECK(min_distance_bruteforce(testutil::make_repetition(n)) == n);
        }
    }
    SUBCASE("trivial code returns nullopt") {
        ParityCheckMatrix H(2, 2, {{0, 0}, {1, 1}});
        CHECK(min_distance_bruteforce(H) == std::nullopt);
    }
    SUBCASE("dimension guard") {
        ParityCheckMatrix H(1, 40, {{0, 0}});
        CHECK_THROWS_AS(min_distance_bruteforce(H), validation_error);
    }
}

TEST_CASE("N=2 lifting of a toy code obeys the distance bounds") {
    // d <= d^(2) <= 2 d for random length-12 codes.
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 8; ++seed) {
        ParityCheckMatrix H = testutil::random_pcm(9, 12, 2, 3, 11000 + seed);
        auto d = min_distance_bruteforce(H);
        if (!d) continue;
        PermutationIndexMatrix D = testutil::random_dmatrix(H, 2, seed);
        LiftedCode L2 = lift(H, D);
        auto d2 = min_distance_bruteforce(L2.parity_check());
        REQUIRE(d2.has_value());
        CAPTURE(seed);
        CHECK(*d <= *d2);
        CHECK(*d2 <= 2 * *d);
        ++tested;
    }
}
