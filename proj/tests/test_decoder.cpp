#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "cyclift/channel.hpp"
#include "cyclift/decoder.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/gf2.hpp"
#include "testutil.hpp"

using namespace cyclift;

namespace {

std::vector<std::uint8_t> word_with_flips(int n, const std::vector<int>& support) {
    std::vector<std::uint8_t> w(n, 0);
    for (int v : support) w[v] = 1;
    return w;
}

// A random codeword as a random combination of nullspace basis vectors.
std::vector<std::uint8_t> random_codeword(const ParityCheckMatrix& H, std::uint64_t seed) {
    Gf2Matrix M(H);
    auto basis = M.nullspace_basis();
    std::vector<std::uint8_t> word(H.n(), 0);
    testutil::SplitMix64 rng(seed);
    for (const auto& vec : basis) {
        if (rng.next() & 1u) {
            for (int j = 0; j < H.n(); ++j) word[j] ^= (vec[j >> 6] >> (j & 63)) & 1u;
        }
    }
    return word;
}

}  // namespace

TEST_CASE("a codeword decodes in zero iterations") {
    ParityCheckMatrix H = testutil::make_hamming_7_4();
    auto cw = random_codeword(H, 1);
    auto out = gallager_b_decode(H, cw);
    CHECK(out.success);
    CHECK(out.iterations == 0);
    CHECK(out.decision == cw);
}

TEST_CASE("all-zero word is an immediate success") {
    ParityCheckMatrix H = testutil::make_tanner_155();
    std::vector<std::uint8_t> zero(155, 0);
    auto out = gallager_b_decode(H, zero);
    CHECK(out.success);
    CHECK(out.iterations == 0);
    CHECK(out.error_support.empty());
}

TEST_CASE("every single error on the Tanner code is corrected within 2 iterations") {
    ParityCheckMatrix H = testutil::make_tanner_155();
    TannerGraph G(H);
    DecoderConfig config;
    config.algorithm = DecoderAlgorithm::GallagerA;
    HardDecisionDecoder dec(G, config);
    for (int v = 0; v < H.n(); ++v) {
        auto out = dec.decode(word_with_flips(H.n(), {v}));
        CAPTURE(v);
        CHECK(out.success);
        CHECK(out.iterations <= 2);
        CHECK(out.error_support.empty());
    }
}

TEST_CASE("sampled weight-2 patterns on the Tanner code are corrected") {
    ParityCheckMatrix H = testutil::make_tanner_155();
    TannerGraph G(H);
    HardDecisionDecoder dec(G, DecoderConfig{});
    testutil::SplitMix64 rng(99);
    for (int k = 0; k < 400; ++k) {
        int a = testutil::rand_below(rng, 155);
        int b = testutil::rand_below(rng, 155);
        if (a == b) continue;
        auto out = dec.decode(word_with_flips(155, {a, b}));
        CAPTURE(a);
        CAPTURE(b);
        CHECK(out.success);
    }
}

TEST_CASE("the (5,3) shape oscillates on its three degree-2 variables") {
    // Flipping w1, w2, w3 of the (5,3) structure swings the error set
    // between {u1, u2} and {w1, w2, w3}; the decoder never converges.
    ParityCheckMatrix H = testutil::make_ts53_shape();
    auto out = gallager_b_decode(H, word_with_flips(5, {2, 3, 4}));
    CHECK(!out.success);
    CHECK(out.iterations == 50);

    // Same failure under Gallager A: for d_v = 3 the default threshold rules
    // coincide.
    auto out_a = gallager_a_decode(H, word_with_flips(5, {2, 3, 4}));
    CHECK(!out_a.success);
}

TEST_CASE("threshold tables") {
    CHECK(default_gb_threshold(3) == 2);
    CHECK(default_gb_threshold(4) == 2);
    CHECK(default_gb_threshold(5) == 3);
    CHECK(gallager_a_threshold(3) == 2);
    CHECK(gallager_a_threshold(5) == 4);
}

TEST_CASE("decoder symmetry: outcome depends on the error pattern only") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ParityCheckMatrix H = testutil::random_pcm(8, 16, 2, 3, 3000 + seed);
        TannerGraph G(H);
        auto cw = random_codeword(H, seed);
        std::vector<int> pattern;
        testutil::SplitMix64 rng(seed + 1);
        for (int k = 0; k < 3; ++k) pattern.push_back(testutil::rand_below(rng, 16));

        DecoderConfig config;
        config.algorithm = seed % 2 ? DecoderAlgorithm::GallagerA : DecoderAlgorithm::GallagerB;
        HardDecisionDecoder dec(G, config);

        auto received = cw;
        for (int v : pattern) received[v] ^= 1u;
        auto shifted = dec.decode(received, cw);
        auto zero_based = dec.decode(word_with_flips(16, pattern));
        CAPTURE(seed);
        CHECK(shifted.success == zero_based.success);
        CHECK(shifted.iterations == zero_based.iterations);
        CHECK(shifted.error_support == zero_based.error_support);
        for (int j = 0; j < 16; ++j) {
            CHECK((shifted.decision[j] ^ cw[j]) == zero_based.decision[j]);
        }
    }
}

TEST_CASE("success always means a zero syndrome") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        ParityCheckMatrix H = testutil::random_pcm(6, 12, 1, 3, 500 + seed);
        TannerGraph G(H);
        testutil::SplitMix64 rng(seed);
        std::vector<int> pattern{testutil::rand_below(rng, 12), testutil::rand_below(rng, 12)};
        if (pattern[0] == pattern[1]) pattern.pop_back();
        HardDecisionDecoder dec(G, DecoderConfig{});
        auto out = dec.decode(word_with_flips(12, pattern));
        unsigned any = 0;
        for (int i = 0; i < H.m(); ++i) {
            unsigned parity = 0;
            for (int j : H.row(i)) parity ^= out.decision[j];
            any |= parity;
        }
        CHECK(out.success == (any == 0));
    }
}

TEST_CASE("gallager A equals gallager B with an all-extrinsic threshold") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ParityCheckMatrix H = testutil::random_pcm(7, 13, 2, 4, 4200 + seed);
        TannerGraph G(H);
        int max_deg = 0;
        for (int v = 0; v < G.n_vars(); ++v) max_deg = std::max(max_deg, G.var_degree(v));

        DecoderConfig ga;
        ga.algorithm = DecoderAlgorithm::GallagerA;
        DecoderConfig gb;
        gb.algorithm = DecoderAlgorithm::GallagerB;
        gb.gb_thresholds.resize(max_deg + 1);
        for (int d = 0; d <= max_deg; ++d) gb.gb_thresholds[d] = gallager_a_threshold(d);

        HardDecisionDecoder dec_a(G, ga), dec_b(G, gb);
        testutil::SplitMix64 rng(seed);
        std::vector<std::uint8_t> received(13);
        for (auto& bit : received) bit = rng.next() & 1u;
        auto out_a = dec_a.decode(received);
        auto out_b = dec_b.decode(received);
        CHECK(out_a.success == out_b.success);
        CHECK(out_a.decision == out_b.decision);
        CHECK(out_a.iterations == out_b.iterations);
    }
}

TEST_CASE("determinism: identical runs give identical outcomes") {
    ParityCheckMatrix H = testutil::make_ts53_shape();
    auto a = gallager_b_decode(H, word_with_flips(5, {2, 3, 4}));
    auto b = gallager_b_decode(H, word_with_flips(5, {2, 3, 4}));
    CHECK(a.decision == b.decision);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("length mismatch is rejected") {
    ParityCheckMatrix H = testutil::make_hamming_7_4();
    std::vector<std::uint8_t> wrong(6, 0);
    CHECK_THROWS_AS(gallager_b_decode(H, wrong), validation_error);
    std::vector<double> wrong_llr(8, 1.0);
    CHECK_THROWS_AS(min_sum_decode(H, wrong_llr), validation_error);
}

TEST_CASE("min-sum basics") {
    ParityCheckMatrix H = testutil::make_tanner_155();
    SUBCASE("strong positive LLRs succeed in zero iterations") {
        std::vector<double> llrs(155, 25.0);
        auto out = min_sum_decode(H, llrs);
        CHECK(out.success);
        CHECK(out.iterations == 0);
    }
    SUBCASE("one strongly wrong LLR is corrected quickly") {
        std::vector<double> llrs(155, 8.0);
        llrs[42] = -8.0;
        auto out = min_sum_decode(H, llrs);
        CHECK(out.success);
        CHECK(out.iterations <= 2);
        CHECK(out.error_support.empty());
    }
    SUBCASE("non-finite input is rejected") {
        std::vector<double> llrs(155, 1.0);
        llrs[3] = std::numeric_limits<double>::infinity();
        CHECK_THROWS_AS(min_sum_decode(H, llrs), validation_error);
    }
}

TEST_CASE("min-sum symmetry under the codeword remap") {
    // decode(llr * (-1)^c) relative to c behaves like decode(llr) relative
    // to the all-zero word.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ParityCheckMatrix H = testutil::random_pcm(8, 16, 2, 3, 6000 + seed);
        TannerGraph G(H);
        auto cw = random_codeword(H, seed * 13);
        testutil::SplitMix64 rng(seed);
        std::vector<double> llrs(16);
        for (auto& l : llrs) l = rng.next_double() * 4.0 - 1.0;  // mostly reliable zeros

        std::vector<double> remapped(16);
        for (int j = 0; j < 16; ++j) remapped[j] = cw[j] ? -llrs[j] : llrs[j];

        DecoderConfig config;
        config.algorithm = DecoderAlgorithm::MinSum;
        MinSumDecoder dec(G, config);
        auto base = dec.decode(llrs);
        auto shifted = dec.decode(remapped, cw);
        CAPTURE(seed);
        CHECK(base.success == shifted.success);
        CHECK(base.iterations == shifted.iterations);
        CHECK(base.error_support == shifted.error_support);
        for (int j = 0; j < 16; ++j) CHECK((shifted.decision[j] ^ cw[j]) == base.decision[j]);
    }
}

TEST_CASE("transmit") {
    std::vector<std::uint8_t> cw(64, 0);
    for (int k = 0; k < 64; k += 3) cw[k] = 1;

    SUBCASE("epsilon = 0 passes the word through") {
        CHECK(transmit_bsc(cw, 0.0, 7) == cw);
    }
    SUBCASE("epsilon = 0.5 is out of range") {
        CHECK_THROWS_AS(transmit_bsc(cw, 0.5, 7), validation_error);
        CHECK_THROWS_AS(transmit_bsc(cw, -0.1, 7), validation_error);
    }
    SUBCASE("identical seeds reproduce the noise") {
        CHECK(transmit_bsc(cw, 0.2, 123) == transmit_bsc(cw, 0.2, 123));
        CHECK(transmit_biawgn(cw, 0.8, 45) == transmit_biawgn(cw, 0.8, 45));
    }
    SUBCASE("tiny sigma keeps the signs of the transmitted symbols") {
        auto llrs = transmit_biawgn(cw, 1e-4, 11);
        for (int k = 0; k < 64; ++k) {
            CHECK(std::signbit(llrs[k]) == (cw[k] == 1));
        }
    }
    SUBCASE("sigma must be positive") {
        CHECK_THROWS_AS(transmit_biawgn(cw, 0.0, 1), validation_error);
    }
    SUBCASE("Eb/N0 conversion") {
        auto ch = biawgn_from_ebn0(0.0, 0.5);
        CHECK(ch.sigma == doctest::Approx(1.0));
    }
}
