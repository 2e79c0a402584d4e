#include <doctest.h>

#include "cyclift/alist.hpp"
#include "cyclift/errors.hpp"
#include "testutil.hpp"

using namespace cyclift;

namespace {

const char* kSmallAlist =
    "3 2\n"
    "2 2\n"
    "1 2 1\n"
    "2 2\n"
    "1\n"
    "1 2\n"
    "2\n"
    "1 2\n"
    "2 3\n";

}  // namespace

TEST_CASE("parse_alist reads the 2x3 example") {
    ParityCheckMatrix H = parse_alist(kSmallAlist);
    CHECK(H.m() == 2);
    CHECK(H.n() == 3);
    CHECK(H.entries() == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}, {1, 2}});
}

TEST_CASE("parse_alist accepts zero padding") {
    const char* padded =
        "3 2\n"
        "2 2\n"
        "1 2 1\n"
        "2 2\n"
        "1 0\n"
        "1 2\n"
        "2 0\n"
        "1 2\n"
        "2 3\n";
    CHECK(parse_alist(padded) == parse_alist(kSmallAlist));
}

TEST_CASE("emit_alist round-trips") {
    ParityCheckMatrix H = parse_alist(kSmallAlist);
    CHECK(parse_alist(emit_alist(H)) == H);
}

TEST_CASE("round trip handles a zero-weight row") {
    ParityCheckMatrix H(3, 2, {{0, 0}, {2, 1}});  // row 1 is empty
    ParityCheckMatrix back = parse_alist(emit_alist(H));
    CHECK(back == H);
    CHECK(back.row_weight(1) == 0);
}

TEST_CASE("round trip on random matrices") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        ParityCheckMatrix H = testutil::random_pcm(5 + seed % 7, 8 + seed % 9, 0, 3, seed);
        CAPTURE(seed);
        CHECK(parse_alist(emit_alist(H)) == H);
    }
}

TEST_CASE("Tanner fixture emits and re-parses") {
    ParityCheckMatrix H = testutil::make_tanner_155();
    ParityCheckMatrix back = parse_alist(emit_alist(H));
    CHECK(back == H);
    CHECK(back.n() == 155);
    CHECK(back.m() == 93);
    for (int i = 0; i < back.m(); ++i) CHECK(back.row_weight(i) == 5);
    for (int j = 0; j < back.n(); ++j) CHECK(back.col_weight(j) == 3);
}

TEST_CASE("errors carry line numbers") {
    SUBCASE("malformed header") {
        try {
            parse_alist("abc\n");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line() == 1);
        }
    }
    SUBCASE("column index out of range") {
        // n=155-style bound violation on a small matrix: check index 200.
        const char* text =
            "3 2\n"
            "2 2\n"
            "1 2 1\n"
            "2 2\n"
            "200\n"
            "1 2\n"
            "2\n"
            "1 2\n"
            "2 3\n";
        try {
            parse_alist(text);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line() == 5);
        }
    }
    SUBCASE("row list inconsistent with columns") {
        const char* text =
            "3 2\n"
            "2 2\n"
            "1 2 1\n"
            "2 2\n"
            "1\n"
            "1 2\n"
            "2\n"
            "1 3\n"  // claims (0,2), columns say (0,1)
            "2 3\n";
        try {
            parse_alist(text);
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line() == 8);
        }
    }
    SUBCASE("duplicate column neighbor") {
        const char* text =
            "2 2\n"
            "2 1\n"
            "2 0\n"
            "1 1\n"
            "1 1\n"
            "\n"
            "1\n"
            "1\n";
        CHECK_THROWS_AS(parse_alist(text), parse_error);
    }
    SUBCASE("truncated input") {
        CHECK_THROWS_AS(parse_alist("3 2\n2 2\n"), parse_error);
    }
}
