#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "lda/errors.hpp"
#include "lda/laver.hpp"
#include "lda/term.hpp"

using namespace lda;

TEST_CASE("level 1 table") {
    const LaverTable& t = LaverTable::level(1);
    CHECK(t.elements() == 2);
    CHECK(t.at(1, 1) == 2);
    CHECK(t.at(1, 2) == 2);
    CHECK(t.at(2, 1) == 1);
    CHECK(t.at(2, 2) == 2);
}

TEST_CASE("level 2 table") {
    const LaverTable& t = LaverTable::level(2);
    CHECK(t.elements() == 4);
    const std::uint16_t expect[4][4] = {
        {2, 4, 2, 4},
        {3, 4, 3, 4},
        {4, 4, 4, 4},
        {1, 2, 3, 4},
    };
    for (std::uint32_t p = 1; p <= 4; ++p)
        for (std::uint32_t q = 1; q <= 4; ++q)
            CHECK(t.at(p, q) == expect[p - 1][q - 1]);
}

TEST_CASE("row one cycles through the even-step ladder") {
    // In every table row p starts at p+1 and ends at the table size.
    for (std::uint32_t n = 1; n <= 6; ++n) {
        const LaverTable& t = LaverTable::level(n);
        const std::uint32_t N = t.elements();
        for (std::uint32_t p = 1; p <= N; ++p) {
            CHECK(t.at(p, 1) == (p == N ? 1 : p + 1));
            CHECK(t.at(p, N) == N);
        }
    }
}

TEST_CASE("row periods are powers of two") {
    CHECK(LaverTable::level(2).row_period(1) == 2);
    CHECK(LaverTable::level(2).row_period(3) == 1);
    for (std::uint32_t n = 1; n <= 7; ++n) {
        const LaverTable& t = LaverTable::level(n);
        const std::uint32_t N = t.elements();
        CHECK(t.row_period(N) == N);  // bottom row is the identity
        for (std::uint32_t p = 1; p <= N; ++p) {
            std::uint32_t d = t.row_period(p);
            CHECK((d & (d - 1)) == 0);
            // the row really repeats with period d
            for (std::uint32_t q = 1; q + d <= N; ++q)
                CHECK(t.at(p, q) == t.at(p, q + d));
        }
    }
}

TEST_CASE("tables satisfy left distributivity") {
    for (std::uint32_t n = 1; n <= 6; ++n)
        CHECK(LaverTable::level(n).left_distributive());
}

TEST_CASE("each table projects onto the previous one") {
    for (std::uint32_t n = 2; n <= 7; ++n)
        CHECK(LaverTable::level(n).projects_onto(LaverTable::level(n - 1)));
}

TEST_CASE("eval maps application to the table operation") {
    TermUniverse u(1);
    const LaverTable& t = LaverTable::level(3);
    std::unordered_map<TermId, std::uint16_t> memo;
    std::vector<std::uint16_t> asn{1};
    CHECK(t.eval(u, u.parse("x"), asn, memo) == 1);
    CHECK(t.eval(u, u.parse("xx"), asn, memo) == 2);
    CHECK(t.eval(u, u.parse("xxx"), asn, memo) == 3);
    CHECK(t.eval(u, u.parse("x(xx)"), asn, memo) == t.at(1, 2));
    CHECK(t.eval(u, u.parse("(xx)(xx)"), asn, memo) == t.at(2, 2));
}

TEST_CASE("tables refute distinct small terms") {
    TermUniverse u(1);
    TermId a = u.parse("x(xx)");
    TermId b = u.parse("(xx)x");
    auto r = refute_equiv(u, a, b, 4);
    REQUIRE(r.has_value());
    // the witness really distinguishes the two terms
    const LaverTable& t = LaverTable::level(r->level);
    std::unordered_map<TermId, std::uint16_t> memo;
    CHECK(t.eval(u, a, r->assignment, memo) != t.eval(u, b, r->assignment, memo));

    // x(xx) and (xx)(xx) are one rewrite apart, so no table separates them
    CHECK_FALSE(refute_equiv(u, u.parse("x(xx)"), u.parse("(xx)(xx)"), 5).has_value());
}

TEST_CASE("csv dump has one row per element") {
    std::string csv = LaverTable::level(2).to_csv();
    std::istringstream in(csv);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 3);
    }
    CHECK(rows == 4);
}
