#include <doctest.h>

#include <algorithm>

#include "lda/errors.hpp"
#include "lda/ld_engine.hpp"

using namespace lda;

namespace {

struct Fx {
    TermUniverse u{1};
    LdEngine eng{u, Budget{}};
    TermId operator()(const char* s) { return u.parse(s); }
};

struct Fx2 {
    TermUniverse u{3};
    LdEngine eng{u, Budget{}};
    TermId operator()(const char* s) { return u.parse(s); }
};

}  // namespace

TEST_CASE("compare decides the basic order") {
    Fx f;
    CHECK(f.eng.compare(f("x"), f("x")) == CompareOutcome::Equal);
    CHECK(f.eng.compare(f("x(xx)"), f("(xx)(xx)")) == CompareOutcome::Equal);
    CHECK(f.eng.compare(f("x"), f("xx")) == CompareOutcome::Less);
    CHECK(f.eng.compare(f("xx"), f("x")) == CompareOutcome::Greater);
    CHECK(f.eng.compare(f("x"), f("x(xx)")) == CompareOutcome::Less);
    CHECK(f.eng.compare(f("xx"), f("x(xx)")) == CompareOutcome::Less);
    CHECK(f.eng.compare(f("xxx"), f("x(xx)")) == CompareOutcome::Less);
    CHECK(f.eng.compare(f("x(xx)"), f("xxx")) == CompareOutcome::Greater);
}

TEST_CASE("compare finds clashes between generators") {
    Fx2 f;
    CHECK(f.eng.compare(f("x"), f("y")) == CompareOutcome::Clash);
    CHECK(f.eng.compare(f("xx"), f("xy")) == CompareOutcome::Clash);
    CHECK(f.eng.compare(f("xy"), f("xz")) == CompareOutcome::Clash);
    CHECK(f.eng.compare(f("x(xy)"), f("x(yy)")) == CompareOutcome::Clash);
    CHECK(f.eng.compare(f("xy"), f("x(yy)")) == CompareOutcome::Less);
    CHECK(f.eng.compare(f("y"), f("y(xx)")) == CompareOutcome::Less);
}

TEST_CASE("compare is antisymmetric and total on the small universe") {
    Fx f;
    auto all = f.u.universe(4);
    for (TermId a : all)
        for (TermId b : all) {
            CompareOutcome ab = f.eng.compare(a, b);
            CompareOutcome ba = f.eng.compare(b, a);
            if (ab == CompareOutcome::Less) CHECK(ba == CompareOutcome::Greater);
            if (ab == CompareOutcome::Equal) CHECK(ba == CompareOutcome::Equal);
            if (a == b) CHECK(ab == CompareOutcome::Equal);
            CHECK(ab != CompareOutcome::Clash);  // single generator never clashes
        }
}

TEST_CASE("the rewrite law holds for every enumerated triple") {
    Fx f;
    auto all = f.u.universe(3);
    for (TermId a : all)
        for (TermId b : all)
            for (TermId c : all) {
                TermId lhs = f.u.app(a, f.u.app(b, c));
                TermId rhs = f.u.app(f.u.app(a, b), f.u.app(a, c));
                CHECK(f.eng.ld_equiv(lhs, rhs));
            }

    Fx2 g;
    auto all2 = g.u.universe(2);
    for (TermId a : all2)
        for (TermId b : all2)
            for (TermId c : all2) {
                TermId lhs = g.u.app(a, g.u.app(b, c));
                TermId rhs = g.u.app(g.u.app(a, b), g.u.app(a, c));
                CHECK(g.eng.ld_equiv(lhs, rhs));
            }
}

TEST_CASE("ld_equiv separates the shape pair") {
    Fx f;
    CHECK(f.eng.ld_equiv(f("x(xx)"), f("(xx)(xx)")));
    CHECK_FALSE(f.eng.ld_equiv(f("x(xx)"), f("(xx)x")));
    CHECK_FALSE(f.eng.ld_equiv(f("x"), f("xx")));
}

TEST_CASE("table refutation is sound on equivalent pairs") {
    Fx f;
    CHECK_FALSE(f.eng.table_refutes(f("x(xx)"), f("(xx)(xx)")));
    CHECK_FALSE(f.eng.table_refutes(f("x(xx)"), f("(xxx)(xxx)")));
    CHECK(f.eng.table_refutes(f("x"), f("xx")));
    CHECK(f.eng.table_refutes(f("xx"), f("xxx")));
}

TEST_CASE("left divisibility and quotients") {
    Fx f;
    CHECK(f.eng.left_divides(f("x"), f("xx")));
    CHECK(f.eng.quotient(f("x"), f("xx")) == f("x"));
    CHECK(f.eng.left_divides(f("x"), f("x(xx)")));
    CHECK(f.eng.quotient(f("x"), f("x(xx)")) == f("xx"));
    CHECK(f.eng.left_divides(f("xx"), f("x(xx)")));
    CHECK(f.eng.quotient(f("xx"), f("x(xx)")) == f("xx"));
    CHECK(f.eng.left_divides(f("xx"), f("xxx")));
    CHECK(f.eng.quotient(f("xx"), f("xxx")) == f("x"));
    CHECK_FALSE(f.eng.left_divides(f("x"), f("xxx")));
    CHECK_FALSE(f.eng.left_divides(f("x"), f("x")));
    CHECK_FALSE(f.eng.left_divides(f("x(xx)"), f("xx")));
    CHECK_THROWS_AS(f.eng.quotient(f("x"), f("xxx")), NotDivisible);
}

TEST_CASE("quotients respect multiplication") {
    Fx f;
    auto all = f.u.universe(4);
    for (TermId a : all)
        for (TermId c : all) {
            TermId b = f.u.app(a, c);
            CHECK(f.eng.left_divides(a, b));
            TermId q = f.eng.quotient(a, b);
            CHECK(f.eng.ld_equiv(q, c));
        }
}

TEST_CASE("common powers match the principal examples") {
    Fx f;
    auto p = f.eng.common_power(f("x"), f("xx"));
    CHECK(p.first == 1);
    CHECK(p.second == 0);
    auto q = f.eng.common_power(f("x"), f("x(xx)"));
    CHECK(q.first == 2);
    CHECK(q.second == 0);
    auto r = f.eng.common_power(f("xx"), f("x"));
    CHECK(r.first == 0);
    CHECK(r.second == 1);
    auto s = f.eng.common_power(f("xxx"), f("(xx)x"));
    CHECK(s.first == s.second);  // identical terms align at the same height
}

TEST_CASE("square roots collect every witness in order") {
    Fx f;
    // (xx)(xx) is the square of xx, and of xxx after one backward fold:
    // (xxx)(xxx) = ((xx)x)((xx)x) -> (xx)(xx).
    auto roots = f.eng.square_roots(f("x(xx)"));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == f("xx"));
    CHECK(roots[1] == f("xxx"));
    for (TermId r : roots) CHECK(f.eng.ld_equiv(f.u.app(r, r), f("x(xx)")));

    CHECK(f.eng.square_roots(f("x")).empty());
    // generators square to their literal double
    auto rxx = f.eng.square_roots(f("xx"));
    REQUIRE(rxx.size() == 1);
    CHECK(rxx[0] == f("x"));
}

TEST_CASE("nth roots walk the power tower") {
    Fx f;
    TermId x = f("x");
    TermId t3 = f.u.right_power(x, 3, 1 << 20);
    auto r2 = f.eng.nth_root(t3, 2);
    REQUIRE(r2.has_value());
    CHECK(*r2 == f("xx"));
    auto r3 = f.eng.nth_root(t3, 3);
    REQUIRE(r3.has_value());
    CHECK(*r3 == x);
    CHECK_FALSE(f.eng.nth_root(t3, 4).has_value());
    CHECK(f.eng.nth_root(t3, 0) == t3);
    CHECK_FALSE(f.eng.nth_root(f("xx"), 5).has_value());
}

TEST_CASE("closures connect rewrite neighbours both ways") {
    Fx f;
    bool complete = false;
    auto around = f.eng.bounded_closure(f("x(xx)"), 8, 10000, &complete);
    CHECK(complete);
    CHECK(std::find(around.begin(), around.end(), f("(xx)(xx)")) != around.end());
    CHECK(f.eng.connected_within(f("(xx)(xx)"), f("x(xx)"), 8, 10000));
    CHECK_FALSE(f.eng.connected_within(f("x"), f("xx"), 8, 10000));
}

TEST_CASE("exhausted budgets surface as exceptions, not answers") {
    TermUniverse u(1);
    Budget tiny;
    tiny.compare_steps = 3;
    tiny.expansion_size_floor = 4;
    tiny.expansion_size_factor = 0;
    LdEngine eng(u, tiny);
    TermId a = u.parse("x(x(x(xx)))");
    TermId b = u.parse("(xx)(x(x(xx)))");
    CHECK_THROWS_AS(eng.compare(a, b), BudgetExceeded);
}

TEST_CASE("budget scaling multiplies the caps") {
    Budget b;
    Budget big = b.scaled(3.0);
    CHECK(big.compare_steps == 3 * b.compare_steps);
    CHECK(big.table_levels >= b.table_levels);
    Budget small = b.scaled(0.5);
    CHECK(small.compare_steps == b.compare_steps / 2);
}
