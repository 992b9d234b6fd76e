#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tlat/simplex.hpp"

using namespace tlat;
using lp::LinearProgram;
using lp::Solution;
using lp::Status;

TEST_CASE("feasibility decisions") {
    {
        LinearProgram prog(2);
        prog.add_eq({R("1"), R("1")}, R("1"));
        Solution s = prog.feasible();
        REQUIRE(s.status == Status::optimal);
        CHECK(s.x[0] + s.x[1] == 1);
        CHECK(s.x[0] >= 0);
        CHECK(s.x[1] >= 0);
    }
    {
        // x1 - x2 = 2 and x1 + x2 = 1 force x2 = -1/2
        LinearProgram prog(2);
        prog.add_eq({R("1"), R("-1")}, R("2"));
        prog.add_eq({R("1"), R("1")}, R("1"));
        CHECK(prog.feasible().status == Status::infeasible);
    }
    {
        LinearProgram prog(2);
        prog.add_eq({R("1"), R("1")}, R("1"));
        prog.add_eq({R("1"), R("1")}, R("2"));
        CHECK(prog.feasible().status == Status::infeasible);
    }
    {
        // duplicated constraint exercises redundant-row elimination
        LinearProgram prog(2);
        prog.add_eq({R("1"), R("1")}, R("1"));
        prog.add_eq({R("1"), R("1")}, R("1"));
        prog.add_eq({R("2"), R("2")}, R("2"));
        CHECK(prog.feasible().status == Status::optimal);
    }
}

TEST_CASE("optimization basics") {
    {
        LinearProgram prog(2);
        prog.add_eq({R("1"), R("1")}, R("1"));
        Solution s = prog.minimize({R("1"), R("2")});
        REQUIRE(s.status == Status::optimal);
        CHECK(s.objective == 1);
        CHECK(s.x == std::vector<Rational>({R("1"), R("0")}));
    }
    {
        LinearProgram prog(1);
        prog.add_le({R("1")}, R("5"));
        Solution s = prog.minimize({R("-1")});
        REQUIRE(s.status == Status::optimal);
        CHECK(s.x[0] == 5);
        CHECK(s.objective == -5);
    }
    {
        LinearProgram prog(1);
        prog.add_ge({R("1")}, R("0"));
        CHECK(prog.minimize({R("-1")}).status == Status::unbounded);
    }
    {
        // exact fractional optimum
        LinearProgram prog(2);
        prog.add_eq({R("3"), R("7")}, R("1"));
        Solution s = prog.minimize({R("1"), R("1")});
        REQUIRE(s.status == Status::optimal);
        CHECK(s.objective == R("1/7"));
        CHECK(s.x == std::vector<Rational>({R("0"), R("1/7")}));
    }
}

TEST_CASE("degenerate pivoting terminates") {
    // Beale's cycling example; Bland's rule must reach the optimum -1/20.
    LinearProgram prog(4);
    prog.add_le({R("1/4"), R("-60"), R("-1/25"), R("9")}, R("0"));
    prog.add_le({R("1/2"), R("-90"), R("-1/50"), R("3")}, R("0"));
    prog.add_le({R("0"), R("0"), R("1"), R("0")}, R("1"));
    Solution s = prog.minimize({R("-3/4"), R("150"), R("-1/50"), R("6")});
    REQUIRE(s.status == Status::optimal);
    CHECK(s.objective == R("-1/20"));
    CHECK(s.x[0] == R("1/25"));
    CHECK(s.x[2] == 1);
}

TEST_CASE("sequential pinning finds lexicographic minima") {
    // minimize x1 first, then x2 with x1 pinned: (0, 1) for x1 + x2 >= 1.
    LinearProgram prog(2);
    prog.add_ge({R("1"), R("1")}, R("1"));
    Solution first = prog.minimize({R("1"), R("0")});
    REQUIRE(first.status == Status::optimal);
    CHECK(first.objective == 0);

    prog.add_eq({R("1"), R("0")}, first.objective);
    Solution second = prog.minimize({R("0"), R("1")});
    REQUIRE(second.status == Status::optimal);
    CHECK(second.x == std::vector<Rational>({R("0"), R("1")}));
}

TEST_CASE("mixed constraint systems") {
    // minimize 2x + 3y subject to x + y >= 2, x <= 3, y <= 3, x + 2y = 4
    LinearProgram prog(2);
    prog.add_ge({R("1"), R("1")}, R("2"));
    prog.add_le({R("1"), R("0")}, R("3"));
    prog.add_le({R("0"), R("1")}, R("3"));
    prog.add_eq({R("1"), R("2")}, R("4"));
    Solution s = prog.minimize({R("2"), R("3")});
    REQUIRE(s.status == Status::optimal);
    // vertices of the feasible segment: (0,2) cost 6 and (3,1/2) cost 15/2
    CHECK(s.objective == 6);
    CHECK(s.x == std::vector<Rational>({R("0"), R("2")}));
}
