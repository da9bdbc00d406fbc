#include "helpers.hpp"

#include "finstoch/lp.hpp"

using namespace finstoch;
using namespace finstoch::test;
using finstoch::lp::LinSystem;
using finstoch::lp::Status;

TEST_CASE("single equation")
{
    LinSystem sys(1);
    sys.add_row(vec({"1"}), R("2"));
    const auto r = lp::solve(sys);
    REQUIRE(r.feasible());
    CHECK(*r.witness == vec({"2"}));
    CHECK(lp::solve_fm(sys) == Status::feasible);
}

TEST_CASE("nonnegativity makes a solvable square system infeasible")
{
    LinSystem sys(2);
    sys.add_row(vec({"1", "1"}), R("1"));
    sys.add_row(vec({"1", "-1"}), R("3"));
    CHECK(lp::solve(sys).status == Status::infeasible);
    CHECK_FALSE(lp::solve(sys).witness);
    CHECK(lp::solve_fm(sys) == Status::infeasible);
}

TEST_CASE("empty systems are feasible")
{
    const LinSystem none(0);
    const auto r = lp::solve(none);
    REQUIRE(r.feasible());
    CHECK(r.witness->size() == 0);
    CHECK(lp::solve_fm(none) == Status::feasible);

    const LinSystem free_var(1);
    CHECK(lp::solve(free_var).feasible());
    CHECK(lp::solve_fm(free_var) == Status::feasible);
}

TEST_CASE("redundant and degenerate rows")
{
    LinSystem sys(3);
    sys.add_row(vec({"1", "1", "1"}), R("1"));
    sys.add_row(vec({"2", "2", "2"}), R("2"));
    sys.add_row(vec({"1", "-1", "0"}), R("0"));
    sys.add_row(vec({"0", "0", "0"}), R("0"));
    const auto r = lp::solve(sys);
    REQUIRE(r.feasible());
    CHECK(sys.satisfied_by(*r.witness));
    CHECK(lp::solve_fm(sys) == Status::feasible);

    LinSystem zero_row(1);
    zero_row.add_row(vec({"0"}), R("1"));
    CHECK(lp::solve(zero_row).status == Status::infeasible);
    CHECK(lp::solve_fm(zero_row) == Status::infeasible);
}

TEST_CASE("negative right-hand sides")
{
    LinSystem sys(2);
    sys.add_row(vec({"-1", "1"}), R("-1/2"));
    const auto r = lp::solve(sys);
    REQUIRE(r.feasible());
    CHECK(sys.satisfied_by(*r.witness));
    CHECK(r.witness->minCoeff() >= 0);
}

TEST_CASE("Fourier-Motzkin guard")
{
    const LinSystem big(lp::kFourierMotzkinVarLimit + 1);
    CHECK_THROWS_AS(lp::solve_fm(big), lp::GuardExceeded);
    CHECK(lp::solve(big).feasible());
}

TEST_CASE("row width must match")
{
    LinSystem sys(2);
    CHECK_THROWS(sys.add_row(vec({"1"}), R("1")));
}
