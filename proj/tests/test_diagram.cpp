#include "helpers.hpp"

#include "finstoch/diagram.hpp"
#include "finstoch/errors.hpp"

using namespace finstoch;
using namespace finstoch::test;
using namespace finstoch::diagram;

namespace {

Environment env()
{
    Environment e;
    e.spaces.emplace("X", FinSpace("X", {"a", "b"}));
    e.spaces.emplace("Y", FinSpace("Y", {"0", "1", "2"}));
    const FinSpace& x = e.spaces.at("X");
    const FinSpace& y = e.spaces.at("Y");
    e.generators.emplace("f", kernel(x, y, {{"1/2", "1/2", "0"}, {"0", "1/3", "2/3"}}));
    e.generators.emplace("g", kernel(y, x, {{"1", "0"}, {"1/2", "1/2"}, {"0", "1"}}));
    e.generators.emplace("p", Kernel(dist(x, {"1/4", "3/4"})));
    return e;
}

}   // namespace

TEST_CASE("parse builtins")
{
    CHECK(*parse("id[X]") == *Expr::builtin(Kind::id, {"X"}));
    CHECK(*parse("swap[X, Y]") == *Expr::builtin(Kind::swap, {"X", "Y"}));
    CHECK(*parse("f'") == *Expr::gen("f'"));
}

TEST_CASE("tensor binds tighter than composition")
{
    const auto shape = Expr::seq(Expr::builtin(Kind::copy, {"X"}),
                                 Expr::par(Expr::builtin(Kind::id, {"X"}), Expr::gen("f")));
    CHECK(*parse("copy[X] ; (id[X] * f)") == *shape);
    CHECK(*parse("copy[X] ; id[X] * f") == *shape);
    CHECK(*parse("f ; g * h") == *Expr::seq(Expr::gen("f"), Expr::par(Expr::gen("g"), Expr::gen("h"))));
    CHECK(*parse("a ; b ; c") == *Expr::seq(Expr::seq(Expr::gen("a"), Expr::gen("b")), Expr::gen("c")));
}

TEST_CASE("print and parse round-trip")
{
    for (const char* text : {"f ; (g ; h)", "(f ; g) * h", "f * (g * h)", "f * g * h", "copy[X] ; swap[X,X]",
                             "(a ; b) * (c ; d) ; e", "del[I]"})
    {
        const ExprPtr e = parse(text);
        CHECK(print(*e) == text);
        CHECK(*parse(print(*e)) == *e);
    }
}

TEST_CASE("syntax errors carry line and column")
{
    CHECK_THROWS_WITH_AS(parse("id[X"), doctest::Contains("1:5"), ParseError);
    CHECK_THROWS_WITH_AS(parse("f ;"), doctest::Contains("1:4"), ParseError);
    CHECK_THROWS_AS(parse("copy"), ParseError);
    CHECK_THROWS_AS(parse("f $ g"), ParseError);
    CHECK_THROWS_AS(parse("(f"), ParseError);
    try
    {
        parse_lines("f\n\ng ; ;");
        FAIL("expected a parse error");
    }
    catch (const ParseError& e)
    {
        CHECK(e.line() == 3);
        CHECK(e.column() == 5);
    }
}

TEST_CASE("parse_lines skips blanks and comments")
{
    const auto exprs = parse_lines("# header\nf ; g\n\n  id[X]   # trailing\n");
    REQUIRE(exprs.size() == 2);
    CHECK(*exprs[1] == *Expr::builtin(Kind::id, {"X"}));
}

TEST_CASE("typechecking")
{
    const Environment e = env();
    const TypedExpr c = typecheck(parse("copy[X]"), e);
    CHECK(c.src == e.spaces.at("X"));
    CHECK(c.dst == tensor(e.spaces.at("X"), e.spaces.at("X")));

    const TypedExpr s = typecheck(parse("swap[X,Y] ; swap[Y,X]"), e);
    CHECK(s.src == s.dst);
    CHECK(s.src == tensor(e.spaces.at("X"), e.spaces.at("Y")));

    CHECK_THROWS_WITH_AS(typecheck(parse("del[X] ; f"), e), doctest::Contains("I{*}"), TypeError);
    CHECK_THROWS_WITH_AS(typecheck(parse("del[X] ; f"), e), doctest::Contains("X{a,b}"), TypeError);
    CHECK_THROWS_WITH_AS(typecheck(parse("k"), e), doctest::Contains("k"), TypeError);
    CHECK_THROWS_AS(typecheck(parse("id[W]"), e), TypeError);
}

TEST_CASE("evaluation")
{
    const Environment e = env();
    const FinSpace& x = e.spaces.at("X");
    CHECK(evaluate("copy[X] ; (del[X] * id[X])", e) == identity(x));
    CHECK(evaluate("f ; g", e) == compose(e.generators.at("f"), e.generators.at("g")));
    CHECK(evaluate("f * g", e) == tensor(e.generators.at("f"), e.generators.at("g")));
    CHECK(evaluate("p ; copy[X] ; id[X] * del[X]", e) == e.generators.at("p"));
    CHECK(evaluate("f ; del[Y]", e) == del(x));
}
