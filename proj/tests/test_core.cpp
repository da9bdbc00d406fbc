#include "helpers.hpp"

#include "finstoch/errors.hpp"
#include "finstoch/kernel.hpp"
#include "finstoch/limits.hpp"

using namespace finstoch;
using namespace finstoch::test;

namespace {

const FinSpace bits("B", {"0", "1"});
const FinSpace ab("X", {"a", "b"});

}   // namespace

TEST_CASE("rationals parse, print and stay in lowest terms")
{
    CHECK(R("2/4") == R("1/2"));
    CHECK(to_string(R("6/3")) == "2");
    CHECK(to_string(R("-3/9")) == "-1/3");
    CHECK(to_string(R("+5")) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(lex_less(vec({"0", "1"}), vec({"1/2", "0"})));
}

TEST_CASE("spaces keep declaration order and build lexicographic products")
{
    const FinSpace x("X", {"b", "a"});
    CHECK(x.label(0) == "b");
    CHECK(*x.index_of("a") == 1);
    CHECK_THROWS_AS(FinSpace("D", {"a", "a"}), InvariantError);

    const FinSpace xb = tensor(ab, bits);
    CHECK(xb.size() == 4);
    CHECK(xb.label(1) == "(a,1)");
    CHECK(xb.label(2) == "(b,0)");
    CHECK(xb.name() == "X*B");
    CHECK(tensor(ab, FinSpace::unit()) == ab);
    CHECK(tensor(FinSpace::unit(), ab) == ab);
    CHECK(FinSpace().empty());
}

TEST_CASE("dists and kernels reject non-stochastic data with the exact deficit")
{
    CHECK_THROWS_WITH_AS(Dist(ab, vec({"1/2", "2/5"})), doctest::Contains("deficit 1/10"), InvariantError);
    CHECK_THROWS_AS(Dist(ab, vec({"3/2", "-1/2"})), InvariantError);
    CHECK_THROWS_WITH_AS(kernel(ab, bits, {{"1", "0"}, {"1/3", "1/3"}}), doctest::Contains("deficit 1/3"),
                         InvariantError);
    CHECK_THROWS_AS(Dist(FinSpace(), VectorXr(0)), InvariantError);
    CHECK(Kernel(FinSpace(), ab, MatrixXr(2, 0)).matrix().size() == 0);
}

TEST_CASE("identity")
{
    CHECK(identity(FinSpace::unit()).matrix() == MatrixXr::Identity(1, 1));
    CHECK(identity(ab) == kernel(ab, ab, {{"1", "0"}, {"0", "1"}}));
    const Kernel k = kernel(ab, bits, {{"1/2", "1/2"}, {"1/3", "2/3"}});
    CHECK(compose(identity(ab), k) == k);
    CHECK(compose(k, identity(bits)) == k);
}

TEST_CASE("composition")
{
    const Kernel half = kernel(bits, bits, {{"1/2", "1/2"}, {"1/2", "1/2"}});
    CHECK(compose(dist(bits, {"1/3", "2/3"}), half) == dist(bits, {"1/2", "1/2"}));

    const DetMap f(ab, bits, {1, 0});
    const DetMap g(bits, ab, {1, 1});
    CHECK(compose(f.embed(), g.embed()) == compose(f, g).embed());
    CHECK_THROWS_AS(compose(half, kernel(ab, bits, {{"1", "0"}, {"0", "1"}})), SpaceMismatch);
}

TEST_CASE("tensor")
{
    const Kernel k = kernel(ab, bits, {{"1/2", "1/2"}, {"1/3", "2/3"}});
    CHECK(tensor(k, identity(FinSpace::unit())) == k);
    CHECK(tensor(Dist::dirac(ab, 0), Dist::dirac(bits, 1)) == Dist::dirac(tensor(ab, bits), 1));
    CHECK(tensor(dist(ab, {"1/2", "1/2"}), dist(bits, {"1/3", "2/3"}))
          == dist(tensor(ab, bits), {"1/6", "1/3", "1/6", "1/3"}));
}

TEST_CASE("copy, discard and swap")
{
    const FinSpace x("X", {"u", "v", "w"});
    const Kernel cp = copy(x);
    CHECK(compose(cp, tensor(del(x), identity(x))) == identity(x));
    CHECK(compose(cp, tensor(identity(x), del(x))) == identity(x));
    CHECK(compose(cp, tensor(del(x), del(x))) == del(x));
    CHECK(compose(swap(ab, bits), swap(bits, ab)) == identity(tensor(ab, bits)));
    CHECK(cp(4, 1) == 1);
    CHECK(cp(3, 1) == 0);
    CHECK(del(x).matrix() == MatrixXr::Ones(1, 3));
}

TEST_CASE("marginals")
{
    const FinSpace xb = tensor(ab, bits);
    const Dist p = dist(xb, {"1/2", "1/4", "1/4", "0"});
    CHECK(marginal(p, Side::left) == dist(ab, {"3/4", "1/4"}));
    CHECK(marginal(p, Side::right) == dist(bits, {"3/4", "1/4"}));

    const Dist q = dist(bits, {"1/5", "4/5"});
    CHECK(marginal(tensor(dist(ab, {"1/3", "2/3"}), q), Side::right) == q);
    const Kernel doubled = compose(Kernel(q), copy(bits));
    CHECK(marginal(doubled, Side::left) == Kernel(q));
    CHECK(marginal(doubled, Side::right) == Kernel(q));
    CHECK_THROWS_AS(marginal(q, Side::left), SpaceMismatch);
}

TEST_CASE("determinism")
{
    CHECK(is_deterministic(DetMap(ab, bits, {1, 1}).embed()));
    CHECK_FALSE(is_deterministic(kernel(ab, bits, {{"1/2", "1/2"}, {"1", "0"}})));
    CHECK(is_deterministic(kernel(ab, ab, {{"0", "1"}, {"1", "0"}})));
    const auto m = DetMap::from_kernel(kernel(ab, ab, {{"0", "1"}, {"1", "0"}}));
    REQUIRE(m);
    CHECK(m->images() == std::vector<std::size_t>{1, 0});
}

TEST_CASE("almost sure equality")
{
    const Kernel f = kernel(ab, bits, {{"1", "0"}, {"1", "0"}});
    const Kernel g = kernel(ab, bits, {{"1", "0"}, {"0", "1"}});
    CHECK(as_equal(f, f, Kernel(dist(ab, {"1/2", "1/2"}))));
    CHECK(as_equal(f, g, Kernel(Dist::dirac(ab, 0))));
    const auto cx = as_counterexample(f, g, Kernel(dist(ab, {"1/2", "1/2"})));
    REQUIRE(cx);
    CHECK(cx->x == 1);
    CHECK(cx->y == 0);
    CHECK(is_as_deterministic(kernel(ab, bits, {{"1", "0"}, {"1/2", "1/2"}}), Kernel(Dist::dirac(ab, 0))));
    CHECK_FALSE(is_as_deterministic(kernel(ab, bits, {{"1", "0"}, {"1/2", "1/2"}}),
                                    Kernel(dist(ab, {"1/2", "1/2"}))));
}

TEST_CASE("equalizers")
{
    const DetMap id = identity_map(ab);
    const DetMap to_a(ab, ab, {0, 0});

    const Equalizer same = equalizer(id, id);
    CHECK(same.object.size() == 2);
    const Kernel p(dist(ab, {"1/3", "2/3"}));
    CHECK(compose(same.factor_through(p), same.inclusion.embed()) == p);

    const Equalizer e = equalizer(id, to_a);
    REQUIRE(e.object.size() == 1);
    CHECK(e.object.label(0) == "a");
    const Kernel point(Dist::dirac(ab, 0));
    CHECK(compose(e.factor_through(point), e.inclusion.embed()) == point);
    CHECK_THROWS_WITH_AS(e.factor_through(Kernel(dist(ab, {"1/2", "1/2"}))), doctest::Contains("b"),
                         FactorizationError);

    const Equalizer none = equalizer(DetMap(ab, bits, {0, 0}), DetMap(ab, bits, {1, 1}));
    CHECK(none.object.empty());
    CHECK_THROWS_AS(none.factor_through(p), FactorizationError);
}

TEST_CASE("pullbacks")
{
    const DetMap neg(bits, bits, {1, 0});
    const Pullback pb = pullback(identity_map(bits), neg);
    REQUIRE(pb.object().size() == 2);
    CHECK(pb.object().label(0) == "(0,1)");
    CHECK(pb.object().label(1) == "(1,0)");
    CHECK(compose(pb.proj_left, identity_map(bits)) == compose(pb.proj_right, neg));

    const FinSpace one("Z", {"z"});
    const Pullback full = pullback(DetMap(ab, one, {0, 0}), DetMap(bits, one, {0, 0}));
    CHECK(full.object().size() == 4);

    const DetMap f(ab, bits, {1, 1});
    const Pullback graph = pullback(f, identity_map(bits));
    CHECK(graph.object().size() == 2);
    CHECK(graph.proj_right.images() == std::vector<std::size_t>{1, 1});
}
