#include "helpers.hpp"

#include "finstoch/conditionals.hpp"
#include "finstoch/errors.hpp"

using namespace finstoch;
using namespace finstoch::test;

namespace {

const FinSpace bits("B", {"0", "1"});
const FinSpace coin("H", {"h", "t"});

Kernel rebuild(const Kernel& joint)
{
    const FinSpace& x = joint.dst().left();
    const FinSpace& a = joint.src();
    Kernel k = compose(copy(a), tensor(marginal(joint, Side::left), identity(a)));
    k = compose(k, tensor(copy(x), identity(a)));
    k = compose(k, associator(x, x, a).embed());
    return compose(k, tensor(identity(x), conditional(joint)));
}

}   // namespace

TEST_CASE("conditional of an independent joint is its factor")
{
    const FinSpace bb = tensor(bits, bits);
    const Kernel joint(dist(bb, {"1/4", "1/4", "1/4", "1/4"}));
    CHECK(conditional(joint) == kernel(bits, bits, {{"1/2", "1/2"}, {"1/2", "1/2"}}));
    CHECK(rebuild(joint) == joint);
}

TEST_CASE("conditional of the diagonal is the identity")
{
    const Kernel joint(dist(tensor(bits, bits), {"1/2", "0", "0", "1/2"}));
    CHECK(conditional(joint) == identity(bits));
}

TEST_CASE("null rows of a conditional are uniform")
{
    const Kernel joint(dist(tensor(bits, bits), {"1", "0", "0", "0"}));
    const Kernel c = conditional(joint);
    CHECK(c.column(1) == dist(bits, {"1/2", "1/2"}));
    CHECK(rebuild(joint) == joint);
}

TEST_CASE("conditional with a parameter")
{
    const FinSpace a("A", {"u", "v"});
    const Kernel joint = kernel(a, tensor(bits, coin), {{"1/2", "0", "1/4", "1/4"}, {"0", "0", "1/3", "2/3"}});
    const Kernel c = conditional(joint);
    CHECK(c.src() == tensor(bits, a));
    CHECK(c.column(0) == dist(coin, {"1", "0"}));
    CHECK(c.column(3) == dist(coin, {"1/3", "2/3"}));
    CHECK(rebuild(joint) == joint);
}

TEST_CASE("Bayesian inverse")
{
    const Kernel f = kernel(bits, coin, {{"1", "0"}, {"1/2", "1/2"}});
    const Kernel inv = bayes_invert(f, dist(bits, {"1/2", "1/2"}));
    CHECK(inv.column(0) == dist(bits, {"2/3", "1/3"}));
    CHECK(inv.column(1) == dist(bits, {"0", "1"}));

    const DetMap flip(bits, bits, {1, 0});
    CHECK(bayes_invert(flip.embed(), dist(bits, {"1/3", "2/3"})) == flip.embed());

    const Dist p = dist(bits, {"1/5", "4/5"});
    CHECK(bayes_invert(del(bits), p) == Kernel(p));
}

TEST_CASE("parametric Bayesian inverse under a point prior")
{
    const FinSpace a("A", {"u", "v"});
    const Kernel f = kernel(bits, coin, {{"1/2", "1/2"}, {"1/4", "3/4"}});
    const Kernel prior = DetMap(a, bits, {1, 0}).embed();
    const Kernel inv = bayes_invert(f, prior);
    CHECK(inv.src() == tensor(coin, a));
    for (std::size_t x = 0; x < coin.size(); ++x)
        for (std::size_t i = 0; i < a.size(); ++i)
            CHECK(inv.column(x * a.size() + i) == Dist::dirac(bits, i == 0 ? 1 : 0));
}

TEST_CASE("conditional product")
{
    const FinSpace one("Z", {"z"});
    const Kernel p(dist(bits, {"1/3", "2/3"}));
    const Kernel q(dist(coin, {"1/4", "3/4"}));
    const Kernel rho = conditional_product(p, q, DetMap(bits, one, {0, 0}), DetMap(coin, one, {0, 0}));
    CHECK(rho == Kernel(tensor(p.as_state(), q.as_state())));

    CHECK_THROWS_WITH_AS(conditional_product(p, q, identity_map(bits), DetMap(coin, bits, {0, 0})),
                         doctest::Contains("1"), PreconditionError);
}

TEST_CASE("the a.s.-deterministic inverse lemma")
{
    const FinSpace theta("T", {"0", "1", "2"});
    const Kernel p(dist(theta, {"1/2", "1/2", "0"}));
    const Kernel det = DetMap(theta, coin, {0, 1, 1}).embed();
    CHECK(check_f_as_det(det, p));
    const Kernel almost = kernel(theta, coin, {{"1", "0"}, {"0", "1"}, {"1/2", "1/2"}});
    CHECK(check_f_as_det(almost, p));
    const Kernel noisy = kernel(theta, coin, {{"1/2", "1/2"}, {"0", "1"}, {"1", "0"}});
    CHECK(check_f_as_det(noisy, p).status == LemmaCheck::Status::precondition_failed);
}

TEST_CASE("samp is a.s. deterministic")
{
    CHECK(check_samp_det(Dist::dirac(bits, 1)));
    CHECK(check_samp_det(dist(bits, {"1/2", "1/2"})));
    CHECK(check_samp_det(dist(FinSpace("X", {"a", "b", "c"}), {"1/6", "0", "5/6"})));
}
