#include "helpers.hpp"

#include "finstoch/dominance.hpp"
#include "finstoch/errors.hpp"

using namespace finstoch;
using namespace finstoch::test;
using Status = DominanceResult::Status;

namespace {

const FinSpace bits("B", {"0", "1"});

PointMeasure spread()
{
    return PointMeasure(2, {{R("1/2"), vec({"1", "0"})}, {R("1/2"), vec({"0", "1"})}});
}

PointMeasure centre()
{
    return PointMeasure(2, {{R("1"), vec({"1/2", "1/2"})}});
}

}   // namespace

TEST_CASE("point measures are canonical")
{
    const PointMeasure m(2, {{R("1/4"), vec({"1", "0"})}, {R("1/4"), vec({"1", "0"})}, {R("1/2"), vec({"0", "1"})}});
    CHECK(m.size() == 2);
    CHECK(m.barycenter() == vec({"1/2", "1/2"}));
    CHECK(m == spread());
    CHECK_THROWS_AS(PointMeasure(2, {{R("1"), vec({"1"})}}), SpaceMismatch);
}

TEST_CASE("reflexivity")
{
    const auto r = dominance_decide(spread(), spread());
    REQUIRE(r.status == Status::feasible);
    CHECK_FALSE(DilationWitness::violation(spread(), spread(), r.witness->matrix()));
    CHECK(DilationWitness::identity(spread()).matrix() == MatrixXr::Identity(2, 2));
}

TEST_CASE("two Diracs dominate their average")
{
    const auto r = dominance_decide(spread(), centre());
    REQUIRE(r.status == Status::feasible);
    CHECK(r.witness->matrix().rows() == 1);
    CHECK(VectorXr(r.witness->matrix().row(0).transpose()) == vec({"1/2", "1/2"}));
    CHECK(dominance_decide(centre(), spread()).status == Status::infeasible);
}

TEST_CASE("different barycenters are not comparable")
{
    const PointMeasure off(2, {{R("1"), vec({"1", "0"})}});
    CHECK(dominance_decide(spread(), off).status == Status::not_comparable);
    CHECK_THROWS_AS(dominance_decide(spread(), PointMeasure(3, {{R("1"), vec({"1", "0", "0"})}})), SpaceMismatch);
}

TEST_CASE("witnesses are validated and compose")
{
    MatrixXr bad(1, 2);
    bad << R("1"), R("0");
    CHECK_THROWS_AS(DilationWitness(spread(), centre(), bad), InvariantError);

    const DilationWitness w = *dominance_decide(spread(), centre()).witness;
    const DilationWitness chained = compose_dilations(w, DilationWitness::identity(centre()));
    CHECK(chained.matrix() == w.matrix());
    CHECK(compose_dilations(DilationWitness::identity(spread()), w).matrix() == w.matrix());
    CHECK_THROWS_AS(compose_dilations(w, w), PreconditionError);
}

TEST_CASE("suppdists embed as point measures")
{
    const SuppDist m(bits, {{R("1/2"), Dist::dirac(bits, 0)}, {R("1/2"), Dist::dirac(bits, 1)}});
    CHECK(PointMeasure::from(m) == spread());
    CHECK(dominance_decide(m, SuppDist::dirac(dist(bits, {"1/2", "1/2"}))).status == Status::feasible);
}

TEST_CASE("lift through mu along a deterministic map")
{
    const FinSpace x("X", {"a", "b", "c"});
    const DetMap f(x, bits, {0, 0, 1});
    const Kernel p(dist(x, {"1/4", "1/4", "1/2"}));
    const SuppDist row(bits, {{R("1/2"), Dist::dirac(bits, 0)}, {R("1/2"), dist(bits, {"0", "1"})}});
    const MetaKernel q(FinSpace::unit(), bits, {row});
    const MetaKernel r = mu_square_witness(f, p, q);
    CHECK(samp_meta(r) == p);
    CHECK(push(f.embed(), r) == q);

    const MetaKernel same = mu_square_witness(identity_map(bits), Kernel(dist(bits, {"1/2", "1/2"})), q);
    CHECK(same == q);

    const MetaKernel wrong(FinSpace::unit(), bits, {SuppDist::dirac(Dist::dirac(bits, 0))});
    CHECK_THROWS_AS(mu_square_witness(f, p, wrong), PreconditionError);
}

TEST_CASE("couplings factor through the pullback")
{
    const FinSpace x("X", {"a", "b"});
    const Kernel p(dist(x, {"1/3", "2/3"}));
    const DetMap f(x, bits, {1, 0});
    const Kernel q(compose(p.as_state(), f.embed()));
    const PullbackWitness w = pullback_square_witness(f, identity_map(bits), p, q);
    CHECK(w.square.object().size() == 2);
    CHECK(compose(w.factor, w.square.proj_left.embed()) == p);
    CHECK(compose(w.factor, w.square.proj_right.embed()) == q);

    const FinSpace one("Z", {"z"});
    const Kernel qb(dist(bits, {"1/4", "3/4"}));
    const PullbackWitness indep = pullback_square_witness(DetMap(x, one, {0, 0}), DetMap(bits, one, {0, 0}), p, qb);
    CHECK(indep.coupling == Kernel(tensor(p.as_state(), qb.as_state())));

    CHECK_THROWS_AS(pullback_square_witness(f, identity_map(bits), p, qb), PreconditionError);
}

TEST_CASE("weak pullback squares")
{
    const FinSpace x("X", {"a", "b"});
    const FinSpace one("Z", {"z"});
    const DetMap f(x, one, {0, 0});
    const DetMap g(bits, one, {0, 0});
    const Pullback pb = pullback(f, g);
    CHECK(check_weak_pullback(pb.proj_left, pb.proj_right, f, g));

    // apex with one junk element mapped onto an existing pair
    const FinSpace apex("P", {"p0", "p1", "p2", "p3", "junk"});
    CHECK(check_weak_pullback(DetMap(apex, x, {0, 0, 1, 1, 1}), DetMap(apex, bits, {0, 1, 0, 1, 0}), f, g));

    const FinSpace small("P", {"p0", "p1", "p2"});
    CHECK_FALSE(check_weak_pullback(DetMap(small, x, {0, 0, 1}), DetMap(small, bits, {0, 1, 0}), f, g));

    const FinSpace two("P", {"p0", "p1"});
    CHECK_THROWS_AS(check_weak_pullback(DetMap(two, x, {0, 1}), DetMap(two, bits, {0, 1}),
                                        DetMap(x, bits, {0, 0}), identity_map(bits)),
                    PreconditionError);
}
