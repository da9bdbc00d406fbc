#include "helpers.hpp"

#include "finstoch/errors.hpp"
#include "finstoch/monad.hpp"

using namespace finstoch;
using namespace finstoch::test;

namespace {

const FinSpace bits("B", {"0", "1"});
const FinSpace ab("X", {"a", "b"});

SuppDist two_diracs()
{
    return SuppDist(bits, {{R("1/2"), Dist::dirac(bits, 0)}, {R("1/2"), Dist::dirac(bits, 1)}});
}

}   // namespace

TEST_CASE("suppdists are canonical")
{
    const Dist nu = dist(bits, {"1/3", "2/3"});
    const SuppDist merged(bits, {{R("1/4"), nu}, {R("0"), Dist::dirac(bits, 0)}, {R("3/4"), nu}});
    CHECK(merged.size() == 1);
    CHECK(merged == SuppDist::dirac(nu));

    const SuppDist m(bits, {{R("1/2"), Dist::dirac(bits, 0)}, {R("1/2"), Dist::dirac(bits, 1)}});
    CHECK(m.atoms()[0].dist == Dist::dirac(bits, 1));   // (0,1) sorts before (1,0)
    CHECK(SuppDist(m.base(), m.atoms()) == m);
    CHECK_THROWS_AS(SuppDist(bits, {{R("1/2"), nu}}), InvariantError);
    CHECK_THROWS_AS(SuppDist(bits, {{R("1"), dist(ab, {"1", "0"})}}), SpaceMismatch);
}

TEST_CASE("delta")
{
    const MetaKernel d = delta(FinSpace::unit());
    REQUIRE(d.rows().size() == 1);
    CHECK(d.row(0) == SuppDist::dirac(Dist::dirac(FinSpace::unit(), 0)));
    CHECK(delta(ab).row(0) == SuppDist::dirac(Dist::dirac(ab, 0)));
    CHECK(mu(delta(ab).row(1)) == Dist::dirac(ab, 1));
    CHECK(delta(ab).is_deterministic());
}

TEST_CASE("mu")
{
    const Dist nu = dist(bits, {"1/5", "4/5"});
    CHECK(mu(SuppDist::dirac(nu)) == nu);
    CHECK(mu(two_diracs()) == dist(bits, {"1/2", "1/2"}));
    const SuppDist mix(bits, {{R("1/3"), nu}, {R("2/3"), dist(bits, {"1/2", "1/2"})}});
    CHECK(mu(mix) == dist(bits, {"2/5", "3/5"}));
}

TEST_CASE("push")
{
    const SuppDist m = two_diracs();
    CHECK(push(identity(bits), m) == m);
    CHECK(push(del(bits), m) == SuppDist::dirac(Dist::dirac(FinSpace::unit(), 0)));
    CHECK(push(DetMap(bits, bits, {1, 0}).embed(), m) == m);
    CHECK_THROWS_AS(push(identity(ab), m), SpaceMismatch);
}

TEST_CASE("samp")
{
    CHECK(samp_meta(delta(ab)) == identity(ab));
    CHECK(samp_state(two_diracs()) == dist(bits, {"1/2", "1/2"}));
    const Kernel k = kernel(ab, bits, {{"1/2", "1/2"}, {"1/3", "2/3"}});
    CHECK(samp_meta(sharp(k)) == k);
}

TEST_CASE("sharp and flat")
{
    CHECK(sharp(identity(ab)) == delta(ab));
    const Dist p = dist(bits, {"1/4", "3/4"});
    const MetaKernel s = sharp(Kernel(p));
    CHECK(s.row(0) == SuppDist::dirac(p));
    const Kernel k = kernel(ab, bits, {{"0", "1"}, {"2/3", "1/3"}});
    CHECK(flat(sharp(k)) == k);
    CHECK(sharp(flat(sharp(k))) == sharp(k));
}

TEST_CASE("strength")
{
    const Dist nu = dist(bits, {"1/3", "2/3"});
    CHECK(strength(nu, FinSpace::unit(), 0) == nu);
    CHECK(strength(Dist::dirac(bits, 1), ab, 1) == Dist::dirac(tensor(bits, ab), 3));
    const FinSpace uv("A", {"u", "v"});
    CHECK(strength(nu, uv, 0) == dist(tensor(bits, uv), {"1/3", "0", "2/3", "0"}));
}

TEST_CASE("nabla")
{
    const Dist nu = dist(bits, {"1/3", "2/3"});
    const Dist nu2 = dist(ab, {"1", "0"});
    CHECK(nabla(SuppDist::dirac(nu), SuppDist::dirac(nu2)) == SuppDist::dirac(tensor(nu, nu2)));

    const SuppDist m1 = two_diracs();
    const SuppDist m2(ab, {{R("1/3"), Dist::dirac(ab, 0)}, {R("2/3"), dist(ab, {"1/2", "1/2"})}});
    const SuppDist n = nabla(m1, m2);
    CHECK(n.size() == 4);
    CHECK(mu(n) == tensor(mu(m1), mu(m2)));
    Rational total = 0;
    for (const auto& atom : n.atoms())
        total += atom.weight;
    CHECK(total == 1);
}

TEST_CASE("towers are associative")
{
    const SuppDist inner1 = two_diracs();
    const SuppDist inner2 = SuppDist::dirac(dist(bits, {"1/4", "3/4"}));
    const SuppDistTower t{bits, {{R("1/2"), inner1}, {R("1/2"), inner2}}};
    CHECK(mu(join(t)) == mu(map_mu(t)));
    CHECK(join(t).size() == 3);
    CHECK(map_mu(t).size() == 2);
}

TEST_CASE("decomposition helpers")
{
    const Dist p = dist(ab, {"1/4", "3/4"});
    const SuppDist d = dirac_decomposition(p);
    CHECK(d.size() == 2);
    CHECK(mu(d) == p);
    const SuppDist m = two_diracs();
    CHECK(atom_space(m).size() == 2);
    CHECK(atom_weights(m) == dist(atom_space(m), {"1/2", "1/2"}));
    CHECK(samp_on_atoms(m).column(0) == m.atoms()[0].dist);
}

TEST_CASE("a.s. equality of sharp images")
{
    const Kernel f = kernel(ab, bits, {{"1", "0"}, {"1/2", "1/2"}});
    const Kernel g = kernel(ab, bits, {{"1", "0"}, {"0", "1"}});
    const Kernel point(Dist::dirac(ab, 0));
    CHECK(as_equal(sharp(f), sharp(g), point));
    CHECK(as_equal(f, g, point));
    const Kernel spread(dist(ab, {"1/2", "1/2"}));
    CHECK_FALSE(as_equal(sharp(f), sharp(g), spread));
    CHECK_FALSE(as_equal(f, g, spread));
}
