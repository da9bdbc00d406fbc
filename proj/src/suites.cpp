#include "finstoch/suites.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "finstoch/conditionals.hpp"
#include "finstoch/diagram.hpp"
#include "finstoch/dominance.hpp"
#include "finstoch/errors.hpp"
#include "finstoch/experiments.hpp"
#include "finstoch/limits.hpp"
#include "finstoch/lp.hpp"
#include "finstoch/monad.hpp"

namespace finstoch {

namespace {

using Outcome = std::optional<std::string>;

constexpr std::size_t kMaxNotes = 5;

Eigen::Index idx(std::size_t i)
{
    return static_cast<Eigen::Index>(i);
}

/** A kernel with a random subset of its columns replaced by Dirac columns. */
Kernel random_mixed_kernel(SplitMix64& rng, const FinSpace& src, const FinSpace& dst)
{
    MatrixXr m = random_kernel(rng, src, dst).matrix();
    for (std::size_t x = 0; x < src.size(); ++x)
        if (rng.below(2) == 0)
        {
            m.col(idx(x)).setZero();
            m(idx(rng.below(dst.size())), idx(x)) = 1;
        }
    return Kernel(src, dst, std::move(m));
}

/** A random kernel whose columns give zero mass to a random set of target atoms. */
Kernel random_sparse_kernel(SplitMix64& rng, const FinSpace& src, const FinSpace& dst)
{
    std::vector<bool> dead(dst.size());
    std::size_t alive = dst.size();
    for (std::size_t y = 0; y + 1 < dst.size(); ++y)
        if (rng.below(3) == 0)
        {
            dead[y] = true;
            --alive;
        }
    MatrixXr m = MatrixXr::Zero(idx(dst.size()), idx(src.size()));
    for (std::size_t x = 0; x < src.size(); ++x)
    {
        const VectorXr w = random_weights(rng, alive);
        for (std::size_t y = 0, k = 0; y < dst.size(); ++y)
            if (!dead[y])
                m(idx(y), idx(x)) = w(idx(k++));
    }
    return Kernel(src, dst, std::move(m));
}

Outcome check(bool ok, const std::string& what)
{
    if (ok)
        return std::nullopt;
    return what;
}

#define FINSTOCH_EXPECT(cond, what)          \
    do                                       \
    {                                        \
        if (auto failure = check(cond, what)) \
            return failure;                  \
    } while (0)

// ---------------------------------------------------------------- core

Outcome core_laws(SplitMix64& rng)
{
    const FinSpace a = random_space(rng, "A", 1, 6);
    const FinSpace x = random_space(rng, "X", 1, 6);
    const FinSpace y = random_space(rng, "Y", 1, 6);
    const FinSpace z = random_space(rng, "Z", 1, 6);
    const Kernel f = random_mixed_kernel(rng, x, y);
    const Kernel g = random_kernel(rng, y, z);
    const Kernel h = random_kernel(rng, z, a);

    FINSTOCH_EXPECT(compose(compose(f, g), h) == compose(f, compose(g, h)), "composition is not associative");
    FINSTOCH_EXPECT(compose(identity(x), f) == f && compose(f, identity(y)) == f, "identity is not neutral");

    const Kernel f2 = random_kernel(rng, a, x);
    const Kernel g2 = random_kernel(rng, x, z);
    FINSTOCH_EXPECT(compose(tensor(f, f2), tensor(g, g2)) == tensor(compose(f, g), compose(f2, g2)),
                    "interchange law fails");

    const Kernel cp = copy(x);
    const Kernel left_first = compose(compose(cp, tensor(cp, identity(x))), associator(x, x, x).embed());
    FINSTOCH_EXPECT(left_first == compose(cp, tensor(identity(x), cp)), "copy is not coassociative");
    FINSTOCH_EXPECT(compose(cp, swap(x, x)) == cp, "copy is not cocommutative");
    FINSTOCH_EXPECT(compose(cp, tensor(del(x), identity(x))) == identity(x)
                        && compose(cp, tensor(identity(x), del(x))) == identity(x),
                    "counit law fails");
    FINSTOCH_EXPECT(compose(cp, tensor(del(x), del(x))) == del(x), "del does not absorb copy");
    FINSTOCH_EXPECT(compose(f, del(y)) == del(x), "del is not natural");
    FINSTOCH_EXPECT(compose(swap(x, y), swap(y, x)) == identity(tensor(x, y)), "swap is not an involution");

    const bool commutes_with_copy = compose(f, copy(y)) == compose(copy(x), tensor(f, f));
    FINSTOCH_EXPECT(is_deterministic(f) == commutes_with_copy, "determinism characterization fails");

    const Kernel joint = random_kernel(rng, a, tensor(x, y));
    FINSTOCH_EXPECT(marginal(joint, Side::left) == compose(joint, tensor(identity(x), del(y)))
                        && marginal(joint, Side::right) == compose(joint, tensor(del(x), identity(y))),
                    "marginal disagrees with discarding a leg");

    const Kernel p = random_sparse_kernel(rng, a, x);
    const Kernel f_alt = random_mixed_kernel(rng, x, y);
    FINSTOCH_EXPECT(as_equal(f, f, p), "as_equal is not reflexive");
    FINSTOCH_EXPECT(as_equal(f, f_alt, p) == as_equal(f_alt, f, p), "as_equal is not symmetric");

    const DetMap e1 = random_map(rng, x, y);
    const DetMap e2 = random_map(rng, x, y);
    const Equalizer eq = equalizer(e1, e2);
    if (!eq.object.empty())
    {
        const Kernel inside = compose(random_kernel(rng, a, eq.object), eq.inclusion.embed());
        FINSTOCH_EXPECT(as_equal(e1.embed(), e2.embed(), inside), "maps do not agree on their equalizer");
        const Kernel r = eq.factor_through(inside);
        FINSTOCH_EXPECT(compose(r, eq.inclusion.embed()) == inside, "equalizer factorization does not recover p");
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- monad

Outcome monad_laws(SplitMix64& rng)
{
    const FinSpace a = random_space(rng, "A", 1, 4);
    const FinSpace x = random_space(rng, "X", 1, 5);
    const FinSpace y = random_space(rng, "Y", 1, 4);
    const Dist nu = random_dist(rng, x);
    const SuppDist m = random_decomposition(rng, nu, 4);

    FINSTOCH_EXPECT(mu(SuppDist::dirac(nu)) == nu, "mu . delta is not the identity");
    FINSTOCH_EXPECT(mu(dirac_decomposition(nu)) == nu, "mu . P delta is not the identity");
    FINSTOCH_EXPECT(mu(m) == nu, "decomposition does not average back");
    FINSTOCH_EXPECT(SuppDist(m.base(), m.atoms()) == m, "canonicalization is not idempotent");

    SuppDistTower tower{x, {}};
    const VectorXr outer = random_weights(rng, rng.between(1, 3));
    for (Eigen::Index i = 0; i < outer.size(); ++i)
        if (outer(i) > 0)
            tower.atoms.emplace_back(outer(i), random_decomposition(rng, random_dist(rng, x), 3));
    FINSTOCH_EXPECT(mu(join(tower)) == mu(map_mu(tower)), "mu is not associative on towers");

    const DetMap d = random_map(rng, x, y);
    const MetaKernel meta = random_lift(rng, random_kernel(rng, a, x), 3);
    FINSTOCH_EXPECT(samp_meta(push(d.embed(), meta)) == compose(samp_meta(meta), d.embed()), "samp is not natural");
    FINSTOCH_EXPECT(mu(push(d.embed(), m)) == compose(mu(m), d.embed()), "mu is not natural");

    const Kernel k = random_kernel(rng, a, x);
    FINSTOCH_EXPECT(flat(sharp(k)) == k, "flat . sharp is not the identity");
    FINSTOCH_EXPECT(sharp(flat(sharp(k))) == sharp(k), "sharp . flat is not the identity on sharp images");
    FINSTOCH_EXPECT(sharp(identity(x)) == delta(x), "sharp(identity) is not delta");
    FINSTOCH_EXPECT(samp_meta(delta(x)) == identity(x), "samp . delta is not the identity");

    const SuppDist m2 = random_decomposition(rng, random_dist(rng, y), 3);
    FINSTOCH_EXPECT(mu(nabla(m, m2)) == tensor(mu(m), mu(m2)), "mu is not monoidal");

    const Kernel p = random_sparse_kernel(rng, a, x);
    const Kernel f = random_kernel(rng, x, y);
    MatrixXr other = f.matrix();
    const std::size_t col = rng.below(x.size());
    other.col(idx(col)) = random_weights(rng, y.size());
    const Kernel g(x, y, std::move(other));
    FINSTOCH_EXPECT(as_equal(sharp(f), sharp(g), p) == as_equal(f, g, p),
                    "sharp images are a.s. equal exactly when the kernels are");
    return std::nullopt;
}

// ---------------------------------------------------------------- conditionals

Outcome conditional_reconstruction(SplitMix64& rng)
{
    const FinSpace a = random_space(rng, "A", 1, 6);
    const FinSpace x = random_space(rng, "X", 1, 6);
    const FinSpace y = random_space(rng, "Y", 1, 6);
    const Kernel joint = random_sparse_kernel(rng, a, tensor(x, y));
    const Kernel c = conditional(joint);
    const Kernel fx = marginal(joint, Side::left);

    // A -> A*A -> X*A -> (X*X)*A -> X*(X*A) -> X*Y
    Kernel rebuilt = compose(copy(a), tensor(fx, identity(a)));
    rebuilt = compose(rebuilt, tensor(copy(x), identity(a)));
    rebuilt = compose(rebuilt, associator(x, x, a).embed());
    rebuilt = compose(rebuilt, tensor(identity(x), c));
    return check(rebuilt == joint, "joint is not rebuilt from its marginal and conditional");
}

Outcome bayes_identity(SplitMix64& rng)
{
    const FinSpace theta = random_space(rng, "T", 1, 6);
    const FinSpace x = random_space(rng, "X", 1, 6);
    const Kernel f = random_sparse_kernel(rng, theta, x);
    const Dist p = Dist(theta, random_sparse_kernel(rng, FinSpace::unit(), theta).matrix().col(0));
    const Kernel inverse = bayes_invert(f, p);
    const Kernel q(compose(p, f));

    const Kernel lhs = compose(compose(Kernel(p), copy(theta)), tensor(identity(theta), f));
    const Kernel rhs = compose(compose(q, copy(x)), tensor(inverse, identity(x)));
    return check(lhs == rhs, "prior-times-likelihood differs from evidence-times-posterior");
}

Outcome bayes_param_identity(SplitMix64& rng)
{
    const FinSpace a = random_space(rng, "A", 1, 5);
    const FinSpace theta = random_space(rng, "T", 1, 5);
    const FinSpace x = random_space(rng, "X", 1, 5);
    const Kernel f = random_sparse_kernel(rng, theta, x);
    const Kernel p = random_sparse_kernel(rng, a, theta);
    const Kernel inverse = bayes_invert(f, p);
    const Kernel q = compose(p, f);
    const FinSpace xa = tensor(x, a);

    // A -> A*A -> T*A -> (T*T)*A -> T*(T*A) -> T*(X*A)
    Kernel lhs = compose(copy(a), tensor(p, identity(a)));
    lhs = compose(lhs, tensor(copy(theta), identity(a)));
    lhs = compose(lhs, associator(theta, theta, a).embed());
    lhs = compose(lhs, tensor(identity(theta), tensor(f, identity(a))));

    // A -> A*A -> X*A -> (X*A)*(X*A) -> T*(X*A)
    Kernel rhs = compose(copy(a), tensor(q, identity(a)));
    rhs = compose(rhs, copy(xa));
    rhs = compose(rhs, tensor(inverse, identity(xa)));
    return check(lhs == rhs, "parametric Bayes identity fails");
}

Outcome f_as_det(SplitMix64& rng)
{
    const FinSpace a = random_space(rng, "A", 1, 5);
    const FinSpace theta = random_space(rng, "T", 1, 5);
    const FinSpace x = random_space(rng, "X", 1, 5);
    const Kernel p = random_sparse_kernel(rng, a, theta);
    MatrixXr m = random_map(rng, theta, x).embed().matrix();
    for (std::size_t t = 0; t < theta.size(); ++t)
    {
        bool charged = false;
        for (std::size_t i = 0; i < a.size(); ++i)
            charged = charged || p(t, i) > 0;
        if (!charged)
            m.col(idx(t)) = random_weights(rng, x.size());
    }
    const LemmaCheck r = check_f_as_det(Kernel(theta, x, std::move(m)), p);
    return check(static_cast<bool>(r), r.detail);
}

Outcome samp_det(SplitMix64& rng)
{
    const FinSpace x = random_space(rng, "X", 1, 6);
    const Dist p(x, random_sparse_kernel(rng, FinSpace::unit(), x).matrix().col(0));
    const LemmaCheck r = check_samp_det(p);
    return check(static_cast<bool>(r), r.detail);
}

// ---------------------------------------------------------------- dominance

/** A measure on the simplex over X: a random decomposition of a random dist. */
PointMeasure random_measure(SplitMix64& rng, std::size_t max_dim, std::size_t max_atoms)
{
    const FinSpace x = random_space(rng, "X", 1, max_dim);
    return PointMeasure::from(random_decomposition(rng, random_dist(rng, x), max_atoms));
}

Outcome mu_square(SplitMix64& rng)
{
    const FinSpace a = random_space(rng, "A", 1, 5);
    const FinSpace x = random_space(rng, "X", 1, 5);
    const FinSpace y = random_space(rng, "Y", 1, 5);
    const DetMap f = random_map(rng, x, y);
    const Kernel p = random_sparse_kernel(rng, a, x);
    const MetaKernel q = random_lift(rng, compose(p, f.embed()), 4);
    const MetaKernel r = mu_square_witness(f, p, q);
    FINSTOCH_EXPECT(samp_meta(r) == p, "samp . r differs from p");
    FINSTOCH_EXPECT(push(f.embed(), r) == q, "P f . r differs from q");
    return std::nullopt;
}

Outcome pullback_square(SplitMix64& rng)
{
    const FinSpace a = random_space(rng, "A", 1, 5);
    const FinSpace z = random_space(rng, "Z", 1, 4);
    const FinSpace x = random_space(rng, "X", 1, 5);
    const FinSpace y = random_space(rng, "Y", z.size(), 5);
    const DetMap f = random_map(rng, x, z);
    const DetMap g = random_surjection(rng, y, z);
    const Kernel p = random_sparse_kernel(rng, a, x);
    const Kernel q = random_coupled(rng, compose(p, f.embed()), g);
    const PullbackWitness w = pullback_square_witness(f, g, p, q);

    const FinSpace& xy = w.coupling.dst();
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < xy.size(); ++j)
            FINSTOCH_EXPECT(w.coupling(j, i) == 0 || f(j / y.size()) == g(j % y.size()),
                            "coupling charges a pair outside the pullback");
    FINSTOCH_EXPECT(compose(w.factor, w.square.proj_left.embed()) == p, "left projection of r differs from p");
    FINSTOCH_EXPECT(compose(w.factor, w.square.proj_right.embed()) == q, "right projection of r differs from q");
    FINSTOCH_EXPECT(check_weak_pullback(w.square.proj_left, w.square.proj_right, f, g),
                    "set pullback is not a weak pullback");
    return std::nullopt;
}

Outcome transitivity(SplitMix64& rng)
{
    const PointMeasure fine = random_measure(rng, 5, 4);
    const PointMeasure middle = random_coarsening(rng, fine, 3);
    const PointMeasure coarse = random_coarsening(rng, middle, 3);
    const DominanceResult first = dominance_decide(fine, middle);
    const DominanceResult second = dominance_decide(middle, coarse);
    FINSTOCH_EXPECT(first.status == DominanceResult::Status::feasible
                        && second.status == DominanceResult::Status::feasible,
                    "constructed coarsening was not found feasible");
    const DilationWitness chain = compose_dilations(*first.witness, *second.witness);
    FINSTOCH_EXPECT(!DilationWitness::violation(fine, coarse, chain.matrix()), "composed dilation is invalid");
    FINSTOCH_EXPECT(dominance_decide(fine, coarse).status == DominanceResult::Status::feasible,
                    "end-to-end dominance infeasible");
    return std::nullopt;
}

Outcome reflexivity(SplitMix64& rng)
{
    const PointMeasure m = random_measure(rng, 5, 4);
    const DominanceResult r = dominance_decide(m, m);
    FINSTOCH_EXPECT(r.status == DominanceResult::Status::feasible, "a measure does not dominate itself");
    FINSTOCH_EXPECT(!DilationWitness::violation(m, m, r.witness->matrix()), "reflexive witness is invalid");
    FINSTOCH_EXPECT(!DilationWitness::violation(m, m, DilationWitness::identity(m).matrix()),
                    "identity dilation is invalid");
    return std::nullopt;
}

// ---------------------------------------------------------------- experiments

Outcome bss_agreement(SplitMix64& rng, bool garbled)
{
    const FinSpace theta = random_space(rng, "T", 1, 4);
    const FinSpace x = random_space(rng, "X", 1, 4);
    const FinSpace y = random_space(rng, "Y", 1, 4);
    const Dist p(theta, random_sparse_kernel(rng, FinSpace::unit(), theta).matrix().col(0));
    const Experiment f(p, random_mixed_kernel(rng, theta, x));
    const Kernel gk = garbled ? compose(f.channel, random_mixed_kernel(rng, x, y)) : random_mixed_kernel(rng, theta, y);
    const Experiment g(p, gk);
    const BssOutcome out = bss_check(f, g);
    FINSTOCH_EXPECT(out.agree(), std::string("Blackwell says ") + (out.blackwell ? "yes" : "no")
                                     + " but dominance says " + (out.dominance ? "yes" : "no"));
    FINSTOCH_EXPECT(!garbled || out.blackwell, "garbling g = h.f was not recognized");
    return std::nullopt;
}

Outcome stdmeas(SplitMix64& rng)
{
    const FinSpace theta = random_space(rng, "T", 1, 5);
    const SuppDist pi = random_decomposition(rng, random_dist(rng, theta), 4);
    const SampBayes sb = samp_bayes(pi);
    return check(standard_measure(sb.experiment(pi)) == pi, "standard measure of samp differs from pi");
}

Outcome uni_std(SplitMix64& rng)
{
    const FinSpace theta = random_space(rng, "T", 1, 5);
    const FinSpace x = random_space(rng, "X", 1, 4);
    const Dist p(theta, random_sparse_kernel(rng, FinSpace::unit(), theta).matrix().col(0));
    const DetMap f = random_map(rng, theta, x);
    const SuppDist pi = random_fiber_decomposition(rng, p, f, 4);
    const DilationWitness w = uni_std_check(p, f.embed(), pi);
    return check(!DilationWitness::violation(w.fine(), w.coarse(), w.matrix()), "uni-std witness is invalid");
}

Outcome maximality(SplitMix64& rng)
{
    const FinSpace theta = random_space(rng, "T", 1, 5);
    const FinSpace x = random_space(rng, "X", 1, 4);
    const Dist p = random_dist(rng, theta);
    const DetMap f = random_map(rng, theta, x);
    std::vector<SuppDist> candidates;
    const std::size_t n = rng.between(1, 4);
    for (std::size_t i = 0; i < n; ++i)
        candidates.push_back(random_fiber_decomposition(rng, p, f, 4));
    candidates.push_back(random_decomposition(rng, p, 3));
    const MaximalityReport report = maximality_probe(p, f.embed(), candidates);
    for (const auto& e : report.entries)
        FINSTOCH_EXPECT(e.consistent() && (e.index == n || !e.rejected),
                        "candidate " + std::to_string(e.index) + " is inconsistent with maximality");
    return std::nullopt;
}

// ---------------------------------------------------------------- lp

Outcome lp_cross(SplitMix64& rng, bool planted)
{
    const std::size_t n = rng.between(1, 4);
    const std::size_t rows = rng.between(1, 4);
    VectorXr point(idx(n));
    for (std::size_t j = 0; j < n; ++j)
        point(idx(j)) = Rational(static_cast<long>(rng.below(5)), static_cast<long>(rng.between(1, 3)));
    lp::LinSystem sys(n);
    for (std::size_t r = 0; r < rows; ++r)
    {
        VectorXr c(idx(n));
        for (std::size_t j = 0; j < n; ++j)
            c(idx(j)) = static_cast<long>(rng.below(7)) - 3;
        const Rational rhs = planted ? Rational(c.dot(point)) : Rational(static_cast<long>(rng.below(9)) - 4);
        sys.add_row(std::move(c), rhs);
    }
    const lp::FeasibilityResult simplex = lp::solve(sys);
    const lp::Status fm = lp::solve_fm(sys);
    FINSTOCH_EXPECT(simplex.status == fm, "simplex and Fourier-Motzkin disagree");
    FINSTOCH_EXPECT(!planted || simplex.feasible(), "planted feasible system reported infeasible");
    if (simplex.feasible())
        FINSTOCH_EXPECT(simplex.witness && sys.satisfied_by(*simplex.witness), "witness does not satisfy the system");
    return std::nullopt;
}

// ---------------------------------------------------------------- diagram

diagram::ExprPtr random_expr(SplitMix64& rng, std::size_t depth)
{
    using diagram::Expr;
    using diagram::Kind;
    static const char* const spaces[] = {"X", "Y", "I"};
    static const char* const gens[] = {"f", "g", "p", "h'"};
    const std::size_t pick = depth == 0 ? rng.below(5) : rng.below(7);
    auto sp = [&] { return std::string(spaces[rng.below(3)]); };
    switch (pick)
    {
        case 0: return Expr::gen(gens[rng.below(4)]);
        case 1: return Expr::builtin(Kind::id, {sp()});
        case 2: return Expr::builtin(Kind::copy, {sp()});
        case 3: return Expr::builtin(Kind::del, {sp()});
        case 4: return Expr::builtin(Kind::swap, {sp(), sp()});
        case 5: return Expr::seq(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
        default: return Expr::par(random_expr(rng, depth - 1), random_expr(rng, depth - 1));
    }
}

Outcome diagram_laws(SplitMix64& rng)
{
    const diagram::ExprPtr e = random_expr(rng, 4);
    const std::string text = diagram::print(*e);
    FINSTOCH_EXPECT(*diagram::parse(text) == *e, "parse . print is not the identity on '" + text + "'");

    diagram::Environment env;
    env.spaces.emplace("X", random_space(rng, "X", 1, 4));
    env.spaces.emplace("Y", random_space(rng, "Y", 1, 4));
    const FinSpace& x = env.spaces.at("X");
    const FinSpace& y = env.spaces.at("Y");
    env.generators.emplace("f", random_mixed_kernel(rng, x, y));
    env.generators.emplace("d", random_map(rng, x, y).embed());
    env.generators.emplace("p", Kernel(random_dist(rng, x)));

    static const std::vector<std::pair<std::string, std::string>> laws = {
        {"copy[X] ; (del[X] * id[X])", "id[X]"},
        {"copy[X] ; (id[X] * del[X])", "id[X]"},
        {"copy[X] ; swap[X,X]", "copy[X]"},
        {"swap[X,Y] ; swap[Y,X]", "id[X] * id[Y]"},
        {"f ; del[Y]", "del[X]"},
        {"copy[X] ; (del[X] * del[X])", "del[X]"},
        {"d ; copy[Y]", "copy[X] ; (d * d)"},
        {"p ; copy[X] ; (id[X] * del[X])", "p"},
        {"(f * id[X]) ; swap[Y,X]", "swap[X,X] ; (id[X] * f)"},
    };
    for (const auto& [lhs, rhs] : laws)
        FINSTOCH_EXPECT(diagram::evaluate(lhs, env) == diagram::evaluate(rhs, env), "'" + lhs + "' != '" + rhs + "'");
    return std::nullopt;
}

Trial plain(Outcome (*fn)(SplitMix64&))
{
    return [fn](SplitMix64& rng, std::size_t) { return fn(rng); };
}

}   // namespace

const std::vector<SuiteInfo>& all_suites()
{
    static const std::vector<SuiteInfo> suites = {
        {"core-laws", 200, "category, comonoid, determinism and equalizer laws", plain(core_laws)},
        {"monad-laws", 200, "unit, associativity, naturality and representability laws", plain(monad_laws)},
        {"conditional", 500, "joints rebuilt from marginal and conditional", plain(conditional_reconstruction)},
        {"bayes", 500, "Bayes identity for a prior", plain(bayes_identity)},
        {"bayes-param", 200, "Bayes identity for a parametrized prior", plain(bayes_param_identity)},
        {"mu-square", 200, "lift along P f through mu", plain(mu_square)},
        {"pullback", 200, "couplings factor through the set pullback", plain(pullback_square)},
        {"transitivity", 100, "composed dilations along coarsening chains", plain(transitivity)},
        {"reflexivity", 200, "every measure dominates itself", plain(reflexivity)},
        {"bss", 100, "Blackwell order agrees with dominance of standard measures",
         [](SplitMix64& rng, std::size_t t) { return bss_agreement(rng, t % 2 == 0); }},
        {"stdmeas", 200, "standard measure of samp is pi", plain(stdmeas)},
        {"uni-std", 100, "fiber decompositions dominate the hypernormalization", plain(uni_std)},
        {"f-as-det", 200, "a.s.-deterministic channels invert to the projection", plain(f_as_det)},
        {"samp-det", 200, "samp is a.s. deterministic and self-inverse", plain(samp_det)},
        {"lp", 500, "simplex and Fourier-Motzkin agree",
         [](SplitMix64& rng, std::size_t t) { return lp_cross(rng, t % 2 == 0); }},
        {"maximality", 50, "hypernormalization dominates fiber candidates", plain(maximality)},
        {"diagram", 200, "diagram round-trips and CD laws", plain(diagram_laws)},
    };
    return suites;
}

const SuiteInfo* find_suite(const std::string& name)
{
    for (const auto& s : all_suites())
        if (s.name == name)
            return &s;
    return nullptr;
}

SuiteResult run_suite(const SuiteInfo& suite, std::uint64_t seed, std::size_t trials)
{
    SuiteResult result{suite.name, trials, 0, {}};
    for (std::size_t t = 0; t < trials; ++t)
    {
        SplitMix64 rng = SplitMix64::for_trial(seed, t);
        Outcome failure;
        try
        {
            failure = suite.trial(rng, t);
        }
        catch (const std::exception& e)
        {
            failure = std::string("exception: ") + e.what();
        }
        if (failure)
        {
            ++result.failures;
            if (result.notes.size() < kMaxNotes)
                result.notes.push_back("trial " + std::to_string(t) + ": " + *failure);
        }
    }
    return result;
}

std::string format_result(const SuiteResult& r)
{
    std::ostringstream out;
    out << r.name << ": " << r.trials << " trials, " << r.failures << " failures\n";
    for (const auto& n : r.notes)
        out << "  " << n << "\n";
    return out.str();
}

}   // namespace finstoch
