#include "finstoch/dominance.hpp"

#include <algorithm>
#include <set>

#include "finstoch/conditionals.hpp"
#include "finstoch/errors.hpp"

namespace finstoch {

namespace {

Eigen::Index idx(std::size_t i)
{
    return static_cast<Eigen::Index>(i);
}

}   // namespace

// ---------------------------------------------------------------- PointMeasure

PointMeasure::PointMeasure(std::size_t dim, std::vector<Atom> atoms) : dim_(dim)
{
    Rational total = 0;
    for (const auto& atom : atoms)
    {
        if (atom.point.size() != idx(dim_))
            throw SpaceMismatch("point measure of dimension " + std::to_string(dim_) + " given a point of dimension "
                                + std::to_string(atom.point.size()));
        if (atom.weight < 0)
            throw InvariantError("point measure: negative weight " + to_string(atom.weight));
        total += atom.weight;
    }
    if (total != 1)
        throw InvariantError("point measure: weights sum to " + to_string(total) + " (deficit "
                             + to_string(Rational(1 - total)) + ")");
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const Atom& a, const Atom& b) { return lex_less(a.point, b.point); });
    for (auto& atom : atoms)
    {
        if (atom.weight == 0)
            continue;
        if (!atoms_.empty() && equal(atoms_.back().point, atom.point))
            atoms_.back().weight += atom.weight;
        else
            atoms_.push_back(std::move(atom));
    }
}

PointMeasure PointMeasure::from(const SuppDist& m)
{
    std::vector<Atom> atoms;
    for (const auto& atom : m.atoms())
        atoms.push_back({atom.weight, atom.dist.weights()});
    return PointMeasure(m.base().size(), std::move(atoms));
}

VectorXr PointMeasure::barycenter() const
{
    VectorXr c = VectorXr::Zero(idx(dim_));
    for (const auto& atom : atoms_)
        c += atom.weight * atom.point;
    return c;
}

bool operator==(const PointMeasure& a, const PointMeasure& b)
{
    if (a.dim_ != b.dim_ || a.atoms_.size() != b.atoms_.size())
        return false;
    for (std::size_t i = 0; i < a.atoms_.size(); ++i)
        if (a.atoms_[i].weight != b.atoms_[i].weight || !equal(a.atoms_[i].point, b.atoms_[i].point))
            return false;
    return true;
}

// ---------------------------------------------------------------- DilationWitness

std::optional<std::string> DilationWitness::violation(const PointMeasure& fine, const PointMeasure& coarse,
                                                      const MatrixXr& rows)
{
    if (fine.dim() != coarse.dim())
        return std::string("dimension mismatch");
    if (rows.rows() != idx(coarse.size()) || rows.cols() != idx(fine.size()))
        return "matrix is " + std::to_string(rows.rows()) + "x" + std::to_string(rows.cols()) + ", expected "
               + std::to_string(coarse.size()) + "x" + std::to_string(fine.size());
    for (std::size_t j = 0; j < coarse.size(); ++j)
    {
        Rational total = 0;
        VectorXr center = VectorXr::Zero(idx(fine.dim()));
        for (std::size_t i = 0; i < fine.size(); ++i)
        {
            const Rational& m = rows(idx(j), idx(i));
            if (m < 0)
                return "row " + std::to_string(j) + " has a negative entry";
            total += m;
            center += m * fine.atoms()[i].point;
        }
        if (total != 1)
            return "row " + std::to_string(j) + " sums to " + to_string(total);
        if (!equal(center, coarse.atoms()[j].point))
            return "row " + std::to_string(j) + " has barycenter (" + to_string(center) + "), expected ("
                   + to_string(coarse.atoms()[j].point) + ")";
    }
    for (std::size_t i = 0; i < fine.size(); ++i)
    {
        Rational mixed = 0;
        for (std::size_t j = 0; j < coarse.size(); ++j)
            mixed += coarse.atoms()[j].weight * rows(idx(j), idx(i));
        if (mixed != fine.atoms()[i].weight)
            return "mixture at fine atom " + std::to_string(i) + " is " + to_string(mixed) + ", expected "
                   + to_string(fine.atoms()[i].weight);
    }
    return std::nullopt;
}

DilationWitness::DilationWitness(PointMeasure fine, PointMeasure coarse, MatrixXr rows)
    : fine_(std::move(fine)), coarse_(std::move(coarse)), rows_(std::move(rows))
{
    if (auto v = violation(fine_, coarse_, rows_))
        throw InvariantError("invalid dilation witness: " + *v);
}

DilationWitness DilationWitness::identity(const PointMeasure& m)
{
    return DilationWitness(m, m, MatrixXr::Identity(idx(m.size()), idx(m.size())));
}

// ---------------------------------------------------------------- decision

lp::LinSystem dilation_system(const PointMeasure& fine, const PointMeasure& coarse)
{
    const std::size_t nf = fine.size();
    const std::size_t nc = coarse.size();
    const std::size_t d = fine.dim();
    const std::size_t nvars = nf * nc;
    auto var = [nf](std::size_t j, std::size_t i) { return idx(j * nf + i); };

    lp::LinSystem sys(nvars);
    for (std::size_t j = 0; j < nc; ++j)
    {
        VectorXr row = VectorXr::Zero(idx(nvars));
        for (std::size_t i = 0; i < nf; ++i)
            row(var(j, i)) = 1;
        sys.add_row(std::move(row), 1);
    }
    for (std::size_t i = 0; i < nf; ++i)
    {
        VectorXr row = VectorXr::Zero(idx(nvars));
        for (std::size_t j = 0; j < nc; ++j)
            row(var(j, i)) = coarse.atoms()[j].weight;
        sys.add_row(std::move(row), fine.atoms()[i].weight);
    }
    for (std::size_t j = 0; j < nc; ++j)
        for (std::size_t k = 0; k < d; ++k)
        {
            VectorXr row = VectorXr::Zero(idx(nvars));
            for (std::size_t i = 0; i < nf; ++i)
                row(var(j, i)) = fine.atoms()[i].point(idx(k));
            sys.add_row(std::move(row), coarse.atoms()[j].point(idx(k)));
        }
    return sys;
}

DominanceResult dominance_decide(const PointMeasure& fine, const PointMeasure& coarse)
{
    using Status = DominanceResult::Status;
    if (fine.dim() != coarse.dim())
        throw SpaceMismatch("dominance: dimensions " + std::to_string(fine.dim()) + " and "
                            + std::to_string(coarse.dim()) + " differ");
    if (!equal(fine.barycenter(), coarse.barycenter()))
        return {Status::not_comparable, std::nullopt};

    const auto result = lp::solve(dilation_system(fine, coarse));
    if (!result.feasible())
        return {Status::infeasible, std::nullopt};
    const VectorXr& x = *result.witness;
    MatrixXr rows(idx(coarse.size()), idx(fine.size()));
    for (std::size_t j = 0; j < coarse.size(); ++j)
        for (std::size_t i = 0; i < fine.size(); ++i)
            rows(idx(j), idx(i)) = x(idx(j * fine.size() + i));
    return {Status::feasible, DilationWitness(fine, coarse, std::move(rows))};
}

DilationWitness compose_dilations(const DilationWitness& first, const DilationWitness& second)
{
    if (!(first.coarse() == second.fine()))
        throw PreconditionError("compose_dilations: the middle measures differ");
    return DilationWitness(first.fine(), second.coarse(), product(second.matrix(), first.matrix()));
}

// ---------------------------------------------------------------- weak pullback witnesses

MetaKernel mu_square_witness(const DetMap& f, const Kernel& p, const MetaKernel& q)
{
    require_same(f.src(), p.dst(), "mu_square_witness (p target)");
    require_same(f.dst(), q.base(), "mu_square_witness (q base)");
    require_same(p.src(), q.src(), "mu_square_witness (parameters)");
    const FinSpace& a_space = p.src();
    const FinSpace& y_space = f.dst();
    const Kernel fk = f.embed();
    const Kernel pushed = compose(p, fk);
    const Kernel sampled = samp_meta(q);
    for (std::size_t a = 0; a < a_space.size(); ++a)
        for (std::size_t y = 0; y < y_space.size(); ++y)
            if (pushed(y, a) != sampled(y, a))
                throw PreconditionError("mu_square_witness: outer square fails at (a=" + a_space.label(a)
                                        + ", y=" + y_space.label(y) + "): f.p gives " + to_string(pushed(y, a))
                                        + ", samp.q gives " + to_string(sampled(y, a)));

    const Kernel inverse = bayes_invert(fk, p);   // Y*A -> X
    std::vector<SuppDist> rows;
    for (std::size_t a = 0; a < a_space.size(); ++a)
    {
        std::vector<SuppDist::Atom> atoms;
        for (const auto& atom : q.row(a).atoms())
            atoms.push_back({atom.weight, compose(strength(atom.dist, a_space, a), inverse)});
        rows.emplace_back(f.src(), std::move(atoms));
    }
    MetaKernel r(a_space, f.src(), std::move(rows));

    if (!(samp_meta(r) == p))
        throw TheoremViolation("mu_square_witness: samp.r differs from p");
    if (!(push(fk, r) == q))
        throw TheoremViolation("mu_square_witness: Pf.r differs from q");
    return r;
}

PullbackWitness pullback_square_witness(const DetMap& f, const DetMap& g, const Kernel& p, const Kernel& q)
{
    Kernel rho = conditional_product(p, q, f, g);
    Pullback square = pullback(f, g);
    const std::size_t ny = g.src().size();
    for (std::size_t a = 0; a < p.src().size(); ++a)
        for (std::size_t x = 0; x < f.src().size(); ++x)
            for (std::size_t y = 0; y < ny; ++y)
                if (rho(x * ny + y, a) > 0 && f(x) != g(y))
                    throw TheoremViolation("pullback_square_witness: coupling charges (" + f.src().label(x) + ","
                                           + g.src().label(y) + ") outside the pullback");
    std::optional<Kernel> factor;
    try
    {
        factor = square.pairs.factor_through(rho);
    }
    catch (const FactorizationError& e)
    {
        throw TheoremViolation(std::string("pullback_square_witness: ") + e.what());
    }
    if (!(compose(*factor, square.proj_left.embed()) == p))
        throw TheoremViolation("pullback_square_witness: left projection of the factor differs from p");
    if (!(compose(*factor, square.proj_right.embed()) == q))
        throw TheoremViolation("pullback_square_witness: right projection of the factor differs from q");
    return PullbackWitness{std::move(square), std::move(rho), std::move(*factor)};
}

bool check_weak_pullback(const DetMap& a, const DetMap& b, const DetMap& f, const DetMap& g)
{
    require_same(a.src(), b.src(), "weak pullback (apex)");
    require_same(a.dst(), f.src(), "weak pullback (left leg)");
    require_same(b.dst(), g.src(), "weak pullback (right leg)");
    require_same(f.dst(), g.dst(), "weak pullback (cospan)");
    std::set<std::pair<std::size_t, std::size_t>> covered;
    for (std::size_t w = 0; w < a.src().size(); ++w)
    {
        if (f(a(w)) != g(b(w)))
            throw PreconditionError("weak pullback: square does not commute at apex atom " + a.src().label(w));
        covered.emplace(a(w), b(w));
    }
    for (std::size_t x = 0; x < f.src().size(); ++x)
        for (std::size_t y = 0; y < g.src().size(); ++y)
            if (f(x) == g(y) && !covered.count({x, y}))
                return false;
    return true;
}

}   // namespace finstoch
