#include "finstoch/experiments.hpp"

#include <algorithm>

#include "finstoch/conditionals.hpp"
#include "finstoch/errors.hpp"
#include "finstoch/lp.hpp"

namespace finstoch {

namespace {

Eigen::Index idx(std::size_t i)
{
    return static_cast<Eigen::Index>(i);
}

}   // namespace

Experiment::Experiment(Dist p, Kernel f) : prior(std::move(p)), channel(std::move(f))
{
    require_same(prior.space(), channel.src(), "experiment");
}

SuppDist standard_measure(const Experiment& e)
{
    const Dist q = compose(e.prior, e.channel);
    const Kernel inverse = bayes_invert(e.channel, e.prior);
    std::vector<SuppDist::Atom> atoms;
    for (std::size_t x : q.support())
        atoms.push_back({q(x), inverse.column(x)});
    return SuppDist(e.prior.space(), std::move(atoms));
}

SuppDist hypernormalization(const Dist& p, const Kernel& f)
{
    if (!is_as_deterministic(f, Kernel(p)))
        throw NotAlmostDeterministic("hypernormalization: channel " + f.src().name() + " -> " + f.dst().name()
                                     + " is not almost surely deterministic for the prior");
    SuppDist hat = standard_measure(Experiment(p, f));
    for (const auto& atom : hat.atoms())
    {
        std::optional<std::size_t> fiber;
        for (std::size_t t : atom.dist.support())
        {
            auto x = f.column(t).dirac_atom();
            if (p(t) == 0 || !x || (fiber && *fiber != *x))
                throw TheoremViolation("hypernormalization: an atom is not supported in one fiber");
            fiber = x;
        }
    }
    return hat;
}

std::optional<Kernel> blackwell_le(const Experiment& g, const Experiment& f)
{
    if (!(g.prior == f.prior))
        throw SpaceMismatch("blackwell_le: the experiments have different priors");
    const FinSpace& x_space = f.channel.dst();
    const FinSpace& y_space = g.channel.dst();
    const std::size_t nx = x_space.size();
    const std::size_t ny = y_space.size();
    const std::size_t nvars = nx * ny;
    auto var = [ny](std::size_t x, std::size_t y) { return idx(x * ny + y); };

    lp::LinSystem sys(nvars);
    for (std::size_t x = 0; x < nx; ++x)
    {
        VectorXr row = VectorXr::Zero(idx(nvars));
        for (std::size_t y = 0; y < ny; ++y)
            row(var(x, y)) = 1;
        sys.add_row(std::move(row), 1);
    }
    for (std::size_t t : f.prior.support())
        for (std::size_t y = 0; y < ny; ++y)
        {
            VectorXr row = VectorXr::Zero(idx(nvars));
            for (std::size_t x = 0; x < nx; ++x)
                row(var(x, y)) = f.channel(x, t);
            sys.add_row(std::move(row), g.channel(y, t));
        }

    const auto result = lp::solve(sys);
    if (!result.feasible())
        return std::nullopt;
    MatrixXr h(idx(ny), idx(nx));
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t y = 0; y < ny; ++y)
            h(idx(y), idx(x)) = (*result.witness)(var(x, y));
    return Kernel(x_space, y_space, std::move(h));
}

BssOutcome bss_check(const Experiment& f, const Experiment& g)
{
    const bool blackwell = blackwell_le(g, f).has_value();
    const bool dominance = static_cast<bool>(dominance_decide(standard_measure(f), standard_measure(g)));
    return {blackwell, dominance};
}

SampBayes samp_bayes(const SuppDist& pi)
{
    const Kernel samp = samp_on_atoms(pi);
    const Dist weights = atom_weights(pi);
    Kernel channel = bayes_invert(samp, weights);   // Theta -> atoms
    std::vector<Dist> embedding;
    for (const auto& atom : pi.atoms())
        embedding.push_back(atom.dist);
    SampBayes out{atom_space(pi), std::move(channel), std::move(embedding)};
    if (!(standard_measure(out.experiment(pi)) == pi))
        throw TheoremViolation("samp_bayes: the standard measure of samp+ differs from pi");
    return out;
}

DilationWitness uni_std_check(const Dist& p, const Kernel& f, const SuppDist& pi)
{
    using Which = UniStdPreconditionError::Which;
    if (!(pi.base() == p.space()) || !(samp_state(pi) == p))
        throw UniStdPreconditionError(Which::samp, "uni_std: pi is not a decomposition of p");
    const Dist q = compose(p, f);
    if (!(push(f, pi) == dirac_decomposition(q)))
        throw UniStdPreconditionError(Which::fibers, "uni_std: an atom of pi straddles several fibers of f");
    const SuppDist hat = hypernormalization(p, f);
    auto result = dominance_decide(pi, hat);
    if (!result)
        throw TheoremViolation("uni_std: no partial evaluation from pi to the hypernormalization");
    return std::move(*result.witness);
}

bool MaximalityReport::all_consistent() const
{
    return std::all_of(entries.begin(), entries.end(), [](const MaximalityEntry& e) { return e.consistent(); });
}

MaximalityReport maximality_probe(const Dist& p, const Kernel& f, const std::vector<SuppDist>& candidates)
{
    MaximalityReport report{hypernormalization(p, f), {}};
    for (std::size_t i = 0; i < candidates.size(); ++i)
    {
        MaximalityEntry entry{i, std::nullopt};
        const SuppDist& c = candidates[i];
        try
        {
            uni_std_check(p, f, c);
            entry.below = true;
        }
        catch (const UniStdPreconditionError& e)
        {
            entry.rejected = e.what();
            report.entries.push_back(std::move(entry));
            continue;
        }
        catch (const TheoremViolation&)
        {
            entry.below = false;
        }
        entry.above = static_cast<bool>(dominance_decide(report.hypernormalization, c));
        entry.is_maximum = c == report.hypernormalization;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}   // namespace finstoch
