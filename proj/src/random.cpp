#include "finstoch/random.hpp"

#include <utility>

#include "finstoch/errors.hpp"

namespace finstoch {

namespace {

Eigen::Index idx(std::size_t i)
{
    return static_cast<Eigen::Index>(i);
}

/** Random nonnegative integer weights of length n, not all zero. */
std::vector<long> raw_weights(SplitMix64& rng, std::size_t n)
{
    std::vector<long> w(n);
    for (;;)
    {
        long total = 0;
        for (auto& v : w)
        {
            v = static_cast<long>(rng.below(9));
            total += v;
        }
        if (total > 0 || n == 0)
            return w;
    }
}

}   // namespace

std::uint64_t SplitMix64::next()
{
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_trial(std::uint64_t seed, std::size_t trial)
{
    SplitMix64 mixer(seed ^ (0xD1B54A32D192ED03ULL * (static_cast<std::uint64_t>(trial) + 1)));
    return SplitMix64(mixer.next());
}

FinSpace make_space(const std::string& name, std::size_t size)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < size; ++i)
        labels.push_back(name + std::to_string(i));
    return FinSpace(name, std::move(labels));
}

FinSpace random_space(SplitMix64& rng, const std::string& name, std::size_t min_size, std::size_t max_size)
{
    return make_space(name, rng.between(min_size, max_size));
}

VectorXr random_weights(SplitMix64& rng, std::size_t n)
{
    const auto raw = raw_weights(rng, n);
    long total = 0;
    for (long v : raw)
        total += v;
    VectorXr w(idx(n));
    for (std::size_t i = 0; i < n; ++i)
        w(idx(i)) = Rational(raw[i], total);
    return w;
}

Dist random_dist(SplitMix64& rng, const FinSpace& x)
{
    return Dist(x, random_weights(rng, x.size()));
}

Kernel random_kernel(SplitMix64& rng, const FinSpace& src, const FinSpace& dst)
{
    MatrixXr m(idx(dst.size()), idx(src.size()));
    for (std::size_t x = 0; x < src.size(); ++x)
        m.col(idx(x)) = random_weights(rng, dst.size());
    return Kernel(src, dst, std::move(m));
}

DetMap random_map(SplitMix64& rng, const FinSpace& src, const FinSpace& dst)
{
    std::vector<std::size_t> images(src.size());
    for (auto& y : images)
        y = rng.below(dst.size());
    return DetMap(src, dst, std::move(images));
}

DetMap random_surjection(SplitMix64& rng, const FinSpace& src, const FinSpace& dst)
{
    if (src.size() < dst.size())
        throw PreconditionError("random_surjection: source smaller than target");
    std::vector<std::size_t> images(src.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = i < dst.size() ? i : rng.below(dst.size());
    for (std::size_t i = images.size(); i > 1; --i)
        std::swap(images[i - 1], images[rng.below(i)]);
    return DetMap(src, dst, std::move(images));
}

SuppDist random_decomposition(SplitMix64& rng, const Dist& p, std::size_t max_atoms)
{
    const std::size_t k = rng.between(1, max_atoms);
    const std::size_t n = p.size();
    MatrixXr joint = MatrixXr::Zero(idx(k), idx(n));
    for (std::size_t x : p.support())
    {
        const VectorXr split = random_weights(rng, k);
        for (std::size_t i = 0; i < k; ++i)
            joint(idx(i), idx(x)) = p(x) * split(idx(i));
    }
    std::vector<SuppDist::Atom> atoms;
    for (std::size_t i = 0; i < k; ++i)
    {
        const Rational w = joint.row(idx(i)).sum();
        if (w == 0)
            continue;
        atoms.push_back({w, Dist(p.space(), joint.row(idx(i)).transpose() / w)});
    }
    return SuppDist(p.space(), std::move(atoms));
}

SuppDist random_fiber_decomposition(SplitMix64& rng, const Dist& p, const DetMap& f, std::size_t max_atoms)
{
    require_same(p.space(), f.src(), "random_fiber_decomposition");
    std::vector<SuppDist::Atom> atoms;
    for (std::size_t x = 0; x < f.dst().size(); ++x)
    {
        VectorXr restricted = VectorXr::Zero(idx(p.size()));
        Rational mass = 0;
        for (std::size_t t = 0; t < p.size(); ++t)
            if (f(t) == x)
            {
                restricted(idx(t)) = p(t);
                mass += p(t);
            }
        if (mass == 0)
            continue;
        const SuppDist piece = random_decomposition(rng, Dist(p.space(), restricted / mass), max_atoms);
        for (const auto& atom : piece.atoms())
            atoms.push_back({mass * atom.weight, atom.dist});
    }
    return SuppDist(p.space(), std::move(atoms));
}

PointMeasure random_coarsening(SplitMix64& rng, const PointMeasure& m, std::size_t max_atoms)
{
    const std::size_t k = rng.between(1, max_atoms);
    std::vector<Rational> weight(k, Rational(0));
    std::vector<VectorXr> moment(k, VectorXr::Zero(idx(m.dim())));
    for (const auto& atom : m.atoms())
    {
        const VectorXr split = random_weights(rng, k);
        for (std::size_t j = 0; j < k; ++j)
        {
            const Rational share = atom.weight * split(idx(j));
            weight[j] += share;
            moment[j] += share * atom.point;
        }
    }
    std::vector<PointMeasure::Atom> atoms;
    for (std::size_t j = 0; j < k; ++j)
        if (weight[j] > 0)
            atoms.push_back({weight[j], moment[j] / weight[j]});
    return PointMeasure(m.dim(), std::move(atoms));
}

SuppDist random_coarsening(SplitMix64& rng, const SuppDist& m, std::size_t max_atoms)
{
    const PointMeasure coarse = random_coarsening(rng, PointMeasure::from(m), max_atoms);
    std::vector<SuppDist::Atom> atoms;
    for (const auto& atom : coarse.atoms())
        atoms.push_back({atom.weight, Dist(m.base(), atom.point)});
    return SuppDist(m.base(), std::move(atoms));
}

MetaKernel random_lift(SplitMix64& rng, const Kernel& s, std::size_t max_atoms)
{
    std::vector<SuppDist> rows;
    for (std::size_t a = 0; a < s.src().size(); ++a)
        rows.push_back(random_decomposition(rng, s.column(a), max_atoms));
    return MetaKernel(s.src(), s.dst(), std::move(rows));
}

Kernel random_coupled(SplitMix64& rng, const Kernel& s, const DetMap& g)
{
    require_same(s.dst(), g.dst(), "random_coupled");
    const FinSpace& y_space = g.src();
    MatrixXr m = MatrixXr::Zero(idx(y_space.size()), idx(s.src().size()));
    for (std::size_t a = 0; a < s.src().size(); ++a)
        for (std::size_t z = 0; z < s.dst().size(); ++z)
        {
            if (s(z, a) == 0)
                continue;
            std::vector<std::size_t> fiber;
            for (std::size_t y = 0; y < y_space.size(); ++y)
                if (g(y) == z)
                    fiber.push_back(y);
            if (fiber.empty())
                throw PreconditionError("random_coupled: charged point " + s.dst().label(z) + " has an empty fiber");
            const VectorXr split = random_weights(rng, fiber.size());
            for (std::size_t i = 0; i < fiber.size(); ++i)
                m(idx(fiber[i]), idx(a)) = s(z, a) * split(idx(i));
        }
    return Kernel(s.src(), y_space, std::move(m));
}

}   // namespace finstoch
