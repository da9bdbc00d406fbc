#include "finstoch/kernel.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "finstoch/errors.hpp"

namespace finstoch {

namespace {

Eigen::Index idx(std::size_t i)
{
    return static_cast<Eigen::Index>(i);
}

}   // namespace

std::optional<std::string> stochastic_violation(const MatrixXr& m)
{
    for (Eigen::Index j = 0; j < m.cols(); ++j)
    {
        Rational total = 0;
        for (Eigen::Index i = 0; i < m.rows(); ++i)
        {
            if (m(i, j) < 0)
                return "column " + std::to_string(j) + " has negative entry " + to_string(m(i, j))
                       + " at row " + std::to_string(i);
            total += m(i, j);
        }
        if (total != 1)
            return "column " + std::to_string(j) + " sums to " + to_string(total) + " (deficit "
                   + to_string(Rational(1 - total)) + ")";
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- Dist

Dist::Dist(FinSpace space, VectorXr weights) : space_(std::move(space)), weights_(std::move(weights))
{
    if (weights_.size() != idx(space_.size()))
        throw InvariantError("dist over " + space_.name() + ": expected " + std::to_string(space_.size())
                             + " weights, got " + std::to_string(weights_.size()));
    Rational total = 0;
    for (Eigen::Index i = 0; i < weights_.size(); ++i)
    {
        if (weights_(i) < 0)
            throw InvariantError("dist over " + space_.name() + ": negative weight " + to_string(weights_(i))
                                 + " at atom " + space_.label(static_cast<std::size_t>(i)));
        total += weights_(i);
    }
    if (total != 1)
        throw InvariantError("dist over " + space_.name() + ": weights sum to " + to_string(total)
                             + " (deficit " + to_string(Rational(1 - total)) + ")");
}

Dist Dist::dirac(const FinSpace& space, std::size_t atom)
{
    VectorXr w = VectorXr::Zero(idx(space.size()));
    w(idx(atom)) = 1;
    return Dist(space, std::move(w));
}

Dist Dist::uniform(const FinSpace& space)
{
    if (space.empty())
        throw InvariantError("no distribution exists on the empty space " + space.name());
    VectorXr w = VectorXr::Constant(idx(space.size()), Rational(1, static_cast<long>(space.size())));
    return Dist(space, std::move(w));
}

std::vector<std::size_t> Dist::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if ((*this)(i) > 0)
            out.push_back(i);
    return out;
}

std::optional<std::size_t> Dist::dirac_atom() const
{
    for (std::size_t i = 0; i < size(); ++i)
        if ((*this)(i) == 1)
            return i;
    return std::nullopt;
}

// ---------------------------------------------------------------- Kernel

Kernel::Kernel(FinSpace src, FinSpace dst, MatrixXr entries)
    : src_(std::move(src)), dst_(std::move(dst)), entries_(std::move(entries))
{
    if (entries_.rows() != idx(dst_.size()) || entries_.cols() != idx(src_.size()))
        throw InvariantError("kernel " + src_.name() + " -> " + dst_.name() + ": matrix is "
                             + std::to_string(entries_.rows()) + "x" + std::to_string(entries_.cols())
                             + ", expected " + std::to_string(dst_.size()) + "x"
                             + std::to_string(src_.size()));
    if (auto v = stochastic_violation(entries_))
        throw InvariantError("kernel " + src_.name() + " -> " + dst_.name() + ": " + *v);
}

Kernel::Kernel(const Dist& state) : Kernel(FinSpace::unit(), state.space(), state.weights()) {}

Dist Kernel::column(std::size_t x) const
{
    return Dist(dst_, entries_.col(idx(x)));
}

Dist Kernel::as_state() const
{
    if (!src_.is_unit())
        throw SpaceMismatch("kernel out of " + src_.describe() + " is not a state");
    return column(0);
}

// ---------------------------------------------------------------- DetMap

DetMap::DetMap(FinSpace src, FinSpace dst, std::vector<std::size_t> images)
    : src_(std::move(src)), dst_(std::move(dst)), images_(std::move(images))
{
    if (images_.size() != src_.size())
        throw InvariantError("map " + src_.name() + " -> " + dst_.name() + ": expected "
                             + std::to_string(src_.size()) + " images");
    for (std::size_t y : images_)
        if (y >= dst_.size())
            throw InvariantError("map " + src_.name() + " -> " + dst_.name() + ": image index "
                                 + std::to_string(y) + " out of range");
}

std::optional<DetMap> DetMap::from_kernel(const Kernel& k)
{
    std::vector<std::size_t> images;
    for (std::size_t x = 0; x < k.src().size(); ++x)
    {
        auto y = k.column(x).dirac_atom();
        if (!y)
            return std::nullopt;
        images.push_back(*y);
    }
    return DetMap(k.src(), k.dst(), std::move(images));
}

Kernel DetMap::embed() const
{
    MatrixXr m = MatrixXr::Zero(idx(dst_.size()), idx(src_.size()));
    for (std::size_t x = 0; x < images_.size(); ++x)
        m(idx(images_[x]), idx(x)) = 1;
    return Kernel(src_, dst_, std::move(m));
}

// ---------------------------------------------------------------- structure

Kernel compose(const Kernel& k1, const Kernel& k2)
{
    require_same(k1.dst(), k2.src(), "compose");
    return Kernel(k1.src(), k2.dst(), product(k2.matrix(), k1.matrix()));
}

Dist compose(const Dist& p, const Kernel& k)
{
    require_same(p.space(), k.src(), "pushforward");
    return Dist(k.dst(), product(k.matrix(), p.weights()));
}

DetMap compose(const DetMap& f, const DetMap& g)
{
    require_same(f.dst(), g.src(), "compose");
    std::vector<std::size_t> images(f.src().size());
    for (std::size_t x = 0; x < images.size(); ++x)
        images[x] = g(f(x));
    return DetMap(f.src(), g.dst(), std::move(images));
}

Kernel identity(const FinSpace& x)
{
    return Kernel(x, x, MatrixXr::Identity(idx(x.size()), idx(x.size())));
}

DetMap identity_map(const FinSpace& x)
{
    std::vector<std::size_t> images(x.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = i;
    return DetMap(x, x, std::move(images));
}

Kernel tensor(const Kernel& k1, const Kernel& k2)
{
    MatrixXr m = Eigen::kroneckerProduct(k1.matrix(), k2.matrix()).eval();
    return Kernel(tensor(k1.src(), k2.src()), tensor(k1.dst(), k2.dst()), std::move(m));
}

Dist tensor(const Dist& p, const Dist& q)
{
    VectorXr w = Eigen::kroneckerProduct(p.weights(), q.weights()).eval();
    return Dist(tensor(p.space(), q.space()), std::move(w));
}

DetMap tensor(const DetMap& f, const DetMap& g)
{
    const std::size_t n2 = g.src().size();
    const std::size_t m2 = g.dst().size();
    std::vector<std::size_t> images(f.src().size() * n2);
    for (std::size_t x1 = 0; x1 < f.src().size(); ++x1)
        for (std::size_t x2 = 0; x2 < n2; ++x2)
            images[x1 * n2 + x2] = f(x1) * m2 + g(x2);
    return DetMap(tensor(f.src(), g.src()), tensor(f.dst(), g.dst()), std::move(images));
}

DetMap copy_map(const FinSpace& x)
{
    const std::size_t n = x.size();
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i)
        images[i] = i * n + i;
    return DetMap(x, tensor(x, x), std::move(images));
}

DetMap del_map(const FinSpace& x)
{
    return DetMap(x, FinSpace::unit(), std::vector<std::size_t>(x.size(), 0));
}

DetMap swap_map(const FinSpace& x, const FinSpace& y)
{
    const std::size_t nx = x.size();
    const std::size_t ny = y.size();
    std::vector<std::size_t> images(nx * ny);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            images[i * ny + j] = j * nx + i;
    return DetMap(tensor(x, y), tensor(y, x), std::move(images));
}

DetMap associator(const FinSpace& x, const FinSpace& y, const FinSpace& z)
{
    return DetMap(tensor(tensor(x, y), z), tensor(x, tensor(y, z)), identity_map(tensor(x, tensor(y, z))).images());
}

DetMap proj_left(const FinSpace& x, const FinSpace& y)
{
    std::vector<std::size_t> images(x.size() * y.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = i / y.size();
    return DetMap(tensor(x, y), x, std::move(images));
}

DetMap proj_right(const FinSpace& x, const FinSpace& y)
{
    std::vector<std::size_t> images(x.size() * y.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        images[i] = i % y.size();
    return DetMap(tensor(x, y), y, std::move(images));
}

Kernel copy(const FinSpace& x)
{
    return copy_map(x).embed();
}

Kernel del(const FinSpace& x)
{
    return del_map(x).embed();
}

Kernel swap(const FinSpace& x, const FinSpace& y)
{
    return swap_map(x, y).embed();
}

Kernel marginal(const Kernel& joint, Side keep)
{
    const FinSpace& xy = joint.dst();
    if (!xy.is_tensor())
        throw SpaceMismatch("marginal: codomain " + xy.describe() + " is not a tensor product");
    const FinSpace& x = xy.left();
    const FinSpace& y = xy.right();
    const FinSpace& kept = keep == Side::left ? x : y;
    MatrixXr m = MatrixXr::Zero(idx(kept.size()), idx(joint.src().size()));
    for (std::size_t a = 0; a < joint.src().size(); ++a)
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j)
                m(idx(keep == Side::left ? i : j), idx(a)) += joint(i * y.size() + j, a);
    return Kernel(joint.src(), kept, std::move(m));
}

Dist marginal(const Dist& joint, Side keep)
{
    return marginal(Kernel(joint), keep).as_state();
}

bool is_deterministic(const Kernel& k)
{
    for (std::size_t x = 0; x < k.src().size(); ++x)
        if (!k.column(x).dirac_atom())
            return false;
    return true;
}

std::optional<AsCounterexample> as_counterexample(const Kernel& f, const Kernel& g, const Kernel& p)
{
    require_same(f.src(), g.src(), "almost-sure equality (sources)");
    require_same(f.dst(), g.dst(), "almost-sure equality (targets)");
    require_same(p.dst(), f.src(), "almost-sure equality (measure)");
    for (std::size_t a = 0; a < p.src().size(); ++a)
        for (std::size_t x = 0; x < f.src().size(); ++x)
            for (std::size_t y = 0; y < f.dst().size(); ++y)
                if (p(x, a) * f(y, x) != p(x, a) * g(y, x))
                    return AsCounterexample{a, x, y};
    return std::nullopt;
}

bool is_as_deterministic(const Kernel& f, const Kernel& p)
{
    Kernel lhs = compose(f, copy(f.dst()));
    Kernel rhs = compose(copy(f.src()), tensor(f, f));
    return as_equal(lhs, rhs, p);
}

}   // namespace finstoch
