#include "finstoch/conditionals.hpp"

#include "finstoch/errors.hpp"
#include "finstoch/monad.hpp"

namespace finstoch {

namespace {

Eigen::Index idx(std::size_t i)
{
    return static_cast<Eigen::Index>(i);
}

Rational uniform_weight(std::size_t n)
{
    return Rational(1, static_cast<long>(n));
}

}   // namespace

Kernel conditional(const Kernel& joint)
{
    const FinSpace& a_space = joint.src();
    const FinSpace& xy = joint.dst();
    if (!xy.is_tensor())
        throw SpaceMismatch("conditional: codomain " + xy.describe() + " is not a tensor product");
    const FinSpace& x_space = xy.left();
    const FinSpace& y_space = xy.right();
    const std::size_t nx = x_space.size();
    const std::size_t ny = y_space.size();
    const std::size_t na = a_space.size();
    Kernel fx = marginal(joint, Side::left);

    MatrixXr m(idx(ny), idx(nx * na));
    for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t a = 0; a < na; ++a)
        {
            const Eigen::Index col = idx(x * na + a);
            const Rational& mass = fx(x, a);
            for (std::size_t y = 0; y < ny; ++y)
                m(idx(y), col) = mass > 0 ? Rational(joint(x * ny + y, a) / mass) : uniform_weight(ny);
        }
    return Kernel(tensor(x_space, a_space), y_space, std::move(m));
}

Kernel bayes_invert(const Kernel& f, const Kernel& prior)
{
    require_same(prior.dst(), f.src(), "bayes_invert");
    const FinSpace& theta = f.src();
    const FinSpace& x_space = f.dst();
    const FinSpace& a_space = prior.src();
    const std::size_t na = a_space.size();
    Kernel q = compose(prior, f);

    MatrixXr m(idx(theta.size()), idx(x_space.size() * na));
    for (std::size_t x = 0; x < x_space.size(); ++x)
        for (std::size_t a = 0; a < na; ++a)
        {
            const Eigen::Index col = idx(x * na + a);
            const Rational& evidence = q(x, a);
            for (std::size_t t = 0; t < theta.size(); ++t)
                m(idx(t), col) = evidence > 0 ? Rational(prior(t, a) * f(x, t) / evidence)
                                              : uniform_weight(theta.size());
        }
    return Kernel(tensor(x_space, a_space), theta, std::move(m));
}

Kernel bayes_invert(const Kernel& f, const Dist& prior)
{
    return bayes_invert(f, Kernel(prior));
}

Kernel conditional_product(const Kernel& p, const Kernel& q, const DetMap& f, const DetMap& g)
{
    require_same(p.src(), q.src(), "conditional_product (parameters)");
    require_same(f.dst(), g.dst(), "conditional_product (common target)");
    const Kernel s = compose(p, f.embed());
    const Kernel s2 = compose(q, g.embed());
    const FinSpace& a_space = p.src();
    const FinSpace& z_space = f.dst();
    for (std::size_t a = 0; a < a_space.size(); ++a)
        for (std::size_t z = 0; z < z_space.size(); ++z)
            if (s(z, a) != s2(z, a))
                throw PreconditionError("conditional_product: f.p and g.q differ at (a=" + a_space.label(a)
                                        + ", z=" + z_space.label(z) + "): " + to_string(s(z, a))
                                        + " vs " + to_string(s2(z, a)));

    const Kernel fi = bayes_invert(f.embed(), p);   // Z*A -> X
    const Kernel gi = bayes_invert(g.embed(), q);   // Z*A -> Y
    const std::size_t na = a_space.size();
    const std::size_t nx = f.src().size();
    const std::size_t ny = g.src().size();
    MatrixXr rho = MatrixXr::Zero(idx(nx * ny), idx(na));
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t z = 0; z < z_space.size(); ++z)
        {
            if (s(z, a) == 0)
                continue;
            const std::size_t za = z * na + a;
            for (std::size_t x = 0; x < nx; ++x)
            {
                if (fi(x, za) == 0)
                    continue;
                for (std::size_t y = 0; y < ny; ++y)
                    rho(idx(x * ny + y), idx(a)) += s(z, a) * fi(x, za) * gi(y, za);
            }
        }
    return Kernel(a_space, tensor(f.src(), g.src()), std::move(rho));
}

LemmaCheck check_f_as_det(const Kernel& f, const Kernel& p)
{
    using Status = LemmaCheck::Status;
    if (!is_as_deterministic(f, p))
        return {Status::precondition_failed, "channel is not almost surely deterministic for the prior"};
    const FinSpace& a_space = p.src();
    const FinSpace& x_space = f.dst();
    const Kernel q = compose(p, f);
    const Kernel inverse = bayes_invert(f, p);          // X*A -> Theta
    const Kernel lhs = compose(inverse, f);             // X*A -> X
    const Kernel rhs = proj_left(x_space, a_space).embed();
    const Kernel measure = compose(copy(a_space), tensor(q, identity(a_space)));   // A -> X*A
    if (auto c = as_counterexample(lhs, rhs, measure))
    {
        const FinSpace& xa = lhs.src();
        return {Status::fails, "counterexample (a=" + measure.src().label(c->a) + ", (x,a)=" + xa.label(c->x)
                                   + ", x'=" + x_space.label(c->y) + ")"};
    }
    return {Status::holds, {}};
}

LemmaCheck check_samp_det(const Dist& p)
{
    using Status = LemmaCheck::Status;
    const SuppDist pi = dirac_decomposition(p);
    const Kernel samp = samp_on_atoms(pi);                 // atoms -> X
    const Kernel weights(atom_weights(pi));
    if (!is_as_deterministic(samp, weights))
        return {Status::fails, "samp is not almost surely deterministic for delta . p"};
    const Kernel inverse = bayes_invert(samp, weights);    // X -> atoms
    if (auto c = as_counterexample(compose(inverse, samp), identity(p.space()), Kernel(p)))
        return {Status::fails, "samp . samp+ differs from the identity at x=" + p.space().label(c->x)
                                   + ", x'=" + p.space().label(c->y)};
    return {Status::holds, {}};
}

}   // namespace finstoch
