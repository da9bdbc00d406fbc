#include "finstoch/limits.hpp"

#include "finstoch/errors.hpp"

namespace finstoch {

Equalizer equalizer(const DetMap& f, const DetMap& g)
{
    require_same(f.src(), g.src(), "equalizer (sources)");
    require_same(f.dst(), g.dst(), "equalizer (targets)");
    const FinSpace& x = f.src();
    std::vector<std::string> labels;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (f(i) == g(i))
        {
            labels.push_back(x.label(i));
            members.push_back(i);
        }
    FinSpace e("Eq(" + x.name() + ")", std::move(labels));
    return Equalizer{e, DetMap(e, x, std::move(members))};
}

Kernel Equalizer::factor_through(const Kernel& p) const
{
    const FinSpace& x = inclusion.dst();
    require_same(x, p.dst(), "factor_through");
    std::vector<bool> inside(x.size(), false);
    for (std::size_t x_in : inclusion.images())
        inside[x_in] = true;
    for (std::size_t a = 0; a < p.src().size(); ++a)
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!inside[i] && p(i, a) > 0)
                throw FactorizationError("cannot factor through equalizer: atom " + x.label(i)
                                         + " outside it has mass " + to_string(p(i, a))
                                         + " at source atom " + p.src().label(a));
    MatrixXr m(static_cast<Eigen::Index>(object.size()), static_cast<Eigen::Index>(p.src().size()));
    for (std::size_t a = 0; a < p.src().size(); ++a)
        for (std::size_t e = 0; e < object.size(); ++e)
            m(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(a)) = p(inclusion(e), a);
    return Kernel(p.src(), object, std::move(m));
}

Pullback pullback(const DetMap& f, const DetMap& g)
{
    require_same(f.dst(), g.dst(), "pullback");
    const FinSpace& x = f.src();
    const FinSpace& y = g.src();
    Equalizer eq = equalizer(compose(proj_left(x, y), f), compose(proj_right(x, y), g));
    DetMap px = compose(eq.inclusion, proj_left(x, y));
    DetMap py = compose(eq.inclusion, proj_right(x, y));
    return Pullback{std::move(eq), std::move(px), std::move(py)};
}

}   // namespace finstoch
