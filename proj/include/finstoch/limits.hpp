#pragma once

#include "finstoch/kernel.hpp"

namespace finstoch {

/** The equalizer E = {x : f(x) = g(x)} of two deterministic maps. */
struct Equalizer
{
    FinSpace object;
    DetMap inclusion;   // E -> X

    /**
     * The unique kernel r: A -> E with inclusion . r = p. Throws
     * FactorizationError naming a source atom and an atom outside E that
     * carries positive mass.
     */
    Kernel factor_through(const Kernel& p) const;
};

Equalizer equalizer(const DetMap& f, const DetMap& g);

/** The set pullback W = {(x, y) : f(x) = g(y)} of a cospan X -> Z <- Y. */
struct Pullback
{
    Equalizer pairs;   // W as the equalizer of f.proj_left and g.proj_right inside X*Y
    DetMap proj_left;  // W -> X
    DetMap proj_right; // W -> Y

    const FinSpace& object() const { return pairs.object; }
};

Pullback pullback(const DetMap& f, const DetMap& g);

}   // namespace finstoch
