#pragma once

#include <string>

#include "finstoch/kernel.hpp"

namespace finstoch {

/**
 * The conditional f|X : X*A -> Y of a joint f : A -> X*Y, so that
 * f(x,y|a) = f_X(x|a) f|X(y|x,a). Rows where the marginal f_X(x|a) is zero
 * are uniform.
 */
Kernel conditional(const Kernel& joint);

/** The Bayesian inverse X -> Theta of f : Theta -> X under the prior p; null rows uniform. */
Kernel bayes_invert(const Kernel& f, const Dist& prior);

/** The parametric Bayesian inverse X*A -> Theta of f under p : A -> Theta. */
Kernel bayes_invert(const Kernel& f, const Kernel& prior);

/**
 * The conditional product A -> X*Y of p and q over the common pushforward
 * s = f.p = g.q:  rho(x,y|a) = sum_z s(z|a) f+(x|z,a) g+(y|z,a).
 * Throws PreconditionError naming an (a, z) discrepancy if f.p != g.q.
 */
Kernel conditional_product(const Kernel& p, const Kernel& q, const DetMap& f, const DetMap& g);

/** Outcome of an exact lemma check. */
struct LemmaCheck
{
    enum class Status
    {
        holds,
        fails,
        precondition_failed
    };

    Status status;
    std::string detail;

    explicit operator bool() const { return status == Status::holds; }
};

/**
 * For f : Theta -> X deterministic p-almost surely (p : A -> Theta), checks
 * that f . f+_p equals the projection X*A -> X almost surely for the
 * measure (f.p, 1_A).
 */
LemmaCheck check_f_as_det(const Kernel& f, const Kernel& p);

/**
 * For pi = delta . p, checks that samp is pi-almost surely deterministic and
 * that samp . samp+_pi =_p 1_X.
 */
LemmaCheck check_samp_det(const Dist& p);

}   // namespace finstoch
