#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "finstoch/kernel.hpp"
#include "finstoch/limits.hpp"
#include "finstoch/lp.hpp"
#include "finstoch/monad.hpp"

namespace finstoch {

/**
 * A finite-support probability measure on points of rational d-space,
 * i.e. a formal convex combination in a convex algebra whose structure map
 * is the affine barycenter. Canonical like SuppDist: equal points merged,
 * zero weights dropped, points sorted lexicographically.
 */
class PointMeasure
{
    public:
        struct Atom
        {
            Rational weight;
            VectorXr point;
        };

        PointMeasure(std::size_t dim, std::vector<Atom> atoms);

        /** Free-algebra embedding: points are the weight vectors of the atoms. */
        static PointMeasure from(const SuppDist& m);

        std::size_t dim() const { return dim_; }
        const std::vector<Atom>& atoms() const { return atoms_; }
        std::size_t size() const { return atoms_.size(); }

        VectorXr barycenter() const;

        friend bool operator==(const PointMeasure& a, const PointMeasure& b);

    private:
        std::size_t dim_;
        std::vector<Atom> atoms_;
};

bool operator==(const PointMeasure& a, const PointMeasure& b);

/**
 * Normal form of a partial evaluation from `fine` to `coarse`: row j is a
 * distribution m_j over the atoms of `fine` with
 *   sum_j coarse_j m_j(i) = fine_i             (mixture)
 *   sum_i m_j(i) fine.point_i = coarse.point_j (barycenter).
 */
class DilationWitness
{
    public:
        /** Throws InvariantError with the first violated condition. */
        DilationWitness(PointMeasure fine, PointMeasure coarse, MatrixXr rows);

        static DilationWitness identity(const PointMeasure& m);

        const PointMeasure& fine() const { return fine_; }
        const PointMeasure& coarse() const { return coarse_; }
        const MatrixXr& matrix() const { return rows_; }

        /** The first violated witness condition for the given data, if any. */
        static std::optional<std::string> violation(const PointMeasure& fine, const PointMeasure& coarse,
                                                    const MatrixXr& rows);

    private:
        PointMeasure fine_;
        PointMeasure coarse_;
        MatrixXr rows_;
};

struct DominanceResult
{
    enum class Status
    {
        feasible,
        infeasible,
        not_comparable   // different barycenters
    };

    Status status;
    std::optional<DilationWitness> witness;

    explicit operator bool() const { return status == Status::feasible; }
};

/** The dilation LP in variables m_j(i), row-major by coarse atom j. */
lp::LinSystem dilation_system(const PointMeasure& fine, const PointMeasure& coarse);

/**
 * Decides whether there is a partial evaluation from `fine` to `coarse`.
 * Throws SpaceMismatch on different dimensions.
 */
DominanceResult dominance_decide(const PointMeasure& fine, const PointMeasure& coarse);

inline DominanceResult dominance_decide(const SuppDist& fine, const SuppDist& coarse)
{
    return dominance_decide(PointMeasure::from(fine), PointMeasure::from(coarse));
}

/** first: fine -> middle, second: middle -> coarse. Throws PreconditionError on a middle mismatch. */
DilationWitness compose_dilations(const DilationWitness& first, const DilationWitness& second);

/**
 * Lifts q : A -> PY along P f to r : A -> PX over p : A -> X, atomwise
 * nu |-> sum_y nu(y) f+_p(.|y, a). Requires f.p = samp.q; throws
 * PreconditionError with the offending (a, y) otherwise. Both
 * samp.r = p and P f . r = q are verified before returning.
 */
MetaKernel mu_square_witness(const DetMap& f, const Kernel& p, const MetaKernel& q);

struct PullbackWitness
{
    Pullback square;   // W with its projections
    Kernel coupling;   // rho : A -> X*Y
    Kernel factor;     // r : A -> W
};

/**
 * For f.p = g.q, couples p and q by their conditional product and factors
 * the coupling through the set pullback W of f and g, so that
 * proj_left.r = p and proj_right.r = q.
 */
PullbackWitness pullback_square_witness(const DetMap& f, const DetMap& g, const Kernel& p, const Kernel& q);

/**
 * For a commuting square  a : P -> X, b : P -> Y, f : X -> Z, g : Y -> Z,
 * whether every pair (x, y) with f(x) = g(y) is (a(w), b(w)) for some w.
 * Throws PreconditionError if the square does not commute.
 */
bool check_weak_pullback(const DetMap& a, const DetMap& b, const DetMap& f, const DetMap& g);

}   // namespace finstoch
