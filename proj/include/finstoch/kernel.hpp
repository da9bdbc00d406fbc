#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "finstoch/rational.hpp"
#include "finstoch/space.hpp"

namespace finstoch {

/** An exact probability vector over a finite space. */
class Dist
{
    public:
        /** Throws InvariantError if a weight is negative or the total is not 1. */
        Dist(FinSpace space, VectorXr weights);

        static Dist dirac(const FinSpace& space, std::size_t atom);
        static Dist uniform(const FinSpace& space);

        const FinSpace& space() const { return space_; }
        const VectorXr& weights() const { return weights_; }
        const Rational& operator()(std::size_t atom) const { return weights_(static_cast<Eigen::Index>(atom)); }
        std::size_t size() const { return space_.size(); }

        /** Indices of the atoms with positive weight. */
        std::vector<std::size_t> support() const;
        /** The atom index if this is a Dirac distribution. */
        std::optional<std::size_t> dirac_atom() const;

        friend bool operator==(const Dist& a, const Dist& b)
        {
            return a.space_ == b.space_ && equal(a.weights_, b.weights_);
        }

    private:
        FinSpace space_;
        VectorXr weights_;
};

/**
 * A stochastic kernel src -> dst. The matrix is |dst| x |src| and each
 * column k(.|x) is a probability vector. Kernels out of the empty space are
 * empty matrices and vacuously stochastic.
 */
class Kernel
{
    public:
        /** Throws InvariantError naming the column and its exact deficit. */
        Kernel(FinSpace src, FinSpace dst, MatrixXr entries);

        /** The state I -> X of a distribution. */
        explicit Kernel(const Dist& state);

        const FinSpace& src() const { return src_; }
        const FinSpace& dst() const { return dst_; }
        const MatrixXr& matrix() const { return entries_; }

        /** k(y|x). */
        const Rational& operator()(std::size_t y, std::size_t x) const
        {
            return entries_(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x));
        }

        /** The distribution k(.|x). */
        Dist column(std::size_t x) const;
        /** Interprets a kernel I -> X as a distribution; throws SpaceMismatch otherwise. */
        Dist as_state() const;

        friend bool operator==(const Kernel& a, const Kernel& b)
        {
            return a.src_ == b.src_ && a.dst_ == b.dst_ && equal(a.entries_, b.entries_);
        }

    private:
        FinSpace src_;
        FinSpace dst_;
        MatrixXr entries_;
};

/** A function between finite spaces. */
class DetMap
{
    public:
        /** Throws InvariantError if an image index is out of range. */
        DetMap(FinSpace src, FinSpace dst, std::vector<std::size_t> images);

        /** The function a kernel represents, if every column is a Dirac vector. */
        static std::optional<DetMap> from_kernel(const Kernel& k);

        const FinSpace& src() const { return src_; }
        const FinSpace& dst() const { return dst_; }
        const std::vector<std::size_t>& images() const { return images_; }
        std::size_t operator()(std::size_t x) const { return images_.at(x); }

        /** The 0/1 column-Dirac kernel. */
        Kernel embed() const;

        friend bool operator==(const DetMap& a, const DetMap& b)
        {
            return a.src_ == b.src_ && a.dst_ == b.dst_ && a.images_ == b.images_;
        }

    private:
        FinSpace src_;
        FinSpace dst_;
        std::vector<std::size_t> images_;
};

/** If the column sums of `m` are all 1 and entries are >= 0, nothing; otherwise a description. */
std::optional<std::string> stochastic_violation(const MatrixXr& m);

/** k1 first, then k2: result(z|x) = sum_y k2(z|y) k1(y|x). */
Kernel compose(const Kernel& k1, const Kernel& k2);
/** The pushforward of a state along a kernel. */
Dist compose(const Dist& p, const Kernel& k);
/** f first, then g. */
DetMap compose(const DetMap& f, const DetMap& g);

Kernel identity(const FinSpace& x);
DetMap identity_map(const FinSpace& x);

Kernel tensor(const Kernel& k1, const Kernel& k2);
Dist tensor(const Dist& p, const Dist& q);
DetMap tensor(const DetMap& f, const DetMap& g);

/** X -> X*X, x |-> (x, x). */
Kernel copy(const FinSpace& x);
/** X -> I. */
Kernel del(const FinSpace& x);
/** X*Y -> Y*X. */
Kernel swap(const FinSpace& x, const FinSpace& y);

DetMap copy_map(const FinSpace& x);
DetMap del_map(const FinSpace& x);
DetMap swap_map(const FinSpace& x, const FinSpace& y);
/** (X*Y)*Z -> X*(Y*Z); the matrix is the identity, only the bracketing changes. */
DetMap associator(const FinSpace& x, const FinSpace& y, const FinSpace& z);
/** Projections X*Y -> X and X*Y -> Y. */
DetMap proj_left(const FinSpace& x, const FinSpace& y);
DetMap proj_right(const FinSpace& x, const FinSpace& y);

enum class Side
{
    left,
    right
};

/** Sums out the other factor of a kernel into a declared tensor. */
Kernel marginal(const Kernel& joint, Side keep);
Dist marginal(const Dist& joint, Side keep);

/** True iff every column of k is a Dirac vector. */
bool is_deterministic(const Kernel& k);

/** A triple (a, x, y) with p(x|a) f(y|x) != p(x|a) g(y|x). */
struct AsCounterexample
{
    std::size_t a;
    std::size_t x;
    std::size_t y;
};

/**
 * Checks p-almost sure equality of f, g: X -> Y for p: A -> X, returning the
 * first violated triple in (a, x, y) order. Throws SpaceMismatch on shapes.
 */
std::optional<AsCounterexample> as_counterexample(const Kernel& f, const Kernel& g, const Kernel& p);

inline bool as_equal(const Kernel& f, const Kernel& g, const Kernel& p)
{
    return !as_counterexample(f, g, p).has_value();
}

/** True iff copy . f =_p (f * f) . copy, i.e. f is Dirac on the support of p. */
bool is_as_deterministic(const Kernel& f, const Kernel& p);

}   // namespace finstoch
