#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "finstoch/kernel.hpp"

namespace finstoch {

/**
 * A finite-support probability measure on distributions over `base`: an
 * element of PPX given by finitely many weighted atoms.
 *
 * Always canonical: equal atoms merged, zero weights dropped, atoms sorted
 * by the lexicographic order of their weight vectors. Equality is therefore
 * structural.
 */
class SuppDist
{
    public:
        struct Atom
        {
            Rational weight;
            Dist dist;
        };

        /** Throws InvariantError unless weights are >= 0, sum to 1, and every atom lives on `base`. */
        SuppDist(FinSpace base, std::vector<Atom> atoms);

        /** The single-atom measure concentrated on `nu`. */
        static SuppDist dirac(const Dist& nu);

        const FinSpace& base() const { return base_; }
        const std::vector<Atom>& atoms() const { return atoms_; }
        std::size_t size() const { return atoms_.size(); }

        friend bool operator==(const SuppDist& a, const SuppDist& b);

    private:
        FinSpace base_;
        std::vector<Atom> atoms_;
};

bool operator==(const SuppDist& a, const SuppDist& b);

/** A finite-support morphism A -> PX, one canonical SuppDist per source atom. */
class MetaKernel
{
    public:
        MetaKernel(FinSpace src, FinSpace base, std::vector<SuppDist> rows);

        const FinSpace& src() const { return src_; }
        const FinSpace& base() const { return base_; }
        const std::vector<SuppDist>& rows() const { return rows_; }
        const SuppDist& row(std::size_t a) const { return rows_.at(a); }

        /** Every row is a single atom: a deterministic map A -> PX. */
        bool is_deterministic() const;

        friend bool operator==(const MetaKernel& a, const MetaKernel& b)
        {
            return a.src_ == b.src_ && a.base_ == b.base_ && a.rows_ == b.rows_;
        }

    private:
        FinSpace src_;
        FinSpace base_;
        std::vector<SuppDist> rows_;
};

/** Rowwise equality of m1 and m2 on every source atom with p(a|s) > 0 for some s. */
bool as_equal(const MetaKernel& m1, const MetaKernel& m2, const Kernel& p);

/** A three-level measure: finitely many weighted SuppDists over one base. */
struct SuppDistTower
{
    FinSpace base;
    std::vector<std::pair<Rational, SuppDist>> atoms;
};

/** x |-> (1, Dirac_x). */
MetaKernel delta(const FinSpace& x);

/** Averaging: result(x) = sum_i w_i nu_i(x). */
Dist mu(const SuppDist& m);

/** Atomwise pushforward along k, canonicalized. */
SuppDist push(const Kernel& k, const SuppDist& m);
MetaKernel push(const Kernel& k, const MetaKernel& m);

inline Dist samp_state(const SuppDist& m) { return mu(m); }

/** mu applied rowwise; this is the flat (-)_b of the representability bijection. */
Kernel samp_meta(const MetaKernel& m);
inline Kernel flat(const MetaKernel& m) { return samp_meta(m); }

/** Row a becomes the single atom (1, k(.|a)). */
MetaKernel sharp(const Kernel& k);

/** nu * Dirac_a on X*A. */
Dist strength(const Dist& nu, const FinSpace& params, std::size_t a);

/** The product measure of two SuppDists, atoms (w w', nu * nu'). */
SuppDist nabla(const SuppDist& m1, const SuppDist& m2);
/** The Kleisli tensor A*B -> P(X*Y) of two MetaKernels. */
MetaKernel nabla(const MetaKernel& m1, const MetaKernel& m2);

/** mu at level PX: flattens a tower into one SuppDist. */
SuppDist join(const SuppDistTower& t);
/** P(mu): replaces each SuppDist atom of a tower by its average. */
SuppDist map_mu(const SuppDistTower& t);

/**
 * The atoms of m as a finite space ("nu0", "nu1", ...), the measure m as a
 * distribution over it, and samp restricted to it (atom i |-> nu_i).
 */
FinSpace atom_space(const SuppDist& m);
Dist atom_weights(const SuppDist& m);
Kernel samp_on_atoms(const SuppDist& m);

/** sum_x p(x) delta_{Dirac_x}: the finest decomposition of p. */
SuppDist dirac_decomposition(const Dist& p);

}   // namespace finstoch
