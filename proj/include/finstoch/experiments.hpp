#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "finstoch/dominance.hpp"
#include "finstoch/kernel.hpp"
#include "finstoch/monad.hpp"

namespace finstoch {

/** A statistical experiment: a channel Theta -> X on a prior over Theta. */
struct Experiment
{
    Dist prior;
    Kernel channel;

    /** Throws SpaceMismatch unless the channel's source is the prior's space. */
    Experiment(Dist prior, Kernel channel);
};

/**
 * The standard measure: the posteriors f+(.|x) weighted by the evidence
 * q(x) = (f.p)(x), over observations with q(x) > 0.
 */
SuppDist standard_measure(const Experiment& e);

class NotAlmostDeterministic : public PreconditionError
{
    public:
        explicit NotAlmostDeterministic(const std::string& what) : PreconditionError(what) {}
};

/**
 * The standard measure of an a.s.-deterministic channel; each atom is
 * supported inside one fiber of f. Throws NotAlmostDeterministic.
 */
SuppDist hypernormalization(const Dist& p, const Kernel& f);

/**
 * g <= f in the Blackwell order: some stochastic h : X -> Y with
 * h.f = g almost surely for the shared prior. Throws SpaceMismatch if the
 * priors differ.
 */
std::optional<Kernel> blackwell_le(const Experiment& g, const Experiment& f);

struct BssOutcome
{
    bool blackwell;   // g <= f
    bool dominance;   // partial evaluation from f^ to g^
    bool agree() const { return blackwell == dominance; }
};

/** Decides g <= f both ways: directly, and by dominance of standard measures. */
BssOutcome bss_check(const Experiment& f, const Experiment& g);

/** The Bayesian inverse of samp for a decomposition pi, as an experiment on mu(pi). */
struct SampBayes
{
    FinSpace atoms;
    Kernel channel;                  // Theta -> atoms
    std::vector<Dist> embedding;     // atom i |-> nu_i

    Experiment experiment(const SuppDist& pi) const { return Experiment(mu(pi), channel); }
};

SampBayes samp_bayes(const SuppDist& pi);

class UniStdPreconditionError : public PreconditionError
{
    public:
        enum class Which
        {
            samp,   // samp.pi != p
            fibers  // P f . pi != delta . q
        };

        UniStdPreconditionError(Which which, const std::string& what) : PreconditionError(what), which_(which) {}
        Which which() const { return which_; }

    private:
        Which which_;
};

/**
 * For a decomposition pi of p that refines the partition of an
 * a.s.-deterministic f, returns the partial evaluation from pi to the
 * hypernormalization of p along f. Throws UniStdPreconditionError.
 */
DilationWitness uni_std_check(const Dist& p, const Kernel& f, const SuppDist& pi);

struct MaximalityEntry
{
    std::size_t index;
    std::optional<std::string> rejected;   // failed preconditions
    bool below = false;       // partial evaluation candidate -> hypernormalization
    bool above = false;       // partial evaluation hypernormalization -> candidate
    bool is_maximum = false;  // candidate equals the hypernormalization
    bool consistent() const { return rejected || (below && (!above || is_maximum)); }
};

struct MaximalityReport
{
    SuppDist hypernormalization;
    std::vector<MaximalityEntry> entries;

    bool all_consistent() const;
};

/** Tests the hypernormalization against each candidate decomposition. */
MaximalityReport maximality_probe(const Dist& p, const Kernel& f, const std::vector<SuppDist>& candidates);

}   // namespace finstoch
