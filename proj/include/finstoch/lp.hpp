#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "finstoch/errors.hpp"
#include "finstoch/rational.hpp"

namespace finstoch::lp {

/** Largest variable count accepted by the Fourier-Motzkin oracle. */
inline constexpr std::size_t kFourierMotzkinVarLimit = 12;

/** The system { A x = b, x >= 0 } stored exactly, one equation per row. */
class LinSystem
{
    public:
        struct Row
        {
            VectorXr coeffs;
            Rational rhs;
        };

        explicit LinSystem(std::size_t num_vars) : num_vars_(num_vars) {}

        /** Throws InvariantError if the coefficient vector has the wrong length. */
        void add_row(VectorXr coeffs, Rational rhs);

        std::size_t num_vars() const { return num_vars_; }
        const std::vector<Row>& rows() const { return rows_; }

        /** Whether x is nonnegative and satisfies every equation exactly. */
        bool satisfied_by(const VectorXr& x) const;

    private:
        std::size_t num_vars_;
        std::vector<Row> rows_;
};

enum class Status
{
    feasible,
    infeasible
};

struct FeasibilityResult
{
    Status status;
    std::optional<VectorXr> witness;   // set iff feasible

    bool feasible() const { return status == Status::feasible; }
};

/**
 * Phase-one simplex over exact rationals with Bland's rule for both the
 * entering and the leaving variable. A feasible result always carries an
 * exact witness.
 */
FeasibilityResult solve(const LinSystem& sys);

class GuardExceeded : public Error
{
    public:
        explicit GuardExceeded(const std::string& what) : Error(what) {}
};

/**
 * Fourier-Motzkin decision: equations are used for substitution, the
 * remaining inequalities are eliminated pairwise. Throws GuardExceeded if
 * the system has more than kFourierMotzkinVarLimit variables.
 */
Status solve_fm(const LinSystem& sys);

}   // namespace finstoch::lp
