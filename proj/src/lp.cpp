#include "finstoch/lp.hpp"

#include <algorithm>

namespace finstoch::lp {

namespace {

Eigen::Index idx(std::size_t i)
{
    return static_cast<Eigen::Index>(i);
}

}   // namespace

void LinSystem::add_row(VectorXr coeffs, Rational rhs)
{
    if (coeffs.size() != idx(num_vars_))
        throw InvariantError("linear row has " + std::to_string(coeffs.size()) + " coefficients, expected "
                             + std::to_string(num_vars_));
    rows_.push_back({std::move(coeffs), std::move(rhs)});
}

bool LinSystem::satisfied_by(const VectorXr& x) const
{
    if (x.size() != idx(num_vars_))
        return false;
    for (Eigen::Index j = 0; j < x.size(); ++j)
        if (x(j) < 0)
            return false;
    for (const auto& row : rows_)
        if (row.coeffs.dot(x) != row.rhs)
            return false;
    return true;
}

// ---------------------------------------------------------------- simplex

FeasibilityResult solve(const LinSystem& sys)
{
    const std::size_t m = sys.rows().size();
    const std::size_t n = sys.num_vars();
    const std::size_t cols = n + m;   // originals, then one artificial per row
    const Eigen::Index rhs = idx(cols);

    // Row m holds the reduced costs of  min sum(artificials).
    MatrixXr tab = MatrixXr::Zero(idx(m + 1), idx(cols + 1));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
    {
        const auto& row = sys.rows()[i];
        const int sign = row.rhs < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j)
            tab(idx(i), idx(j)) = sign * row.coeffs(idx(j));
        tab(idx(i), idx(n + i)) = 1;
        tab(idx(i), rhs) = sign * row.rhs;
        basis[i] = n + i;
    }
    for (std::size_t i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j <= rhs; ++j)
            if (j < idx(n) || j == rhs)
                tab(idx(m), j) -= tab(idx(i), j);

    for (;;)
    {
        std::optional<std::size_t> enter;
        for (std::size_t j = 0; j < cols; ++j)
            if (tab(idx(m), idx(j)) < 0)
            {
                enter = j;
                break;
            }
        if (!enter)
            break;

        std::optional<std::size_t> leave;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i)
        {
            const Rational& a = tab(idx(i), idx(*enter));
            if (a <= 0)
                continue;
            Rational ratio = tab(idx(i), rhs) / a;
            if (!leave || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leave]))
            {
                leave = i;
                best_ratio = ratio;
            }
        }
        // Phase one is bounded below by zero, so a negative reduced cost always has a pivot row.
        const Eigen::Index r = idx(*leave);
        const Eigen::Index c = idx(*enter);
        const Rational pivot = tab(r, c);
        tab.row(r) /= pivot;
        for (Eigen::Index i = 0; i <= idx(m); ++i)
        {
            if (i == r || tab(i, c) == 0)
                continue;
            const Rational factor = tab(i, c);
            tab.row(i) -= factor * tab.row(r);
        }
        basis[*leave] = *enter;
    }

    if (tab(idx(m), rhs) != 0)
        return {Status::infeasible, std::nullopt};
    VectorXr x = VectorXr::Zero(idx(n));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n)
            x(idx(basis[i])) = tab(idx(i), rhs);
    return {Status::feasible, std::move(x)};
}

// ---------------------------------------------------------------- Fourier-Motzkin

namespace {

/** coeffs . x <= rhs, or == rhs when `equality`. */
struct Constraint
{
    std::vector<Rational> coeffs;
    Rational rhs;
    bool equality;
};

bool operator<(const Constraint& a, const Constraint& b)
{
    if (a.equality != b.equality)
        return a.equality < b.equality;
    if (a.coeffs != b.coeffs)
        return a.coeffs < b.coeffs;
    return a.rhs < b.rhs;
}

bool operator==(const Constraint& a, const Constraint& b)
{
    return a.equality == b.equality && a.coeffs == b.coeffs && a.rhs == b.rhs;
}

/** Scales so the first nonzero coefficient has absolute value 1 (positive for equations). */
void normalize(Constraint& c)
{
    auto it = std::find_if(c.coeffs.begin(), c.coeffs.end(), [](const Rational& v) { return v != 0; });
    if (it == c.coeffs.end())
        return;
    Rational scale = *it;
    if (!c.equality && scale < 0)
        scale = -scale;
    for (auto& v : c.coeffs)
        v /= scale;
    c.rhs /= scale;
}

bool is_trivial(const Constraint& c)
{
    return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& v) { return v == 0; });
}

bool trivially_false(const Constraint& c)
{
    return c.equality ? c.rhs != 0 : c.rhs < 0;
}

/** a + factor * b, coefficientwise. */
Constraint combine(const Constraint& a, const Rational& fa, const Constraint& b, const Rational& fb,
                   bool equality)
{
    Constraint out{std::vector<Rational>(a.coeffs.size()), fa * a.rhs + fb * b.rhs, equality};
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
        out.coeffs[k] = fa * a.coeffs[k] + fb * b.coeffs[k];
    return out;
}

}   // namespace

Status solve_fm(const LinSystem& sys)
{
    const std::size_t n = sys.num_vars();
    if (n > kFourierMotzkinVarLimit)
        throw GuardExceeded("Fourier-Motzkin oracle accepts at most " + std::to_string(kFourierMotzkinVarLimit)
                            + " variables, got " + std::to_string(n));

    std::vector<Constraint> cs;
    for (const auto& row : sys.rows())
    {
        Constraint c{std::vector<Rational>(n), row.rhs, true};
        for (std::size_t j = 0; j < n; ++j)
            c.coeffs[j] = row.coeffs(idx(j));
        cs.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < n; ++j)
    {
        Constraint c{std::vector<Rational>(n), 0, false};
        c.coeffs[j] = -1;
        cs.push_back(std::move(c));
    }

    for (std::size_t var = 0; var < n; ++var)
    {
        for (auto& c : cs)
            normalize(c);
        std::vector<Constraint> kept;
        for (auto& c : cs)
        {
            if (is_trivial(c))
            {
                if (trivially_false(c))
                    return Status::infeasible;
                continue;
            }
            kept.push_back(std::move(c));
        }
        std::sort(kept.begin(), kept.end());
        kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
        cs = std::move(kept);

        auto pivot = std::find_if(cs.begin(), cs.end(),
                                  [&](const Constraint& c) { return c.equality && c.coeffs[var] != 0; });
        std::vector<Constraint> next;
        if (pivot != cs.end())
        {
            const Constraint eq = *pivot;
            for (auto it = cs.begin(); it != cs.end(); ++it)
            {
                if (it == pivot)
                    continue;
                if (it->coeffs[var] == 0)
                {
                    next.push_back(*it);
                    continue;
                }
                // Substitution keeps the sense of an inequality: add a signed multiple of an equation.
                next.push_back(combine(*it, 1, eq, Rational(-it->coeffs[var] / eq.coeffs[var]), it->equality));
            }
        }
        else
        {
            std::vector<const Constraint*> upper, lower;
            for (const auto& c : cs)
            {
                if (c.coeffs[var] > 0)
                    upper.push_back(&c);
                else if (c.coeffs[var] < 0)
                    lower.push_back(&c);
                else
                    next.push_back(c);
            }
            for (const Constraint* u : upper)
                for (const Constraint* l : lower)
                    next.push_back(combine(*u, Rational(-l->coeffs[var]), *l, u->coeffs[var], false));
        }
        cs = std::move(next);
    }

    for (const auto& c : cs)
        if (trivially_false(c))
            return Status::infeasible;
    return Status::feasible;
}

}   // namespace finstoch::lp
