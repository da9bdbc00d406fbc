#include "finstoch/monad.hpp"

#include <algorithm>

#include "finstoch/errors.hpp"

namespace finstoch {

namespace {

Eigen::Index idx(std::size_t i)
{
    return static_cast<Eigen::Index>(i);
}

std::vector<SuppDist::Atom> canonicalize(std::vector<SuppDist::Atom> atoms)
{
    std::stable_sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) {
        return lex_less(a.dist.weights(), b.dist.weights());
    });
    std::vector<SuppDist::Atom> out;
    for (auto& atom : atoms)
    {
        if (atom.weight == 0)
            continue;
        if (!out.empty() && out.back().dist == atom.dist)
            out.back().weight += atom.weight;
        else
            out.push_back(std::move(atom));
    }
    return out;
}

}   // namespace

SuppDist::SuppDist(FinSpace base, std::vector<Atom> atoms) : base_(std::move(base))
{
    Rational total = 0;
    for (const auto& atom : atoms)
    {
        require_same(base_, atom.dist.space(), "suppdist atom");
        if (atom.weight < 0)
            throw InvariantError("suppdist over " + base_.name() + ": negative weight "
                                 + to_string(atom.weight));
        total += atom.weight;
    }
    if (total != 1)
        throw InvariantError("suppdist over " + base_.name() + ": weights sum to " + to_string(total)
                             + " (deficit " + to_string(Rational(1 - total)) + ")");
    atoms_ = canonicalize(std::move(atoms));
}

SuppDist SuppDist::dirac(const Dist& nu)
{
    return SuppDist(nu.space(), {Atom{1, nu}});
}

bool operator==(const SuppDist& a, const SuppDist& b)
{
    if (!(a.base_ == b.base_) || a.atoms_.size() != b.atoms_.size())
        return false;
    for (std::size_t i = 0; i < a.atoms_.size(); ++i)
        if (a.atoms_[i].weight != b.atoms_[i].weight || !(a.atoms_[i].dist == b.atoms_[i].dist))
            return false;
    return true;
}

MetaKernel::MetaKernel(FinSpace src, FinSpace base, std::vector<SuppDist> rows)
    : src_(std::move(src)), base_(std::move(base)), rows_(std::move(rows))
{
    if (rows_.size() != src_.size())
        throw InvariantError("metakernel out of " + src_.name() + ": expected " + std::to_string(src_.size())
                             + " rows, got " + std::to_string(rows_.size()));
    for (const auto& r : rows_)
        require_same(base_, r.base(), "metakernel row");
}

bool MetaKernel::is_deterministic() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const SuppDist& r) { return r.size() == 1; });
}

bool as_equal(const MetaKernel& m1, const MetaKernel& m2, const Kernel& p)
{
    require_same(m1.src(), m2.src(), "almost-sure equality (sources)");
    require_same(m1.base(), m2.base(), "almost-sure equality (bases)");
    require_same(p.dst(), m1.src(), "almost-sure equality (measure)");
    for (std::size_t x = 0; x < m1.src().size(); ++x)
    {
        bool charged = false;
        for (std::size_t s = 0; s < p.src().size(); ++s)
            charged = charged || p(x, s) > 0;
        if (charged && !(m1.row(x) == m2.row(x)))
            return false;
    }
    return true;
}

MetaKernel delta(const FinSpace& x)
{
    std::vector<SuppDist> rows;
    for (std::size_t i = 0; i < x.size(); ++i)
        rows.push_back(SuppDist::dirac(Dist::dirac(x, i)));
    return MetaKernel(x, x, std::move(rows));
}

Dist mu(const SuppDist& m)
{
    VectorXr w = VectorXr::Zero(idx(m.base().size()));
    for (const auto& atom : m.atoms())
        w += atom.weight * atom.dist.weights();
    return Dist(m.base(), std::move(w));
}

SuppDist push(const Kernel& k, const SuppDist& m)
{
    require_same(k.src(), m.base(), "push");
    std::vector<SuppDist::Atom> atoms;
    for (const auto& atom : m.atoms())
        atoms.push_back({atom.weight, compose(atom.dist, k)});
    return SuppDist(k.dst(), std::move(atoms));
}

MetaKernel push(const Kernel& k, const MetaKernel& m)
{
    std::vector<SuppDist> rows;
    for (const auto& r : m.rows())
        rows.push_back(push(k, r));
    return MetaKernel(m.src(), k.dst(), std::move(rows));
}

Kernel samp_meta(const MetaKernel& m)
{
    MatrixXr out(idx(m.base().size()), idx(m.src().size()));
    for (std::size_t a = 0; a < m.src().size(); ++a)
        out.col(idx(a)) = mu(m.row(a)).weights();
    return Kernel(m.src(), m.base(), std::move(out));
}

MetaKernel sharp(const Kernel& k)
{
    std::vector<SuppDist> rows;
    for (std::size_t a = 0; a < k.src().size(); ++a)
        rows.push_back(SuppDist::dirac(k.column(a)));
    return MetaKernel(k.src(), k.dst(), std::move(rows));
}

Dist strength(const Dist& nu, const FinSpace& params, std::size_t a)
{
    return tensor(nu, Dist::dirac(params, a));
}

SuppDist nabla(const SuppDist& m1, const SuppDist& m2)
{
    std::vector<SuppDist::Atom> atoms;
    for (const auto& a1 : m1.atoms())
        for (const auto& a2 : m2.atoms())
            atoms.push_back({a1.weight * a2.weight, tensor(a1.dist, a2.dist)});
    return SuppDist(tensor(m1.base(), m2.base()), std::move(atoms));
}

MetaKernel nabla(const MetaKernel& m1, const MetaKernel& m2)
{
    std::vector<SuppDist> rows;
    for (const auto& r1 : m1.rows())
        for (const auto& r2 : m2.rows())
            rows.push_back(nabla(r1, r2));
    return MetaKernel(tensor(m1.src(), m2.src()), tensor(m1.base(), m2.base()), std::move(rows));
}

SuppDist join(const SuppDistTower& t)
{
    std::vector<SuppDist::Atom> atoms;
    for (const auto& [c, m] : t.atoms)
    {
        require_same(t.base, m.base(), "join");
        for (const auto& atom : m.atoms())
            atoms.push_back({c * atom.weight, atom.dist});
    }
    return SuppDist(t.base, std::move(atoms));
}

SuppDist map_mu(const SuppDistTower& t)
{
    std::vector<SuppDist::Atom> atoms;
    for (const auto& [c, m] : t.atoms)
        atoms.push_back({c, mu(m)});
    return SuppDist(t.base, std::move(atoms));
}

FinSpace atom_space(const SuppDist& m)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m.size(); ++i)
        labels.push_back("nu" + std::to_string(i));
    return FinSpace("Atoms(" + m.base().name() + ")", std::move(labels));
}

Dist atom_weights(const SuppDist& m)
{
    VectorXr w(idx(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        w(idx(i)) = m.atoms()[i].weight;
    return Dist(atom_space(m), std::move(w));
}

Kernel samp_on_atoms(const SuppDist& m)
{
    MatrixXr out(idx(m.base().size()), idx(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        out.col(idx(i)) = m.atoms()[i].dist.weights();
    return Kernel(atom_space(m), m.base(), std::move(out));
}

SuppDist dirac_decomposition(const Dist& p)
{
    std::vector<SuppDist::Atom> atoms;
    for (std::size_t x : p.support())
        atoms.push_back({p(x), Dist::dirac(p.space(), x)});
    return SuppDist(p.space(), std::move(atoms));
}

}   // namespace finstoch
