#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <doctest.h>

#include "finstoch/kernel.hpp"
#include "finstoch/rational.hpp"

namespace finstoch::test {

inline Rational R(const char* text)
{
    return parse_rational(text);
}

inline VectorXr vec(std::initializer_list<const char*> entries)
{
    VectorXr v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (const char* e : entries)
        v(i++) = parse_rational(e);
    return v;
}

/** A kernel from its columns k(.|x), one initializer list per source atom. */
inline Kernel kernel(const FinSpace& src, const FinSpace& dst,
                     std::initializer_list<std::initializer_list<const char*>> columns)
{
    MatrixXr m(static_cast<Eigen::Index>(dst.size()), static_cast<Eigen::Index>(src.size()));
    Eigen::Index x = 0;
    for (const auto& col : columns)
        m.col(x++) = vec(col);
    return Kernel(src, dst, std::move(m));
}

inline Dist dist(const FinSpace& x, std::initializer_list<const char*> weights)
{
    return Dist(x, vec(weights));
}

}   // namespace finstoch::test

namespace finstoch {

inline std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << to_string(r);
}

}   // namespace finstoch
