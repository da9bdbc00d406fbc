#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace finstoch {

/**
 * Exact rational scalar. GMP keeps every value in lowest terms with a
 * positive denominator, so equality is structural.
 */
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer  = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                               boost::multiprecision::et_off>;

using MatrixXr = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXr = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/** "num/den", or just "num" for integers. */
std::string to_string(const Rational& r);

/** Space-separated entries of a vector. */
std::string to_string(const VectorXr& v);

/**
 * Parses "p/q" or an integer, with an optional leading sign. Throws
 * std::invalid_argument on anything else (including q = 0).
 */
Rational parse_rational(std::string_view text);

/** Strict lexicographic order on equal-length vectors, shorter first otherwise. */
bool lex_less(const VectorXr& a, const VectorXr& b);

/**
 * The exact product a * b. Zero entries are skipped, which matters for the
 * 0/1 matrices of structural kernels.
 */
MatrixXr product(const MatrixXr& a, const MatrixXr& b);

/** Exact structural equality, including sizes. */
bool equal(const MatrixXr& a, const MatrixXr& b);

}   // namespace finstoch
