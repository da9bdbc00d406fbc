#include "finstoch/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace finstoch {

std::string to_string(const Rational& r)
{
    return r.str();
}

std::string to_string(const VectorXr& v)
{
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i)
    {
        if (i > 0)
            out += ' ';
        out += v(i).str();
    }
    return out;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}   // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos)
    {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    Integer n{std::string(num)};
    Integer d{std::string(den)};
    if (d == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(n, d);
    return negative ? Rational(-r) : r;
}

MatrixXr product(const MatrixXr& a, const MatrixXr& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("product: inner dimensions differ");
    MatrixXr out = MatrixXr::Zero(a.rows(), b.cols());
    for (Eigen::Index j = 0; j < b.cols(); ++j)
        for (Eigen::Index k = 0; k < b.rows(); ++k)
        {
            const Rational& bkj = b(k, j);
            if (bkj == 0)
                continue;
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                if (a(i, k) != 0)
                    out(i, j) += a(i, k) * bkj;
        }
    return out;
}

bool lex_less(const VectorXr& a, const VectorXr& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
    {
        if (a(i) < b(i))
            return true;
        if (b(i) < a(i))
            return false;
    }
    return false;
}

bool equal(const MatrixXr& a, const MatrixXr& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, j) != b(i, j))
                return false;
    return true;
}

}   // namespace finstoch
