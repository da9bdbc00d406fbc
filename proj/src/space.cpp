#include "finstoch/space.hpp"

#include <unordered_set>

#include "finstoch/errors.hpp"

namespace finstoch {

FinSpace::FinSpace() : name_("0") {}

FinSpace::FinSpace(std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels))
{
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second)
            throw InvariantError("space " + name_ + ": duplicate atom label '" + l + "'");
}

FinSpace FinSpace::unit()
{
    return FinSpace("I", {"*"});
}

std::optional<std::size_t> FinSpace::index_of(const std::string& label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return i;
    return std::nullopt;
}

bool FinSpace::is_unit() const
{
    return !is_tensor() && name_ == "I" && labels_.size() == 1 && labels_[0] == "*";
}

const FinSpace& FinSpace::left() const
{
    if (!left_)
        throw SpaceMismatch("space " + name_ + " is not a tensor product");
    return *left_;
}

const FinSpace& FinSpace::right() const
{
    if (!right_)
        throw SpaceMismatch("space " + name_ + " is not a tensor product");
    return *right_;
}

std::string FinSpace::describe() const
{
    std::string out = name_ + "{";
    for (std::size_t i = 0; i < labels_.size(); ++i)
    {
        if (i > 0)
            out += ',';
        out += labels_[i];
    }
    return out + "}";
}

FinSpace tensor(const FinSpace& a, const FinSpace& b)
{
    if (a.is_unit())
        return b;
    if (b.is_unit())
        return a;
    FinSpace out;
    // Left-nested products print without parentheses.
    out.name_ = a.name_ + "*" + (b.is_tensor() ? "(" + b.name_ + ")" : b.name_);
    out.labels_.reserve(a.size() * b.size());
    for (const auto& x : a.labels_)
        for (const auto& y : b.labels_)
            out.labels_.push_back("(" + x + "," + y + ")");
    out.left_ = std::make_shared<const FinSpace>(a);
    out.right_ = std::make_shared<const FinSpace>(b);
    return out;
}

bool operator==(const FinSpace& a, const FinSpace& b)
{
    if (a.name_ != b.name_ || a.labels_ != b.labels_ || a.is_tensor() != b.is_tensor())
        return false;
    if (!a.is_tensor())
        return true;
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

void require_same(const FinSpace& expected, const FinSpace& actual, const std::string& context)
{
    if (!(expected == actual))
        throw SpaceMismatch(context + ": expected space " + expected.describe() + ", got "
                            + actual.describe());
}

}   // namespace finstoch
