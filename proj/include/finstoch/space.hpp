#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace finstoch {

/**
 * A finite set of labeled atoms. Atoms are indexed in declaration order;
 * the tensor of two spaces is their cartesian product, with atom (i, j)
 * at index i * right.size() + j (lexicographic in the pair).
 *
 * The monoidal unit `I` has the single atom "*". Tensoring with it is
 * strict: tensor(X, I) == X == tensor(I, X).
 */
class FinSpace
{
    public:
        /** The empty space named "0". */
        FinSpace();

        /** A base space. Throws InvariantError on duplicate labels. */
        FinSpace(std::string name, std::vector<std::string> labels);

        static FinSpace unit();

        const std::string& name() const { return name_; }
        std::size_t size() const { return labels_.size(); }
        bool empty() const { return labels_.empty(); }
        const std::vector<std::string>& labels() const { return labels_; }
        const std::string& label(std::size_t i) const { return labels_.at(i); }
        std::optional<std::size_t> index_of(const std::string& label) const;

        bool is_unit() const;
        bool is_tensor() const { return left_ != nullptr; }
        /** Factors of a tensor space; throw SpaceMismatch otherwise. */
        const FinSpace& left() const;
        const FinSpace& right() const;

        /** Name plus label list, e.g. `X{a,b}`; used in error messages. */
        std::string describe() const;

        friend FinSpace tensor(const FinSpace& a, const FinSpace& b);
        friend bool operator==(const FinSpace& a, const FinSpace& b);

    private:
        std::string name_;
        std::vector<std::string> labels_;
        std::shared_ptr<const FinSpace> left_;
        std::shared_ptr<const FinSpace> right_;
};

FinSpace tensor(const FinSpace& a, const FinSpace& b);
bool operator==(const FinSpace& a, const FinSpace& b);

/** Throws SpaceMismatch naming both spaces unless they are equal. */
void require_same(const FinSpace& expected, const FinSpace& actual, const std::string& context);

}   // namespace finstoch
