#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "finstoch/diagram.hpp"
#include "finstoch/errors.hpp"
#include "finstoch/kernel.hpp"
#include "finstoch/monad.hpp"

/**
 * Line-oriented workspace files:
 *
 *     # comment
 *     space X: a b c
 *     dist p over X: 1/2 1/4 1/4
 *     kernel f: X -> Y*Z          # then one row k(.|x) per source atom
 *       1/2 0 1/2 0
 *       ...
 *     suppdist pi over X:         # then one "weight : distribution" line per atom
 *       1/2 : 1 0 0
 *       1/2 : 0 1/2 1/2
 *
 * Space expressions combine declared names with '*' (left-associative,
 * parentheses allowed); `I` is the unit. Rationals are "p/q" or integers.
 */
namespace finstoch {

/** A workspace load failure; the message starts with "source:line:". */
class WorkspaceError : public Error
{
    public:
        WorkspaceError(const std::string& source, std::size_t line, const std::string& msg)
            : Error(source + ":" + std::to_string(line) + ": " + msg), line_(line) {}

        std::size_t line() const { return line_; }

    private:
        std::size_t line_;
};

struct Workspace
{
    std::map<std::string, FinSpace> spaces;
    std::map<std::string, Dist> dists;
    std::map<std::string, Kernel> kernels;
    std::map<std::string, SuppDist> suppdists;

    /** Lookups throw Error naming the missing entry. */
    const FinSpace& space(const std::string& name) const;
    const Dist& dist(const std::string& name) const;
    const Kernel& kernel(const std::string& name) const;
    const SuppDist& suppdist(const std::string& name) const;

    /** A kernel by name, or a dist by name as a state I -> X. */
    Kernel kernel_or_state(const std::string& name) const;

    /** Spaces, kernels and dists (as states) for diagram expressions. */
    diagram::Environment environment() const;
};

/** Parses workspace text; every invariant is checked at load. */
Workspace parse_workspace(std::string_view text, const std::string& source = "<input>");
Workspace load_workspace(const std::filesystem::path& path);

/** Resolves a space expression such as "X*(Y*Z)" against declared spaces. */
FinSpace parse_space_expr(std::string_view text, const std::map<std::string, FinSpace>& spaces);

std::string format_space(const std::string& name, const FinSpace& x);
std::string format_dist(const std::string& name, const Dist& p);
std::string format_kernel(const std::string& name, const Kernel& k);
std::string format_suppdist(const std::string& name, const SuppDist& m);

}   // namespace finstoch
