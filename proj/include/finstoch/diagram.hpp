#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "finstoch/kernel.hpp"

/**
 * Linear term syntax for string diagrams in FinStoch:
 *
 *     expr    := term { ";" term }          left-to-right composition
 *     term    := factor { "*" factor }      tensor, binds tighter than ";"
 *     factor  := IDENT | builtin | "(" expr ")"
 *     builtin := ("id" | "copy" | "del") "[" SPACE "]" | "swap" "[" SPACE "," SPACE "]"
 *
 * SPACE is a space name; `I` always names the monoidal unit.
 */
namespace finstoch::diagram {

enum class Kind
{
    gen,
    id,
    copy,
    del,
    swap,
    seq,
    par
};

struct Position
{
    std::size_t line = 1;
    std::size_t column = 1;
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/** An immutable syntax tree node. */
class Expr
{
    public:
        static ExprPtr gen(std::string name, Position pos = {});
        static ExprPtr builtin(Kind kind, std::vector<std::string> spaces, Position pos = {});
        static ExprPtr seq(ExprPtr first, ExprPtr second, Position pos = {});
        static ExprPtr par(ExprPtr left, ExprPtr right, Position pos = {});

        Kind kind() const { return kind_; }
        const std::string& name() const { return name_; }
        const std::vector<std::string>& spaces() const { return spaces_; }
        const Expr& lhs() const { return *lhs_; }
        const Expr& rhs() const { return *rhs_; }
        Position pos() const { return pos_; }

        /** Structural equality; positions are ignored. */
        friend bool operator==(const Expr& a, const Expr& b);

    private:
        Kind kind_ = Kind::gen;
        std::string name_;
        std::vector<std::string> spaces_;
        ExprPtr lhs_;
        ExprPtr rhs_;
        Position pos_;
};

bool operator==(const Expr& a, const Expr& b);

/** Parses one expression. Throws ParseError with line:column. */
ExprPtr parse(std::string_view text);

/** One expression per non-blank line of a .diag file; `#` starts a comment. */
std::vector<ExprPtr> parse_lines(std::string_view text);

/** Canonical text; parse(print(e)) == e. */
std::string print(const Expr& e);

/** Named spaces and generator kernels available to expressions. */
struct Environment
{
    std::map<std::string, FinSpace> spaces;
    std::map<std::string, Kernel> generators;

    /** Throws TypeError for an unknown name; "I" is the unit. */
    FinSpace space(const std::string& name, Position pos) const;
};

/** An expression annotated with its inferred source and target. */
struct TypedExpr
{
    ExprPtr expr;
    FinSpace src;
    FinSpace dst;
    std::vector<TypedExpr> children;
};

/** Infers types bottom-up. Throws TypeError on unbound names or mismatched composites. */
TypedExpr typecheck(const ExprPtr& e, const Environment& env);

/** Structural evaluation into core kernel operations. */
Kernel eval(const TypedExpr& e, const Environment& env);

inline Kernel evaluate(std::string_view text, const Environment& env)
{
    return eval(typecheck(parse(text), env), env);
}

}   // namespace finstoch::diagram
