#include "finstoch/diagram.hpp"

#include <cctype>
#include <optional>

#include "finstoch/errors.hpp"

namespace finstoch::diagram {

// ---------------------------------------------------------------- AST

ExprPtr Expr::gen(std::string name, Position pos)
{
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::gen;
    e->name_ = std::move(name);
    e->pos_ = pos;
    return e;
}

ExprPtr Expr::builtin(Kind kind, std::vector<std::string> spaces, Position pos)
{
    auto e = std::make_shared<Expr>();
    e->kind_ = kind;
    e->spaces_ = std::move(spaces);
    e->pos_ = pos;
    return e;
}

ExprPtr Expr::seq(ExprPtr first, ExprPtr second, Position pos)
{
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::seq;
    e->lhs_ = std::move(first);
    e->rhs_ = std::move(second);
    e->pos_ = pos;
    return e;
}

ExprPtr Expr::par(ExprPtr left, ExprPtr right, Position pos)
{
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::par;
    e->lhs_ = std::move(left);
    e->rhs_ = std::move(right);
    e->pos_ = pos;
    return e;
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.kind_ != b.kind_ || a.name_ != b.name_ || a.spaces_ != b.spaces_)
        return false;
    if (a.kind_ == Kind::seq || a.kind_ == Kind::par)
        return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
    return true;
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok
{
    ident,
    semi,
    star,
    lparen,
    rparen,
    lbracket,
    rbracket,
    comma,
    end
};

struct Token
{
    Tok type;
    std::string text;
    Position pos;
};

std::string describe(Tok t)
{
    switch (t)
    {
        case Tok::ident:    return "identifier";
        case Tok::semi:     return "';'";
        case Tok::star:     return "'*'";
        case Tok::lparen:   return "'('";
        case Tok::rparen:   return "')'";
        case Tok::lbracket: return "'['";
        case Tok::rbracket: return "']'";
        case Tok::comma:    return "','";
        case Tok::end:      return "end of input";
    }
    return "?";
}

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view text, std::size_t first_line)
{
    std::vector<Token> out;
    Position pos{first_line, 1};
    std::size_t i = 0;
    while (i < text.size())
    {
        const char c = text[i];
        if (c == '\n')
        {
            ++pos.line;
            pos.column = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c)))
        {
            ++pos.column;
            ++i;
            continue;
        }
        if (ident_start(c))
        {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j]))
                ++j;
            out.push_back({Tok::ident, std::string(text.substr(i, j - i)), pos});
            pos.column += j - i;
            i = j;
            continue;
        }
        Tok t;
        switch (c)
        {
            case ';': t = Tok::semi; break;
            case '*': t = Tok::star; break;
            case '(': t = Tok::lparen; break;
            case ')': t = Tok::rparen; break;
            case '[': t = Tok::lbracket; break;
            case ']': t = Tok::rbracket; break;
            case ',': t = Tok::comma; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos.line, pos.column);
        }
        out.push_back({t, std::string(1, c), pos});
        ++pos.column;
        ++i;
    }
    out.push_back({Tok::end, "", pos});
    return out;
}

// ---------------------------------------------------------------- parser

std::optional<Kind> builtin_kind(const std::string& word)
{
    if (word == "id")
        return Kind::id;
    if (word == "copy")
        return Kind::copy;
    if (word == "del")
        return Kind::del;
    if (word == "swap")
        return Kind::swap;
    return std::nullopt;
}

class Parser
{
    public:
        explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

        ExprPtr parse_all()
        {
            ExprPtr e = expr();
            expect(Tok::end);
            return e;
        }

    private:
        const Token& peek() const { return tokens_[at_]; }

        const Token& expect(Tok t)
        {
            const Token& tok = peek();
            if (tok.type != t)
                throw ParseError("expected " + describe(t) + ", found "
                                     + (tok.type == Tok::ident ? "'" + tok.text + "'" : describe(tok.type)),
                                 tok.pos.line, tok.pos.column);
            ++at_;
            return tok;
        }

        ExprPtr expr()
        {
            ExprPtr e = term();
            while (peek().type == Tok::semi)
            {
                Position pos = peek().pos;
                ++at_;
                e = Expr::seq(e, term(), pos);
            }
            return e;
        }

        ExprPtr term()
        {
            ExprPtr e = factor();
            while (peek().type == Tok::star)
            {
                Position pos = peek().pos;
                ++at_;
                e = Expr::par(e, factor(), pos);
            }
            return e;
        }

        ExprPtr factor()
        {
            const Token& tok = peek();
            if (tok.type == Tok::lparen)
            {
                ++at_;
                ExprPtr e = expr();
                expect(Tok::rparen);
                return e;
            }
            const Token& id = expect(Tok::ident);
            auto kind = builtin_kind(id.text);
            if (!kind)
                return Expr::gen(id.text, id.pos);
            expect(Tok::lbracket);
            std::vector<std::string> spaces{expect(Tok::ident).text};
            if (*kind == Kind::swap)
            {
                expect(Tok::comma);
                spaces.push_back(expect(Tok::ident).text);
            }
            expect(Tok::rbracket);
            return Expr::builtin(*kind, std::move(spaces), id.pos);
        }

        std::vector<Token> tokens_;
        std::size_t at_ = 0;
};

}   // namespace

ExprPtr parse(std::string_view text)
{
    return Parser(lex(text, 1)).parse_all();
}

std::vector<ExprPtr> parse_lines(std::string_view text)
{
    std::vector<ExprPtr> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size())
    {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                blank = false;
        if (!blank)
            out.push_back(Parser(lex(line, line_no)).parse_all());
        start = end + 1;
    }
    return out;
}

// ---------------------------------------------------------------- printer

std::string print(const Expr& e)
{
    switch (e.kind())
    {
        case Kind::gen:
            return e.name();
        case Kind::id:
            return "id[" + e.spaces()[0] + "]";
        case Kind::copy:
            return "copy[" + e.spaces()[0] + "]";
        case Kind::del:
            return "del[" + e.spaces()[0] + "]";
        case Kind::swap:
            return "swap[" + e.spaces()[0] + "," + e.spaces()[1] + "]";
        case Kind::seq:
        {
            std::string right = print(e.rhs());
            if (e.rhs().kind() == Kind::seq)
                right = "(" + right + ")";
            return print(e.lhs()) + " ; " + right;
        }
        case Kind::par:
        {
            std::string left = print(e.lhs());
            std::string right = print(e.rhs());
            if (e.lhs().kind() == Kind::seq)
                left = "(" + left + ")";
            if (e.rhs().kind() == Kind::seq || e.rhs().kind() == Kind::par)
                right = "(" + right + ")";
            return left + " * " + right;
        }
    }
    return {};
}

// ---------------------------------------------------------------- typing

namespace {

std::string where(Position pos)
{
    return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

}   // namespace

FinSpace Environment::space(const std::string& name, Position pos) const
{
    if (name == "I")
        return FinSpace::unit();
    auto it = spaces.find(name);
    if (it == spaces.end())
        throw TypeError(where(pos) + ": unknown space '" + name + "'");
    return it->second;
}

TypedExpr typecheck(const ExprPtr& e, const Environment& env)
{
    switch (e->kind())
    {
        case Kind::gen:
        {
            auto it = env.generators.find(e->name());
            if (it == env.generators.end())
                throw TypeError(where(e->pos()) + ": unbound generator '" + e->name() + "'");
            return {e, it->second.src(), it->second.dst(), {}};
        }
        case Kind::id:
        {
            FinSpace x = env.space(e->spaces()[0], e->pos());
            return {e, x, x, {}};
        }
        case Kind::copy:
        {
            FinSpace x = env.space(e->spaces()[0], e->pos());
            return {e, x, tensor(x, x), {}};
        }
        case Kind::del:
            return {e, env.space(e->spaces()[0], e->pos()), FinSpace::unit(), {}};
        case Kind::swap:
        {
            FinSpace x = env.space(e->spaces()[0], e->pos());
            FinSpace y = env.space(e->spaces()[1], e->pos());
            return {e, tensor(x, y), tensor(y, x), {}};
        }
        case Kind::seq:
        case Kind::par:
            break;
    }
    // Children are shared_ptrs inside e; rebuild pointers to them without copying nodes.
    ExprPtr lhs(e, &e->lhs());
    ExprPtr rhs(e, &e->rhs());
    TypedExpr a = typecheck(lhs, env);
    TypedExpr b = typecheck(rhs, env);
    if (e->kind() == Kind::seq)
    {
        if (!(a.dst == b.src))
            throw TypeError(where(e->pos()) + ": composition mismatch: left side has codomain " + a.dst.describe()
                            + ", right side has domain " + b.src.describe());
        FinSpace src = a.src;
        FinSpace dst = b.dst;
        return {e, std::move(src), std::move(dst), {std::move(a), std::move(b)}};
    }
    FinSpace src = tensor(a.src, b.src);
    FinSpace dst = tensor(a.dst, b.dst);
    return {e, std::move(src), std::move(dst), {std::move(a), std::move(b)}};
}

Kernel eval(const TypedExpr& t, const Environment& env)
{
    const Expr& e = *t.expr;
    switch (e.kind())
    {
        case Kind::gen:
            return env.generators.at(e.name());
        case Kind::id:
            return identity(t.src);
        case Kind::copy:
            return copy(t.src);
        case Kind::del:
            return del(t.src);
        case Kind::swap:
            return swap(env.space(e.spaces()[0], e.pos()), env.space(e.spaces()[1], e.pos()));
        case Kind::seq:
            return compose(eval(t.children[0], env), eval(t.children[1], env));
        case Kind::par:
            return tensor(eval(t.children[0], env), eval(t.children[1], env));
    }
    throw TypeError("unreachable expression kind");
}

}   // namespace finstoch::diagram
