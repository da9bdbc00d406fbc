#include "finstoch/workspace.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "finstoch/errors.hpp"

namespace finstoch {

namespace {

Eigen::Index idx(std::size_t i)
{
    return static_cast<Eigen::Index>(i);
}

std::vector<std::string> split_ws(std::string_view text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : text)
    {
        if (std::isspace(static_cast<unsigned char>(c)))
        {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        }
        else
            cur += c;
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool valid_name(std::string_view s)
{
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.'))
            return false;
    return true;
}

bool is_header(std::string_view line)
{
    const auto words = split_ws(line);
    if (words.empty())
        return false;
    const std::string& w = words[0];
    return w == "space" || w == "dist" || w == "kernel" || w == "suppdist";
}

struct Line
{
    std::size_t number;
    std::string text;
};

class SpaceExprParser
{
    public:
        SpaceExprParser(std::string_view text, const std::map<std::string, FinSpace>& spaces)
            : text_(text), spaces_(spaces) {}

        FinSpace parse()
        {
            FinSpace x = expr();
            skip();
            if (at_ != text_.size())
                throw Error("unexpected '" + std::string(1, text_[at_]) + "' in space expression '"
                            + std::string(text_) + "'");
            return x;
        }

    private:
        void skip()
        {
            while (at_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[at_])))
                ++at_;
        }

        FinSpace expr()
        {
            FinSpace x = atom();
            for (skip(); at_ < text_.size() && text_[at_] == '*'; skip())
            {
                ++at_;
                x = tensor(x, atom());
            }
            return x;
        }

        FinSpace atom()
        {
            skip();
            if (at_ < text_.size() && text_[at_] == '(')
            {
                ++at_;
                FinSpace x = expr();
                skip();
                if (at_ >= text_.size() || text_[at_] != ')')
                    throw Error("missing ')' in space expression '" + std::string(text_) + "'");
                ++at_;
                return x;
            }
            std::size_t start = at_;
            while (at_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[at_])) || text_[at_] == '_'
                                          || text_[at_] == '\'' || text_[at_] == '.'))
                ++at_;
            std::string name(text_.substr(start, at_ - start));
            if (name.empty())
                throw Error("expected a space name in '" + std::string(text_) + "'");
            if (name == "I")
                return FinSpace::unit();
            auto it = spaces_.find(name);
            if (it == spaces_.end())
                throw Error("unknown space '" + name + "'");
            return it->second;
        }

        std::string_view text_;
        const std::map<std::string, FinSpace>& spaces_;
        std::size_t at_ = 0;
};

VectorXr parse_row(const std::vector<std::string>& tokens, std::size_t expected, const std::string& what)
{
    if (tokens.size() != expected)
        throw Error(what + ": expected " + std::to_string(expected) + " values, got " + std::to_string(tokens.size()));
    VectorXr v(idx(expected));
    for (std::size_t i = 0; i < expected; ++i)
    {
        try
        {
            v(idx(i)) = parse_rational(tokens[i]);
        }
        catch (const std::invalid_argument& e)
        {
            throw Error(what + ": " + e.what());
        }
    }
    return v;
}

template <class Map>
void insert_unique(Map& map, const std::string& name, typename Map::mapped_type value, const std::string& kind)
{
    if (!map.emplace(name, std::move(value)).second)
        throw Error("duplicate " + kind + " '" + name + "'");
}

}   // namespace

FinSpace parse_space_expr(std::string_view text, const std::map<std::string, FinSpace>& spaces)
{
    return SpaceExprParser(text, spaces).parse();
}

Workspace parse_workspace(std::string_view text, const std::string& source)
{
    std::vector<Line> lines;
    {
        std::size_t number = 0;
        std::size_t start = 0;
        while (start <= text.size())
        {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos)
                end = text.size();
            ++number;
            std::string_view line = text.substr(start, end - start);
            if (auto hash = line.find('#'); hash != std::string_view::npos)
                line = line.substr(0, hash);
            if (!trim(line).empty())
                lines.push_back({number, std::string(trim(line))});
            start = end + 1;
        }
    }

    Workspace ws;
    std::size_t i = 0;
    while (i < lines.size())
    {
        const Line& head = lines[i];
        std::size_t body_begin = ++i;
        while (i < lines.size() && !is_header(lines[i].text))
            ++i;
        std::vector<Line> body(lines.begin() + static_cast<std::ptrdiff_t>(body_begin),
                               lines.begin() + static_cast<std::ptrdiff_t>(i));
        std::size_t current = head.number;
        try
        {
            if (!is_header(head.text))
                throw Error("expected 'space', 'dist', 'kernel' or 'suppdist'");
            const auto colon = head.text.find(':');
            if (colon == std::string::npos)
                throw Error("missing ':' in section header");
            const auto words = split_ws(std::string_view(head.text).substr(0, colon));
            const std::string rest(trim(std::string_view(head.text).substr(colon + 1)));
            const std::string& kind = words[0];
            if (words.size() < 2 || !valid_name(words[1]))
                throw Error("missing or invalid " + kind + " name");
            const std::string& name = words[1];

            if (kind == "space")
            {
                if (words.size() != 2)
                    throw Error("unexpected text before ':'");
                if (name == "I")
                    throw Error("the name I is reserved for the unit space");
                auto labels = split_ws(rest);
                for (const auto& l : body)
                    for (auto& t : split_ws(l.text))
                        labels.push_back(std::move(t));
                insert_unique(ws.spaces, name, FinSpace(name, std::move(labels)), "space");
            }
            else if (kind == "dist" || kind == "suppdist")
            {
                if (words.size() < 4 || words[2] != "over")
                    throw Error("expected '" + kind + " NAME over SPACE:'");
                std::string expr;
                for (std::size_t w = 3; w < words.size(); ++w)
                    expr += words[w];
                const FinSpace x = parse_space_expr(expr, ws.spaces);
                if (kind == "dist")
                {
                    auto tokens = split_ws(rest);
                    for (const auto& l : body)
                        for (auto& t : split_ws(l.text))
                            tokens.push_back(std::move(t));
                    VectorXr w = parse_row(tokens, x.size(), "dist " + name);
                    insert_unique(ws.dists, name, Dist(x, std::move(w)), "dist");
                }
                else
                {
                    if (!rest.empty())
                        throw Error("suppdist atoms go on the following lines");
                    std::vector<SuppDist::Atom> atoms;
                    for (const auto& l : body)
                    {
                        current = l.number;
                        const auto sep = l.text.find(':');
                        if (sep == std::string::npos)
                            throw Error("expected 'WEIGHT : w1 w2 ...'");
                        const auto wt = split_ws(std::string_view(l.text).substr(0, sep));
                        if (wt.size() != 1)
                            throw Error("expected a single weight before ':'");
                        Rational weight;
                        try
                        {
                            weight = parse_rational(wt[0]);
                        }
                        catch (const std::invalid_argument& e)
                        {
                            throw Error(e.what());
                        }
                        VectorXr w = parse_row(split_ws(std::string_view(l.text).substr(sep + 1)), x.size(),
                                               "suppdist " + name + " atom");
                        atoms.push_back({weight, Dist(x, std::move(w))});
                    }
                    current = head.number;
                    insert_unique(ws.suppdists, name, SuppDist(x, std::move(atoms)), "suppdist");
                }
            }
            else
            {
                if (words.size() != 2)
                    throw Error("unexpected text before ':'");
                const auto arrow = rest.find("->");
                if (arrow == std::string::npos)
                    throw Error("expected 'kernel NAME: SPACE -> SPACE'");
                const FinSpace src = parse_space_expr(std::string_view(rest).substr(0, arrow), ws.spaces);
                const FinSpace dst = parse_space_expr(std::string_view(rest).substr(arrow + 2), ws.spaces);
                if (body.size() != src.size())
                    throw Error("kernel " + name + ": expected " + std::to_string(src.size())
                                + " rows (one per source atom), got " + std::to_string(body.size()));
                MatrixXr m(idx(dst.size()), idx(src.size()));
                for (std::size_t x = 0; x < body.size(); ++x)
                {
                    current = body[x].number;
                    const VectorXr row = parse_row(split_ws(body[x].text), dst.size(),
                                                   "kernel " + name + " row " + src.label(x));
                    Rational total = 0;
                    for (Eigen::Index y = 0; y < row.size(); ++y)
                    {
                        if (row(y) < 0)
                            throw Error("kernel " + name + " row " + src.label(x) + ": negative entry "
                                        + to_string(row(y)) + " at " + dst.label(static_cast<std::size_t>(y)));
                        total += row(y);
                    }
                    if (total != 1)
                        throw Error("kernel " + name + " row " + src.label(x) + " sums to " + to_string(total)
                                    + " (deficit " + to_string(Rational(1 - total)) + ")");
                    m.col(idx(x)) = row;
                }
                current = head.number;
                insert_unique(ws.kernels, name, Kernel(src, dst, std::move(m)), "kernel");
            }
        }
        catch (const WorkspaceError&)
        {
            throw;
        }
        catch (const Error& e)
        {
            throw WorkspaceError(source, current, e.what());
        }
    }
    return ws;
}

Workspace load_workspace(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open workspace file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_workspace(buffer.str(), path.string());
}

const FinSpace& Workspace::space(const std::string& name) const
{
    auto it = spaces.find(name);
    if (it == spaces.end())
        throw Error("unknown space '" + name + "'");
    return it->second;
}

const Dist& Workspace::dist(const std::string& name) const
{
    auto it = dists.find(name);
    if (it == dists.end())
        throw Error("unknown dist '" + name + "'");
    return it->second;
}

const Kernel& Workspace::kernel(const std::string& name) const
{
    auto it = kernels.find(name);
    if (it == kernels.end())
        throw Error("unknown kernel '" + name + "'");
    return it->second;
}

const SuppDist& Workspace::suppdist(const std::string& name) const
{
    auto it = suppdists.find(name);
    if (it == suppdists.end())
        throw Error("unknown suppdist '" + name + "'");
    return it->second;
}

Kernel Workspace::kernel_or_state(const std::string& name) const
{
    if (auto it = kernels.find(name); it != kernels.end())
        return it->second;
    if (auto it = dists.find(name); it != dists.end())
        return Kernel(it->second);
    throw Error("unknown kernel or dist '" + name + "'");
}

diagram::Environment Workspace::environment() const
{
    diagram::Environment env;
    env.spaces = spaces;
    for (const auto& [name, p] : dists)
        env.generators.emplace(name, Kernel(p));
    for (const auto& [name, k] : kernels)
        env.generators.insert_or_assign(name, k);
    return env;
}

// ---------------------------------------------------------------- formatting

std::string format_space(const std::string& name, const FinSpace& x)
{
    std::string out = "space " + name + ":";
    for (const auto& l : x.labels())
        out += " " + l;
    return out + "\n";
}

std::string format_dist(const std::string& name, const Dist& p)
{
    return "dist " + name + " over " + p.space().name() + ": " + to_string(p.weights()) + "\n";
}

std::string format_kernel(const std::string& name, const Kernel& k)
{
    std::string out = "kernel " + name + ": " + k.src().name() + " -> " + k.dst().name() + "\n";
    for (Eigen::Index x = 0; x < k.matrix().cols(); ++x)
        out += "  " + to_string(VectorXr(k.matrix().col(x))) + "\n";
    return out;
}

std::string format_suppdist(const std::string& name, const SuppDist& m)
{
    std::string out = "suppdist " + name + " over " + m.base().name() + ":\n";
    for (const auto& atom : m.atoms())
        out += "  " + to_string(atom.weight) + " : " + to_string(atom.dist.weights()) + "\n";
    return out;
}

}   // namespace finstoch
