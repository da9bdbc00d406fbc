// Acceptance run: one PASS/FAIL line per criterion, seed 0, exact equality
// throughout. A criterion passes only if every trial holds and the wall time
// stays under its limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <functional>
#include <string>
#include <vector>

#include "finstoch/diagram.hpp"
#include "finstoch/experiments.hpp"
#include "finstoch/suites.hpp"
#include "finstoch/workspace.hpp"

namespace fs = std::filesystem;
using namespace finstoch;

namespace {

struct Verdict
{
    bool ok;
    std::string detail;
};

struct Criterion
{
    int id;
    const char* title;
    double limit_seconds;
    std::function<Verdict()> body;
};

Verdict suites(std::vector<std::pair<const char*, std::size_t>> plan)
{
    Verdict v{true, ""};
    for (const auto& [name, trials] : plan)
    {
        const SuiteInfo* s = find_suite(name);
        if (!s)
            return {false, std::string("missing suite ") + name};
        const SuiteResult r = run_suite(*s, 0, trials);
        if (!v.detail.empty())
            v.detail += ", ";
        v.detail += r.name + " " + std::to_string(r.trials - r.failures) + "/" + std::to_string(r.trials);
        if (!r.passed())
        {
            v.ok = false;
            v.detail += " [" + r.notes.front() + "]";
        }
    }
    return v;
}

Verdict golden()
{
    const Workspace ws = load_workspace(FINSTOCH_TEST_DATA "/golden.ws");
    const SuppDist h = hypernormalization(ws.dist("p"), ws.kernel("f"));
    const std::string text = format_suppdist("h", h);
    const std::string want = "suppdist h over X*B:\n  1/4 : 0 0 1 0\n  3/4 : 2/3 1/3 0 0\n";
    if (!(h == ws.suppdist("expected")) || text != want)
        return {false, "got " + text};
    return {true, "3/4 (2/3,1/3,0,0) + 1/4 (0,0,1,0)"};
}

std::optional<std::string> cd_laws(const Kernel& k)
{
    for (const FinSpace* x : {&k.src(), &k.dst()})
    {
        const Kernel cp = copy(*x);
        if (!(compose(cp, tensor(del(*x), identity(*x))) == identity(*x))
            || !(compose(cp, tensor(identity(*x), del(*x))) == identity(*x)))
            return "counit law fails on " + x->describe();
        if (!(compose(cp, swap(*x, *x)) == cp))
            return "cocommutativity fails on " + x->describe();
    }
    if (!(compose(k, del(k.dst())) == del(k.src())))
        return std::string("discard is not natural");
    if (is_deterministic(k) && !(compose(k, copy(k.dst())) == compose(copy(k.src()), tensor(k, k))))
        return std::string("deterministic kernel does not commute with copy");
    return std::nullopt;
}

Verdict corpus()
{
    const fs::path dir = FINSTOCH_TEST_DATA "/diag";
    const Workspace ws = load_workspace(dir / "corpus.env");
    const diagram::Environment env = ws.environment();
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".diag")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.size() < 20)
        return {false, "only " + std::to_string(files.size()) + " .diag files"};

    std::size_t exprs = 0;
    for (const auto& file : files)
    {
        std::ifstream in(file);
        const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        const auto lines = diagram::parse_lines(text);
        std::optional<Kernel> first;
        for (const auto& e : lines)
        {
            ++exprs;
            const std::string printed = diagram::print(*e);
            const auto reparsed = diagram::parse(printed);
            if (!(*reparsed == *e) || diagram::print(*reparsed) != printed)
                return {false, file.filename().string() + ": round-trip fails for " + printed};
            const Kernel k = diagram::eval(diagram::typecheck(e, env), env);
            if (auto bad = cd_laws(k))
                return {false, file.filename().string() + ": " + *bad};
            if (first && !(k == *first))
                return {false, file.filename().string() + ": '" + printed + "' disagrees"};
            if (!first)
                first = k;
        }
    }
    return {true, std::to_string(files.size()) + " files, " + std::to_string(exprs) + " expressions"};
}

}   // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "conditional reconstruction", 5, [] { return suites({{"conditional", 500}}); }},
        {2, "Bayes identities", 5, [] { return suites({{"bayes", 500}, {"bayes-param", 200}}); }},
        {3, "mu is weakly cartesian", 10, [] { return suites({{"mu-square", 200}}); }},
        {4, "P preserves weak pullbacks", 10, [] { return suites({{"pullback", 200}}); }},
        {5, "dominance transitive and reflexive", 10,
         [] { return suites({{"transitivity", 100}, {"reflexivity", 200}}); }},
        {6, "Blackwell agrees with dominance", 20, [] { return suites({{"bss", 100}}); }},
        {7, "standard measure of samp is pi", 5, [] { return suites({{"stdmeas", 200}}); }},
        {8, "fiber decompositions dominate", 20, [] { return suites({{"uni-std", 100}}); }},
        {9, "a.s.-determinism lemmas", 5, [] { return suites({{"f-as-det", 200}, {"samp-det", 200}}); }},
        {10, "golden hypernormalization", 1, golden},
        {11, "LP cross-validation", 10, [] { return suites({{"lp", 500}}); }},
        {12, "diagram corpus", 2, corpus},
    };

    int failed = 0;
    for (const auto& c : criteria)
    {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try
        {
            v = c.body();
        }
        catch (const std::exception& e)
        {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = v.ok && in_time;
        failed += pass ? 0 : 1;
        std::printf("AC%02d %-36s %s  %.3fs (limit %.0fs)%s  %s\n", c.id, c.title, pass ? "PASS" : "FAIL", secs,
                    c.limit_seconds, in_time ? "" : " TOO SLOW", v.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
