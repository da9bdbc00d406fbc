#include "finstoch/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "finstoch/conditionals.hpp"
#include "finstoch/diagram.hpp"
#include "finstoch/dominance.hpp"
#include "finstoch/errors.hpp"
#include "finstoch/experiments.hpp"
#include "finstoch/suites.hpp"
#include "finstoch/workspace.hpp"

namespace finstoch::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

DetMap require_map(const Kernel& k, const std::string& name)
{
    auto m = DetMap::from_kernel(k);
    if (!m)
        throw PreconditionError("kernel " + name + " is not deterministic");
    return *m;
}

void print_measure(std::ostream& out, const std::string& title, const PointMeasure& m)
{
    out << title << ":\n";
    for (const auto& atom : m.atoms())
        out << "  " << to_string(atom.weight) << " : " << to_string(atom.point) << "\n";
}

void print_dilation(std::ostream& out, const DilationWitness& w)
{
    print_measure(out, "fine", w.fine());
    print_measure(out, "coarse", w.coarse());
    out << "witness:\n";
    for (Eigen::Index j = 0; j < w.matrix().rows(); ++j)
        out << "  " << to_string(VectorXr(w.matrix().row(j).transpose())) << "\n";
}

void print_metakernel(std::ostream& out, const std::string& name, const MetaKernel& m)
{
    for (std::size_t a = 0; a < m.src().size(); ++a)
        out << format_suppdist(name + "." + m.src().label(a), m.row(a));
}

struct Context
{
    std::string workspace_path;
    Workspace ws;

    void load()
    {
        if (workspace_path.empty())
            throw Error("no workspace given (use -w FILE)");
        ws = load_workspace(workspace_path);
    }
};

}   // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact finite stochastic kernels: conditionals, Bayes, dominance and experiments", "finstoch"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Context ctx;
    std::function<int()> action;
    auto add = [&](const std::string& name, const std::string& help, bool needs_workspace) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (needs_workspace)
            sub->add_option("-w,--workspace", ctx.workspace_path, "workspace file")->required();
        return sub;
    };

    // eval
    std::string diag_path;
    auto* eval_cmd = add("eval", "evaluate a .diag file; several lines must all agree", true);
    eval_cmd->add_option("file", diag_path, ".diag file")->required();
    eval_cmd->callback([&] {
        action = [&] {
            ctx.load();
            const auto env = ctx.ws.environment();
            const auto exprs = diagram::parse_lines(read_file(diag_path));
            if (exprs.empty())
                throw Error(diag_path + ": no expressions");
            const Kernel first = diagram::eval(diagram::typecheck(exprs.front(), env), env);
            out << format_kernel("result", first);
            for (std::size_t i = 1; i < exprs.size(); ++i)
                if (!(diagram::eval(diagram::typecheck(exprs[i], env), env) == first))
                {
                    out << "line " << i + 1 << " differs: " << diagram::print(*exprs[i]) << "\n";
                    return int(negative);
                }
            if (exprs.size() > 1)
                out << "all " << exprs.size() << " expressions agree\n";
            return int(ok);
        };
    });

    // conditional
    std::string joint_name;
    auto* cond_cmd = add("conditional", "conditional X*A -> Y of a joint A -> X*Y", true);
    cond_cmd->add_option("joint", joint_name, "kernel or dist into a tensor")->required();
    cond_cmd->callback([&] {
        action = [&] {
            ctx.load();
            out << format_kernel(joint_name + "|", conditional(ctx.ws.kernel_or_state(joint_name)));
            return int(ok);
        };
    });

    // bayes
    std::string channel_name, prior_name;
    auto* bayes_cmd = add("bayes", "Bayesian inverse of a channel under a prior dist or prior kernel", true);
    bayes_cmd->add_option("channel", channel_name, "kernel T -> X")->required();
    bayes_cmd->add_option("prior", prior_name, "dist over T, or kernel A -> T")->required();
    bayes_cmd->callback([&] {
        action = [&] {
            ctx.load();
            const Kernel& f = ctx.ws.kernel(channel_name);
            if (ctx.ws.dists.count(prior_name))
                out << format_kernel(channel_name + "+", bayes_invert(f, ctx.ws.dist(prior_name)));
            else
                out << format_kernel(channel_name + "+", bayes_invert(f, ctx.ws.kernel(prior_name)));
            return int(ok);
        };
    });

    // std-measure
    auto* std_cmd = add("std-measure", "standard measure of an experiment (prior, channel)", true);
    std_cmd->add_option("prior", prior_name, "dist over T")->required();
    std_cmd->add_option("channel", channel_name, "kernel T -> X")->required();
    std_cmd->callback([&] {
        action = [&] {
            ctx.load();
            const Experiment e(ctx.ws.dist(prior_name), ctx.ws.kernel(channel_name));
            out << format_suppdist("standard", standard_measure(e));
            return int(ok);
        };
    });

    // hypernorm
    auto* hyper_cmd = add("hypernorm", "hypernormalization of a prior along an a.s.-deterministic channel", true);
    hyper_cmd->add_option("prior", prior_name, "dist over T")->required();
    hyper_cmd->add_option("channel", channel_name, "kernel T -> X")->required();
    hyper_cmd->callback([&] {
        action = [&] {
            ctx.load();
            out << format_suppdist("hyper", hypernormalization(ctx.ws.dist(prior_name), ctx.ws.kernel(channel_name)));
            return int(ok);
        };
    });

    // blackwell
    std::string g_name, f_name, blackwell_prior;
    auto* bw_cmd = add("blackwell", "whether experiment g is below f in the Blackwell order", true);
    bw_cmd->add_option("g", g_name, "kernel T -> Y")->required();
    bw_cmd->add_option("f", f_name, "kernel T -> X")->required();
    bw_cmd->add_option("--prior", blackwell_prior, "dist over T (default uniform)");
    bw_cmd->callback([&] {
        action = [&] {
            ctx.load();
            const Kernel& f = ctx.ws.kernel(f_name);
            const Kernel& g = ctx.ws.kernel(g_name);
            const Dist p = blackwell_prior.empty() ? Dist::uniform(f.src()) : ctx.ws.dist(blackwell_prior);
            const auto h = blackwell_le(Experiment(p, g), Experiment(p, f));
            if (!h)
            {
                out << "blackwell: infeasible\n";
                return int(negative);
            }
            out << "blackwell: feasible\n" << format_kernel("h", *h);
            return int(ok);
        };
    });

    // dominance
    std::string fine_name, coarse_name;
    auto* dom_cmd = add("dominance", "partial evaluation (dilation) from a fine to a coarse suppdist", true);
    dom_cmd->add_option("fine", fine_name, "suppdist")->required();
    dom_cmd->add_option("coarse", coarse_name, "suppdist")->required();
    dom_cmd->callback([&] {
        action = [&] {
            ctx.load();
            const DominanceResult r = dominance_decide(ctx.ws.suppdist(fine_name), ctx.ws.suppdist(coarse_name));
            switch (r.status)
            {
                case DominanceResult::Status::feasible:
                    out << "dominance: feasible\n";
                    print_dilation(out, *r.witness);
                    return int(ok);
                case DominanceResult::Status::infeasible:
                    out << "dominance: infeasible\n";
                    return int(negative);
                case DominanceResult::Status::not_comparable:
                    break;
            }
            out << "dominance: not comparable (barycenters differ)\n";
            return int(negative);
        };
    });

    // mu-witness
    std::string p_name;
    std::vector<std::string> q_rows;
    auto* mu_cmd = add("mu-witness", "lift q : A -> PY along deterministic f over p : A -> X", true);
    mu_cmd->add_option("f", f_name, "deterministic kernel X -> Y")->required();
    mu_cmd->add_option("p", p_name, "kernel A -> X")->required();
    mu_cmd->add_option("q", q_rows, "one suppdist over Y per atom of A")->required();
    mu_cmd->callback([&] {
        action = [&] {
            ctx.load();
            const DetMap f = require_map(ctx.ws.kernel(f_name), f_name);
            const Kernel p = ctx.ws.kernel_or_state(p_name);
            std::vector<SuppDist> rows;
            for (const auto& n : q_rows)
                rows.push_back(ctx.ws.suppdist(n));
            if (rows.size() != p.src().size())
                throw PreconditionError("q needs " + std::to_string(p.src().size()) + " rows, got "
                                        + std::to_string(rows.size()));
            const MetaKernel q(p.src(), f.dst(), std::move(rows));
            print_metakernel(out, "r", mu_square_witness(f, p, q));
            return int(ok);
        };
    });

    // pb-witness
    std::string q_name;
    auto* pb_cmd = add("pb-witness", "factor the conditional product of p, q through the pullback of f, g", true);
    pb_cmd->add_option("f", f_name, "deterministic kernel X -> Z")->required();
    pb_cmd->add_option("g", g_name, "deterministic kernel Y -> Z")->required();
    pb_cmd->add_option("p", p_name, "kernel A -> X")->required();
    pb_cmd->add_option("q", q_name, "kernel A -> Y")->required();
    pb_cmd->callback([&] {
        action = [&] {
            ctx.load();
            const PullbackWitness w =
                pullback_square_witness(require_map(ctx.ws.kernel(f_name), f_name),
                                        require_map(ctx.ws.kernel(g_name), g_name), ctx.ws.kernel_or_state(p_name),
                                        ctx.ws.kernel_or_state(q_name));
            out << format_space("W", w.square.object());
            out << format_kernel("rho", w.coupling);
            out << format_kernel("r", w.factor);
            return int(ok);
        };
    });

    // uni-std
    std::string pi_name;
    auto* uni_cmd = add("uni-std", "dilation from a fiber decomposition to the hypernormalization", true);
    uni_cmd->add_option("prior", prior_name, "dist over T")->required();
    uni_cmd->add_option("channel", channel_name, "a.s.-deterministic kernel T -> X")->required();
    uni_cmd->add_option("pi", pi_name, "suppdist over T")->required();
    uni_cmd->callback([&] {
        action = [&] {
            ctx.load();
            const DilationWitness w =
                uni_std_check(ctx.ws.dist(prior_name), ctx.ws.kernel(channel_name), ctx.ws.suppdist(pi_name));
            out << "uni-std: feasible\n";
            print_dilation(out, w);
            return int(ok);
        };
    });

    // check
    std::string suite_name;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    auto* check_cmd = add("check", "run a named property suite, or all", false);
    check_cmd->add_option("suite", suite_name, "suite name or 'all'")->required();
    check_cmd->add_option("--seed", seed, "64-bit seed (default 0)");
    check_cmd->add_option("--trials", trials, "trials per suite (default per suite)");
    check_cmd->callback([&] {
        action = [&] {
            std::vector<const SuiteInfo*> chosen;
            if (suite_name == "all")
                for (const auto& s : all_suites())
                    chosen.push_back(&s);
            else if (const SuiteInfo* s = find_suite(suite_name))
                chosen.push_back(s);
            else
            {
                std::string names;
                for (const auto& s : all_suites())
                    names += " " + s.name;
                throw Error("unknown suite '" + suite_name + "'; known:" + names);
            }
            bool all_passed = true;
            for (const SuiteInfo* s : chosen)
            {
                const SuiteResult r = run_suite(*s, seed, trials ? trials : s->default_trials);
                out << format_result(r);
                all_passed = all_passed && r.passed();
            }
            out << (all_passed ? "PASS\n" : "FAIL\n");
            return int(all_passed ? ok : negative);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp& e)
    {
        app.exit(e, out, err);
        return ok;
    }
    catch (const CLI::CallForAllHelp& e)
    {
        app.exit(e, out, err);
        return ok;
    }
    catch (const CLI::ParseError& e)
    {
        err << "finstoch: " << e.what() << "\n";
        return usage_error;
    }

    try
    {
        return action();
    }
    catch (const std::exception& e)
    {
        err << "finstoch: " << e.what() << "\n";
        return usage_error;
    }
}

}   // namespace finstoch::cli
