#include "hv/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Shared {
    std::optional<std::string> config;
    bool text = false;
    bool json = false;
    hv::cli::Overrides o;
};

void add_shared(CLI::App* sub, Shared& s)
{
    sub->add_option("--config", s.config, "JSON run configuration");
    auto* j = sub->add_flag("--json", s.json, "JSON output (default)");
    sub->add_flag("--text", s.text, "plain-text output")->excludes(j);
    sub->add_option("--seed", s.o.seed, "RNG seed for sampled checks");
    sub->add_option("--a", s.o.a, "algebra parameter a");
    sub->add_option("--b", s.o.b, "algebra parameter b");
    sub->add_option("--eps", s.o.eps, "epsilon (1 or -1)");
    sub->add_option("--lambda", s.o.lambda, "module parameter lambda");
    sub->add_option("--alpha", s.o.alpha, "module parameter alpha");
    sub->add_option("--beta", s.o.beta, "module parameter beta");
    sub->add_option("--gamma", s.o.gamma, "module parameter gamma");
    sub->add_option("--kappa", s.o.kappa, "kappa window as i:value,i:value,...");
    sub->add_option("--i-min", s.o.i_min, "window: smallest index");
    sub->add_option("--i-max", s.o.i_max, "window: largest index");
    sub->add_option("--m-max", s.o.m_max, "window: largest height");
    sub->add_option("--deg-max", s.o.deg_max, "window: largest degree of t^k");
    sub->add_option("--fixture", s.o.fixture, "reference or corrupted");
    sub->add_option("--suite", s.o.suites, "suite to run (repeatable)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations and checks for the algebras HV(a,b;eps) and their rank-one modules"};
    app.require_subcommand(1);

    Shared s;
    std::string x, y;
    auto* bracket = app.add_subcommand("bracket", "bracket of two element literals");
    bracket->add_option("x", x)->required();
    bracket->add_option("y", y)->required();
    auto* act = app.add_subcommand("act", "action of an element on a polynomial");
    act->add_option("x", x)->required();
    act->add_option("f", y)->required();
    auto* verify = app.add_subcommand("verify", "run verification suites");
    auto* probe = app.add_subcommand("probe", "submodule saturation probes");
    auto* recover = app.add_subcommand("recover", "recover module parameters from the action");
    auto* gen = app.add_subcommand("gen-check", "generating-set closure check");
    for (auto* sub : {bracket, act, verify, probe, recover, gen}) add_shared(sub, s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return hv::cli::kUsageError;
    }

    const bool json = !s.text;
    hv::cli::Result r = hv::cli::guarded([&]() -> hv::cli::Result {
        hv::cli::RunConfig cfg = hv::cli::resolve_config(s.config, s.o);
        if (bracket->parsed()) return hv::cli::cmd_bracket(cfg, x, y, json);
        if (act->parsed()) return hv::cli::cmd_act(cfg, x, y, json);
        if (verify->parsed()) return hv::cli::cmd_verify(cfg, json);
        if (probe->parsed()) return hv::cli::cmd_probe(cfg, json);
        if (recover->parsed()) return hv::cli::cmd_recover(cfg, json);
        return hv::cli::cmd_gen_check(cfg, json);
    });
    (r.exit_code == hv::cli::kUsageError ? std::cerr : std::cout) << r.output;
    return r.exit_code;
}
