#include "hv/cli.hpp"
#include "hv/errors.hpp"
#include "support/gen.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace hv;
using cli::RunConfig;

namespace {

RunConfig config(const Json& j)
{
    RunConfig c = cli::parse_config(j);
    c.window.grid = c.grid_from_config ? std::vector<Module>{c.build_module()} : default_grid(c.window.i_min, c.window.i_max);
    return c;
}

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    std::string cmd = std::string(HVCHECK_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& body)
{
    auto path = std::filesystem::temp_directory_path() / ("hvcheck_test_" + name + ".json");
    std::ofstream(path) << body;
    return path.string();
}

} // namespace

TEST(Json, RoundTrips)
{
    testgen::Gen g(41);
    for (int n = 0; n < 100; ++n) {
        Rational q = g.rational();
        EXPECT_EQ(rational_from_json(to_json(q)), q);
        Polynomial f = g.polynomial(5);
        EXPECT_EQ(polynomial_from_json(to_json(f)), f);
        AlgebraElement e = g.element(3, 3, 3);
        EXPECT_EQ(element_from_json(to_json(e)), e);
    }
    AlgebraParams ap(Rational(1, 2), 1, -1);
    EXPECT_EQ(algebra_params_from_json(to_json(ap)), ap);
    ModuleParams mp;
    mp.lambda = Rational(-3, 2);
    mp.beta = 4;
    mp.gamma = Rational(1, 7);
    mp.kappa = KappaTable(-1, {1, 0, Rational(2, 3)});
    EXPECT_EQ(module_params_from_json(to_json(mp)), mp);
    EXPECT_EQ(to_json(mp).dump(), R"({"lambda":"-3/2","alpha":"0","beta":"4","gamma":"1/7","kappa":{"-1":"1","0":"0","1":"2/3"}})");
}

TEST(Json, Rejections)
{
    EXPECT_THROW(module_params_from_json(Json{{"lambda", "1"}, {"delta", "2"}}), ParseError);
    EXPECT_THROW(module_params_from_json(Json{{"kappa", {{"x", "1"}}}}), ParseError);
    EXPECT_THROW(module_params_from_json(Json{{"kappa", {{"0", "1"}, {"2", "1"}}}}), ConfigError);
    EXPECT_THROW(algebra_params_from_json(Json{{"a", "0"}, {"b", "0"}, {"epsilon", 3}}), ConfigError);
    EXPECT_THROW(rational_from_json(Json(1.5)), ParseError);
    EXPECT_THROW(cli::parse_config(Json{{"algebra", {{"a", "0"}, {"b", "0"}, {"epsilon", 1}}}, {"colour", "red"}}), ParseError);
    EXPECT_THROW(cli::parse_config(Json{{"window", {{"i_range", 3}}}}), ParseError);
    EXPECT_THROW(cli::parse_config(Json{{"suites", {"antisymmetry", "bogus"}}}), ParseError);
    EXPECT_THROW(cli::parse_config(Json{{"probes", {{{"seed", "t"}, {"cap", 3}}}}}), ParseError);
}

TEST(Commands, BracketAndAct)
{
    RunConfig c = config(Json::object());
    EXPECT_EQ(cli::cmd_bracket(c, "L[0,1]", "L[1,0]", false).output, "L[1,1] + L[1,0]\n");
    EXPECT_EQ(cli::cmd_bracket(c, "H[1,0]", "H[2,3]", false).output, "0\n");
    EXPECT_EQ(cli::cmd_act(c, "L[0,0]", "t^2", false).output, "t^3\n");

    RunConfig h = config(Json{{"module", {{"lambda", "1"}, {"gamma", "1"}}}});
    EXPECT_EQ(cli::cmd_act(h, "H[2,0]", "t", false).output, "t - 2\n");
    RunConfig l = config(Json{{"module", {{"lambda", "2"}, {"alpha", "1"}, {"beta", "3"}}}});
    EXPECT_EQ(cli::cmd_act(l, "L[1,1]", "1", false).output, "6t - 4\n");

    Json j = Json::parse(cli::cmd_bracket(c, "L[0,1]", "L[1,0]", true).output);
    EXPECT_EQ(j["result"], "L[1,1] + L[1,0]");

    cli::Result bad = cli::guarded([&] { return cli::cmd_bracket(c, "L[0]", "L[1,0]", false); });
    EXPECT_EQ(bad.exit_code, cli::kUsageError);
    EXPECT_NE(bad.output.find("error:"), std::string::npos);
}

TEST(Commands, VerifyIsDeterministic)
{
    Json j = {{"window", {{"i_min", -1}, {"i_max", 1}, {"m_max", 1}, {"deg_max", 2}, {"triple_i_max", 1}, {"triple_m_max", 1}}},
              {"suites", {"antisymmetry", "prop41_identity", "g_recursions"}},
              {"seed", 7}};
    RunConfig c = config(j);
    cli::Result a = cli::cmd_verify(c, true), b = cli::cmd_verify(c, true);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.output, b.output);
    EXPECT_EQ(Json::parse(a.output)["reports"][1]["seed"], 7);
}

TEST(Commands, RecoverAndGenCheck)
{
    RunConfig c = config(Json{{"algebra", {{"a", "1/2"}, {"b", "1"}, {"epsilon", -1}}},
                              {"module", {{"lambda", "2"}, {"alpha", "1"}, {"beta", "3"}, {"kappa", {{"0", "1"}, {"1", "-2"}}}}}});
    cli::Result r = cli::cmd_recover(c, true);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(Json::parse(r.output)["recovered"]["kappa"]["1"], "-2");
    EXPECT_EQ(cli::cmd_gen_check(c, false).exit_code, 0);
}

TEST(ExitCodes, Binary)
{
    EXPECT_EQ(run("bracket --text 'L[0,1]' 'L[1,0]'").out, "L[1,1] + L[1,0]\n");
    EXPECT_EQ(run("bracket --text 'L[0]' 'L[1,0]'").code, 2);
    EXPECT_EQ(run("bracket 'L[0,0]'").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("act --text 'H[0,0]' 1 --b 2 --gamma 1").code, 2);
    EXPECT_EQ(run("act --text 'L[0,0]' 1 --a 3/2").code, 2);
    EXPECT_EQ(run("verify --config /nonexistent/config.json").code, 2);
    EXPECT_EQ(run("verify --config " + write_temp("badkey", R"({"suites":["antisymmetry"],"extra":1})")).code, 2);
    EXPECT_EQ(run("verify --config " + write_temp("badjson", "{")).code, 2);

    const std::string small = "--i-min -1 --i-max 1 --m-max 1 --deg-max 2";
    EXPECT_EQ(run("verify --suite antisymmetry --suite closed_forms " + small).code, 0);
    EXPECT_EQ(run("verify --suite closed_forms --fixture corrupted " + small).code, 1);
    EXPECT_EQ(run("verify --config " + write_temp("corrupt", R"({"suites":["antisymmetry"],"fixture":"corrupted"})")).code, 1);
    EXPECT_EQ(run("recover --a 1/2 --b 1 --eps -1 --lambda 2 --alpha 1 --beta 3 --kappa 0:1,1:-2").code, 0);
    EXPECT_EQ(run("probe --alpha 1").code, 0);
    EXPECT_EQ(run("probe --eps -1 --b 1 --kappa=-3:0,-2:0,-1:0,0:0,1:1,2:0,3:0").code, 1);
    EXPECT_EQ(run("gen-check --eps -1 --b 1 --a 1/2").code, 0);
}
