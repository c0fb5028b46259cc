#include <flocks/cli.hh>
#include <flocks/catalog.hh>
#include <flocks/io.hh>

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace flocks;

namespace {

struct Run
{
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string & name)
{
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST(Cli, FieldInfo)
{
    const auto r = run({"field", "info", "--p", "2", "--n", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["schema"], "flocks-report/1");
    EXPECT_EQ(j["result"]["q"], 16);
    EXPECT_EQ(j["result"]["primitive"], 2);
    EXPECT_EQ(run({"field", "info", "--p", "2", "--n", "2", "--modulus", "1,0"}).code, 2);
}

TEST(Cli, LinpolyCount)
{
    const auto r = run({"linpoly", "count", "--q", "16", "--e", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json::parse(r.out)["result"]["count"], 12);
    const auto e = run({"linpoly", "enum", "--q", "9", "--e", "1", "--monic"});
    ASSERT_EQ(e.code, 0);
    EXPECT_EQ(json::parse(e.out)["result"]["polynomials"].size(), 6u);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"flock", "classify", "missing.json"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"verify", "nonexistent-suite"}).code, 2);
    EXPECT_EQ(run({"linpoly", "count", "--q", "12", "--e", "1"}).code, 2);
    EXPECT_EQ(run({"--format", "xml", "linpoly", "count", "--q", "4", "--e", "1"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyLunelliSce)
{
    const auto r = run({"--format", "json", "verify", "lunelli-sce"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    bool nine = false;
    for (const auto & a : j["result"]["suites"][0]["assertions"])
        nine = nine || (a["description"] == "|H1 & H2|" && a["actual"] == 9);
    EXPECT_TRUE(nine);
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"survey", "star", "--q", "7"};
    const auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto parallel = args;
    parallel.insert(parallel.begin(), {"--jobs", "4"});
    EXPECT_EQ(run(parallel).out, a.out);
    EXPECT_EQ(run({"--jobs", "1", "verify", "nobi", "--q", "5"}).out, run({"--jobs", "3", "verify", "nobi", "--q", "5"}).out);
}

TEST(Cli, TextAndJsonAgree)
{
    const auto j = json::parse(run({"verify", "triangle"}).out);
    const auto t = run({"--format", "text", "verify", "triangle"}).out;
    std::size_t assertions = 0;
    for (const auto & s : j["result"]["suites"])
        assertions += s["assertions"].size();
    std::size_t ok = 0, fail = 0;
    std::istringstream in(t);
    for (std::string line; std::getline(in, line);) {
        ok += line.find("[ok]") != std::string::npos;
        fail += line.find("[FAILED]") != std::string::npos;
    }
    EXPECT_EQ(ok + fail, assertions);
    EXPECT_EQ(fail, 0u);
}

TEST(Cli, ClassifyRoundTrip)
{
    const auto F = Field::of_order(9);
    const auto fl = kantor_knuth(F, 1, 1, 0);
    const auto path = temp_path("flocks_cli_kk.json");
    write_flock_file(path, fl);
    const auto r = run({"flock", "classify", path});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = json::parse(r.out)["result"];
    EXPECT_EQ(j["star"], star_analysis(fl).is_star);
    EXPECT_EQ(j["proper_star"], star_analysis(fl).is_proper);
    EXPECT_EQ(j["linear"], is_linear(fl).linear);
    EXPECT_EQ(j["properly_bilinear"], is_bilinear(fl).properly_bilinear);
    EXPECT_EQ(j["cone"], to_json(classify_cone(F, critical_cone(fl))));
    EXPECT_EQ(j["planes"], planes_json(fl));
    EXPECT_EQ(read_flock_file(path).g(), fl.g());

    const auto c = run({"flock", "cone", path});
    ASSERT_EQ(c.code, 0);

    const auto b = run({"blocking", "from-flock", path});
    ASSERT_EQ(b.code, 0) << b.err;
    EXPECT_EQ(json::parse(b.out)["result"]["points"].size(), 13u);
    std::filesystem::remove(path);
}

TEST(Cli, Equiv)
{
    const auto F = Field::of_order(5);
    const auto p1 = temp_path("flocks_cli_a.json"), p2 = temp_path("flocks_cli_b.json");
    write_flock_file(p1, star_normal_flock(F, {0, 2, 4, 1, 3}));
    write_flock_file(p2, star_normal_flock(F, {0, 0, 0, 0, 0}));
    const auto fp = run({"flock", "equiv", p1, p2});
    ASSERT_EQ(fp.code, 0) << fp.err;
    EXPECT_EQ(json::parse(fp.out)["result"]["verdict"], "inconclusive");
    const auto ex = run({"flock", "equiv", p1, p2, "--exhaustive"});
    ASSERT_EQ(ex.code, 0) << ex.err;
    EXPECT_EQ(json::parse(ex.out)["result"]["verdict"], "equivalent");
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST(Cli, BlockingSets)
{
    const auto t = run({"blocking", "triangle", "--q", "7"});
    ASSERT_EQ(t.code, 0) << t.err;
    EXPECT_EQ(json::parse(t.out)["result"]["points"].size(), 12u);
    const auto d = run({"blocking", "triad", "--q", "8"});
    ASSERT_EQ(d.code, 0) << d.err;
    EXPECT_EQ(json::parse(d.out)["result"]["points"].size(), 13u);
    EXPECT_EQ(run({"blocking", "triangle", "--q", "8"}).code, 2);
}
