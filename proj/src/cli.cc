#include <flocks/catalog.hh>
#include <flocks/cli.hh>
#include <flocks/io.hh>
#include <flocks/survey.hh>

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <ostream>

namespace flocks {

namespace {

constexpr const char * schema = "flocks-report/1";

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Outcome
{
    json result;
    bool pass = true;
    std::vector<SuiteReport> reports = {};
};

Field field_of_order(unsigned q)
{
    if (q < 2 || ! prime_power(q))
        throw UsageError("q must be a prime power");
    if (q > 65536)
        throw UsageError("q is limited to 65536");
    return Field::of_order(q);
}

json classification(const Flock & fl)
{
    const auto & F = fl.field();
    const auto lin = is_linear(fl);
    const auto star = star_analysis(fl);
    const auto bl = is_bilinear(fl);
    const auto cone = critical_cone(fl);
    json j;
    j["field"] = to_json(F);
    j["linear"] = lin.linear;
    j["axis"] = lin.axis ? to_json(*lin.axis) : json(nullptr);
    j["star"] = star.is_star;
    j["proper_star"] = star.is_proper;
    j["star_points"] = json::array();
    for (const auto & p : star.star_points)
        j["star_points"].push_back(to_json(lift(F, p)));
    j["bilinear"] = bl.bilinear;
    j["degenerate_bilinear"] = bl.degenerate;
    j["properly_bilinear"] = bl.properly_bilinear;
    j["carrier_lines"] = json::array();
    for (const auto & l : bl.carrier_lines)
        j["carrier_lines"].push_back(to_json(l));
    j["carrier_lines_meet"] = bl.lines_meet;
    j["cone"] = to_json(classify_cone(F, cone));
    j["planes"] = planes_json(fl);
    return j;
}

json cone_report(const Flock & fl)
{
    const auto & F = fl.field();
    const auto cone = critical_cone(fl);
    const auto w = width(F, cone);
    json j;
    j["carrier"] = to_json(cone);
    j["class"] = to_json(classify_cone(F, cone));
    j["width"] = w.minimum;
    j["wide_threshold"] = wide_threshold(F.q());
    return j;
}

json blocking_report(const Field & field, const BlockingSet & b)
{
    const auto info = is_blocking_set(field, b.points);
    json j = to_json(b);
    j["size"] = b.points.size();
    j["blocking"] = info.blocking;
    j["proper"] = info.proper;
    j["redei"] = info.redei;
    j["redei_parameter"] = info.max_collinear;
    return j;
}

std::string text_of(const json & j)
{
    std::string out;
    for (const auto & [k, v] : j.items())
        out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    return out;
}

std::vector<SuiteReport> run_suite(const std::string & suite, std::optional<unsigned> q, unsigned jobs, std::uint64_t seed)
{
    auto qs = [&](std::vector<unsigned> defaults) { return q ? std::vector<unsigned>{*q} : defaults; };
    std::vector<SuiteReport> out;
    auto timed = [&](auto && fn) {
        const auto start = std::chrono::steady_clock::now();
        out.push_back(fn());
        out.back().seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    if (suite == "lunelli-sce")
        timed([] { return lunelli_sce_suite(); });
    else if (suite == "kantor-knuth") {
        timed([] { return kantor_knuth_suite(); });
        std::vector<Elem> ms;
        for (Elem m = 1; m < 9; ++m)
            ms.push_back(m);
        timed([&] { return example1_check(Field::make(3, 2), 1, ms); });
    }
    else if (suite == "holder-megyesi")
        timed([] { return holder_megyesi_suite(); });
    else if (suite == "triangle")
        for (auto x : qs({5, 7, 9, 13}))
            timed([&] { return triangle_flock_suite(x); });
    else if (suite == "triangle-special")
        for (auto x : qs({3, 5}))
            timed([&] { return triangle_special_case(x); });
    else if (suite == "triad")
        for (auto x : qs({4, 8, 16}))
            timed([&] { return triad_flock_suite(x); });
    else if (suite == "triad-special")
        for (auto x : qs({2, 4})) {
            unsigned e = 0;
            while ((1u << e) < x)
                ++e;
            if ((1u << e) != x)
                throw UsageError("triad-special needs q a power of 2");
            timed([&] { return triad_special_case(e); });
        }
    else if (suite == "nobi")
        for (auto x : qs({2, 3, 4, 5, 7, 8}))
            timed([&] { return nobi_suite(x, jobs); });
    else if (suite == "corollaries")
        for (auto x : qs({3, 4, 5, 7, 8, 9, 16, 27}))
            timed([&] { return survey_star_flocks(x, {.jobs = jobs}); });
    else if (suite == "counts")
        timed([] { return counts_suite(); });
    else if (suite == "ball")
        for (auto x : qs({4, 5, 7, 8, 9}))
            timed([&] { return ball_suite(x, jobs); });
    else if (suite == "properties")
        timed([&] { return property_suite(seed, jobs); });
    return out;
}

} // namespace

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Flocks of cones in PG(3,q): construction, classification and verification", "flockcli"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "json";
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    bool timing = false;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", jobs, "worker threads; output does not depend on it")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "seed for randomized property checks");
    app.add_flag("--timing", timing, "include suite timings in the report");

    std::function<Outcome()> action;
    std::string command;

    unsigned p = 0, n = 0, q = 0, e = 0;
    std::vector<unsigned> modulus;
    std::string file1, file2, suite;
    bool exhaustive = false, monic = false, linearized_only = false;
    std::optional<unsigned> suite_q;

    auto * field_cmd = app.add_subcommand("field", "finite fields")->require_subcommand(1);
    auto * field_info = field_cmd->add_subcommand("info", "defining polynomial and primitive element");
    field_info->add_option("--p", p, "characteristic")->required();
    field_info->add_option("--n", n, "degree")->required();
    field_info->add_option("--modulus", modulus, "c0 .. c_{n-1} of a monic irreducible")->delimiter(',');
    field_info->callback([&] {
        command = "field info";
        action = [&] {
            const auto F = modulus.empty() ? Field::make(p, n) : Field::make(p, n, modulus);
            json j = to_json(F);
            j["q"] = F.q();
            j["primitive"] = F.primitive();
            j["description"] = F.describe();
            return Outcome{j};
        };
    });

    auto * flock_cmd = app.add_subcommand("flock", "flocks read from JSON files")->require_subcommand(1);
    auto * classify = flock_cmd->add_subcommand("classify", "linear, star and bilinear structure");
    classify->add_option("file", file1)->required();
    classify->callback([&] {
        command = "flock classify";
        action = [&] { return Outcome{classification(read_flock_file(file1))}; };
    });
    auto * cone = flock_cmd->add_subcommand("cone", "critical cone, width and class");
    cone->add_option("file", file1)->required();
    cone->callback([&] {
        command = "flock cone";
        action = [&] { return Outcome{cone_report(read_flock_file(file1))}; };
    });
    auto * equiv = flock_cmd->add_subcommand("equiv", "equivalence under the stabilizer of V and x3 = 0");
    equiv->add_option("first", file1)->required();
    equiv->add_option("second", file2)->required();
    equiv->add_flag("--exhaustive", exhaustive, "exact search (q <= 8)");
    equiv->callback([&] {
        command = "flock equiv";
        action = [&] {
            const auto a = read_flock_file(file1), b = read_flock_file(file2);
            if (! (a.field() == b.field()))
                throw UsageError("flocks are over different fields");
            if (exhaustive && a.q() > exhaustive_limit)
                throw UsageError("--exhaustive is limited to q <= 8");
            const auto res = are_equivalent(a, b, exhaustive ? EquivMode::exhaustive : EquivMode::fingerprint);
            json j;
            j["verdict"] = to_string(res.verdict);
            j["witness"] = res.witness ? to_json(*res.witness) : json(nullptr);
            j["fingerprints"] = {to_json(fingerprint(a)), to_json(fingerprint(b))};
            return Outcome{j};
        };
    });

    auto * linpoly_cmd = app.add_subcommand("linpoly", "linearized permutation polynomials")->require_subcommand(1);
    auto * lcount = linpoly_cmd->add_subcommand("count", "closed-form count of monic permutations");
    lcount->add_option("--q", q)->required();
    lcount->add_option("--e", e)->required();
    lcount->callback([&] {
        command = "linpoly count";
        action = [&] {
            const auto pp = prime_power(q);
            if (! pp || e == 0 || pp->second % e != 0)
                throw UsageError("need a prime power q = p^n and e dividing n");
            unsigned long long s = 1;
            for (unsigned i = 0; i < e; ++i)
                s *= pp->first;
            return Outcome{json{{"q", q}, {"e", e}, {"s", s}, {"k", pp->second / e},
                {"count", betti_mathieu_count(s, pp->second / e)}}};
        };
    });
    auto * lenum = linpoly_cmd->add_subcommand("enum", "enumerate permutations");
    lenum->add_option("--q", q)->required();
    lenum->add_option("--e", e)->required();
    lenum->add_flag("--monic", monic, "leading nonzero coefficient 1");
    lenum->callback([&] {
        command = "linpoly enum";
        action = [&] {
            const auto F = field_of_order(q);
            if (e == 0 || F.n() % e != 0)
                throw UsageError("e must divide n");
            const auto polys = enumerate_linearized_perms(F, e, monic);
            json list = json::array();
            for (const auto & lp : polys)
                list.push_back(to_json(lp));
            return Outcome{json{{"q", q}, {"e", e}, {"monic", monic}, {"count", polys.size()}, {"polynomials", list}}};
        };
    });

    auto * blocking_cmd = app.add_subcommand("blocking", "blocking sets")->require_subcommand(1);
    auto * tri = blocking_cmd->add_subcommand("triangle", "projective triangle, q odd");
    tri->add_option("--q", q)->required();
    tri->callback([&] {
        command = "blocking triangle";
        action = [&] {
            const auto F = field_of_order(q);
            if (q % 2 == 0)
                throw UsageError("the projective triangle needs odd q");
            const auto b = projective_triangle(F);
            auto j = blocking_report(F, b);
            j["triangle_property"] = triangle_property(F, b.points);
            return Outcome{j, j["blocking"].get<bool>() && j["triangle_property"].get<bool>()};
        };
    });
    auto * triad = blocking_cmd->add_subcommand("triad", "projective triad, q even");
    triad->add_option("--q", q)->required();
    triad->callback([&] {
        command = "blocking triad";
        action = [&] {
            const auto F = field_of_order(q);
            if (F.p() != 2)
                throw UsageError("the projective triad needs even q");
            const auto b = projective_triad(F);
            auto j = blocking_report(F, b);
            j["triad_property"] = triad_property(F, b.points);
            return Outcome{j, j["blocking"].get<bool>() && j["triad_property"].get<bool>()};
        };
    });
    auto * from_flock = blocking_cmd->add_subcommand("from-flock", "Redei set of a star flock");
    from_flock->add_option("file", file1)->required();
    from_flock->callback([&] {
        command = "blocking from-flock";
        action = [&] {
            auto fl = read_flock_file(file1);
            bool normal = true;
            for (Elem t = 0; t < fl.q(); ++t)
                normal = normal && fl.f()[t] == t && fl.h()[t] == 0;
            if (! normal)
                fl = normalize_star_form(fl).flock;
            const auto b = redei_from_star_flock(fl);
            auto j = blocking_report(fl.field(), b);
            const auto N = direction_count(fl.field(), fl.g()).N;
            j["N"] = N;
            const bool ok = j["blocking"].get<bool>() && b.points.size() == fl.q() + N;
            return Outcome{j, ok};
        };
    });

    auto * survey_cmd = app.add_subcommand("survey", "exhaustive surveys")->require_subcommand(1);
    auto * star = survey_cmd->add_subcommand("star", "star flocks F(t, g, 0) of wide cones");
    star->add_option("--q", q)->required();
    star->add_flag("--linearized-only", linearized_only);
    star->callback([&] {
        command = "survey star";
        action = [&] {
            std::vector<SuiteReport> reps{survey_star_flocks(q, {.jobs = jobs, .linearized_only = linearized_only})};
            return Outcome{json(), reps.front().pass(), reps};
        };
    });

    auto * verify = app.add_subcommand("verify", "verification suites");
    verify->add_option("suite", suite)
        ->required()
        ->check(CLI::IsMember({"lunelli-sce", "kantor-knuth", "holder-megyesi", "triangle", "triangle-special", "triad",
            "triad-special", "nobi", "corollaries", "counts", "ball", "properties"}));
    verify->add_option("--q", suite_q, "restrict to one q");
    verify->callback([&] {
        command = "verify " + suite;
        action = [&] {
            Outcome o;
            o.reports = run_suite(suite, suite_q, jobs, seed);
            return o;
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    }
    catch (const CLI::ParseError & ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
    if (! action) {
        err << "error: missing subcommand\n";
        return 2;
    }

    Outcome o;
    try {
        o = action();
    }
    catch (const UsageError & ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
    catch (const IoError & ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }
    catch (const std::invalid_argument & ex) {
        err << "error: " << ex.what() << '\n';
        return 2;
    }

    if (! o.reports.empty()) {
        json suites = json::array();
        for (const auto & r : o.reports) {
            suites.push_back(r.to_json(timing));
            o.pass = o.pass && r.pass();
        }
        o.result = {{"suites", suites}};
    }

    if (format == "json") {
        json doc{{"schema", schema}, {"command", command}, {"pass", o.pass}, {"result", o.result}};
        out << doc.dump(2) << '\n';
    }
    else {
        out << command << ": " << (o.pass ? "PASS" : "FAIL") << '\n';
        if (o.reports.empty())
            out << text_of(o.result);
        for (const auto & r : o.reports)
            out << r.to_text();
    }
    return o.pass ? 0 : 1;
}

} // namespace flocks
