#include <flocks/catalog.hh>
#include <flocks/io.hh>
#include <flocks/parallel.hh>
#include <flocks/survey.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace flocks {

namespace {

constexpr std::uint64_t chunk_size = 2048;
constexpr std::size_t example_cap = 5;

std::uint64_t factorial(unsigned n)
{
    std::uint64_t r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

std::uint64_t chunks_for(std::uint64_t total)
{
    return (total + chunk_size - 1) / chunk_size;
}

// Calls fn(g) for the permutations fixing 0 with ranks [begin, end).
template <typename Fn>
void for_permutations(unsigned q, std::uint64_t begin, std::uint64_t end, Fn && fn)
{
    auto perm = unrank_permutation(q - 1, begin);
    std::vector<Elem> g(q, 0);
    for (std::uint64_t r = begin; r < end; ++r) {
        for (unsigned i = 0; i + 1 < q; ++i)
            g[i + 1] = perm[i] + 1;
        fn(g);
        std::next_permutation(perm.begin(), perm.end());
    }
}

struct Tally
{
    std::map<std::string, std::uint64_t> counts;
    std::vector<std::vector<Elem>> examples;

    void add(const std::string & key, std::uint64_t v = 1) { counts[key] += v; }
    void example(const std::vector<Elem> & g)
    {
        if (examples.size() < example_cap)
            examples.push_back(g);
    }
    void merge(const Tally & o)
    {
        for (const auto & [k, v] : o.counts)
            counts[k] += v;
        for (const auto & g : o.examples)
            example(g);
    }
    std::uint64_t get(const std::string & key) const
    {
        auto it = counts.find(key);
        return it == counts.end() ? 0 : it->second;
    }
};

Tally merged(const std::vector<Tally> & parts)
{
    Tally t;
    for (const auto & p : parts)
        t.merge(p);
    return t;
}

json counts_json(const Tally & t)
{
    json j = json::object();
    for (const auto & [k, v] : t.counts)
        j[k] = v;
    return j;
}

Point2 star_point(const Field & field)
{
    return Point2::from(field, {0, 0, 1});
}

// Points of the cone at infinity are one per carrier line through (0,0,1).
bool independent_of_c(const Field & field, const PointSet2 & cone)
{
    std::size_t at_infinity = 0;
    for (const auto & p : cone)
        at_infinity += p[2] == 0;
    return ! cone.contains(star_point(field)) && cone.size() == at_infinity * field.q();
}

bool prime_or_small_even(unsigned q)
{
    return is_prime(q) || q == 4 || q == 8;
}

SuiteReport full_survey(unsigned q, unsigned jobs)
{
    const auto F = Field::of_order(q);
    SuiteReport r("survey q=" + std::to_string(q));
    const std::uint64_t total = factorial(q - 1);
    const unsigned threshold = wide_threshold(q);
    const unsigned kk_directions = (q - 1) / (F.p() - 1);

    auto parts = run_chunks<Tally>(chunks_for(total), jobs, [&](std::size_t c) {
        Tally t;
        const std::uint64_t begin = c * chunk_size, end = std::min(total, begin + chunk_size);
        for_permutations(q, begin, end, [&](const std::vector<Elem> & g) {
            const auto fl = star_normal_flock(F, g);
            const auto cone = critical_cone(fl);
            t.add("flocks");
            const bool linear = is_linear(fl).linear;
            const auto star = star_analysis(fl);
            if (! star.is_star || (star.is_proper && linear) || (! star.is_proper && ! linear))
                t.add("taxonomy_failures");
            if (! independent_of_c(F, cone))
                t.add("c_dependent_carriers");
            if (! direction_width_bound(fl, cone))
                t.add("bound_failures");
            if (! width_at_least(F, cone, threshold))
                return;
            t.add("wide");
            if (linear) {
                t.add("wide_linear");
                return;
            }
            const auto step = detect_linearized(F, g);
            const bool kk = q == 9 && step && direction_count(F, g).N == kk_directions;
            if (kk)
                t.add("wide_kantor_knuth");
            if (prime_or_small_even(q) || ! kk) {
                t.add("exceptions");
                t.example(g);
            }
        });
        return t;
    });
    const auto t = merged(parts);

    r.check("permutations fixing 0", total, t.get("flocks"));
    if (q == 9)
        r.check("wide cones that are neither linear nor Kantor-Knuth", 0, t.get("exceptions"));
    else
        r.check("wide cones with nonlinear g", 0, t.get("exceptions"));
    r.check("wide cones", t.get("wide"), t.get("wide_linear") + t.get("wide_kantor_knuth") + t.get("exceptions"));
    r.check("N(g) + w_S(star point) > q + 1", 0, t.get("bound_failures"));
    r.check("carriers depending on the z coordinate", 0, t.get("c_dependent_carriers"));
    r.check("linear/star/proper taxonomy violations", 0, t.get("taxonomy_failures"));
    r.require("tally", true, {{"counts", counts_json(t)}, {"examples", t.examples}});
    return r;
}

SuiteReport linearized_survey(unsigned q, unsigned jobs)
{
    const auto F = Field::of_order(q);
    SuiteReport r("survey q=" + std::to_string(q) + " linearized");
    const unsigned threshold = wide_threshold(q);
    const bool monic = q == 27;
    const auto polys = enumerate_linearized_perms(F, 1, monic);

    auto parts = run_chunks<Tally>(chunks_for(polys.size()), jobs, [&](std::size_t c) {
        Tally t;
        const std::size_t begin = c * chunk_size, end = std::min<std::size_t>(polys.size(), begin + chunk_size);
        for (std::size_t i = begin; i < end; ++i) {
            const auto g = polys[i].table();
            const auto fl = star_normal_flock(F, g);
            const auto cone = critical_cone(fl);
            const bool wide = width_at_least(F, cone, threshold);
            const unsigned step = *detect_linearized(F, g);
            const unsigned N = direction_count(F, g).N;
            if (! direction_width_bound(fl, cone))
                t.add("bound_failures");
            const std::string cls = "step" + std::to_string(step) + "_N" + std::to_string(N);
            t.add(cls);
            if (wide)
                t.add(cls + "_wide");
            if (q == 16) {
                if (step == 1 && wide) {
                    t.add("exceptions");
                    t.example(g);
                }
                if (step == 2 && (! wide || N != 5)) {
                    t.add("exceptions");
                    t.example(g);
                }
            }
            else if (step < F.n() && ! wide) {
                t.add("exceptions");
                t.example(g);
            }
        }
        return t;
    });
    const auto t = merged(parts);

    if (q == 16) {
        r.check("2-linearized permutations", 20160, polys.size());
        r.check("exceptions", 0, t.get("exceptions"));
        std::uint64_t step1_wide = 0;
        for (const auto & [k, v] : t.counts)
            if (k.starts_with("step1_") && k.ends_with("_wide"))
                step1_wide += v;
        r.check("wide cones from properly 2-linearized g", 0, step1_wide);
        r.check("nonlinear 4-linearized g: Kantor-Knuth with N = 5, all wide", t.get("step2_N5"), t.get("step2_N5_wide"));
        r.check("nonlinear 4-linearized permutations", 180 - 15, t.get("step2_N5"));
    }
    else {
        r.check("monic 3-linearized permutations", 432, polys.size());
        r.check("nonlinear ones with a thin cone", 0, t.get("exceptions"));
    }
    r.check("N(g) + w_S(star point) > q + 1", 0, t.get("bound_failures"));
    r.require("tally", true, {{"counts", counts_json(t)}, {"examples", t.examples}});
    return r;
}

} // namespace

std::vector<unsigned> unrank_permutation(unsigned n, std::uint64_t rank)
{
    std::vector<unsigned> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    std::vector<unsigned> out;
    for (unsigned i = n; i > 0; --i) {
        const std::uint64_t f = factorial(i - 1);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

SuiteReport survey_star_flocks(unsigned q, const SurveyOptions & opts)
{
    const std::vector<unsigned> full{2, 3, 4, 5, 7, 8, 9};
    if (q == 16 || q == 27)
        return linearized_survey(q, opts.jobs);
    if (opts.linearized_only)
        throw SurveyError("linearized mode supports q = 16 and q = 27");
    if (std::find(full.begin(), full.end(), q) == full.end())
        throw SurveyError("full mode supports q in {2,3,4,5,7,8,9}");
    return full_survey(q, opts.jobs);
}

SuiteReport nobi_suite(unsigned q, unsigned jobs)
{
    if (q > 8 || ! prime_power(q))
        throw SurveyError("the bilinear survey supports prime powers q <= 8");
    const auto F = Field::of_order(q);
    SuiteReport r("nobi q=" + std::to_string(q));
    std::uint64_t total = 1;
    for (unsigned i = 1; i < q; ++i)
        total *= q;
    const unsigned threshold = wide_threshold(q);

    auto parts = run_chunks<Tally>(chunks_for(total), jobs, [&](std::size_t c) {
        Tally t;
        const std::uint64_t begin = c * chunk_size, end = std::min(total, begin + chunk_size);
        std::vector<Elem> g(q, 0);
        for (std::uint64_t code = begin; code < end; ++code) {
            auto w = code;
            for (unsigned i = 1; i < q; ++i) {
                g[i] = static_cast<Elem>(w % q);
                w /= q;
            }
            t.add("flocks");
            // the carrier of F(t, g, 0) is a union of punctured lines through (0,0,1)
            std::vector<Point2> dirs;
            std::vector<Elem> v(q);
            if (is_permutation(F, g))
                dirs.push_back(Point2::from(F, {0, 1, 0}));
            for (Elem a = 0; a < q; ++a) {
                for (Elem s = 0; s < q; ++s)
                    v[s] = F.add(F.mul(a, s), g[s]);
                if (is_permutation(F, v))
                    dirs.push_back(Point2::from(F, {a, 1, 0}));
            }
            // (1,0,0): t itself is always a permutation
            dirs.push_back(Point2::from(F, {1, 0, 0}));
            if (dirs.size() < threshold)
                continue;
            const auto fl = star_normal_flock(F, g);
            const auto cone = punctured_lines(F, dirs);
            if (! width_at_least(F, cone, threshold))
                continue;
            t.add("wide");
            if (is_bilinear(fl).properly_bilinear) {
                t.add("wide_properly_bilinear");
                t.example(g);
            }
        }
        return t;
    });
    const auto t = merged(parts);
    r.check("functions g with g(0) = 0", total, t.get("flocks"));
    r.check("properly bilinear star flocks with a wide cone", 0, t.get("wide_properly_bilinear"));
    r.require("tally", true, {{"counts", counts_json(t)}, {"examples", t.examples}});
    return r;
}

SuiteReport ball_suite(unsigned q, unsigned jobs)
{
    if (q > 9 || q < 2 || ! prime_power(q))
        throw SurveyError("the trichotomy survey supports prime powers q <= 9");
    const auto F = Field::of_order(q);
    SuiteReport r("ball q=" + std::to_string(q));
    const std::uint64_t total = factorial(q - 1);

    auto parts = run_chunks<Tally>(chunks_for(total), jobs, [&](std::size_t c) {
        Tally t;
        const std::uint64_t begin = c * chunk_size, end = std::min(total, begin + chunk_size);
        for_permutations(q, begin, end, [&](const std::vector<Elem> & g) {
            const auto prof = ball_trichotomy(F, g);
            t.add("case_" + prof.ball_case);
            if (! prof.bound_holds) {
                t.add("bound_failures");
                t.example(g);
            }
            if (! prof.linearized_ok) {
                t.add("linearized_failures");
                t.example(g);
            }
        });
        return t;
    });
    const auto t = merged(parts);
    r.check("permutations classified", total, t.get("case_i") + t.get("case_ii") + t.get("case_iii"));
    r.check("bound violations", 0, t.get("bound_failures"));
    r.check("p^e > 2 without p^e-linearity", 0, t.get("linearized_failures"));
    r.require("tally", true, {{"counts", counts_json(t)}, {"examples", t.examples}});
    return r;
}

SuiteReport counts_suite()
{
    SuiteReport r("counts");
    struct Case
    {
        unsigned p, n, e;
    };
    for (const auto & cs : std::vector<Case>{{2, 4, 2}, {3, 3, 1}, {3, 2, 1}, {2, 4, 4}, {2, 2, 2}, {2, 4, 1}, {2, 6, 3}, {2, 6, 2}}) {
        const auto F = Field::make(cs.p, cs.n);
        unsigned s = 1;
        for (unsigned i = 0; i < cs.e; ++i)
            s *= cs.p;
        const auto expected = betti_mathieu_count(s, cs.n / cs.e);
        const std::string tag = "q=" + std::to_string(F.q()) + " e=" + std::to_string(cs.e);
        r.check(tag + ": monic permutations", expected, enumerate_linearized_perms(F, cs.e, true).size());
        if (F.q() <= 27)
            r.check(tag + ": all permutations", expected * (F.q() - 1), enumerate_linearized_perms(F, cs.e, false).size());
    }

    const auto F16 = Field::make(2, 4);
    const auto t4 = LinearizedPoly::make(F16, 2, {0, 1});
    r.check("t^4 o t^4 = t over GF(16)", json(std::vector<Elem>{1, 0}), json(compose(t4, t4).coeffs));

    // q = 27: classes by degree and direction count
    const auto F27 = Field::make(3, 3);
    const unsigned p = 3;
    std::map<std::pair<unsigned, unsigned>, std::uint64_t> classes;
    for (const auto & lp : enumerate_linearized_perms(F27, 1, true)) {
        unsigned d = 1;
        for (unsigned i = 0; i < *lp.leading_index(); ++i)
            d *= p;
        ++classes[{d, direction_count(F27, lp.table()).N}];
    }
    auto get = [&](unsigned d, unsigned N) { return classes.count({d, N}) ? classes[{d, N}] : 0; };
    std::uint64_t sum = 0;
    for (const auto & [k, v] : classes)
        sum += v;
    r.check("q=27: monic linear", 1, get(1, 1));
    r.check("q=27: Holder-Megyesi type (degree p^2, N = p^2 + 1)", (p * p + p + 1) * (p * p * p - p * p - 1), get(9, 10));
    r.check("q=27: t^(p^2) - a t^p - c t type (N = p^2 + p + 1)", (p * p * p - p * p - p - 1) * (p * p * p - p * p - p - 1),
        get(9, 13));
    r.check("q=27: t^p - a t type", p * p * p - p * p - p - 1, get(3, 13));
    r.check("q=27: classes account for all monic permutations", betti_mathieu_count(3, 3), sum);
    r.check("q=27: number of classes", 4, classes.size());
    return r;
}

SuiteReport property_suite(std::uint64_t seed, unsigned jobs)
{
    SuiteReport r("properties");
    std::mt19937_64 rng(seed);

    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const auto F = Field::of_order(q);
        std::uint64_t failures = 0;
        for (Elem a = 0; a < q; ++a) {
            if (a != 0 && F.mul(a, F.inv(a)) != 1)
                ++failures;
            if (F.add(a, F.neg(a)) != 0 || F.add(a, 0) != a || F.mul(a, 1) != a)
                ++failures;
            for (Elem b = 0; b < q; ++b) {
                if (F.add(a, b) != F.add(b, a) || F.mul(a, b) != F.mul(b, a))
                    ++failures;
                if (F.frobenius(F.add(a, b), 1) != F.add(F.frobenius(a, 1), F.frobenius(b, 1)))
                    ++failures;
                if (F.mul(a, b) != F.poly_mul(a, b))
                    ++failures;
                for (Elem c = 0; c < q; ++c) {
                    if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c)))
                        ++failures;
                    if (F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c)))
                        ++failures;
                    if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)))
                        ++failures;
                }
            }
        }
        r.check("field axioms q=" + std::to_string(q), 0, failures);
    }

    for (unsigned q : {2u, 3u, 4u}) {
        const auto F = Field::of_order(q);
        std::uint64_t failures = 0;
        const auto pts = points3(F);
        const auto planes = planes3(F);
        for (const auto & p : pts)
            if (dualize(F, dualize(F, p)) != p)
                ++failures;
        for (const auto & p : pts)
            for (const auto & h : planes)
                if (incident(F, p, h) != incident(F, dualize(F, h), dualize(F, p)))
                    ++failures;
        r.check("duality involution and incidence q=" + std::to_string(q), 0, failures);
    }

    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const auto F = Field::of_order(q);
        std::uniform_int_distribution<Elem> any(0, q - 1);
        std::uint64_t fp_failures = 0, law_failures = 0, carrier_failures = 0;
        for (unsigned trial = 0; trial < 100; ++trial) {
            std::optional<Flock> fl;
            if (trial % 2 == 0) {
                std::vector<Elem> g(q);
                std::iota(g.begin(), g.end(), Elem{0});
                std::shuffle(g.begin() + 1, g.end(), rng);
                fl = star_variant(star_normal_flock(F, g), any(rng), any(rng));
            }
            else {
                std::vector<Elem> f(q, 0), g(q, 0), h(q, 0);
                std::vector<Vec3> used{{0, 0, 0}};
                for (Elem t = 1; t < q; ++t) {
                    Vec3 v;
                    do
                        v = {any(rng), any(rng), any(rng)};
                    while (std::find(used.begin(), used.end(), v) != used.end());
                    used.push_back(v);
                    f[t] = v[0];
                    g[t] = v[1];
                    h[t] = v[2];
                }
                fl = Flock::make(F, f, g, h);
            }
            const auto g1 = random_element(F, rng), g2 = random_element(F, rng);
            const auto image = apply(g1, *fl);
            if (fingerprint(image) != fingerprint(*fl))
                ++fp_failures;
            if (! same_planes(apply(g2, image), apply(compose(F, g2, g1), *fl)))
                ++law_failures;
            if (critical_cone(image) != apply(F, g1, critical_cone(*fl)))
                ++carrier_failures;
        }
        const std::string tag = " q=" + std::to_string(q);
        r.check("fingerprint invariance, 100 random elements" + tag, 0, fp_failures);
        r.check("group law for the action" + tag, 0, law_failures);
        r.check("carrier moves with the group" + tag, 0, carrier_failures);
    }

    for (unsigned q : {3u, 4u, 5u, 7u}) {
        const auto a = survey_star_flocks(q, {.jobs = 1}).to_json().dump();
        const auto b = survey_star_flocks(q, {.jobs = std::max(2u, jobs)}).to_json().dump();
        r.require("survey report independent of workers q=" + std::to_string(q), a == b);
    }
    {
        const auto a = nobi_suite(5, 1).to_json().dump();
        const auto b = nobi_suite(5, std::max(3u, jobs)).to_json().dump();
        r.require("bilinear survey report independent of workers q=5", a == b);
    }
    return r;
}

} // namespace flocks
