#include "shapelab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include "shapelab/cylinder_bounds.hpp"
#include "shapelab/diagram.hpp"
#include "shapelab/errors.hpp"
#include "shapelab/functional.hpp"
#include "shapelab/io.hpp"
#include "shapelab/log.hpp"
#include "shapelab/raster.hpp"
#include "shapelab/relaxed_q1.hpp"
#include "shapelab/thin_convex.hpp"

namespace shapelab {

bool SuiteReport::all_passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"kohler-jobin", "polya-szego", "saint-venant", "faber-krahn",
                                                "theorem-2-2",  "pconvthin",   "g-q-regimes",  "relaxed-q1"};
    return names;
}

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    jobs = std::clamp(jobs, 1, std::max(n, 1));
    if (jobs == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) {
        pool.emplace_back([&, j] {
            for (int i = j; i < n; i += jobs) fn(i);
        });
    }
}

std::vector<NamedGrid> grid_corpus(int per_unit) {
    if (per_unit < 8) throw DomainError("grid_corpus: at least 8 cells per unit");
    std::vector<NamedGrid> c;
    c.push_back({"square-1", raster_rect(1.0, 1.0, per_unit)});
    c.push_back({"square-0.5", raster_rect(0.5, 0.5, per_unit)});
    c.push_back({"rect-1x0.5", raster_rect(1.0, 0.5, per_unit)});
    c.push_back({"rect-1x0.25", raster_rect(1.0, 0.25, per_unit)});
    c.push_back({"disk-0.5", raster_disk(0.5, per_unit)});
    c.push_back({"disk-0.375", raster_disk(0.375, per_unit)});
    c.push_back({"disk-0.25", raster_disk(0.25, per_unit)});
    c.push_back({"lshape-1", raster_lshape(1.0, per_unit)});
    c.push_back({"lshape-0.75", raster_lshape(0.75, per_unit)});
    c.push_back({"lshape-0.5", raster_lshape(0.5, per_unit)});
    for (int s = 1; s <= 10; ++s) c.push_back({"blob-" + std::to_string(s), raster_blob(s, 0.3, per_unit)});
    c.push_back({"pair-0.4-0.4", raster_square_pair(0.4, 0.4, per_unit)});
    c.push_back({"pair-0.4-0.2", raster_square_pair(0.4, 0.2, per_unit)});
    c.push_back({"pair-0.5-0.1", raster_square_pair(0.5, 0.1, per_unit)});
    c.push_back({"disk-square-0.2-0.3", raster_disk_square(0.2, 0.3, per_unit)});
    c.push_back({"disk-square-0.25-0.1", raster_disk_square(0.25, 0.1, per_unit)});
    return c;
}

std::vector<SpectralResult> solve_corpus(const std::vector<NamedGrid>& corpus, int jobs, const SolveOptions& opts) {
    std::vector<std::optional<SpectralResult>> out(corpus.size());
    parallel_for(static_cast<int>(corpus.size()), jobs, [&](int i) {
        out[static_cast<std::size_t>(i)] = spectrum_of_grid(corpus[static_cast<std::size_t>(i)].grid, opts, true);
    });
    std::vector<SpectralResult> r;
    for (auto& o : out) r.push_back(*o);
    return r;
}

namespace {

constexpr double kPi = std::numbers::pi;

// Worst-case bookkeeping for a family of checks.
struct Tally {
    std::string name;
    int count = 0;
    int failed = 0;
    double worst = std::numeric_limits<double>::infinity();   // smallest margin seen

    void add(double margin) {
        ++count;
        if (!(margin >= 0.0)) ++failed;
        worst = std::min(worst, margin);
    }
    CaseResult result() const {
        return {name, failed == 0 && count > 0,
                std::to_string(count) + " cases, " + std::to_string(failed) + " failed, min margin " + fmt(worst)};
    }
};

// Closed-form families shared by the diagram inequalities.
struct ClosedFamily {
    std::string name;
    int d;
    std::vector<SpectralResult> results;
};

std::vector<ClosedFamily> closed_families(const VerifyOptions& opts) {
    std::vector<ClosedFamily> fams;
    for (int d = 1; d <= 8; ++d) fams.push_back({"ball d=" + std::to_string(d), d, {ball_spectrum({d, 0.5 + d})}});

    ClosedFamily rects{"rectangles d=2 (series)", 2, {}};
    for (double L : {1.0, 1.5, 2.0, 5.0, 10.0, 20.0}) rects.results.push_back(rect_spectrum(RectSpec{{L, 1.0}}));
    fams.push_back(std::move(rects));

    for (int d = 1; d <= 3; ++d) {
        ClosedFamily u{d == 1 ? "interval unions" : "ball unions d=" + std::to_string(d), d, {}};
        for (const auto& p : ball_union_cloud(d, opts.samples, opts.seed, opts.jobs)) {
            u.results.push_back(d == 1 ? union_spectrum(std::get<IntervalUnionSpec>(p.source))
                                       : union_spectrum(std::get<BallUnionSpec>(p.source)));
        }
        fams.push_back(std::move(u));
    }
    return fams;
}

enum class Check { kohler_jobin, polya_szego, saint_venant, faber_krahn };

// Margin >= 0 iff the inequality holds with the allowed tolerance.
double margin(Check c, const SpectralResult& r, int d, double tol) {
    const DiagramPoint p = normalized_coords(r, d);
    switch (c) {
        case Check::kohler_jobin:
            return p.y - std::pow(p.x, (d + 2.0) / 2.0) * (1.0 - tol);
        case Check::polya_szego:
            return (1.0 - r.product()) - tol;
        case Check::saint_venant:
            return 1.0 + tol - p.y;
        case Check::faber_krahn:
            return 1.0 + tol - p.x;
    }
    return 0.0;
}

SuiteReport inequality_suite(const std::string& suite, Check c, const VerifyOptions& opts) {
    SuiteReport rep{suite, {}};
    const double exact_tol = c == Check::polya_szego ? 0.0 : 1e-12;
    for (const auto& fam : closed_families(opts)) {
        Tally t{fam.name};
        for (const auto& r : fam.results) t.add(margin(c, r, fam.d, exact_tol));
        rep.cases.push_back(t.result());
    }
    const auto corpus = grid_corpus(opts.grid);
    const auto results = solve_corpus(corpus, opts.jobs);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const double err = results[i].err_estimate().value_or(0.0);
        // Polya-Szego needs a margin of at least the error estimate; the
        // diagram inequalities allow twice the relative error.
        const double tol = c == Check::polya_szego ? err : 2.0 * err;
        const double m = margin(c, results[i], 2, tol);
        const DiagramPoint p = normalized_coords(results[i], 2);
        rep.cases.push_back({"grid " + corpus[i].name, m >= 0.0,
                             "x=" + fmt(p.x) + " y=" + fmt(p.y) + " F1=" + fmt(results[i].product()) +
                                 " err=" + fmt(err) + " margin=" + fmt(m)});
    }
    return rep;
}

SuiteReport theorem_2_2(const VerifyOptions&) {
    SuiteReport rep{"theorem-2-2", {}};
    for (double L : {5.0, 10.0, 20.0}) {
        const SeriesValue s = rect_torsion_series(RectSpec{{L, 1.0}});
        const CylinderSpec cyl = strip_cylinder(L, 1.0);
        const double lo = s.value - s.tail_bound, hi = s.value + s.tail_bound;
        const double t1 = upper_bound_t1(cyl), t2 = lower_bound_t2(cyl, 2);
        const TorsionBracket t3 = two_sided_t3(cyl, 2);
        const TorsionBracket rb = rectangle_bracket(L, 1.0);
        const std::string tag = "L=" + fmt(L);
        rep.cases.push_back({tag + " t2 <= T <= t1", t2 <= lo && hi <= t1,
                             "T=" + fmt(s.value) + " +- " + fmt(s.tail_bound) + " in [" + fmt(t2) + ", " + fmt(t1) + "]"});
        rep.cases.push_back({tag + " t3 bracket", t3.lower <= lo && hi <= t3.upper,
                             "[" + fmt(t3.lower) + ", " + fmt(t3.upper) + "]"});
        rep.cases.push_back({tag + " rectangle bracket", rb.lower <= lo && hi <= rb.upper,
                             "[" + fmt(rb.lower) + ", " + fmt(rb.upper) + "]"});
    }
    return rep;
}

std::vector<ConvexBase> planar_bases() {
    std::vector<Point2> hex;
    for (int k = 0; k < 6; ++k) hex.push_back({0.5 + 0.5 * std::cos(kPi * k / 3), 0.5 + 0.5 * std::sin(kPi * k / 3)});
    return {ConvexBase::polygon({{0, 0}, {1, 0}, {0, 1}}), ConvexBase::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
            ConvexBase::polygon(hex), ConvexBase::disk({0.5, 0.5}, 0.5)};
}

SuiteReport pconvthin(const VerifyOptions& opts) {
    SuiteReport rep{"pconvthin", {}};
    for (int d : {2, 3}) {
        const double lower = cone_ratio(d);
        Tally low{"d=" + std::to_string(d) + " ratio >= 6/((d+1)(d+2)) - 2e-3"};
        Tally high{"d=" + std::to_string(d) + " ratio <= 1"};
        std::vector<ConvexBase> bases = d == 2 ? std::vector<ConvexBase>{ConvexBase::interval(0, 1)} : planar_bases();
        const int n = d == 2 ? 2048 : 128;
        std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(d));
        for (int i = 0; i < opts.samples; ++i) {
            const double r = ratio_h3_h1(random_concave_profile(bases[i % bases.size()], n, rng));
            low.add(r - (lower - 2e-3));
            high.add(1.0 + 1e-12 - r);
        }
        rep.cases.push_back(low.result());
        rep.cases.push_back(high.result());
    }
    // Cones attain the lower constant; peaks sit on cell centres.
    const double c2 = ratio_h3_h1(cone_function(ConvexBase::interval(0, 1), {0.3, 0}, 2045));
    rep.cases.push_back({"cone d=2 -> 1/2", std::abs(c2 - 0.5) <= 1e-3, "ratio=" + fmt(c2)});
    const auto tri = cone_function(ConvexBase::polygon({{0, 0}, {1, 0}, {0, 1}}), {0.3, 0.3}, 515);
    const double c3 = ratio_h3_h1(tri);
    rep.cases.push_back({"cone d=3 -> 3/10", std::abs(c3 - 0.3) <= 1e-3, "ratio=" + fmt(c3)});
    // Rearrangement keeps int h and int h^3, and cones rearrange to affine profiles.
    Tally keep{"rearrangement preserves int h, int h^3 (0.5%)"};
    Tally concave{"rearrangement concave (1e-6)"};
    auto check_rearrangement = [&](const ConcaveProfile& p) {
        const ConcaveProfile r = radial_rearrangement(p);
        const double e1 = std::abs(r.integral(1.0) / p.integral(1.0) - 1.0);
        const double e3 = std::abs(r.integral(3.0) / p.integral(3.0) - 1.0);
        keep.add(5e-3 - std::max(e1, e3));
        concave.add(1e-6 - r.concavity_defect());
        return r;
    };
    std::mt19937_64 rng(opts.seed + 7);
    for (int i = 0; i < 8; ++i) check_rearrangement(random_concave_profile(ConvexBase::interval(0, 1), 512, rng));
    for (const auto& b : planar_bases()) {
        for (int i = 0; i < 2; ++i) check_rearrangement(random_concave_profile(b, 512, rng));
    }
    check_rearrangement(cone_function(ConvexBase::polygon({{0, 0}, {1, 0}, {0, 1}}), {0.3, 0.3}, 512));
    const auto square_cone = cone_function(ConvexBase::polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), {0.5, 0.5}, 512);
    const double aff = radial_affine_defect(check_rearrangement(square_cone));
    rep.cases.push_back(keep.result());
    rep.cases.push_back(concave.result());
    rep.cases.push_back({"cone rearranges to affine profile (1e-2)", aff <= 1e-2, "defect=" + fmt(aff)});
    return rep;
}

std::vector<double> swarm(double eps) {
    const auto n = static_cast<std::size_t>(std::ceil(1.0 / (eps * eps)));
    std::vector<double> a(n + 1, eps);
    a[0] = 1.0;
    return a;
}

SuiteReport g_q_regimes(const VerifyOptions& opts) {
    SuiteReport rep{"g-q-regimes", {}};
    const std::vector<double> ones(1'000'000, 1.0);
    const double g_half = g_q(ones, 0.5);
    rep.cases.push_back({"q=0.5: G(N ones) > 100 at N=1e6", g_half > 100.0, "G=" + fmt(g_half)});
    const std::vector<double> few(1000, 1.0);
    const double g9a = g_q(few, 0.9), g9b = g_q(ones, 0.9);
    rep.cases.push_back({"q=0.9: G(N ones) grows with N", g9b > g9a && g9a > 1.0, fmt(g9a) + " -> " + fmt(g9b)});
    const auto sw = swarm(1e-3);
    for (double q : {0.9, 1.0, 2.0}) {
        const double g = g_q(sw, q);
        rep.cases.push_back({"q=" + fmt(q) + ": eps-swarm G < 0.01", g < 0.01, "G=" + fmt(g)});
    }
    const std::vector<double> single{1.0};
    rep.cases.push_back({"q=1: single entry gives 1", g_q(single, 1.0) == 1.0, ""});
    // G_1 <= 1 with equality iff all positive entries equal the maximum.
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Tally bound{"q=1: G <= 1, and < 1 unless all positive entries are equal"};
    for (int i = 0; i < opts.samples; ++i) {
        std::vector<double> a(2 + static_cast<std::size_t>(unit(rng) * 20), 0.0);
        for (auto& v : a) v = unit(rng);
        const double g = g_q(a, 1.0);
        bound.add(1.0 - g - 1e-15);
    }
    rep.cases.push_back(bound.result());
    const std::vector<double> pair{1.0, 1.0};
    rep.cases.push_back({"q=1: equal entries also give 1 (maximiser not unique)",
                         std::abs(g_q(pair, 1.0) - 1.0) <= 1e-15, "G(1,1)=" + fmt(g_q(pair, 1.0))});
    const double g2 = g_q(pair, 2.0);
    rep.cases.push_back({"q=2: G(1,1) < 1 (unique maximiser)", g2 < 1.0, "G=" + fmt(g2)});
    for (double q : {0.3, 0.5, 2.0 / 3.0}) {
        Tally t{"q=" + fmt(q) + ": G >= 1"};
        for (int i = 0; i < 200; ++i) {
            std::vector<double> a(1 + static_cast<std::size_t>(unit(rng) * 20), 0.0);
            for (auto& v : a) v = unit(rng);
            t.add(g_q(a, q) - 1.0 + 1e-12);
        }
        rep.cases.push_back(t.result());
    }
    return rep;
}

SuiteReport relaxed_suite(const VerifyOptions&) {
    SuiteReport rep{"relaxed-q1", {}};
    for (int d : {2, 3}) {
        for (double target : {0.5, 0.9, 0.99, 0.999}) {
            const RelaxedParams p = sup_demonstration(d, target);
            const double b = product_bound(p);
            rep.cases.push_back({"d=" + std::to_string(d) + " target " + fmt(target), b > target,
                                 "c=" + fmt(p.c) + " delta=" + fmt(p.delta) + " bound=" + fmt(b)});
        }
        const RelaxedParams big{d, 1e12, 0.1};
        const double lim = std::pow(0.9, 2 * d);
        const double gap = std::abs(product_bound(big) - lim);
        rep.cases.push_back({"d=" + std::to_string(d) + " large-c limit (1-delta)^{2d}", gap <= 1e-9, "gap=" + fmt(gap)});
        // Increasing in c once delta^-2 exceeds lambda(B_1).
        Tally inc{"d=" + std::to_string(d) + " bound increasing in c (delta < 1/j)"};
        Tally env{"d=" + std::to_string(d) + " bound <= 1 + lambda delta^2"};
        const double lam = ball_lambda_unit(d);
        for (double delta = 0.02; delta < 0.99; delta += 0.02) {
            double prev = -1.0;
            for (double c = 0.0; c <= 1e6; c = c == 0.0 ? 1e-3 : c * 10.0) {
                const double b = product_bound({d, c, delta});
                env.add(1.0 + lam * delta * delta - b);
                if (delta * delta * lam < 1.0) {
                    inc.add(b - prev);
                    prev = b;
                }
            }
        }
        rep.cases.push_back(inc.result());
        rep.cases.push_back(env.result());
    }
    return rep;
}

}  // namespace

SuiteReport run_suite(std::string_view name, const VerifyOptions& opts) {
    if (opts.grid < 32 || opts.grid > 2048) throw ValidationError("verify: grid must lie in [32, 2048]");
    if (opts.samples < 1) throw ValidationError("verify: samples >= 1");
    log_info("verify: suite " + std::string(name));
    if (name == "kohler-jobin") return inequality_suite("kohler-jobin", Check::kohler_jobin, opts);
    if (name == "polya-szego") return inequality_suite("polya-szego", Check::polya_szego, opts);
    if (name == "saint-venant") return inequality_suite("saint-venant", Check::saint_venant, opts);
    if (name == "faber-krahn") return inequality_suite("faber-krahn", Check::faber_krahn, opts);
    if (name == "theorem-2-2") return theorem_2_2(opts);
    if (name == "pconvthin") return pconvthin(opts);
    if (name == "g-q-regimes") return g_q_regimes(opts);
    if (name == "relaxed-q1") return relaxed_suite(opts);
    throw ValidationError("unknown suite \"" + std::string(name) + "\"");
}

}  // namespace shapelab
