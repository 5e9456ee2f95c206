#include "shapelab/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "shapelab/cylinder_bounds.hpp"
#include "shapelab/diagram.hpp"
#include "shapelab/errors.hpp"
#include "shapelab/functional.hpp"
#include "shapelab/io.hpp"
#include "shapelab/log.hpp"
#include "shapelab/raster.hpp"
#include "shapelab/relaxed_q1.hpp"
#include "shapelab/spectrum.hpp"
#include "shapelab/svg.hpp"
#include "shapelab/thin_convex.hpp"
#include "shapelab/verify.hpp"

namespace shapelab {

using nlohmann::json;

void RunConfig::validate() const {
    if (grid_n < 32 || grid_n > 2048) throw ValidationError("--grid must lie in [32, 2048]");
    if (jobs < 1) throw ValidationError("--jobs must be >= 1");
    if (samples < 0) throw ValidationError("--samples must be >= 0");
    if (q && !(*q > 0.0)) throw ValidationError("--q must be > 0");
    switch (command) {
        case Command::eval:
            if (!domain) throw ValidationError("eval needs --domain");
            if (!q) throw ValidationError("eval needs --q");
            break;
        case Command::diagram:
            if (dim < 1 || dim > 3) throw ValidationError("diagram supports --dim 1, 2 or 3");
            break;
        case Command::thin:
            if (!domain || !std::holds_alternative<ThinSpec>(*domain)) {
                throw ValidationError("thin needs a --domain of kind \"thin\"");
            }
            break;
        case Command::relaxed:
            if (dim < 2 || dim > 8) throw ValidationError("relaxed needs 2 <= --dim <= 8");
            if (target && !(*target > 0.0 && *target < 1.0)) throw ValidationError("--target must lie in (0, 1)");
            break;
        case Command::sweep:
            if (family != "unions" && family != "blobs" && family != "rects") {
                throw ValidationError("--family must be unions, blobs or rects");
            }
            if (!q) throw ValidationError("sweep needs --q");
            break;
        case Command::verify:
            break;
    }
}

namespace {

// Writes to --out when given, otherwise to the command's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ValidationError("cannot write " + path);
        }
        out_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& operator*() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

std::string opt_fmt(const std::optional<double>& v) { return v ? fmt(*v) : ""; }

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
    const DomainSpec& spec = *cfg.domain;
    const int d = dimension(spec);
    Sink sink(cfg.out_path, out);
    if (const auto* cyl = std::get_if<CylinderSpec>(&spec)) {
        // Only bounds are available for cylinders.
        json j{{"schema", kSchemaVersion}, {"domain", "cylinder"}, {"upper_t1", upper_bound_t1(*cyl)}};
        if (cyl->cross_perimeter && d >= 2) j["lower_t2"] = lower_bound_t2(*cyl, d);
        if (cyl->cross_perimeter && cyl->smooth_radius && d >= 2) {
            const TorsionBracket b = two_sided_t3(*cyl, d);
            j["t3"] = {b.lower, b.upper};
        }
        if (cyl->cross_lambda) j["lambda"] = cylinder_lambda(*cyl);
        if (cfg.out_format == OutFormat::json) {
            *sink << j.dump(2) << '\n';
        } else {
            CsvWriter w(*sink, {"domain", "upper_t1", "lower_t2", "t3_lower", "t3_upper", "lambda"});
            w.row({"cylinder", fmt(j["upper_t1"].get<double>()),
                   j.contains("lower_t2") ? fmt(j["lower_t2"].get<double>()) : "",
                   j.contains("t3") ? fmt(j["t3"][0].get<double>()) : "",
                   j.contains("t3") ? fmt(j["t3"][1].get<double>()) : "",
                   j.contains("lambda") ? fmt(j["lambda"].get<double>()) : ""});
        }
        return 0;
    }
    SpectrumOptions opts;
    opts.richardson = cfg.richardson;
    const SpectralResult r = spectrum(spec, opts);
    const double q = *cfg.q;
    const FunctionalValue f = f_q(r, q, d);
    const DiagramPoint p = normalized_coords(r, d);
    if (cfg.out_format == OutFormat::json) {
        json j{{"schema", kSchemaVersion}, {"domain", std::string(kind_name(spec))}, {"dim", d},
               {"result", result_to_json(r)}, {"q", q}, {"F_q", f.value}, {"x", p.x}, {"y", p.y}};
        *sink << j.dump(2) << '\n';
    } else if (cfg.out_format == OutFormat::csv) {
        CsvWriter w(*sink, {"domain", "dim", "q", "lambda", "torsion", "measure", "provenance", "err_estimate", "F_q",
                            "x", "y"});
        w.row({std::string(kind_name(spec)), std::to_string(d), fmt(q), fmt(r.lambda()), fmt(r.torsion()),
               fmt(r.measure()), std::string(to_string(r.provenance())), opt_fmt(r.err_estimate()), fmt(f.value),
               fmt(p.x), fmt(p.y)});
    } else {
        throw ValidationError("eval writes csv or json");
    }
    return 0;
}

std::vector<DiagramPoint> curve(const std::vector<RegionSample>& s, bool upper) {
    std::vector<DiagramPoint> c;
    for (const auto& r : s) c.push_back({r.x, upper ? r.y_high : r.y_low});
    return c;
}

int cmd_diagram(const RunConfig& cfg, std::ostream& out) {
    const int d = cfg.dim;
    const int n_cloud = cfg.samples > 0 ? cfg.samples : 2000;
    std::vector<RegionSample> boundary;
    if (d == 1) {
        boundary = sample_region_1d(400, 1e-3).samples;
    } else {
        for (int i = 0; i < 400; ++i) {
            const double x = 1e-3 * std::pow(1e3, i / 399.0);
            const auto [hi, lo] = region_bounds_d(x, d);
            boundary.push_back({x, lo, hi});
        }
        for (int k = 1; k <= 40; ++k) {
            const double x = std::pow(static_cast<double>(k), -2.0 / d);
            const auto [hi, lo] = region_bounds_d(x, d);
            boundary.push_back({x, lo, hi});
        }
        std::sort(boundary.begin(), boundary.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
    }
    const auto cloud = ball_union_cloud(d, n_cloud, cfg.seed, cfg.jobs);

    std::vector<std::pair<std::string, DiagramPoint>> grid_points;
    if (cfg.overlay_grid && d == 2) {
        std::vector<NamedGrid> doms{{"lshape", raster_lshape(1.0, cfg.grid_n)}};
        for (int s = 1; s <= 6; ++s) {
            doms.push_back({"blob-" + std::to_string(s), raster_blob(cfg.seed * 100 + s, 0.35, cfg.grid_n)});
        }
        const auto res = solve_corpus(doms, cfg.jobs);
        for (std::size_t i = 0; i < doms.size(); ++i) grid_points.emplace_back(doms[i].name, normalized_coords(res[i], 2));
    }

    auto write_csv = [&](std::ostream& o) {
        CsvWriter w(o, {"x", "y", "y_low", "y_high", "kind"});
        for (const auto& b : boundary) w.row({fmt(b.x), fmt(b.y_high), fmt(b.y_low), fmt(b.y_high), "boundary"});
        auto bounds_at = [&](double x) { return d == 1 ? region_1d(x) : [&] {
            const auto [hi, lo] = region_bounds_d(x, d);
            return std::pair{lo, hi};
        }(); };
        for (const auto& c : cloud) {
            const auto [lo, hi] = bounds_at(c.point.x);
            w.row({fmt(c.point.x), fmt(c.point.y), fmt(lo), fmt(hi), d == 1 ? "intervals" : "balls"});
        }
        for (const auto& [name, p] : grid_points) {
            const auto [lo, hi] = bounds_at(p.x);
            w.row({fmt(p.x), fmt(p.y), fmt(lo), fmt(hi), "grid:" + name});
        }
    };
    auto write_svg = [&](std::ostream& o) {
        SvgPlot plot(d == 1 ? "Diagram d=1 (exact region)" : "Diagram d=" + std::to_string(d) + " (known bounds)");
        std::vector<DiagramPoint> region = curve(boundary, false);
        auto upper = curve(boundary, true);
        region.insert(region.end(), upper.rbegin(), upper.rend());
        plot.area(region, "#9ecae1");
        plot.polyline(curve(boundary, false), "#08519c");
        plot.polyline(curve(boundary, true), "#08519c");
        plot.legend(d == 1 ? "attainable region" : "ball unions (inner bound)", "#9ecae1");
        if (d >= 2) {
            std::vector<DiagramPoint> guide;
            for (int i = 0; i <= 200; ++i) guide.push_back({i / 200.0, upper_guide(std::max(i / 200.0, 1e-9), d)});
            plot.polyline(guide, "#636363", true);
            plot.legend("upper bound from lambda T < |Omega|", "#636363");
            plot.legend("Kohler-Jobin line y = x^{(d+2)/2}", "#08519c");
        }
        std::vector<DiagramPoint> pts;
        for (const auto& c : cloud) pts.push_back(c.point);
        plot.points(pts, "#de2d26", 1.2);
        plot.legend(d == 1 ? "random interval unions" : "random ball unions", "#de2d26");
        if (!grid_points.empty()) {
            std::vector<DiagramPoint> gp;
            for (const auto& g : grid_points) gp.push_back(g.second);
            plot.points(gp, "#31a354", 3.5);
            plot.legend("grid domains", "#31a354");
        }
        plot.write(o);
    };

    if (!cfg.out_path.empty() && cfg.out_format != OutFormat::svg && cfg.out_format != OutFormat::csv) {
        std::ofstream csv(cfg.out_path + ".csv"), svg(cfg.out_path + ".svg");
        if (!csv || !svg) throw ValidationError("cannot write " + cfg.out_path + ".{csv,svg}");
        write_csv(csv);
        write_svg(svg);
        return 0;
    }
    Sink sink(cfg.out_path, out);
    if (cfg.out_format == OutFormat::svg) {
        write_svg(*sink);
    } else {
        write_csv(*sink);
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    VerifyOptions opts;
    opts.grid = cfg.grid_n;
    opts.seed = cfg.seed;
    opts.jobs = cfg.jobs;
    if (cfg.samples > 0) opts.samples = cfg.samples;
    std::vector<std::string> suites;
    if (cfg.suite.empty() || cfg.suite == "all") {
        suites = suite_names();
    } else {
        suites = {cfg.suite};
    }
    std::vector<SuiteReport> reports;
    for (const auto& s : suites) reports.push_back(run_suite(s, opts));
    bool ok = true;
    Sink sink(cfg.out_path, out);
    if (cfg.out_format == OutFormat::json) {
        json j{{"schema", kSchemaVersion}, {"suites", json::array()}};
        for (const auto& r : reports) {
            json cases = json::array();
            for (const auto& c : r.cases) cases.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            j["suites"].push_back({{"suite", r.suite}, {"passed", r.all_passed()}, {"cases", cases}});
            ok = ok && r.all_passed();
        }
        *sink << j.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            for (const auto& c : r.cases) {
                *sink << (c.passed ? "PASS " : "FAIL ") << r.suite << ": " << c.name;
                if (!c.detail.empty()) *sink << " (" << c.detail << ")";
                *sink << '\n';
            }
            ok = ok && r.all_passed();
        }
    }
    return ok ? 0 : 1;
}

int cmd_thin(const RunConfig& cfg, std::ostream& out) {
    const auto& spec = std::get<ThinSpec>(*cfg.domain);
    const ThinAsymptotics a = thin_asymptotics(spec.profile, spec.eps);
    const int d = spec.profile.base().dim() + 1;
    const double ratio = ratio_h3_h1(spec.profile);
    Sink sink(cfg.out_path, out);
    if (cfg.out_format == OutFormat::csv) {
        // The radial rearrangement as a profile table.
        write_profile_csv(*sink, radial_rearrangement(spec.profile));
        return 0;
    }
    json j{{"schema", kSchemaVersion}, {"dim", d},           {"eps", spec.eps},
           {"lambda", a.lambda},       {"torsion", a.torsion}, {"F_1", a.f1},
           {"ratio_h3_h1", ratio},     {"cone_ratio", cone_ratio(d)}, {"concavity_defect", spec.profile.concavity_defect()}};
    *sink << j.dump(2) << '\n';
    return 0;
}

int cmd_relaxed(const RunConfig& cfg, std::ostream& out) {
    Sink sink(cfg.out_path, out);
    std::vector<RelaxedParams> rows;
    for (double delta : {0.5, 0.2, 0.1, 0.05, 0.02, 0.01}) rows.push_back({cfg.dim, std::pow(delta, -4.0), delta});
    if (cfg.target) rows.push_back(sup_demonstration(cfg.dim, *cfg.target));
    if (cfg.out_format == OutFormat::json) {
        json j{{"schema", kSchemaVersion}, {"dim", cfg.dim}, {"rows", json::array()}};
        for (const auto& p : rows) {
            j["rows"].push_back({{"c", p.c}, {"delta", p.delta}, {"product_bound", product_bound(p)}});
        }
        *sink << j.dump(2) << '\n';
        return 0;
    }
    CsvWriter w(*sink, {"c", "delta", "product_bound"});
    for (const auto& p : rows) w.row({fmt(p.c), fmt(p.delta), fmt(product_bound(p))});
    return 0;
}

DomainSpec sweep_domain(const std::string& family, std::uint64_t seed, int i, int grid_n) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(i)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (family == "blobs") return raster_blob(rng(), 0.3, grid_n);
    if (family == "rects") return RectSpec{{1.0, 0.02 + 0.98 * unit(rng)}};
    std::vector<double> r{1.0};
    const int k = static_cast<int>(unit(rng) * 12.0);
    for (int j = 0; j < k; ++j) r.push_back(unit(rng));
    return BallUnionSpec{2, std::move(r)};
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const int n = cfg.samples > 0 ? cfg.samples : 32;
    const double q = *cfg.q;
    struct Row {
        std::string kind;
        std::optional<SpectralResult> r;
    };
    std::vector<Row> rows(static_cast<std::size_t>(n));
    parallel_for(n, cfg.jobs, [&](int i) {
        const DomainSpec spec = sweep_domain(cfg.family, cfg.seed, i, cfg.grid_n);
        SpectrumOptions opts;
        opts.richardson = cfg.richardson;
        rows[static_cast<std::size_t>(i)] = {std::string(kind_name(spec)), spectrum(spec, opts)};
    });
    Sink sink(cfg.out_path, out);
    CsvWriter w(*sink, {"index", "kind", "lambda", "torsion", "measure", "F_q", "F_q_over_ball", "x", "y"});
    const double ball = f_q_ball(q, 2);
    for (int i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        const double f = f_q(*row.r, q, 2).value;
        const DiagramPoint p = normalized_coords(*row.r, 2);
        w.row({std::to_string(i), row.kind, fmt(row.r->lambda()), fmt(row.r->torsion()), fmt(row.r->measure()), fmt(f),
               fmt(f / ball), fmt(p.x), fmt(p.y)});
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral shape functionals: lambda, torsion, F_q and the (x, y) diagram"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string domain_arg, format = "json";
    std::optional<double> q, target;

    auto common = [&](CLI::App* sub, bool domain) {
        if (domain) sub->add_option("--domain", domain_arg, "Domain as inline JSON, .json file or .pbm file");
        sub->add_option("--grid", cfg.grid_n, "Cells per unit length for raster domains [32, 2048]");
        sub->add_option("--seed", cfg.seed, "Random seed");
        sub->add_option("--out", cfg.out_path, "Output path (default: stdout)");
        sub->add_option("--format", format, "csv | json | svg")->check(CLI::IsMember({"csv", "json", "svg"}));
        sub->add_option("--jobs", cfg.jobs, "Worker threads");
    };
    auto* eval = app.add_subcommand("eval", "lambda, T, F_q and (x, y) of one domain");
    common(eval, true);
    eval->add_option("--q", q, "Exponent q > 0");
    eval->add_flag("--richardson", cfg.richardson, "Grid domains: add a half-spacing solve for err_estimate");

    auto* diagram = app.add_subcommand("diagram", "Diagram region, bounds and a random ball-union cloud");
    common(diagram, false);
    diagram->add_option("--dim", cfg.dim, "Dimension 1, 2 or 3");
    diagram->add_option("--samples", cfg.samples, "Cloud size (default 2000)");
    diagram->add_flag("--overlay-grid-domains", cfg.overlay_grid, "d = 2: add grid-solved L-shape and blobs");

    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    common(verify, false);
    verify->add_option("--suite", cfg.suite, "Suite name, or all");
    verify->add_option("--samples", cfg.samples, "Random cases per family (default 1000)");

    auto* thin = app.add_subcommand("thin", "Thin-domain asymptotics of a thin domain");
    common(thin, true);

    auto* relaxed = app.add_subcommand("relaxed", "(c, delta, product bound) table for the relaxed ball");
    common(relaxed, false);
    relaxed->add_option("--dim", cfg.dim, "Dimension d >= 2");
    relaxed->add_option("--target", target, "Also search parameters beating this bound");

    auto* sweep = app.add_subcommand("sweep", "F_q over a random family of domains");
    common(sweep, false);
    sweep->add_option("--q", q, "Exponent q > 0");
    sweep->add_option("--samples", cfg.samples, "Number of domains (default 32)");
    sweep->add_option("--family", cfg.family, "unions | blobs | rects");
    sweep->add_flag("--richardson", cfg.richardson, "Add a half-spacing solve for grid domains");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    const std::map<CLI::App*, Command> commands{{eval, Command::eval},       {diagram, Command::diagram},
                                                {verify, Command::verify},   {thin, Command::thin},
                                                {relaxed, Command::relaxed}, {sweep, Command::sweep}};
    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = commands.at(chosen);
    const bool format_given = chosen->count("--format") > 0;
    if (!format_given) {
        format = (cfg.command == Command::relaxed || cfg.command == Command::sweep)
                     ? "csv"
                     : (cfg.command == Command::diagram ? "" : "json");
    }
    cfg.out_format = format == "csv" ? OutFormat::csv : format == "svg" ? OutFormat::svg : OutFormat::json;
    if (cfg.command == Command::verify && !format_given) cfg.out_format = OutFormat::csv;  // plain PASS/FAIL lines
    cfg.q = q;
    cfg.target = target;

    try {
        if (!domain_arg.empty()) cfg.domain = load_domain(domain_arg, cfg.grid_n);
        cfg.validate();
        switch (cfg.command) {
            case Command::eval: return cmd_eval(cfg, out);
            case Command::diagram: {
                // No explicit format with --out: both files.
                RunConfig c = cfg;
                if (!format_given) c.out_format = c.out_path.empty() ? OutFormat::csv : OutFormat::json;
                return cmd_diagram(c, out);
            }
            case Command::verify: return cmd_verify(cfg, out);
            case Command::thin: return cmd_thin(cfg, out);
            case Command::relaxed: return cmd_relaxed(cfg, out);
            case Command::sweep: return cmd_sweep(cfg, out);
        }
    } catch (const NumericalError& e) {
        log_error(e.what());
        err << "numerical error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace shapelab
