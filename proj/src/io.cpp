#include "shapelab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "shapelab/errors.hpp"
#include "shapelab/raster.hpp"
#include "shapelab/thin_convex.hpp"

namespace shapelab {

using nlohmann::json;

namespace {

template <class T>
T get(const json& j, const char* key) {
    if (!j.contains(key)) throw ValidationError(std::string("domain json: missing \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ValidationError(std::string("domain json: bad value for \"") + key + "\"");
    }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    return j.contains(key) ? get<T>(j, key) : fallback;
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return get<T>(j, key);
}

Point2 point_of(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ValidationError("domain json: point must be [x, y]");
    return {j[0].get<double>(), j[1].get<double>()};
}

ConvexBase base_from_json(const json& j) {
    if (j.contains("interval")) {
        const auto v = get<std::vector<double>>(j, "interval");
        if (v.size() != 2) throw ValidationError("domain json: interval must be [lo, hi]");
        return ConvexBase::interval(v[0], v[1]);
    }
    if (j.contains("polygon")) {
        std::vector<Point2> pts;
        for (const auto& p : j.at("polygon")) pts.push_back(point_of(p));
        return ConvexBase::polygon(std::move(pts));
    }
    if (j.contains("disk")) {
        const auto& d = j.at("disk");
        return ConvexBase::disk(point_of(d.at("center")), get<double>(d, "radius"));
    }
    throw ValidationError("domain json: base needs \"interval\", \"polygon\" or \"disk\"");
}

json base_to_json(const ConvexBase& b) {
    switch (b.kind()) {
        case ConvexBase::Kind::interval:
            return {{"interval", {b.lo(), b.hi()}}};
        case ConvexBase::Kind::disk:
            return {{"disk", {{"center", {b.center().x, b.center().y}}, {"radius", b.radius()}}}};
        case ConvexBase::Kind::polygon: {
            json pts = json::array();
            for (const auto& v : b.vertices()) pts.push_back({v.x, v.y});
            return {{"polygon", pts}};
        }
    }
    return {};
}

GridSpec grid_from_json(const json& j, int per_unit) {
    if (j.contains("shape")) {
        const auto shape = get<std::string>(j, "shape");
        const int res = get_or<int>(j, "per_unit", per_unit);
        if (shape == "square") return raster_rect(get<double>(j, "side"), get<double>(j, "side"), res);
        if (shape == "rect") return raster_rect(get<double>(j, "width"), get<double>(j, "height"), res);
        if (shape == "disk") return raster_disk(get<double>(j, "radius"), res);
        if (shape == "lshape") return raster_lshape(get<double>(j, "side"), res);
        if (shape == "blob") return raster_blob(get<std::uint64_t>(j, "seed"), get_or<double>(j, "radius", 0.35), res);
        if (shape == "square_pair") return raster_square_pair(get<double>(j, "a"), get<double>(j, "b"), res);
        if (shape == "disk_square") return raster_disk_square(get<double>(j, "radius"), get<double>(j, "side"), res);
        throw ValidationError("domain json: unknown grid shape \"" + shape + "\"");
    }
    const int rows = get<int>(j, "rows"), cols = get<int>(j, "cols");
    if (rows < 1 || cols < 1) throw ValidationError("domain json: rows, cols >= 1");
    const auto rle = get<std::vector<std::vector<int>>>(j, "rle");
    if (static_cast<int>(rle.size()) != rows) throw ValidationError("domain json: rle needs one entry per row");
    GridSpec g{Mask(rows, cols), get<double>(j, "spacing")};
    for (int i = 0; i < rows; ++i) {
        int col = 0;
        bool filled = false;
        for (int run : rle[i]) {
            if (run < 0 || col + run > cols) throw ValidationError("domain json: rle row overflows cols");
            for (int k = 0; k < run; ++k) g.mask.set(i, col + k, filled);
            col += run;
            filled = !filled;
        }
        if (col != cols) throw ValidationError("domain json: rle row does not cover cols");
    }
    return g;
}

json grid_to_json(const GridSpec& g) {
    json rle = json::array();
    for (int i = 0; i < g.mask.rows(); ++i) {
        json runs = json::array();
        bool filled = false;
        int j = 0;
        while (j < g.mask.cols()) {
            int k = j;
            while (k < g.mask.cols() && g.mask(i, k) == filled) ++k;
            runs.push_back(k - j);
            j = k;
            filled = !filled;
        }
        rle.push_back(runs);
    }
    return {{"kind", "grid"}, {"rows", g.mask.rows()}, {"cols", g.mask.cols()}, {"spacing", g.spacing}, {"rle", rle}};
}

ThinSpec thin_from_json(const json& j) {
    const ConvexBase base = base_from_json(get<json>(j, "base"));
    const int n = get_or<int>(j, "n", 256);
    const json prof = get<json>(j, "profile");
    ConcaveProfile p;
    if (prof.is_string() && prof.get<std::string>() == "constant") {
        p = ConcaveProfile::sample(base, n, [](double, double) { return 1.0; });
    } else if (prof.is_object() && prof.contains("cone")) {
        p = cone_function(base, point_of(prof.at("cone")), n);
    } else if (prof.is_object() && prof.contains("values")) {
        const auto v = get<std::vector<double>>(prof, "values");
        p = ConcaveProfile(base, n);
        std::size_t used = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (!p.inside(k)) continue;
            if (used >= v.size()) throw ValidationError("domain json: too few profile values");
            p.set_value(k, v[used++]);
        }
        if (used != v.size()) throw ValidationError("domain json: too many profile values");
    } else {
        throw ValidationError("domain json: profile must be \"constant\", {\"cone\": [x, y]} or {\"values\": [...]}");
    }
    return ThinSpec{std::move(p), get<double>(j, "eps")};
}

}  // namespace

DomainSpec domain_from_json(const json& j, int per_unit) {
    if (!j.is_object()) throw ValidationError("domain json: expected an object");
    const auto kind = get<std::string>(j, "kind");
    DomainSpec spec;
    if (kind == "ball") {
        spec = BallSpec{get_or<int>(j, "dim", 2), get_or<double>(j, "radius", 1.0)};
    } else if (kind == "rect") {
        spec = RectSpec{get<std::vector<double>>(j, "sides")};
    } else if (kind == "intervals") {
        spec = IntervalUnionSpec{get<std::vector<double>>(j, "lengths")};
    } else if (kind == "balls") {
        spec = BallUnionSpec{get_or<int>(j, "dim", 2), get<std::vector<double>>(j, "radii")};
    } else if (kind == "cylinder") {
        CylinderSpec c;
        c.cross_measure = get<double>(j, "cross_measure");
        c.cross_perimeter = get_opt<double>(j, "cross_perimeter");
        c.smooth_radius = get_opt<double>(j, "smooth_radius");
        c.height = get<double>(j, "height");
        c.dim = get_or<int>(j, "dim", 2);
        c.cross_lambda = get_opt<double>(j, "cross_lambda");
        spec = c;
    } else if (kind == "grid") {
        spec = grid_from_json(j, per_unit);
    } else if (kind == "thin") {
        spec = thin_from_json(j);
    } else {
        throw ValidationError("domain json: unknown kind \"" + kind + "\"");
    }
    validate(spec);
    return spec;
}

json domain_to_json(const DomainSpec& spec) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, BallSpec>) {
                return {{"kind", "ball"}, {"dim", s.dim}, {"radius", s.radius}};
            } else if constexpr (std::is_same_v<T, RectSpec>) {
                return {{"kind", "rect"}, {"sides", s.sides}};
            } else if constexpr (std::is_same_v<T, IntervalUnionSpec>) {
                return {{"kind", "intervals"}, {"lengths", s.lengths}};
            } else if constexpr (std::is_same_v<T, BallUnionSpec>) {
                return {{"kind", "balls"}, {"dim", s.dim}, {"radii", s.radii}};
            } else if constexpr (std::is_same_v<T, CylinderSpec>) {
                json j{{"kind", "cylinder"}, {"cross_measure", s.cross_measure}, {"height", s.height}, {"dim", s.dim}};
                if (s.cross_perimeter) j["cross_perimeter"] = *s.cross_perimeter;
                if (s.smooth_radius) j["smooth_radius"] = *s.smooth_radius;
                if (s.cross_lambda) j["cross_lambda"] = *s.cross_lambda;
                return j;
            } else if constexpr (std::is_same_v<T, GridSpec>) {
                return grid_to_json(s);
            } else {
                std::vector<double> values;
                for (std::size_t k = 0; k < s.profile.size(); ++k) {
                    if (s.profile.inside(k)) values.push_back(s.profile.value(k));
                }
                return {{"kind", "thin"},
                        {"eps", s.eps},
                        {"n", s.profile.n()},
                        {"base", base_to_json(s.profile.base())},
                        {"profile", {{"values", values}}}};
            }
        },
        spec);
}

DomainSpec load_domain(const std::string& arg, int per_unit) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && arg[first] == '{') {
        json j;
        try {
            j = json::parse(arg);
        } catch (const json::parse_error& e) {
            throw ValidationError(std::string("domain json: ") + e.what());
        }
        return domain_from_json(j, per_unit);
    }
    std::ifstream in(arg);
    if (!in) throw ValidationError("cannot open domain file " + arg);
    if (arg.size() >= 4 && arg.compare(arg.size() - 4, 4, ".pbm") == 0) {
        GridSpec g = read_pbm(in, 1.0 / per_unit);
        validate(g);
        return g;
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("domain json: ") + e.what());
    }
    return domain_from_json(j, per_unit);
}

json result_to_json(const SpectralResult& r) {
    json j{{"schema", kSchemaVersion},
           {"lambda", r.lambda()},
           {"torsion", r.torsion()},
           {"measure", r.measure()},
           {"provenance", std::string(to_string(r.provenance()))}};
    j["err_estimate"] = r.err_estimate() ? json(*r.err_estimate()) : json(nullptr);
    return j;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> columns) : out_(out), width_(columns.size()) {
    out_ << "# schema=" << kSchemaVersion << '\n';
    row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw ValidationError("csv: row width does not match header");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out_ << ',';
        out_ << cells[i];
    }
    out_ << '\n';
}

std::vector<std::vector<std::string>> read_csv(std::istream& in, std::vector<std::string>* header) {
    std::string line;
    if (!std::getline(in, line) || line != "# schema=" + std::to_string(kSchemaVersion)) {
        throw ValidationError("csv: expected \"# schema=1\" on the first line");
    }
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) out.push_back(cell);
        return out;
    };
    if (!std::getline(in, line)) throw ValidationError("csv: missing header");
    if (header) *header = split(line);
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') rows.push_back(split(line));
    }
    return rows;
}

void write_field_csv(std::ostream& out, const GridField& f) {
    CsvWriter w(out, {"i", "j", "value"});
    for (int i = 0; i < f.rows; ++i) {
        for (int j = 0; j < f.cols; ++j) {
            if (f(i, j) != 0.0) w.row({std::to_string(i), std::to_string(j), fmt(f(i, j))});
        }
    }
}

void write_profile_csv(std::ostream& out, const ConcaveProfile& p) {
    const bool planar = p.base().dim() == 2;
    CsvWriter w(out, planar ? std::vector<std::string>{"x", "y", "h"} : std::vector<std::string>{"x", "h"});
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (!p.inside(k)) continue;
        const Point2 c = p.cell_center(k);
        if (planar) {
            w.row({fmt(c.x), fmt(c.y), fmt(p.value(k))});
        } else {
            w.row({fmt(c.x), fmt(p.value(k))});
        }
    }
}

ConcaveProfile read_profile_csv(std::istream& in, const ConvexBase& base, int n) {
    ConcaveProfile p(base, n);
    double xmin, ymin, xmax, ymax;
    base.bounds(xmin, ymin, xmax, ymax);
    const bool planar = base.dim() == 2;
    std::vector<char> seen(p.size(), 0);
    for (const auto& row : read_csv(in)) {
        if (row.size() != (planar ? 3u : 2u)) throw ValidationError("profile csv: wrong number of columns");
        try {
            const double x = std::stod(row[0]);
            const double y = planar ? std::stod(row[1]) : 0.0;
            const double h = std::stod(row.back());
            const auto j = static_cast<long>(std::floor((x - xmin) / p.cell_width()));
            const auto i = planar ? static_cast<long>(std::floor((y - ymin) / p.cell_height())) : 0L;
            if (j < 0 || j >= n || i < 0 || i >= (planar ? n : 1)) throw ValidationError("profile csv: sample outside base");
            const auto k = static_cast<std::size_t>(i * n + j);
            if (!p.inside(k)) throw ValidationError("profile csv: sample outside base");
            p.set_value(k, h);
            seen[k] = 1;
        } catch (const std::invalid_argument&) {
            throw ValidationError("profile csv: non-numeric cell");
        }
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p.inside(k) && !seen[k]) throw ValidationError("profile csv: missing samples");
    }
    return p;
}

}  // namespace shapelab
