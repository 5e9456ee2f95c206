#include "shapelab/raster.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "shapelab/errors.hpp"

namespace shapelab {

GridSpec raster_predicate(double width, double height, int per_unit,
                          const std::function<bool(double, double)>& inside) {
    if (per_unit < 1) throw ValidationError("raster: per_unit >= 1");
    if (!(width > 0.0) || !(height > 0.0)) throw ValidationError("raster: box must have positive size");
    const double h = 1.0 / per_unit;
    const int nx = std::max(1, static_cast<int>(std::lround(width * per_unit)));
    const int ny = std::max(1, static_cast<int>(std::lround(height * per_unit)));
    Mask m(ny + 2, nx + 2);
    for (int i = 0; i < ny; ++i) {
        for (int j = 0; j < nx; ++j) {
            if (inside((j + 0.5) * h, (i + 0.5) * h)) m.set(i + 1, j + 1);
        }
    }
    GridSpec g{std::move(m), h};
    validate(g);
    return g;
}

GridSpec raster_rect(double width, double height, int per_unit) {
    return raster_predicate(width, height, per_unit, [](double, double) { return true; });
}

GridSpec raster_disk(double radius, int per_unit) {
    const double r2 = radius * radius;
    return raster_predicate(2 * radius, 2 * radius, per_unit, [=](double x, double y) {
        const double dx = x - radius, dy = y - radius;
        return dx * dx + dy * dy < r2;
    });
}

GridSpec raster_lshape(double side, int per_unit) {
    const double half = side / 2;
    return raster_predicate(side, side, per_unit, [=](double x, double y) { return x < half || y < half; });
}

GridSpec raster_blob(std::uint64_t seed, double radius, int per_unit) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr int kModes = 5;
    double amp[kModes + 1] = {};
    double phase[kModes + 1] = {};
    double total = 0.0;
    for (int k = 2; k <= kModes; ++k) {
        amp[k] = unit(rng) * 0.35 / k;
        phase[k] = unit(rng) * 2 * std::numbers::pi;
        total += amp[k];
    }
    // Keep the radial function above 0.4 * radius.
    const double scale = total > 0.6 ? 0.6 / total : 1.0;
    const double rmax = radius * (1.0 + total * scale);
    auto r_of = [&](double theta) {
        double r = 1.0;
        for (int k = 2; k <= kModes; ++k) r += scale * amp[k] * std::cos(k * theta + phase[k]);
        return radius * r;
    };
    return raster_predicate(2 * rmax, 2 * rmax, per_unit, [&](double x, double y) {
        const double dx = x - rmax, dy = y - rmax;
        return std::hypot(dx, dy) < r_of(std::atan2(dy, dx));
    });
}

GridSpec raster_square_pair(double a, double b, int per_unit) {
    const double gap = a / 4;
    const double bottom_b = (a - b) / 2;
    return raster_predicate(a + gap + b, std::max(a, b), per_unit, [=](double x, double y) {
        if (x < a) return y < a;
        if (x > a + gap) return y > bottom_b && y < bottom_b + b;
        return false;
    });
}

GridSpec raster_disk_square(double r, double s, int per_unit) {
    const double gap = r / 2;
    const double height = std::max(2 * r, s);
    return raster_predicate(2 * r + gap + s, height, per_unit, [=](double x, double y) {
        const double dx = x - r, dy = y - height / 2;
        if (dx * dx + dy * dy < r * r) return true;
        return x > 2 * r + gap && std::abs(y - height / 2) < s / 2;
    });
}

GridSpec read_pbm(std::istream& in, double spacing) {
    // Tokenise while skipping '#' comments.
    std::string text, line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        text += line;
        text += '\n';
    }
    std::istringstream ss(text);
    std::string magic;
    int w = 0, h = 0;
    if (!(ss >> magic >> w >> h) || magic != "P1" || w < 1 || h < 1) {
        throw ValidationError("pbm: expected plain P1 header with positive size");
    }
    Mask m(h + 2, w + 2);
    int filled = 0;
    char c;
    while (filled < w * h && ss >> c) {
        if (c != '0' && c != '1') throw ValidationError("pbm: pixel values must be 0 or 1");
        if (c == '1') m.set(filled / w + 1, filled % w + 1);
        ++filled;
    }
    if (filled != w * h) throw ValidationError("pbm: truncated pixel data");
    GridSpec g{std::move(m), spacing};
    validate(g);
    return g;
}

void write_pbm(std::ostream& out, const Mask& mask) {
    // The empty outer ring is implicit in the format.
    out << "P1\n" << mask.cols() - 2 << ' ' << mask.rows() - 2 << '\n';
    for (int i = 1; i + 1 < mask.rows(); ++i) {
        for (int j = 1; j + 1 < mask.cols(); ++j) out << (mask(i, j) ? '1' : '0') << (j + 2 < mask.cols() ? " " : "");
        out << '\n';
    }
}

}  // namespace shapelab
