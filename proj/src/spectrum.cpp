#include "shapelab/spectrum.hpp"

#include "shapelab/errors.hpp"
#include "shapelab/thin_convex.hpp"

namespace shapelab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

SpectralResult spectrum(const DomainSpec& spec, const SpectrumOptions& opts) {
    validate(spec);
    return std::visit(
        overloaded{
            [](const BallSpec& s) { return ball_spectrum(s); },
            [&](const RectSpec& s) { return rect_spectrum(s, opts.series_terms); },
            [](const IntervalUnionSpec& s) { return union_spectrum(s); },
            [](const BallUnionSpec& s) { return union_spectrum(s); },
            [](const CylinderSpec&) -> SpectralResult {
                throw UnsupportedError("spectrum: cylinders only carry torsion bounds");
            },
            [&](const GridSpec& s) { return spectrum_of_grid(s, opts.solve, opts.richardson); },
            [](const ThinSpec& s) {
                const ThinAsymptotics a = thin_asymptotics(s.profile, s.eps);
                return SpectralResult(a.lambda, a.torsion, s.eps * s.profile.integral(), Provenance::asymptotic);
            },
        },
        spec);
}

}  // namespace shapelab
