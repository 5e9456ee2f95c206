#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shapelab/functional.hpp"

namespace shapelab {

/// Self-contained SVG plot with both axes fixed to [0, 1]. Elements are
/// drawn in insertion order.
class SvgPlot {
public:
    explicit SvgPlot(std::string title, std::string x_label = "x", std::string y_label = "y");

    void polyline(const std::vector<DiagramPoint>& pts, const std::string& color, bool dashed = false);
    /// Closed filled polygon.
    void area(const std::vector<DiagramPoint>& pts, const std::string& fill, double opacity = 0.35);
    void points(const std::vector<DiagramPoint>& pts, const std::string& color, double radius = 1.5);
    void legend(const std::string& label, const std::string& color);

    void write(std::ostream& out) const;

private:
    std::string title_, x_label_, y_label_;
    std::vector<std::string> body_;
    std::vector<std::pair<std::string, std::string>> legend_;
};

}  // namespace shapelab
