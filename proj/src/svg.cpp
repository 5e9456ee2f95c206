#include "shapelab/svg.hpp"

#include <cstdio>
#include <ostream>

namespace shapelab {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 56.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double px(double x) { return kMargin + x * kSize; }
double py(double y) { return kMargin + (1.0 - y) * kSize; }

std::string coords(const std::vector<DiagramPoint>& pts) {
    std::string s;
    for (const auto& p : pts) {
        if (!s.empty()) s += ' ';
        s += num(px(p.x)) + ',' + num(py(p.y));
    }
    return s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgPlot::polyline(const std::vector<DiagramPoint>& pts, const std::string& color, bool dashed) {
    body_.push_back("<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"" +
                    (dashed ? " stroke-dasharray=\"6,4\"" : "") + " points=\"" + coords(pts) + "\"/>");
}

void SvgPlot::area(const std::vector<DiagramPoint>& pts, const std::string& fill, double opacity) {
    body_.push_back("<polygon fill=\"" + fill + "\" fill-opacity=\"" + num(opacity) + "\" stroke=\"none\" points=\"" +
                    coords(pts) + "\"/>");
}

void SvgPlot::points(const std::vector<DiagramPoint>& pts, const std::string& color, double radius) {
    std::string g = "<g fill=\"" + color + "\">";
    for (const auto& p : pts) {
        g += "<circle cx=\"" + num(px(p.x)) + "\" cy=\"" + num(py(p.y)) + "\" r=\"" + num(radius) + "\"/>";
    }
    body_.push_back(g + "</g>");
}

void SvgPlot::legend(const std::string& label, const std::string& color) { legend_.emplace_back(label, color); }

void SvgPlot::write(std::ostream& out) const {
    const double w = kSize + 2 * kMargin;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(w)
        << "\" viewBox=\"0 0 " << num(w) << ' ' << num(w) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << num(w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << escape(title_)
        << "</text>\n";
    // Frame and ticks.
    out << "<rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\"" << num(kSize) << "\" height=\""
        << num(kSize) << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double t = k / 4.0;
        out << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(py(0)) << "\" x2=\"" << num(px(t)) << "\" y2=\""
            << num(py(0) + 5) << "\" stroke=\"black\"/>";
        out << "<text x=\"" << num(px(t)) << "\" y=\"" << num(py(0) + 18) << "\" text-anchor=\"middle\">" << num(t)
            << "</text>\n";
        out << "<line x1=\"" << num(px(0) - 5) << "\" y1=\"" << num(py(t)) << "\" x2=\"" << num(px(0)) << "\" y2=\""
            << num(py(t)) << "\" stroke=\"black\"/>";
        out << "<text x=\"" << num(px(0) - 8) << "\" y=\"" << num(py(t) + 4) << "\" text-anchor=\"end\">" << num(t)
            << "</text>\n";
    }
    out << "<text x=\"" << num(w / 2) << "\" y=\"" << num(w - 12) << "\" text-anchor=\"middle\">" << escape(x_label_)
        << "</text>\n";
    out << "<text x=\"16\" y=\"" << num(w / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << num(w / 2)
        << ")\">" << escape(y_label_) << "</text>\n";
    out << "<clipPath id=\"plot\"><rect x=\"" << num(kMargin) << "\" y=\"" << num(kMargin) << "\" width=\""
        << num(kSize) << "\" height=\"" << num(kSize) << "\"/></clipPath>\n";
    out << "<g clip-path=\"url(#plot)\">\n";
    for (const auto& e : body_) out << e << '\n';
    out << "</g>\n";
    for (std::size_t i = 0; i < legend_.size(); ++i) {
        const double y = kMargin + 16 + 16.0 * static_cast<double>(i);
        out << "<rect x=\"" << num(kMargin + 10) << "\" y=\"" << num(y - 9) << "\" width=\"10\" height=\"10\" fill=\""
            << legend_[i].second << "\"/><text x=\"" << num(kMargin + 26) << "\" y=\"" << num(y) << "\">"
            << escape(legend_[i].first) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace shapelab
