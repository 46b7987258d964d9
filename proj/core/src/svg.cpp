#include "pcab/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pcab {

namespace {

constexpr double kView = 800.0;
constexpr double kMargin = 80.0; // 10% of the viewport per side
constexpr double kHalf = kView / 2.0;
constexpr double kSpan = kHalf - kMargin; // data units map onto +-kSpan px

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

double layer_extent(const double* mins, const double* maxs) {
    double e = 0.0;
    for (int axis = 0; axis < 2; ++axis)
        e = std::max({e, std::abs(mins[axis]), std::abs(maxs[axis])});
    return e == 0.0 ? 1.0 : e;
}

void arrow(std::ostringstream& os, double x, double y) {
    const double len = std::hypot(x - kHalf, y - kHalf);
    if (len < 1e-9) return;
    const double ux = (x - kHalf) / len, uy = (y - kHalf) / len;
    const double head = 10.0, width = 4.0;
    const double bx = x - ux * head, by = y - uy * head;
    os << "<polygon fill=\"#555555\" points=\"" << px(x) << ',' << px(y) << ' '
       << px(bx - uy * width) << ',' << px(by + ux * width) << ' '
       << px(bx + uy * width) << ',' << px(by - ux * width) << "\"/>\n";
}

} // namespace

std::string render_svg_string(const BiplotCoordinates& coords,
                              const FeatureGeometry& geometry) {
    if (coords.retained_components != 2)
        throw std::invalid_argument("SVG rendering requires exactly 2 components");
    if (geometry.vector_lengths.size() != coords.features.rows())
        throw std::invalid_argument("geometry does not match feature coordinates");

    const AxisCalibration cal = scale_calibration(coords);
    const double obs_extent = layer_extent(cal.observation_min, cal.observation_max);
    const double feat_extent = layer_extent(cal.feature_min, cal.feature_max);

    auto obs_x = [&](double v) { return kHalf + v / obs_extent * kSpan; };
    auto obs_y = [&](double v) { return kHalf - v / obs_extent * kSpan; };
    auto feat_x = [&](double v) { return kHalf + v / feat_extent * kSpan; };
    auto feat_y = [&](double v) { return kHalf - v / feat_extent * kSpan; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
          "width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
    os << "<rect x=\"" << px(kMargin) << "\" y=\"" << px(kMargin) << "\" width=\""
       << px(kView - 2 * kMargin) << "\" height=\"" << px(kView - 2 * kMargin)
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    // Zero lines.
    os << "<line x1=\"" << px(kMargin) << "\" y1=\"" << px(kHalf) << "\" x2=\""
       << px(kView - kMargin) << "\" y2=\"" << px(kHalf)
       << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 4\"/>\n";
    os << "<line x1=\"" << px(kHalf) << "\" y1=\"" << px(kMargin) << "\" x2=\""
       << px(kHalf) << "\" y2=\"" << px(kView - kMargin)
       << "\" stroke=\"#cccccc\" stroke-dasharray=\"4 4\"/>\n";

    // Observation scale on bottom/left, feature scale on top/right (grey).
    for (int t = -2; t <= 2; ++t) {
        const double frac = static_cast<double>(t) / 2.0;
        const double p = kHalf + frac * kSpan;
        os << "<text x=\"" << px(p) << "\" y=\"" << px(kView - kMargin + 24)
           << "\" font-size=\"14\" text-anchor=\"middle\">"
           << tick(frac * obs_extent) << "</text>\n";
        os << "<text x=\"" << px(kMargin - 10) << "\" y=\"" << px(kHalf - frac * kSpan + 5)
           << "\" font-size=\"14\" text-anchor=\"end\">" << tick(frac * obs_extent)
           << "</text>\n";
        os << "<text x=\"" << px(p) << "\" y=\"" << px(kMargin - 12)
           << "\" font-size=\"14\" text-anchor=\"middle\" fill=\"#888888\">"
           << tick(frac * feat_extent) << "</text>\n";
        os << "<text x=\"" << px(kView - kMargin + 10) << "\" y=\""
           << px(kHalf - frac * kSpan + 5)
           << "\" font-size=\"14\" text-anchor=\"start\" fill=\"#888888\">"
           << tick(frac * feat_extent) << "</text>\n";
    }

    // Feature arrows underneath the points.
    for (std::size_t j = 0; j < coords.features.rows(); ++j) {
        const double x = feat_x(coords.features(j, 0));
        const double y = feat_y(coords.features(j, 1));
        os << "<line x1=\"" << px(kHalf) << "\" y1=\"" << px(kHalf) << "\" x2=\""
           << px(x) << "\" y2=\"" << px(y) << "\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n";
        arrow(os, x, y);
        const std::string label = j < coords.feature_labels.size()
                                      ? coords.feature_labels[j]
                                      : "feat" + std::to_string(j + 1);
        os << "<text x=\"" << px(x + 8) << "\" y=\"" << px(y - 6)
           << "\" font-size=\"15\" fill=\"#555555\">" << escape(label) << "</text>\n";
    }

    for (std::size_t i = 0; i < coords.observations.rows(); ++i) {
        const double x = obs_x(coords.observations(i, 0));
        const double y = obs_y(coords.observations(i, 1));
        os << "<circle cx=\"" << px(x) << "\" cy=\"" << px(y) << "\" r=\"4\" fill=\"black\"/>\n";
        const std::string label = i < coords.observation_labels.size()
                                      ? coords.observation_labels[i]
                                      : "obs" + std::to_string(i + 1);
        os << "<text x=\"" << px(x + 7) << "\" y=\"" << px(y + 5)
           << "\" font-size=\"15\">" << escape(label) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

void render_svg(const BiplotCoordinates& coords, const FeatureGeometry& geometry,
                const std::string& path) {
    const std::string content = render_svg_string(coords, geometry);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
    if (!out) throw std::invalid_argument("write failed: " + path);
}

} // namespace pcab
