#include "hurstlab/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "hurstlab/cli/csv_io.hpp"
#include "hurstlab/error.hpp"

namespace hurstlab::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v, bool log_axis) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", log_axis ? std::pow(10.0, v) : v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void finish() {
        if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
        if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
    }
};

}  // namespace

std::string render_svg(const std::vector<PlotCurve>& curves, const PlotAxes& axes) {
    auto tx = [&](double v) { return axes.log_x ? std::log10(v) : v; };
    auto ty = [&](double v) { return axes.log_y ? std::log10(v) : v; };
    auto usable = [&](double x, double y) {
        return std::isfinite(x) && std::isfinite(y) && (!axes.log_x || x > 0) && (!axes.log_y || y > 0);
    };

    Range rx, ry;
    for (const auto& c : curves) {
        for (std::size_t i = 0; i < c.x.size() && i < c.y.size(); ++i) {
            if (!usable(c.x[i], c.y[i])) continue;
            rx.add(tx(c.x[i]));
            ry.add(ty(c.y[i]));
        }
    }
    rx.finish();
    ry.finish();

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double v) { return kLeft + (v - rx.lo) / (rx.hi - rx.lo) * pw; };
    auto py = [&](double v) { return kTop + ph - (v - ry.lo) / (ry.hi - ry.lo) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << fmt(kWidth / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
        << escape(axes.title) << "</text>\n";
    svg << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(pw)
        << "\" height=\"" << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

    constexpr int kTicks = 5;
    for (int i = 0; i <= kTicks; ++i) {
        const double vx = rx.lo + (rx.hi - rx.lo) * i / kTicks;
        const double vy = ry.lo + (ry.hi - ry.lo) * i / kTicks;
        svg << "<line x1=\"" << fmt(px(vx)) << "\" y1=\"" << fmt(kTop + ph) << "\" x2=\"" << fmt(px(vx))
            << "\" y2=\"" << fmt(kTop + ph + 5) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(px(vx)) << "\" y=\"" << fmt(kTop + ph + 18)
            << "\" text-anchor=\"middle\">" << tick_label(vx, axes.log_x) << "</text>\n";
        svg << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(py(vy)) << "\" x2=\"" << fmt(kLeft)
            << "\" y2=\"" << fmt(py(vy)) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py(vy) + 4)
            << "\" text-anchor=\"end\">" << tick_label(vy, axes.log_y) << "</text>\n";
    }
    svg << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 15)
        << "\" text-anchor=\"middle\">" << escape(axes.x_label) << "</text>\n";
    svg << "<text x=\"16\" y=\"" << fmt(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << fmt(kTop + ph / 2) << ")\">" << escape(axes.y_label) << "</text>\n";

    for (std::size_t k = 0; k < curves.size(); ++k) {
        const auto& c = curves[k];
        const char* colour = kPalette[k % std::size(kPalette)];
        if (c.scatter) {
            for (std::size_t i = 0; i < c.x.size() && i < c.y.size(); ++i) {
                if (!usable(c.x[i], c.y[i])) continue;
                svg << "<circle cx=\"" << fmt(px(tx(c.x[i]))) << "\" cy=\"" << fmt(py(ty(c.y[i])))
                    << "\" r=\"2.5\" fill=\"" << colour << "\"/>\n";
            }
        } else {
            svg << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < c.x.size() && i < c.y.size(); ++i) {
                if (!usable(c.x[i], c.y[i])) continue;
                svg << fmt(px(tx(c.x[i]))) << ',' << fmt(py(ty(c.y[i]))) << ' ';
            }
            svg << "\"/>\n";
        }
        const double ly = kTop + 14.0 + 16.0 * static_cast<double>(k);
        svg << "<rect x=\"" << fmt(kLeft + pw - 150) << "\" y=\"" << fmt(ly - 9) << "\" width=\"10\" height=\"10\" fill=\""
            << colour << "\"/>\n";
        svg << "<text x=\"" << fmt(kLeft + pw - 135) << "\" y=\"" << fmt(ly) << "\">" << escape(c.label)
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_plot_data(const std::filesystem::path& path, const std::string& x_name,
                     const std::string& y_name, const std::vector<std::string>& x,
                     const std::vector<double>& y) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::invalid_input, "cannot write " + path.string());
    out << "# " << x_name << ' ' << y_name << '\n';
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        out << x[i] << ' ' << format_number(y[i]) << '\n';
    }
}

}  // namespace hurstlab::cli
