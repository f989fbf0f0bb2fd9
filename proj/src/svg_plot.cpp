#include "fsdb/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace fsdb {

namespace {

struct Range {
    double lo = 0.0, hi = 1.0;
    void grow(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    double span() const { return hi - lo > 0 ? hi - lo : 1.0; }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

}  // namespace

void write_svg_plot(const std::string& path, const std::vector<PlotSeries>& series,
                    const std::string& title, const std::string& x_label,
                    const std::string& y_label) {
    const double w = 720, h = 480;
    const double ml = 70, mr = 20, mt = 40, mb = 50;

    Range rx, ry;
    bool any = false;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!any) {
                rx = Range{s.x[i], s.x[i]};
                ry = Range{s.y[i], s.y[i]};
                any = true;
            } else {
                rx.grow(s.x[i]);
                ry.grow(s.y[i]);
            }
        }
    // pad the data box a little
    const double px = 0.05 * rx.span(), py = 0.05 * ry.span();
    rx.lo -= px;
    rx.hi += px;
    ry.lo -= py;
    ry.hi += py;

    const auto sx = [&](double v) { return ml + (v - rx.lo) / rx.span() * (w - ml - mr); };
    const auto sy = [&](double v) { return h - mb - (v - ry.lo) / ry.span() * (h - mt - mb); };

    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write plot '" + path + "'");
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title
       << "</text>\n";
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << w - ml - mr << "\" height=\""
       << h - mt - mb << "\" fill=\"none\" stroke=\"#444\"/>\n";

    // ticks
    for (int i = 0; i <= 5; ++i) {
        const double xv = rx.lo + rx.span() * i / 5.0;
        const double yv = ry.lo + ry.span() * i / 5.0;
        os << "<line x1=\"" << sx(xv) << "\" y1=\"" << h - mb << "\" x2=\"" << sx(xv) << "\" y2=\""
           << h - mb + 5 << "\" stroke=\"#444\"/>\n";
        os << "<text x=\"" << sx(xv) << "\" y=\"" << h - mb + 18
           << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(xv) << "</text>\n";
        os << "<line x1=\"" << ml - 5 << "\" y1=\"" << sy(yv) << "\" x2=\"" << ml << "\" y2=\""
           << sy(yv) << "\" stroke=\"#444\"/>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << sy(yv) + 4
           << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(yv) << "</text>\n";
    }
    os << "<text x=\"" << w / 2 << "\" y=\"" << h - 12
       << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label << "</text>\n";
    os << "<text x=\"16\" y=\"" << h / 2 << "\" text-anchor=\"middle\" font-size=\"13\" "
       << "transform=\"rotate(-90 16 " << h / 2 << ")\">" << y_label << "</text>\n";

    for (const auto& s : series) {
        if (s.x.empty()) continue;
        os << "<polyline fill=\"none\" stroke=\"" << s.colour << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i)
            os << sx(s.x[i]) << ',' << sy(s.y[i]) << ' ';
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

}  // namespace fsdb
