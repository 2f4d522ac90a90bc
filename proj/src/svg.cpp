#include "patrol/svg.hpp"

#include "patrol/error.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace patrol {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                 "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
constexpr double kCanvas = 480.0;
constexpr double kMargin = 20.0;
constexpr double kLegendLine = 16.0;

} // namespace

std::string renderSvg(const MetricSpace& space, const CyclicSolution& solution) {
    if (!space.euclidean())
        throw NotRenderable("only point instances can be rendered");
    const auto& pts = space.points();
    if (pts.front().size() != 2)
        throw NotRenderable("only 2-D point instances can be rendered");

    double minX = pts[0][0], maxX = minX, minY = pts[0][1], maxY = minY;
    for (const auto& p : pts) {
        minX = std::min(minX, p[0]);
        maxX = std::max(maxX, p[0]);
        minY = std::min(minY, p[1]);
        maxY = std::max(maxY, p[1]);
    }
    const double span = std::max({maxX - minX, maxY - minY, 1e-12});
    const double scale = (kCanvas - 2 * kMargin) / span;
    auto sx = [&](double x) { return kMargin + (x - minX) * scale; };
    auto sy = [&](double y) { return kCanvas - kMargin - (y - minY) * scale; }; // y axis up

    const double legendHeight = kLegendLine * (solution.tours.size() + 1) + kMargin / 2;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
        << kCanvas + legendHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t i = 0; i < solution.tours.size(); ++i) {
        const auto& order = solution.tours[i].order;
        const char* colour = kPalette[i % kPalette.size()];
        svg << "<polygon class=\"tour\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
        for (std::size_t j = 0; j < order.size(); ++j)
            svg << (j ? " " : "") << sx(pts[order[j]][0]) << ',' << sy(pts[order[j]][1]);
        svg << "\"/>\n";
    }
    for (int s = 0; s < space.size(); ++s)
        svg << "<circle class=\"site\" cx=\"" << sx(pts[s][0]) << "\" cy=\"" << sy(pts[s][1])
            << "\" r=\"4\" fill=\"black\"/>\n";

    double y = kCanvas + kLegendLine;
    svg << "<text x=\"" << kMargin << "\" y=\"" << y << "\" font-family=\"sans-serif\" font-size=\"12\">latency "
        << solution.latency << "</text>\n";
    for (std::size_t i = 0; i < solution.tours.size(); ++i) {
        y += kLegendLine;
        svg << "<text x=\"" << kMargin << "\" y=\"" << y << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
            << kPalette[i % kPalette.size()] << "\">part " << i << ": k=" << solution.robots[i] << ", length "
            << solution.tours[i].length << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void writeSvg(const MetricSpace& space, const CyclicSolution& solution, const std::string& path) {
    const std::string doc = renderSvg(space, solution);
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write '" + path + "'");
    out << doc;
}

} // namespace patrol
