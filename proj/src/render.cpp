#include "bookem/render.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace bookem {

namespace {

std::string page_color(int idx, int total) {
    double hue = total ? 360.0 * idx / total : 0.0;
    std::ostringstream ss;
    ss << "hsl(" << static_cast<int>(hue) << ",70%,45%)";
    return ss.str();
}

} // namespace

std::string render_svg(const BookEmbedding &e, const PageRegistry &reg) {
    const double step = 28.0, margin = 30.0, spine_y = 0.0;
    int n = static_cast<int>(e.order.size());
    std::vector<int> pos = e.position_of();

    double max_r = 0;
    for (const auto &[pr, pg] : e.pages)
        max_r = std::max(max_r, std::abs(pos[pr.second] - pos[pr.first]) * step / 2.0);
    double width = margin * 2 + step * std::max(0, n - 1);
    double height = max_r + margin * 2 + 20;
    double base = max_r + margin;

    std::set<PageId> used;
    for (const auto &[pr, pg] : e.pages) used.insert(pg);
    std::map<PageId, std::string> color;
    int idx = 0;
    for (PageId p : used) color[p] = page_color(idx++, static_cast<int>(used.size()));

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "  <line x1=\"" << margin << "\" y1=\"" << base + spine_y << "\" x2=\""
        << width - margin << "\" y2=\"" << base + spine_y << "\" stroke=\"#888\"/>\n";
    for (const auto &[pr, pg] : e.pages) {
        double x1 = margin + pos[pr.first] * step;
        double x2 = margin + pos[pr.second] * step;
        if (x1 > x2) std::swap(x1, x2);
        double r = (x2 - x1) / 2.0;
        out << "  <path d=\"M " << x1 << " " << base << " A " << r << " " << r
            << " 0 0 1 " << x2 << " " << base << "\" fill=\"none\" stroke=\"" << color[pg]
            << "\" stroke-width=\"1.2\"><title>" << reg.name(pg) << "</title></path>\n";
    }
    for (int i = 0; i < n; ++i) {
        double x = margin + i * step;
        out << "  <circle cx=\"" << x << "\" cy=\"" << base << "\" r=\"3\" fill=\"#222\"/>\n";
        out << "  <text x=\"" << x << "\" y=\"" << base + 16
            << "\" font-size=\"9\" text-anchor=\"middle\">" << e.order[i] << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace bookem
