#include "griddom/cli/svg.hpp"

#include <cmath>
#include <sstream>

namespace griddom::cli {

namespace {

constexpr int cell = 36;
constexpr int margin = 8;
constexpr int title_height = 22;

std::string escape(const std::string & s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

// Golden-angle hues keep neighbouring ids apart.
std::string fill(Color c)
{
    const double hue = std::fmod((c - 1) * 137.508, 360.0);
    std::ostringstream out;
    out << "hsl(" << static_cast<int>(hue) << ",60%,78%)";
    return out.str();
}

} // namespace

std::string render_svg(const Coloring & c, const std::string & title)
{
    const int w = c.dims().cols() * cell + 2 * margin;
    const int h = c.dims().rows() * cell + 2 * margin + title_height;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
        << ' ' << h << "\" font-family=\"sans-serif\">\n";
    svg << "<title>" << escape(title) << "</title>\n";
    svg << "<text x=\"" << margin << "\" y=\"" << margin + 12 << "\" font-size=\"13\">" << escape(title) << "</text>\n";
    for (int row = 1; row <= c.dims().rows(); ++row)
        for (int col = 1; col <= c.dims().cols(); ++col) {
            const Color color = c.at({row, col});
            const int x = margin + (col - 1) * cell;
            const int y = margin + title_height + (row - 1) * cell;
            svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\"" << cell
                << "\" fill=\"" << fill(color) << "\" stroke=\"#333\"/>";
            svg << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 5
                << "\" font-size=\"14\" text-anchor=\"middle\">" << color << "</text>\n";
        }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace griddom::cli
