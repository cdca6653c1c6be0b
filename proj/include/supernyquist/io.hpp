#ifndef SUPERNYQUIST_IO_HPP
#define SUPERNYQUIST_IO_HPP

// CSV and SVG emitters. CSV is the stable output contract: '.' decimal separator,
// 12 significant digits, LF line endings, '#' comment lines before the column header.
// SVG is a convenience rendering with a linear panel above a dB panel.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "supernyquist/error.hpp"

namespace supernyquist::io {

inline std::string format_number(double v)
{
    if (v == 0.0)
        v = 0.0; // drop negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(const std::vector<std::string>& comments) : comments_(comments) {}

    void columns(std::initializer_list<std::string_view> names)
    {
        std::string line;
        for (auto n : names) {
            if (!line.empty())
                line += ',';
            line += n;
        }
        body_ << line << '\n';
    }

    template <typename... Cells>
    void row(const Cells&... cells)
    {
        bool first = true;
        ((body_ << (first ? "" : ",") << cell(cells), first = false), ...);
        body_ << '\n';
    }

    std::string str() const
    {
        std::string out;
        for (const auto& c : comments_)
            out += "# " + c + "\n";
        return out + body_.str();
    }

    void save(const std::filesystem::path& path) const { write_file(path, str()); }

    static void write_file(const std::filesystem::path& path, const std::string& text)
    {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f)
            throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
        f << text;
        if (!f)
            throw Error(ErrorCode::IoFailure, "write to '" + path.string() + "' failed");
    }

private:
    static std::string cell(double v) { return format_number(v); }
    static std::string cell(float v) { return format_number(v); }
    static std::string cell(const std::string& s) { return s; }
    static std::string cell(const char* s) { return s; }
    template <typename I>
        requires std::is_integral_v<I>
    static std::string cell(I v)
    {
        return std::to_string(v);
    }

    std::vector<std::string> comments_;
    std::ostringstream body_;
};

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

namespace detail {

inline const char* palette(std::size_t i)
{
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    return colors[i % 6];
}

inline void panel(std::ostringstream& svg, const std::vector<Series>& series, bool decibel, double top,
                  const std::string& label)
{
    constexpr double left = 60, width = 620, height = 220;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    double peak = 0.0;
    for (const auto& s : series)
        for (double v : s.y)
            peak = std::max(peak, std::abs(v));
    auto map_y = [&](double v) {
        if (!decibel)
            return v;
        return 10.0 * std::log10(std::max(std::abs(v), 1e-12) / (peak > 0 ? peak : 1.0));
    };
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            const double y = map_y(s.y[i]);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (decibel)
        ymin = std::max(ymin, -60.0);
    if (xmax <= xmin)
        xmax = xmin + 1;
    if (ymax <= ymin)
        ymax = ymin + 1;

    svg << "<rect x='" << left << "' y='" << top << "' width='" << width << "' height='" << height
        << "' fill='none' stroke='#444'/>\n";
    svg << "<text x='" << left << "' y='" << top - 6 << "' font-size='12'>" << label << "  ["
        << format_number(ymin) << ", " << format_number(ymax) << "]</text>\n";
    for (std::size_t k = 0; k < series.size(); ++k) {
        svg << "<polyline fill='none' stroke-width='1.2' stroke='" << palette(k) << "' points='";
        const auto& s = series[k];
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double y = std::clamp(map_y(s.y[i]), ymin, ymax);
            const double px = left + (s.x[i] - xmin) / (xmax - xmin) * width;
            const double py = top + height - (y - ymin) / (ymax - ymin) * height;
            svg << format_number(px) << ',' << format_number(py) << ' ';
        }
        svg << "'/>\n";
        svg << "<text x='" << left + width + 8 << "' y='" << top + 14 + 14 * k << "' font-size='11' fill='"
            << palette(k) << "'>" << s.name << "</text>\n";
    }
}

} // namespace detail

/// Two-panel line plot: linear scale on top, dB (relative to the global peak) below.
inline std::string line_plot_svg(const std::string& title, const std::vector<Series>& series)
{
    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='820' height='560'>\n";
    svg << "<rect width='100%' height='100%' fill='white'/>\n";
    svg << "<text x='60' y='20' font-size='14'>" << title << "</text>\n";
    detail::panel(svg, series, false, 50, "linear");
    detail::panel(svg, series, true, 310, "dB");
    svg << "</svg>\n";
    return svg.str();
}

} // namespace supernyquist::io

#endif
