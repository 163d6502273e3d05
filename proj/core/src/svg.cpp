#include "fracwave/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace fracwave {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 56.0;

std::string num(double v) {
  std::array<char, 32> buf;
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                    std::chars_format::fixed, 2);
  return std::string(buf.data(), result.ptr);
}

std::string label(double v) {
  std::array<char, 32> buf;
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                    std::chars_format::general, 4);
  return std::string(buf.data(), result.ptr);
}

}  // namespace

void write_svg_line_plot(const std::string& path, const std::vector<double>& xs,
                         const std::vector<double>& ys,
                         const std::string& title) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw std::invalid_argument("svg plot needs matching nonempty arrays");
  }
  const auto [xmin_it, xmax_it] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
  double xmin = *xmin_it, xmax = *xmax_it;
  double ymin = *ymin_it, ymax = *ymax_it;
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) {
    ymax = ymin + 0.5;
    ymin -= 0.5;
  }

  const auto px = [&](double x) {
    return kMargin + (x - xmin) / (xmax - xmin) * (kWidth - 2.0 * kMargin);
  };
  const auto py = [&](double y) {
    return kHeight - kMargin -
           (y - ymin) / (ymax - ymin) * (kHeight - 2.0 * kMargin);
  };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth)
      << "\" height=\"" << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth)
      << ' ' << num(kHeight) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << num(kWidth / 2.0)
      << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">"
      << title << "</text>\n";

  // axes
  out << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin)
      << "\" x2=\"" << num(kWidth - kMargin) << "\" y2=\""
      << num(kHeight - kMargin) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin)
      << "\" x2=\"" << num(kMargin) << "\" y2=\"" << num(kHeight - kMargin)
      << "\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 4.0;
    const double fy = ymin + (ymax - ymin) * i / 4.0;
    out << "<line x1=\"" << num(px(fx)) << "\" y1=\"" << num(kHeight - kMargin)
        << "\" x2=\"" << num(px(fx)) << "\" y2=\""
        << num(kHeight - kMargin + 5.0) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(px(fx)) << "\" y=\""
        << num(kHeight - kMargin + 20.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << label(fx) << "</text>\n";
    out << "<line x1=\"" << num(kMargin - 5.0) << "\" y1=\"" << num(py(fy))
        << "\" x2=\"" << num(kMargin) << "\" y2=\"" << num(py(fy))
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << num(kMargin - 8.0) << "\" y=\"" << num(py(fy) + 4.0)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << label(fy) << "</text>\n";
  }

  out << "<polyline fill=\"none\" stroke=\"#1f6fb5\" stroke-width=\"1.2\" "
         "points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out << ' ';
    out << num(px(xs[i])) << ',' << num(py(ys[i]));
  }
  out << "\"/>\n</svg>\n";
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace fracwave
