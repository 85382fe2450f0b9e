#include "exroc/svg.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace exroc {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string emit_curve_svg(const RocCurve& c, int width_px) {
  if (width_px < 64) throw std::invalid_argument("svg width must be at least 64 px");
  const double size = width_px;
  const double margin = size / 8.0;
  const double plot = size - 2.0 * margin;
  auto sx = [&](double fpr) { return fmt(margin + fpr * plot); };
  auto sy = [&](double tpr) { return fmt(margin + (1.0 - tpr) * plot); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width_px << "\" height=\""
     << width_px << "\" viewBox=\"0 0 " << width_px << " " << width_px << "\">\n"
     << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(plot) << "\" height=\""
     << fmt(plot) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  os << "<line class=\"diagonal\" x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(1) << "\" y2=\""
     << sy(1) << "\" stroke=\"gray\" stroke-dasharray=\"4 4\" stroke-width=\"1\"/>\n";

  const double font = size / 32.0;
  const double tick = size / 80.0;
  for (const auto& [value, label] : {std::pair{0.0, "0"}, std::pair{0.5, "1/2"}, std::pair{1.0, "1"}}) {
    os << "<line class=\"tick\" x1=\"" << sx(value) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(value)
       << "\" y2=\"" << fmt(margin + plot + tick) << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << sx(value) << "\" y=\"" << fmt(margin + plot + tick + font) << "\" font-size=\""
       << fmt(font) << "\" text-anchor=\"middle\">" << label << "</text>\n"
       << "<line class=\"tick\" x1=\"" << fmt(margin - tick) << "\" y1=\"" << sy(value) << "\" x2=\"" << sx(0)
       << "\" y2=\"" << sy(value) << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << fmt(margin - tick - font / 4.0) << "\" y=\"" << fmt(margin + (1.0 - value) * plot + font / 3.0)
       << "\" font-size=\"" << fmt(font) << "\" text-anchor=\"end\">" << label << "</text>\n";
  }
  os << "<text x=\"" << fmt(size / 2.0) << "\" y=\"" << fmt(size - font / 2.0) << "\" font-size=\"" << fmt(font)
     << "\" text-anchor=\"middle\">false positive rate</text>\n";
  os << "<text transform=\"rotate(-90)\" x=\"" << fmt(-size / 2.0) << "\" y=\"" << fmt(font * 1.2)
     << "\" font-size=\"" << fmt(font) << "\" text-anchor=\"middle\">true positive rate</text>\n";

  os << "<polyline class=\"roc\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < c.points.size(); ++k) {
    if (k) os << ' ';
    os << sx(c.points[k].fpr.to_double()) << ',' << sy(c.points[k].tpr.to_double());
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

}  // namespace exroc
