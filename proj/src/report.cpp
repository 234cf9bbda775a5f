// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

#include "ptlat/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ptlat/errors.hpp"

#ifndef PTLAT_VERSION
#define PTLAT_VERSION "unknown"
#endif

namespace ptlat {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_shortest(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_header(const std::string& command, const std::vector<std::pair<std::string, std::string>>& settings) {
  std::ostringstream os;
  os << "# ptlattice " << PTLAT_VERSION << "\n";
  os << "# command: " << command << "\n";
  for (const auto& [key, value] : settings) os << "# " << key << ": " << value << "\n";
  return os.str();
}

std::string spectrum_csv(const std::vector<double>& grid, const std::vector<Spectrum>& spectra) {
  if (grid.size() != spectra.size()) throw InvalidSpec("grid and spectra lengths differ");
  std::ostringstream os;
  const int n = spectra.empty() ? 0 : spectra.front().size();
  os << "t";
  for (int i = 1; i <= n; ++i) os << ",re_" << i;
  for (int i = 1; i <= n; ++i) os << ",im_" << i;
  os << "\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    os << format_double(grid[k]);
    for (const auto& z : spectra[k]) os << "," << format_double(z.real());
    for (const auto& z : spectra[k]) os << "," << format_double(z.imag());
    os << "\n";
  }
  return os.str();
}

std::string ep_csv(const std::vector<EPLocation>& eps) {
  std::ostringstream os;
  os << "t_star,order,kind,residual\n";
  for (const auto& ep : eps) {
    os << format_double(ep.t_star) << "," << ep.order << "," << to_string(ep.kind) << ","
       << format_double(ep.residual) << "\n";
  }
  return os.str();
}

std::string domains_csv(const DomainReport& report) {
  std::ostringstream os;
  os << "lo,hi,count_real,boundary_tol\n";
  for (const auto& iv : report.intervals) {
    os << format_double(iv.lo) << "," << format_double(iv.hi) << "," << iv.count_real << ","
       << format_double(report.boundary_tol) << "\n";
  }
  os << "\n" << ep_csv(report.exceptional_points);
  return os.str();
}

std::string islands_csv(const std::vector<DomainInterval>& islands, double tol) {
  std::ostringstream os;
  os << "lo,hi,count_real,boundary_tol\n";
  for (const auto& iv : islands) {
    os << format_double(iv.lo) << "," << format_double(iv.hi) << "," << iv.count_real << ","
       << format_double(tol) << "\n";
  }
  return os.str();
}

std::string positivity_csv(const PositivityReport& report) {
  std::ostringstream os;
  os << "t,min_eig\n";
  for (const auto& [t, e] : report.min_eig_samples) os << format_double(t) << "," << format_double(e) << "\n";
  os << "\nlo,hi,lo_refined,hi_refined\n";
  for (const auto& iv : report.intervals) {
    os << format_double(iv.lo) << "," << format_double(iv.hi) << "," << (iv.lo_refined ? 1 : 0) << ","
       << (iv.hi_refined ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string svg_plot(const std::vector<double>& x, const std::vector<SvgSeries>& series, const std::string& title,
                     const std::string& x_label) {
  constexpr double kWidth = 800, kHeight = 500, kMargin = 60;
  double xmin = x.empty() ? 0 : x.front(), xmax = x.empty() ? 1 : x.back();
  double ymin = std::numeric_limits<double>::infinity(), ymax = -ymin;
  for (const auto& s : series) {
    for (double v : s.y) {
      if (!std::isfinite(v)) continue;
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!(ymin <= ymax)) ymin = -1, ymax = 1;
  if (ymax - ymin < 1e-12) ymin -= 1, ymax += 1;
  if (xmax - xmin < 1e-300) xmax = xmin + 1;

  auto px = [&](double v) { return kMargin + (v - xmin) / (xmax - xmin) * (kWidth - 2 * kMargin); };
  auto py = [&](double v) { return kHeight - kMargin - (v - ymin) / (ymax - ymin) * (kHeight - 2 * kMargin); };

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" << title << "</text>\n";
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
     << kHeight - kMargin << "\"/>\n";
  os << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\"" << kHeight - kMargin
     << "\"/>\n";
  if (ymin < 0 && ymax > 0) {
    os << "<line x1=\"" << kMargin << "\" y1=\"" << py(0) << "\" x2=\"" << kWidth - kMargin << "\" y2=\"" << py(0)
       << "\" stroke=\"#bbbbbb\"/>\n";
  }
  os << "</g>\n";
  os << "<g font-size=\"12\">\n";
  os << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 18 << "\" text-anchor=\"middle\">"
     << format_double(xmin) << "</text>\n";
  os << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 18 << "\" text-anchor=\"middle\">"
     << format_double(xmax) << "</text>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 16 << "\" text-anchor=\"middle\">" << x_label
     << "</text>\n";
  os << "<text x=\"" << kMargin - 6 << "\" y=\"" << py(ymin) << "\" text-anchor=\"end\">" << format_double(ymin)
     << "</text>\n";
  os << "<text x=\"" << kMargin - 6 << "\" y=\"" << py(ymax) + 4 << "\" text-anchor=\"end\">" << format_double(ymax)
     << "</text>\n";
  os << "</g>\n";

  static const char* kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};
  for (const auto& s : series) {
    os << "<polyline fill=\"none\" stroke=\"" << kColours[s.colour % 6] << "\" stroke-width=\"1.5\"";
    if (s.dashed) os << " stroke-dasharray=\"6 4\"";
    os << " points=\"";
    for (std::size_t i = 0; i < s.y.size() && i < x.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      os << px(x[i]) << "," << py(s.y[i]) << " ";
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string spectrum_svg(const std::vector<double>& grid, const std::vector<Spectrum>& spectra,
                         const std::string& title) {
  const int n = spectra.empty() ? 0 : spectra.front().size();
  std::vector<SvgSeries> series;
  for (int i = 0; i < n; ++i) {
    SvgSeries re, im;
    re.colour = im.colour = i;
    im.dashed = true;
    for (const auto& s : spectra) {
      re.y.push_back(s[i].real());
      im.y.push_back(s[i].imag());
    }
    series.push_back(std::move(re));
    series.push_back(std::move(im));
  }
  return svg_plot(grid, series, title, "t");
}

}  // namespace ptlat
