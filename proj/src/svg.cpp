#include "enet/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "enet/report.hpp"

namespace enet {

namespace {

// 10-level viridis, dark (low) to bright (high).
constexpr const char* kViridis[10] = {"#440154", "#482878", "#3e4989", "#31688e", "#26828e",
                                      "#1f9e89", "#35b779", "#6ece58", "#b5de2b", "#fde725"};

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Cell boundaries at midpoints between consecutive sorted centers; the two
// edges extend by half of the adjacent gap (or a fixed pad for a lone value).
std::vector<double> boundaries(const std::vector<double>& centers, double lone_pad) {
  const std::size_t m = centers.size();
  std::vector<double> b(m + 1);
  const double pad_lo = m > 1 ? (centers[1] - centers[0]) / 2.0 : lone_pad;
  const double pad_hi = m > 1 ? (centers[m - 1] - centers[m - 2]) / 2.0 : lone_pad;
  b[0] = centers[0] - pad_lo;
  b[m] = centers[m - 1] + pad_hi;
  for (std::size_t t = 1; t < m; ++t) b[t] = (centers[t - 1] + centers[t]) / 2.0;
  return b;
}

int color_bin(double v, double lo, double hi) {
  if (!(hi > lo)) return 0;
  const int bin = static_cast<int>((v - lo) / (hi - lo) * 10.0);
  return std::clamp(bin, 0, 9);
}

void open_svg(std::ostringstream& out, double width, double height) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px(width)
      << "\" height=\"" << px(height) << "\" viewBox=\"0 0 " << px(width) << ' ' << px(height)
      << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << px(width) << "\" height=\"" << px(height)
      << "\" fill=\"#ffffff\"/>\n";
}

void text_at(std::ostringstream& out, double x, double y, const std::string& s,
             const char* anchor, double size = 11.0, const char* extra = "") {
  out << "<text x=\"" << px(x) << "\" y=\"" << px(y) << "\" font-family=\"sans-serif\""
      << " font-size=\"" << px(size) << "\" text-anchor=\"" << anchor << "\"" << extra << ">" << s
      << "</text>\n";
}

}  // namespace

double ContourLayout::x_of_alpha(double alpha) const {
  return px0 + (alpha - alpha_lo) / (alpha_hi - alpha_lo) * (px1 - px0);
}

double ContourLayout::y_of_log10_lambda(double loglam) const {
  return py0 + (loglam_hi - loglam) / (loglam_hi - loglam_lo) * (py1 - py0);
}

ContourLayout contour_layout(const ZSurface& surface) {
  if (surface.cells.empty()) throw std::invalid_argument("empty surface");
  const std::size_t na = static_cast<std::size_t>(surface.n_alpha);
  const std::size_t nl = static_cast<std::size_t>(surface.n_lambda);

  std::vector<double> alphas(na), loglams(nl);
  for (std::size_t i = 0; i < na; ++i) alphas[i] = surface.cells[i * nl].alpha;
  for (std::size_t l = 0; l < nl; ++l) loglams[l] = std::log10(surface.cells[l].lambda);
  std::sort(loglams.begin(), loglams.end());

  const std::vector<double> ab = boundaries(alphas, 0.05);
  const std::vector<double> lb = boundaries(loglams, 0.5);

  ContourLayout layout;
  layout.alpha_lo = ab.front();
  layout.alpha_hi = ab.back();
  layout.loglam_lo = lb.front();
  layout.loglam_hi = lb.back();
  layout.width = 720.0;
  layout.height = 520.0;
  layout.px0 = 80.0;
  layout.px1 = 560.0;
  layout.py0 = 40.0;
  layout.py1 = 460.0;
  return layout;
}

std::string contour_svg(const ZSurface& surface) {
  const ContourLayout lay = contour_layout(surface);
  const std::size_t na = static_cast<std::size_t>(surface.n_alpha);
  const std::size_t nl = static_cast<std::size_t>(surface.n_lambda);

  std::vector<double> alphas(na), loglams(nl);
  for (std::size_t i = 0; i < na; ++i) alphas[i] = surface.cells[i * nl].alpha;
  for (std::size_t l = 0; l < nl; ++l) loglams[l] = std::log10(surface.cells[l].lambda);
  // loglams follows cell order: lambda descending, so loglam descending.
  std::vector<double> loglams_asc = loglams;
  std::sort(loglams_asc.begin(), loglams_asc.end());
  const std::vector<double> ab = boundaries(alphas, 0.05);
  const std::vector<double> lb = boundaries(loglams_asc, 0.5);

  double zlo = surface.cells[0].log10z, zhi = zlo;
  for (const auto& cell : surface.cells) {
    zlo = std::min(zlo, cell.log10z);
    zhi = std::max(zhi, cell.log10z);
  }

  std::ostringstream out;
  open_svg(out, lay.width, lay.height);
  text_at(out, (lay.px0 + lay.px1) / 2.0, 22.0, "cross-validation error surface", "middle", 13.0);

  for (std::size_t i = 0; i < na; ++i) {
    const double x_left = lay.x_of_alpha(ab[i]);
    const double x_right = lay.x_of_alpha(ab[i + 1]);
    for (std::size_t l = 0; l < nl; ++l) {
      const ZSurface::Cell& cell = surface.cells[i * nl + l];
      const double v = std::log10(cell.lambda);
      // boundaries of this loglam value in the ascending list
      const std::size_t pos = static_cast<std::size_t>(
          std::lower_bound(loglams_asc.begin(), loglams_asc.end(), v) - loglams_asc.begin());
      const double y_top = lay.y_of_log10_lambda(lb[pos + 1]);
      const double y_bot = lay.y_of_log10_lambda(lb[pos]);
      out << "<rect x=\"" << px(x_left) << "\" y=\"" << px(y_top) << "\" width=\""
          << px(x_right - x_left) << "\" height=\"" << px(y_bot - y_top) << "\" fill=\""
          << kViridis[color_bin(cell.log10z, zlo, zhi)] << "\"/>\n";
    }
  }

  // plot frame and ticks
  out << "<rect x=\"" << px(lay.px0) << "\" y=\"" << px(lay.py0) << "\" width=\""
      << px(lay.px1 - lay.px0) << "\" height=\"" << px(lay.py1 - lay.py0)
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  const std::size_t x_stride = na > 12 ? (na + 7) / 8 : 1;
  for (std::size_t i = 0; i < na; i += x_stride) {
    const double x = lay.x_of_alpha(alphas[i]);
    out << "<line x1=\"" << px(x) << "\" y1=\"" << px(lay.py1) << "\" x2=\"" << px(x)
        << "\" y2=\"" << px(lay.py1 + 5.0) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    text_at(out, x, lay.py1 + 18.0, label(alphas[i]), "middle");
  }
  for (int t = 0; t <= 5; ++t) {
    const double v = lay.loglam_lo + t * (lay.loglam_hi - lay.loglam_lo) / 5.0;
    const double y = lay.y_of_log10_lambda(v);
    out << "<line x1=\"" << px(lay.px0 - 5.0) << "\" y1=\"" << px(y) << "\" x2=\"" << px(lay.px0)
        << "\" y2=\"" << px(y) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    text_at(out, lay.px0 - 8.0, y + 4.0, label(v), "end");
  }
  text_at(out, (lay.px0 + lay.px1) / 2.0, lay.height - 14.0, "alpha", "middle", 12.0);
  {
    std::ostringstream extra;
    extra << " transform=\"rotate(-90 18 " << px((lay.py0 + lay.py1) / 2.0) << ")\"";
    const std::string e = extra.str();
    text_at(out, 18.0, (lay.py0 + lay.py1) / 2.0, "log10(lambda)", "middle", 12.0, e.c_str());
  }

  // legend: 10 swatches, highest bin on top
  const double lx = lay.px1 + 24.0;
  const double lh = (lay.py1 - lay.py0) / 10.0;
  text_at(out, lx, lay.py0 - 10.0, "log10(Z)", "start");
  for (int b = 0; b < 10; ++b) {
    const double y = lay.py0 + (9 - b) * lh;
    out << "<rect x=\"" << px(lx) << "\" y=\"" << px(y) << "\" width=\"18\" height=\"" << px(lh)
        << "\" fill=\"" << kViridis[b] << "\" stroke=\"#333333\" stroke-width=\"0.5\"/>\n";
  }
  for (int t = 0; t <= 5; ++t) {
    const double v = zlo + t * (zhi - zlo) / 5.0;
    const double y = lay.py1 - t * (lay.py1 - lay.py0) / 5.0;
    text_at(out, lx + 24.0, y + 4.0, label(v), "start", 10.0);
  }

  for (const auto& cell : surface.cells) {
    if (!cell.is_min) continue;
    out << "<circle id=\"min-marker\" cx=\"" << px(lay.x_of_alpha(cell.alpha)) << "\" cy=\""
        << px(lay.y_of_log10_lambda(std::log10(cell.lambda)))
        << "\" r=\"4.5\" fill=\"#d62728\" stroke=\"#ffffff\" stroke-width=\"1.5\"/>\n";
  }

  out << "</svg>\n";
  return out.str();
}

void emit_contour_svg(const ZSurface& surface, const std::filesystem::path& path) {
  write_text_file(path, contour_svg(surface));
}

std::string nzero_svg(const std::vector<CvRecord>& by_nzero) {
  if (by_nzero.empty()) throw std::invalid_argument("empty nzero table");

  std::vector<CvRecord> rows = by_nzero;
  std::sort(rows.begin(), rows.end(),
            [](const CvRecord& a, const CvRecord& b) { return a.nzero < b.nzero; });

  double x_lo = rows.front().nzero - 0.5, x_hi = rows.back().nzero + 0.5;
  double y_lo = rows.front().cvm, y_hi = y_lo;
  for (const CvRecord& r : rows) {
    y_lo = std::min(y_lo, r.cvm);
    y_hi = std::max(y_hi, r.cvm);
  }
  if (y_hi > y_lo) {
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;
  } else {
    y_lo -= 0.5;
    y_hi += 0.5;
  }

  const double width = 560.0, height = 420.0;
  const double px0 = 70.0, px1 = 530.0, py0 = 36.0, py1 = 360.0;
  const auto x_of = [&](double v) { return px0 + (v - x_lo) / (x_hi - x_lo) * (px1 - px0); };
  const auto y_of = [&](double v) { return py0 + (y_hi - v) / (y_hi - y_lo) * (py1 - py0); };

  std::ostringstream out;
  open_svg(out, width, height);
  text_at(out, (px0 + px1) / 2.0, 20.0, "best cross-validation error by model size", "middle",
          13.0);
  out << "<rect x=\"" << px(px0) << "\" y=\"" << px(py0) << "\" width=\"" << px(px1 - px0)
      << "\" height=\"" << px(py1 - py0)
      << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

  const std::size_t stride = rows.size() > 12 ? (rows.size() + 11) / 12 : 1;
  for (std::size_t i = 0; i < rows.size(); i += stride) {
    const double x = x_of(rows[i].nzero);
    out << "<line x1=\"" << px(x) << "\" y1=\"" << px(py1) << "\" x2=\"" << px(x) << "\" y2=\""
        << px(py1 + 5.0) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    text_at(out, x, py1 + 18.0, std::to_string(rows[i].nzero), "middle");
  }
  for (int t = 0; t <= 5; ++t) {
    const double v = y_lo + t * (y_hi - y_lo) / 5.0;
    const double y = y_of(v);
    out << "<line x1=\"" << px(px0 - 5.0) << "\" y1=\"" << px(y) << "\" x2=\"" << px(px0)
        << "\" y2=\"" << px(y) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    text_at(out, px0 - 8.0, y + 4.0, label(v), "end");
  }
  text_at(out, (px0 + px1) / 2.0, height - 14.0, "nonzero coefficients", "middle", 12.0);
  {
    std::ostringstream extra;
    extra << " transform=\"rotate(-90 18 " << px((py0 + py1) / 2.0) << ")\"";
    const std::string e = extra.str();
    text_at(out, 18.0, (py0 + py1) / 2.0, "min cvm", "middle", 12.0, e.c_str());
  }

  if (rows.size() > 1) {
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i > 0) out << ' ';
      out << px(x_of(rows[i].nzero)) << ',' << px(y_of(rows[i].cvm));
    }
    out << "\"/>\n";
  }
  for (const CvRecord& r : rows)
    out << "<circle cx=\"" << px(x_of(r.nzero)) << "\" cy=\"" << px(y_of(r.cvm))
        << "\" r=\"3.5\" fill=\"#1f77b4\"/>\n";

  out << "</svg>\n";
  return out.str();
}

void emit_nzero_svg(const std::vector<CvRecord>& by_nzero, const std::filesystem::path& path) {
  write_text_file(path, nzero_svg(by_nzero));
}

}  // namespace enet
