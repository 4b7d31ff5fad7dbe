#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ptctl/errors.hpp"
#include "ptctl/experiments.hpp"

namespace ptctl {

namespace {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;  // column-major
  size_t rows = 0;
};

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read CSV file: " + path);
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw config_error(path + ": empty file");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) t.header.push_back(cell);
  }
  if (t.header.empty()) throw config_error(path + ": empty header");
  t.columns.resize(t.header.size());

  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    size_t col = 0;
    while (std::getline(ss, cell, ',')) {
      if (col >= t.header.size()) break;
      const char* begin = cell.c_str();
      char* end = nullptr;
      const double v = std::strtod(begin, &end);
      if (end == begin) {
        throw config_error(path + ": line " + std::to_string(line_no) +
                           ": '" + cell + "' is not a number");
      }
      t.columns[col].push_back(v);
      ++col;
    }
    if (col != t.header.size()) {
      throw config_error(path + ": line " + std::to_string(line_no) +
                         ": expected " + std::to_string(t.header.size()) +
                         " cells");
    }
    ++t.rows;
  }
  if (t.rows == 0) throw config_error(path + ": no data rows");
  return t;
}

size_t find_column(const CsvTable& t, const std::string& name,
                   const std::string& path) {
  for (size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == name) return i;
  }
  throw config_error(path + ": header has no '" + name + "' column");
}

struct Series {
  std::string label;
  const std::vector<double>* y = nullptr;
  std::vector<double> owned;  // used when values are derived (sqrt E)
  const std::vector<double>& values() const { return y ? *y : owned; }
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f",
                          "#bcbd22", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fmt_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void render(const std::string& out_path, const std::string& title,
            const std::vector<double>& x, const std::vector<Series>& series,
            bool log_y) {
  constexpr double W = 800.0, H = 400.0;
  constexpr double L = 62.0, R = 16.0, T = 20.0, B = 42.0;

  double xmin = x.front(), xmax = x.front();
  for (double v : x) {
    xmin = std::min(xmin, v);
    xmax = std::max(xmax, v);
  }
  if (xmin == xmax) {
    xmin -= 1.0;
    xmax += 1.0;
  }

  double ymin = 0.0, ymax = 0.0;
  bool have_y = false;
  for (const auto& s : series) {
    for (double v : s.values()) {
      if (log_y && !(v > 0.0)) continue;
      const double yv = log_y ? std::log10(v) : v;
      if (!have_y) {
        ymin = ymax = yv;
        have_y = true;
      } else {
        ymin = std::min(ymin, yv);
        ymax = std::max(ymax, yv);
      }
    }
  }
  if (!have_y) {
    throw config_error(out_path +
                       ": no positive values to place on a log axis");
  }
  if (ymin == ymax) {
    ymin -= 1.0;
    ymax += 1.0;
  } else {
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
  }

  auto px = [&](double v) { return L + (v - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double v) {
    const double yv = log_y ? std::log10(v) : v;
    return H - B - (yv - ymin) / (ymax - ymin) * (H - T - B);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"400\" viewBox=\"0 0 800 400\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"#ffffff\"/>\n";
  svg += "<text x=\"" + fmt(L) + "\" y=\"14\" font-family=\"monospace\" "
         "font-size=\"12\">" + title + "</text>\n";

  // Axes.
  svg += "<line x1=\"" + fmt(L) + "\" y1=\"" + fmt(H - B) + "\" x2=\"" +
         fmt(W - R) + "\" y2=\"" + fmt(H - B) +
         "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  svg += "<line x1=\"" + fmt(L) + "\" y1=\"" + fmt(T) + "\" x2=\"" + fmt(L) +
         "\" y2=\"" + fmt(H - B) +
         "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  // Ticks: fixed count, evenly spaced in the (possibly log) axis variable.
  for (int i = 0; i <= 5; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 5.0;
    const double X = px(xv);
    svg += "<line x1=\"" + fmt(X) + "\" y1=\"" + fmt(H - B) + "\" x2=\"" +
           fmt(X) + "\" y2=\"" + fmt(H - B + 4) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fmt(X) + "\" y=\"" + fmt(H - B + 16) +
           "\" font-family=\"monospace\" font-size=\"10\" "
           "text-anchor=\"middle\">" + fmt_tick(xv) + "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double yv = ymin + (ymax - ymin) * i / 5.0;
    const double Y = H - B - (H - T - B) * i / 5.0;
    svg += "<line x1=\"" + fmt(L - 4) + "\" y1=\"" + fmt(Y) + "\" x2=\"" +
           fmt(L) + "\" y2=\"" + fmt(Y) +
           "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    const double label = log_y ? std::pow(10.0, yv) : yv;
    svg += "<text x=\"" + fmt(L - 8) + "\" y=\"" + fmt(Y + 3) +
           "\" font-family=\"monospace\" font-size=\"10\" "
           "text-anchor=\"end\">" + fmt_tick(label) + "</text>\n";
  }

  // Thin long series deterministically; always keep the last point.
  const size_t stride = std::max<size_t>(1, x.size() / 1600);
  for (size_t s = 0; s < series.size(); ++s) {
    const auto& vals = series[s].values();
    std::string pts;
    for (size_t i = 0; i < x.size(); i += stride) {
      const size_t j = std::min(i, x.size() - 1);
      if (log_y && !(vals[j] > 0.0)) continue;
      pts += fmt(px(x[j])) + "," + fmt(py(vals[j])) + " ";
    }
    if (log_y ? (vals.back() > 0.0) : true) {
      if ((x.size() - 1) % stride != 0) {
        pts += fmt(px(x.back())) + "," + fmt(py(vals.back())) + " ";
      }
    }
    if (pts.empty()) continue;
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += kPalette[s % (sizeof kPalette / sizeof *kPalette)];
    svg += "\" stroke-width=\"1.2\" points=\"" + pts + "\"/>\n";
    // Legend entry.
    svg += "<text x=\"" + fmt(W - R - 120) + "\" y=\"" +
           fmt(T + 14.0 * (static_cast<double>(s) + 1.0)) +
           "\" font-family=\"monospace\" font-size=\"11\" fill=\"";
    svg += kPalette[s % (sizeof kPalette / sizeof *kPalette)];
    svg += "\">" + series[s].label + "</text>\n";
  }
  svg += "</svg>\n";

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw config_error("cannot write SVG file: " + out_path);
  out << svg;
}

}  // namespace

void export_svg(const std::string& csv_path, const std::string& spec,
                const std::string& out_path) {
  const CsvTable t = read_csv(csv_path);
  std::vector<Series> series;
  bool log_y = false;
  // Title uses only the file name: embedding the full path would make the
  // output bytes depend on the output directory, breaking reproducibility.
  const std::string title =
      std::filesystem::path(csv_path).filename().string() + " [" + spec + "]";

  if (spec == "states") {
    const size_t u_col = find_column(t, "u", csv_path);
    find_column(t, "t", csv_path);
    if (u_col < 2) throw config_error(csv_path + ": no state columns");
    for (size_t c = 1; c < u_col; ++c) {
      series.push_back({t.header[c], &t.columns[c], {}});
    }
    render(out_path, title, t.columns[0], series, false);
    return;
  }
  if (spec == "control" || spec == "gain") {
    const size_t c = find_column(t, spec == "control" ? "u" : "kappa",
                                 csv_path);
    find_column(t, "t", csv_path);
    series.push_back({t.header[c], &t.columns[c], {}});
    render(out_path, title, t.columns[0], series, false);
    return;
  }
  if (spec == "energy" || spec == "energy-log") {
    const size_t c = find_column(t, "E", csv_path);
    find_column(t, "t", csv_path);
    Series s;
    s.label = "sqrt(E)";
    s.owned.reserve(t.rows);
    // The figure axes show the root of the accumulated energy.
    for (double v : t.columns[c]) s.owned.push_back(std::sqrt(std::max(0.0, v)));
    series.push_back(std::move(s));
    log_y = (spec == "energy-log");
    render(out_path, title, t.columns[0], series, log_y);
    return;
  }
  if (spec == "series") {
    if (t.header.size() < 2) {
      throw config_error(csv_path + ": need at least two columns");
    }
    for (size_t c = 1; c < t.header.size(); ++c) {
      series.push_back({t.header[c], &t.columns[c], {}});
    }
    render(out_path, title, t.columns[0], series, false);
    return;
  }
  throw config_error("unknown plot spec '" + spec + "'");
}

}  // namespace ptctl
