#include "palinprime/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "palinprime/errors.hpp"

namespace palinprime {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Cell Cell::integer(__int128 v) {
  Cell c;
  c.kind_ = Kind::integer;
  c.text_ = v < 0 ? "-" + to_string(static_cast<Natural>(-(v + 1)) + 1) : to_string(static_cast<Natural>(v));
  return c;
}

Cell Cell::integer(Natural v) {
  Cell c;
  c.kind_ = Kind::integer;
  c.text_ = to_string(v);
  return c;
}

Cell Cell::real(double v) {
  Cell c;
  c.kind_ = Kind::real;
  c.real_ = v;
  c.text_ = format_real(v);
  return c;
}

Cell Cell::text(std::string v) {
  Cell c;
  c.kind_ = Kind::text;
  c.text_ = std::move(v);
  return c;
}

Cell Cell::boolean(bool v) {
  Cell c;
  c.kind_ = Kind::boolean;
  c.flag_ = v;
  c.text_ = v ? "true" : "false";
  return c;
}

std::string Cell::csv() const {
  if (kind_ != Kind::text || text_.find_first_of(",\"\n") == std::string::npos) return text_;
  std::string out = "\"";
  for (char ch : text_) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

nlohmann::ordered_json Cell::json() const {
  switch (kind_) {
    case Kind::integer: {
      const bool negative = !text_.empty() && text_[0] == '-';
      // Integers that fit a 64-bit JSON number are emitted as numbers.
      if (text_.size() <= 18 || (text_.size() <= 19 && negative)) return nlohmann::ordered_json::parse(text_);
      return text_;
    }
    case Kind::real:
      if (!std::isfinite(real_)) return nullptr;
      return nlohmann::ordered_json::parse(text_);
    case Kind::boolean:
      return flag_;
    case Kind::text:
      break;
  }
  return text_;
}

void Report::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw DomainError("report row has " + std::to_string(row.size()) + " cells, expected " +
                      std::to_string(columns.size()));
  rows.push_back(std::move(row));
}

std::string to_csv(const Report& report) {
  std::string out;
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i != 0) out += ',';
    out += report.columns[i];
  }
  out += '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out += ',';
      out += row[i].csv();
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json doc;
  doc["config"] = report.config;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[report.columns[i]] = row[i].json();
    rows.push_back(std::move(obj));
  }
  doc["rows"] = std::move(rows);
  doc["summary"] = report.summary;
  return doc.dump(2) + "\n";
}

std::string to_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                   const std::vector<SeriesPoint>& points) {
  constexpr double width = 640, height = 400, left = 70, right = 20, top = 40, bottom = 50;
  std::vector<SeriesPoint> usable;
  for (const auto& p : points)
    if (std::isfinite(p.x) && std::isfinite(p.y) && p.y > 0) usable.push_back(p);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
      << title << "</text>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right << "\" y2=\""
      << height - bottom << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << height - bottom
      << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << x_label << "</text>\n";
  svg << "<text x=\"16\" y=\"" << height / 2 << "\" transform=\"rotate(-90 16 " << height / 2
      << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << y_label << " (log10)</text>\n";

  if (!usable.empty()) {
    auto [xmin_it, xmax_it] = std::minmax_element(usable.begin(), usable.end(),
                                                  [](const auto& a, const auto& b) { return a.x < b.x; });
    auto [ymin_it, ymax_it] = std::minmax_element(usable.begin(), usable.end(),
                                                  [](const auto& a, const auto& b) { return a.y < b.y; });
    const double x0 = xmin_it->x, x1 = xmax_it->x;
    double y0 = std::floor(std::log10(ymin_it->y)), y1 = std::ceil(std::log10(ymax_it->y));
    if (y1 <= y0) y1 = y0 + 1;
    auto px = [&](double x) { return x1 > x0 ? left + (x - x0) / (x1 - x0) * (width - left - right) : left; };
    auto py = [&](double y) { return height - bottom - (std::log10(y) - y0) / (y1 - y0) * (height - top - bottom); };
    for (int e = static_cast<int>(y0); e <= static_cast<int>(y1); ++e) {
      const double yy = height - bottom - (e - y0) / (y1 - y0) * (height - top - bottom);
      svg << "<text x=\"" << left - 6 << "\" y=\"" << yy + 4
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">1e" << e << "</text>\n";
    }
    svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < usable.size(); ++i)
      svg << (i ? " " : "") << format_real(px(usable[i].x)) << "," << format_real(py(usable[i].y));
    svg << "\"/>\n";
    for (const auto& p : usable) {
      svg << "<circle cx=\"" << format_real(px(p.x)) << "\" cy=\"" << format_real(py(p.y))
          << "\" r=\"3\" fill=\"steelblue\"/>\n";
      svg << "<text x=\"" << format_real(px(p.x)) << "\" y=\"" << height - bottom + 14
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << format_real(p.x)
          << "</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace palinprime
