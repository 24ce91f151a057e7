#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "palinprime/digits.hpp"

namespace palinprime {

/// One table cell. Integers keep their exact decimal digits.
class Cell {
 public:
  enum class Kind { integer, real, text, boolean };

  static Cell integer(__int128 v);
  static Cell integer(Natural v);
  static Cell integer(std::uint64_t v) { return integer(Natural{v}); }
  static Cell integer(std::int64_t v) { return integer(static_cast<__int128>(v)); }
  static Cell integer(unsigned v) { return integer(Natural{v}); }
  static Cell integer(int v) { return integer(static_cast<__int128>(v)); }
  static Cell real(double v);
  static Cell text(std::string v);
  static Cell boolean(bool v);

  Kind kind() const { return kind_; }
  /// CSV rendering: integers unquoted, reals with 12 significant digits.
  std::string csv() const;
  nlohmann::ordered_json json() const;

 private:
  Kind kind_ = Kind::text;
  std::string text_;
  double real_ = 0;
  bool flag_ = false;
};

/// Reals as printed everywhere in reports: 12 significant digits.
std::string format_real(double v);

struct Report {
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();

  void add_row(std::vector<Cell> row);
};

/// Header row plus one line per row, LF line endings.
std::string to_csv(const Report& report);
/// {"config": ..., "rows": [{column: value}], "summary": ...}.
std::string to_json(const Report& report);

struct SeriesPoint {
  double x;
  double y;
};

/// Polyline chart of y against x with a log10 y axis.
std::string to_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                   const std::vector<SeriesPoint>& points);

}  // namespace palinprime
