#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fracqm::report {

using Cell = std::variant<double, long long, bool, std::string>;

/// Rows under a fixed column order, plus ordered key/value metadata.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> meta;
};

/// 12 significant digits in scientific notation; "nan", "inf", "-inf".
std::string format_number(double v);

/// v rounded through format_number, so JSON and CSV carry the same digits.
double rounded(double v);

std::string to_text(const Cell& c);

/// Header line then one line per row, '\n' endings, fields quoted only when
/// they contain a comma, quote or newline. Metadata is not written.
void write_csv(std::ostream& os, const Table& t);

/// "# key: value" lines, for the diagnostic stream next to CSV output.
void write_meta_comments(std::ostream& os, const Table& t);

/// {"meta": {...}, "rows": [{column: value, ...}, ...]} with keys in table
/// order. Non-finite numbers become null.
void write_json(std::ostream& os, const Table& t);

}  // namespace fracqm::report
