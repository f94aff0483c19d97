#include "semicircle/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semicircle/error.hpp"

namespace semicircle {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void Table::write(std::ostream& os) const {
  for (const auto& c : comments) os << "# " << c << '\n';
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  if (!columns.empty()) line(columns);
  for (const auto& r : rows) line(r);
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  table.write(os);
  return os.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw IoError("failed writing '" + path + "'");
}

Table matrix_table(const SymmetricMatrix& m) {
  Table t;
  t.comments.push_back("symmetric matrix n=" + std::to_string(m.size()));
  for (std::size_t j = 0; j < m.size(); ++j) {
    std::vector<std::string> row;
    row.reserve(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(format_double(m(j, k)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table spectrum_table(const Spectrum& spec, std::vector<std::string> comments) {
  Table t;
  t.comments = std::move(comments);
  for (double v : spec.eigenvalues()) t.rows.push_back({format_double(v)});
  return t;
}

Table curve_table(const EstimatorCurve& curve) {
  Table t;
  const auto& m = curve.meta;
  t.comments.push_back("n=" + std::to_string(m.n) + ", h=" + (m.h ? format_double(*m.h) : "none") +
                       ", kernel=" + (m.kernel.empty() ? "none" : m.kernel) +
                       ", seed=" + (m.seed ? std::to_string(*m.seed) : "none") +
                       ", kind=" + std::string(curve_kind_name(m.kind)));
  t.columns = {"x", "value"};
  for (std::size_t i = 0; i < curve.grid.size(); ++i)
    t.rows.push_back({format_double(curve.grid[i]), format_double(curve.values[i])});
  return t;
}

Spectrum parse_spectrum_csv(std::istream& is, const std::string& source) {
  std::vector<double> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string cell = line.substr(first, last - first + 1);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size() || errno == ERANGE || !std::isfinite(v))
      throw ParseError(source + ":" + std::to_string(lineno) + ": not a finite number: '" + cell +
                       "'");
    values.push_back(v);
  }
  if (values.empty()) throw ParseError(source + ": no eigenvalues found");
  return Spectrum(std::move(values));
}

Spectrum read_spectrum_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return parse_spectrum_csv(in, path);
}

}  // namespace semicircle
