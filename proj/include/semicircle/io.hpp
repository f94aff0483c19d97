#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "semicircle/eigensolver.hpp"
#include "semicircle/estimators.hpp"
#include "semicircle/matrix.hpp"

namespace semicircle {

/// Shortest text that reads back to the same double (%.17g).
std::string format_double(double v);

/// A CSV table of preformatted cells preceded by '#' metadata comment lines.
struct Table {
  std::vector<std::string> comments;  // written as "# <comment>"
  std::vector<std::string> columns;   // empty: no header row
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os) const;
};

/// Writes to `path`, or to stdout when path is empty or "-". Throws IoError.
void write_text(const std::string& path, const std::string& text);
std::string to_csv(const Table& table);

Table matrix_table(const SymmetricMatrix& m);
Table spectrum_table(const Spectrum& spec, std::vector<std::string> comments = {});
/// Header "x,value" after a "# n=..., h=..., kernel=..., seed=..., kind=..." line.
Table curve_table(const EstimatorCurve& curve);

/// One eigenvalue per line; blank lines and lines starting with '#' are skipped.
/// Throws ParseError naming the offending line, IoError if unreadable.
Spectrum read_spectrum_csv(const std::string& path);
Spectrum parse_spectrum_csv(std::istream& is, const std::string& source = "<stream>");

}  // namespace semicircle
