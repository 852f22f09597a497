#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "charn/series.hpp"

namespace charn {

/// Reads numbers from text: one per line, whitespace- or comma-separated
/// columns, an optional non-numeric header line, and '#'-prefixed comment
/// lines. Decimal points only (locale-independent). Throws ParseError with
/// the offending line number on a malformed token; an empty stream is not
/// an error here.
std::vector<double> read_values(std::istream& in);

/// read_values plus the series validity checks (at least two observations,
/// all finite).
Series read_series(std::istream& in, std::string provenance = {});

/// Writes one observation per line, preceded by '#' header lines carrying
/// the provenance (e.g. the simulation seed). Values round-trip exactly.
void write_series(std::ostream& out, const Series& series);

}  // namespace charn
