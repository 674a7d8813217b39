#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hyperoct/cell.hpp"
#include "hyperoct/diag_poly.hpp"
#include "hyperoct/ediagram.hpp"
#include "hyperoct/odiagram.hpp"
#include "hyperoct/partition.hpp"
#include "hyperoct/qt_series.hpp"
#include "hyperoct/signed_permutation.hpp"
#include "hyperoct/straighten.hpp"
#include "hyperoct/verify.hpp"

namespace hyperoct::io {

using Json = nlohmann::ordered_json;

// integers that do not fit in 64 bits are written as decimal strings
Json integer_json(const Integer& z);
Integer integer_from_json(const Json& j);
Json rational_json(const Rational& r);  // "p/q" string, or an integer when integral

Json to_json(const Partition& p);
Json to_json(const SignedPermutation& beta);
Json to_json(const QTSeries& s);
Json to_json(const EDiagram& d);
Json to_json(const ODiagram& d);
Json to_json(const DiagPoly& p);
Json to_json(const StraightenedForm& s);
Json to_json(const VerifyReport& r);

Partition partition_from_json(const Json& j);
SignedPermutation permutation_from_json(const Json& j);
QTSeries series_from_json(const Json& j, int truncation);
std::vector<Cell> cells_from_json(const Json& j);
DiagPoly poly_from_json(const Json& j, int n);

// Two non-empty lines of integers (top row a, bottom row b); lines starting with '#' are ignored.
std::vector<Cell> parse_two_line(const std::string& text);
std::string to_latex(const std::vector<Cell>& cells);

}  // namespace hyperoct::io
