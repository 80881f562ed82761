#pragma once

#include <string>

#include "netlines/dataset.hpp"

namespace netlines {

/// Shortest decimal form that round-trips a double (17 significant digits).
std::string format_double(double v);

/// Comma-separated rows: N numeric feature columns then one label column.
/// An optional header line is detected by non-numeric feature tokens. Integer
/// label tokens keep their value; other tokens are mapped to 0,1,2,... in
/// first-appearance order. Rows with the wrong column count are rejected with
/// their line number.
Dataset load_csv(const std::string& path);

void save_csv(const Dataset& data, const std::string& path);

/// UCI monks file: "class a1 a2 a3 a4 a5 a6 id" per line. The six discrete
/// attributes (arities 3,3,2,3,4,2) are one-hot encoded into 17 +-1
/// components; class 1 maps to target +1.
BinaryLabeledSet load_monks(const std::string& path);

}  // namespace netlines
