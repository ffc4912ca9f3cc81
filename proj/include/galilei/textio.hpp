#pragma once

#include <string>

#include "galilei/contraction.hpp"
#include "galilei/fieldsys.hpp"

namespace galilei::textio {

/// Text form of a system: layout headers followed by one scalar equation
/// per line, terms "coef * d<sym> field.component" and "coef * src
/// current.component", coefficients as exact "a/b+c/d*i" scalars.
std::string export_system(const fieldsys::LinearFieldSystem& sys);

/// Parses the text format back. Boost actions are recovered from the
/// catalogue when the system name is catalogued, otherwise trivial.
fieldsys::LinearFieldSystem import_system(const std::string& text);

/// Contraction scheme file: first line the dimension, then the matrix rows
/// with entries that are eps-monomials ("1", "-1/2*e", "e^-1").
contraction::ContractionScheme parse_scheme(const std::string& text,
                                            const std::string& name = "file");

}  // namespace galilei::textio
