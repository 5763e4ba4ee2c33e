#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lcoalg/lcoalgebra.hpp"

namespace lcoalg {

/// Coalgebra text format, one record per line, `#` starts a comment line:
///
///   name: F
///   basis: a b c d
///   right: a -> 1*a(x)a + 1*b(x)c
///   left: a -> 1*a(x)c + 1*b(x)a
///   right_counit: a -> 1
///   left_counit: b -> 1
///   coderivation: a -> -1*b + 1*c
///
/// `basis:` must precede every mapping. Missing images are zero. When no
/// `left:` line is present the left coproduct equals the right one.
/// Counits are present iff at least one of their lines is.
struct CoalgebraFile {
  LCoalgebra coalgebra;
  std::optional<BasisMap> coderivation;
};

/// Throws ParseError with the offending line and column.
CoalgebraFile parse_coalgebra_file(std::string_view text);
LCoalgebra parse_coalgebra(std::string_view text);

/// Canonical rendering; `parse_coalgebra_file` inverts it exactly.
std::string render_coalgebra(const LCoalgebra& c, const std::optional<BasisMap>& coderivation = std::nullopt);

}  // namespace lcoalg
