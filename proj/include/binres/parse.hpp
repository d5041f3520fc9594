#pragma once

#include <string>

#include "binres/chart.hpp"

namespace binres {

/// Parsed content of an .ideal file (line-oriented: `char:`, `vars:`,
/// optional `invertible:`, then one `gen:` per line; `#` comments).
struct IdealFile {
  long long characteristic = 0;
  std::vector<std::string> vars;
  std::vector<std::string> invertible;
  std::vector<std::string> gens_src;
};

IdealFile parse_ideal_file(const std::string& text);

/// Terms of one source polynomial `t1 [+|-] t2`, term = [coeff*] name^exp
/// (* name^exp)*; coefficients are integers or fractions; exponents may be
/// negative (parenthesized or not) on invertible variables.
std::vector<RawTerm> parse_terms(const std::string& src, const std::vector<std::string>& names,
                                 long long p);

/// Root chart: E carries every declared hypersurface, H is empty, classes X
/// except the declared invertibles; generators normalized and forced
/// hyperbolic relabeling applied.
Chart chart_from_file(const IdealFile& f);

Chart parse_ideal(const std::string& text);

}  // namespace binres
