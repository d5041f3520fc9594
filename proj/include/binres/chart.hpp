#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "binres/ideal.hpp"

namespace binres {

struct VariableInfo {
  std::string name;
  bool is_y = false;  // invertible (localized away) variable
  int age = -1;       // blow-up counter of the exceptional divisor, -1 = original
  bool was_exceptional = false;  // exceptional before a phase reset; strict
                                 // transforms keep stripping these divisors
  bool z_coordinate = false;     // hyperbolic coordinate born in the z-phase

  bool exceptional() const { return age >= 0; }
  bool strict_strippable() const { return exceptional() || was_exceptional; }
};

/// Combinatorial surrogate for a point: the set of vanishable variables that
/// vanish there. Sorted, duplicate-free.
struct Stratum {
  std::vector<int> v;

  Stratum() = default;
  explicit Stratum(std::vector<int> vars);

  bool empty() const { return v.empty(); }
  bool contains(int i) const;
  bool subset_of(const Stratum& o) const;
  Stratum minus(int i) const;
  Stratum intersect(const Stratum& o) const;

  bool operator==(const Stratum& o) const { return v == o.v; }
  bool operator<(const Stratum& o) const { return v < o.v; }

  std::string str(const std::vector<std::string>& names) const;
};

enum class LineageKind { Root, Blowup, Monomialization };

struct Lineage {
  LineageKind kind = LineageKind::Root;
  int parent = -1;
  std::vector<int> center;   // variable indices of the blown-up center
  int exceptional_var = -1;  // which center variable this chart keeps
};

/// One coordinate patch of the resolution: variables with classes and divisor
/// ages, the current pair ideal (controlled transforms), and the raw total
/// transform of the fixed input basis (substitutions only, never divided).
struct Chart {
  int id = 0;
  long long p = 0;  // field characteristic
  std::vector<VariableInfo> vars;
  Ideal ideal;
  std::vector<Generator> total_gens;
  std::vector<int> gen_origin;  // ideal.gens[k] descends from input generator gen_origin[k]
  Lineage lineage;

  std::size_t dim() const { return vars.size(); }
  std::vector<std::string> names() const;
  std::vector<char> y_mask() const;
  std::vector<char> exc_mask() const;
  /// active E-divisors in this chart: every vanishable variable
  std::vector<int> e_list() const;
  /// exceptional divisors among them
  std::vector<int> h_list() const;
  /// variables relevant to stratum enumeration: ideal support plus
  /// exceptional divisors, vanishable class only
  std::vector<int> active_vars() const;

  /// strict transform of the input basis: total transform with each
  /// generator's common exceptional monomial factor removed
  std::vector<Generator> strict_gens() const;
};

/// Flips the listed variables to invertible class and re-normalizes every
/// generator and monomial part. Each variable must occur in the delta-support
/// of a pure hyperbolic generator of the chart ideal.
Chart relabel_invertible(const Chart& chart, const std::set<int>& vars);

/// Repeatedly relabels the variables forced invertible by constant-term
/// generators 1 - mu x^delta until none remain.
Chart detect_hyperbolic_and_relabel(Chart chart);

}  // namespace binres
