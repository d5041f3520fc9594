#include "binres/chart.hpp"

#include <algorithm>

#include "binres/error.hpp"

namespace binres {

Stratum::Stratum(std::vector<int> vars) : v(std::move(vars)) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool Stratum::contains(int i) const { return std::binary_search(v.begin(), v.end(), i); }

bool Stratum::subset_of(const Stratum& o) const {
  return std::includes(o.v.begin(), o.v.end(), v.begin(), v.end());
}

Stratum Stratum::minus(int i) const {
  Stratum r = *this;
  r.v.erase(std::remove(r.v.begin(), r.v.end(), i), r.v.end());
  return r;
}

Stratum Stratum::intersect(const Stratum& o) const {
  Stratum r;
  std::set_intersection(v.begin(), v.end(), o.v.begin(), o.v.end(), std::back_inserter(r.v));
  return r;
}

std::string Stratum::str(const std::vector<std::string>& names) const {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += names[(std::size_t)v[k]];
  }
  return s + "}";
}

std::vector<std::string> Chart::names() const {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back(v.name);
  return out;
}

std::vector<char> Chart::y_mask() const {
  std::vector<char> m(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) m[i] = vars[i].is_y;
  return m;
}

std::vector<char> Chart::exc_mask() const {
  std::vector<char> m(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) m[i] = vars[i].exceptional();
  return m;
}

std::vector<int> Chart::e_list() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (!vars[i].is_y) out.push_back((int)i);
  return out;
}

std::vector<int> Chart::h_list() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (!vars[i].is_y && vars[i].exceptional()) out.push_back((int)i);
  return out;
}

std::vector<int> Chart::active_vars() const {
  std::vector<char> m = ideal.support_mask();
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].exceptional()) m[i] = 1;
  std::vector<int> out;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (m[i] && !vars[i].is_y) out.push_back((int)i);
  return out;
}

std::vector<Generator> Chart::strict_gens() const {
  std::vector<char> keep(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) keep[i] = !vars[i].strict_strippable();
  std::vector<Generator> out;
  for (const auto& g : total_gens) {
    Generator s = g;
    s.nu = s.nu.restricted(keep);
    out.push_back(s);
  }
  return out;
}

Chart relabel_invertible(const Chart& chart, const std::set<int>& vars) {
  if (vars.empty()) return chart;
  for (int i : vars) {
    if (chart.vars[(std::size_t)i].is_y)
      fail(ErrorKind::Input, "variable already invertible: " + chart.vars[(std::size_t)i].name);
    bool justified = false;
    for (const auto& g : chart.ideal.gens)
      if (g.kind == GenKind::Hyperbolic && g.nu.is_zero() && g.gamma[(std::size_t)i] != 0)
        justified = true;
    if (!justified)
      fail(ErrorKind::Input,
           "flip not justified by a hyperbolic generator: " + chart.vars[(std::size_t)i].name);
  }
  Chart out = chart;
  for (int i : vars) {
    VariableInfo& v = out.vars[(std::size_t)i];
    v.is_y = true;
    // rename x_i -> y_i so printed charts follow the localized convention
    std::string candidate = v.name;
    if (!candidate.empty() && candidate[0] == 'x') candidate[0] = 'y';
    else candidate += "_y";
    auto taken = [&](const std::string& n) {
      for (std::size_t k = 0; k < out.vars.size(); ++k)
        if (k != (std::size_t)i && out.vars[k].name == n) return true;
      return false;
    };
    while (taken(candidate)) candidate += "_";
    v.name = candidate;
  }
  std::vector<char> is_y = out.y_mask();
  std::vector<char> keep(out.vars.size());
  for (std::size_t i = 0; i < out.vars.size(); ++i) keep[i] = !is_y[i];
  out.ideal.mpart = out.ideal.mpart.restricted(keep);
  for (auto& g : out.ideal.gens) g = renormalize(g, is_y);
  for (auto& g : out.total_gens) g = renormalize(g, is_y);
  return out;
}

Chart detect_hyperbolic_and_relabel(Chart chart) {
  for (;;) {
    std::set<int> flips;
    std::vector<char> is_y = chart.y_mask();
    for (const auto& g : chart.ideal.gens) {
      if (g.kind != GenKind::Hyperbolic || !g.nu.is_zero()) continue;
      for (std::size_t i = 0; i < g.gamma.size(); ++i)
        if (g.gamma[i] != 0 && !is_y[i]) flips.insert((int)i);
    }
    if (flips.empty()) return chart;
    chart = relabel_invertible(chart, flips);
  }
}

}  // namespace binres
