#include "binres/transform.hpp"

#include <algorithm>

#include "binres/error.hpp"

namespace binres {

Exponents BlowupSubstitution::apply(const Exponents& e) const {
  Exponents r = e;
  Rational sum = 0;
  for (int j : center) sum += e[(std::size_t)j];
  r[(std::size_t)chart_var] = sum;
  return r;
}

namespace {

Generator transform_generator(const Generator& g, const BlowupSubstitution& sub,
                              const std::vector<char>& y_mask) {
  std::vector<RawTerm> ts = g.terms();
  for (auto& t : ts) t.expo = sub.apply(t.expo);
  return normalize_generator(std::move(ts), y_mask);
}

}  // namespace

Generator strict_transform_gen(const Generator& g, const BlowupSubstitution& sub,
                               const std::vector<char>& y_mask,
                               const std::vector<char>& exceptional) {
  Generator t = transform_generator(g, sub, y_mask);
  std::vector<char> keep(exceptional.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = !exceptional[i];
  t.nu = t.nu.restricted(keep);
  return t;
}

std::vector<Chart> blowup(const Chart& chart, const Center& z, const Rational& c, int next_age,
                          int first_child_id) {
  if (z.vars.empty()) fail(ErrorKind::Input, "empty blow-up center");
  for (int i : z.vars)
    if (chart.vars[(std::size_t)i].is_y)
      fail(ErrorKind::Input, "center variable is invertible: " + chart.vars[(std::size_t)i].name);

  Stratum zs{z.vars};
  Rational theta = eord_ideal(chart.ideal, zs);
  if (theta < c) fail(ErrorKind::Input, "center not permissible: E-order below the control");

  std::vector<int> sorted = z.vars;
  std::sort(sorted.begin(), sorted.end());

  std::vector<Chart> children;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    int xi = sorted[k];
    BlowupSubstitution sub{sorted, xi};

    Chart child = chart;
    child.id = first_child_id + (int)k;
    child.vars[(std::size_t)xi].age = next_age;
    child.lineage = Lineage{LineageKind::Blowup, chart.id, sorted, xi};

    std::vector<char> y_mask = child.y_mask();
    child.ideal.mpart = sub.apply(chart.ideal.mpart);
    for (std::size_t gi = 0; gi < chart.ideal.gens.size(); ++gi)
      child.ideal.gens[gi] = transform_generator(chart.ideal.gens[gi], sub, y_mask);
    child.ideal = refactorize(child.ideal, child.exc_mask());

    // controlled transform: divide the total transform by I(Y')^c
    Rational& slot = child.ideal.mpart[(std::size_t)xi];
    if (slot < c) fail(ErrorKind::Invariant, "controlled transform would be non-polynomial");
    slot -= c;

    for (auto& g : child.total_gens) g = transform_generator(g, sub, y_mask);

    children.push_back(detect_hyperbolic_and_relabel(std::move(child)));
  }
  return children;
}

}  // namespace binres
