#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "mindeg/errors.hpp"
#include "mindeg/solver.hpp"

namespace mindeg {

std::size_t m_value(PrimaryDecomposition const &d)
{
  if (d.factors.empty())
    return 1;
  return std::accumulate(d.factors.begin(), d.factors.end(), std::size_t{0});
}

namespace {

/// Order of x modulo the subgroup s.
std::size_t relative_order(FiniteGroup const &g, Subgroup const &s, Element x)
{
  std::size_t k = 1;
  Element y = x;
  while (!s.contains(y)) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

/// Basis of an abelian p-group P <= G: repeatedly take an element whose
/// order equals the largest order in P/S and whose cyclic group meets S
/// trivially, where S is the span of the elements taken so far.
std::vector<Element> p_basis(FiniteGroup const &g, Subgroup const &p_part)
{
  std::vector<Element> basis;
  auto span = Subgroup::trivial(g);
  auto const elems = p_part.elements();
  while (span.order() < p_part.order()) {
    std::size_t top = 0;
    for (auto x : elems)
      top = std::max(top, relative_order(g, span, x));
    std::optional<Element> pick;
    for (auto x : elems)
      if (g.element_order(x) == top && relative_order(g, span, x) == top) {
        pick = x;
        break;
      }
    if (!pick)
      throw InvariantViolation("no cyclic direct factor of maximal order found");
    basis.push_back(*pick);
    span = generate(g, basis);
  }
  return basis;
}

} // namespace

AbelianSolution mu_abelian(FiniteGroup const &g)
{
  if (!g.is_abelian())
    throw DomainError("mu_abelian requires an abelian group, " + g.label() + " is not");

  AbelianSolution out;
  out.mu = m_value(primary_decomposition(g));
  out.witness.parent = g;
  if (g.order() == 1) {
    out.witness.parts.push_back(Subgroup::whole(g));
    return out;
  }

  for (auto p : prime_divisors(g.order())) {
    std::size_t p_part = 1;
    for (std::size_t r = g.order(); r % p == 0; r /= p)
      p_part *= p;
    auto b = p_basis(g, torsion_layer(g, p_part));
    out.basis.insert(out.basis.end(), b.begin(), b.end());
  }

  for (std::size_t j = 0; j < out.basis.size(); ++j) {
    std::vector<Element> others;
    for (std::size_t i = 0; i < out.basis.size(); ++i)
      if (i != j)
        others.push_back(out.basis[i]);
    out.witness.parts.push_back(generate(g, others));
  }

  if (degree(out.witness) != out.mu || !is_faithful(out.witness))
    throw InvariantViolation("abelian witness does not realize m(G) faithfully for " + g.label());
  return out;
}

} // namespace mindeg
