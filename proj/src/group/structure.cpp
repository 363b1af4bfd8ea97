#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "mindeg/errors.hpp"
#include "mindeg/lattice.hpp"

namespace mindeg {

bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::size_t> prime_divisors(std::size_t n)
{
  std::vector<std::size_t> out;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    out.push_back(n);
  return out;
}

std::optional<std::size_t> prime_power_base(std::size_t n)
{
  auto ps = prime_divisors(n);
  if (ps.size() != 1)
    return std::nullopt;
  return ps.front();
}

Subgroup center(FiniteGroup const &g)
{
  ElementSet z(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (auto s : g.generators())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central)
      z.set(x);
  }
  return Subgroup::from_closed_set(std::move(z));
}

Subgroup core(FiniteGroup const &g, Subgroup const &h)
{
  ElementSet k(g.order());
  h.members().for_each([&](std::size_t x) {
    for (Element y = 0; y < g.order(); ++y)
      if (!h.contains(g.conj(y, static_cast<Element>(x))))
        return;
    k.set(x);
  });
  return Subgroup::from_closed_set(std::move(k));
}

bool is_normal(FiniteGroup const &g, Subgroup const &h)
{
  return core(g, h) == h;
}

namespace {

void require_abelian(FiniteGroup const &g, Subgroup const &h)
{
  auto elems = h.elements();
  for (auto a : elems)
    for (auto b : elems)
      if (g.mul(a, b) != g.mul(b, a))
        throw DomainError("torsion layers are defined for abelian groups only; " + g.label() +
                          " restricted to the given subgroup is nonabelian");
}

} // namespace

Subgroup torsion_layer(FiniteGroup const &g, std::size_t m)
{
  if (!g.is_abelian())
    throw DomainError("torsion_layer requires an abelian group, " + g.label() + " is not");
  return torsion_layer(g, Subgroup::whole(g), m);
}

Subgroup torsion_layer(FiniteGroup const &g, Subgroup const &h, std::size_t m)
{
  if (m == 0)
    throw DomainError("torsion layer index must be positive");
  require_abelian(g, h);
  ElementSet s(g.order());
  h.members().for_each([&](std::size_t x) {
    if (m % g.element_order(static_cast<Element>(x)) == 0)
      s.set(x);
  });
  return Subgroup::from_closed_set(std::move(s));
}

PrimaryDecomposition primary_decomposition(FiniteGroup const &g)
{
  if (!g.is_abelian())
    throw DomainError("primary decomposition requires an abelian group, " + g.label() +
                      " is not");
  PrimaryDecomposition out;
  std::size_t const n = g.order();
  for (auto p : prime_divisors(n)) {
    std::size_t p_part = 1;
    for (std::size_t r = n; r % p == 0; r /= p)
      p_part *= p;

    // at_least[t] = number of cyclic factors of order >= p^t
    std::vector<std::size_t> at_least{0};
    std::size_t prev = 1, pt = 1;
    while (prev < p_part) {
      pt *= p;
      std::size_t cur = torsion_layer(g, pt).order();
      std::size_t ratio = cur / prev;
      std::size_t log = 0;
      while (ratio % p == 0) {
        ratio /= p;
        ++log;
      }
      if (ratio != 1 || cur % prev != 0)
        throw InvariantViolation("torsion layer index is not a power of " + std::to_string(p));
      at_least.push_back(log);
      prev = cur;
    }
    at_least.push_back(0);

    std::size_t power = 1;
    for (std::size_t t = 1; t + 1 < at_least.size(); ++t) {
      power *= p;
      if (at_least[t] < at_least[t + 1])
        throw InvariantViolation("torsion layer counts are not monotone");
      for (std::size_t c = at_least[t + 1]; c < at_least[t]; ++c)
        out.factors.push_back(power);
    }
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

} // namespace mindeg
