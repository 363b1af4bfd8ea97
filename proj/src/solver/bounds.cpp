#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "mindeg/errors.hpp"
#include "mindeg/theorems.hpp"

namespace mindeg {

Fraction compression_ratio(std::size_t order, std::size_t mu)
{
  if (mu == 0)
    throw DomainError("compression ratio needs mu >= 1");
  return Fraction(order, mu);
}

Fraction compression_ratio(FiniteGroup const &g, std::size_t order_cap)
{
  return compression_ratio(g.order(), mu_exact(g, order_cap).mu);
}

std::string to_string(IncompressibleType t)
{
  switch (t) {
  case IncompressibleType::cyclic_prime_power: return "cyclic-prime-power";
  case IncompressibleType::generalized_quaternion: return "generalized-quaternion";
  case IncompressibleType::klein_four: return "klein-four";
  case IncompressibleType::compressible: return "compressible";
  }
  return "compressible";
}

IncompressibleType structural_type(FiniteGroup const &g)
{
  std::size_t const n = g.order();
  if (n == 1)
    return IncompressibleType::cyclic_prime_power;

  std::size_t max_order = 0, involutions = 0;
  for (Element x = 0; x < n; ++x) {
    auto o = g.element_order(x);
    max_order = std::max(max_order, o);
    involutions += o == 2;
  }
  bool const prime_power = prime_power_base(n).has_value();
  if (prime_power && max_order == n)
    return IncompressibleType::cyclic_prime_power;
  if (n == 4 && g.exponent() == 2)
    return IncompressibleType::klein_four;
  if (n >= 8 && prime_power_base(n) == 2 && involutions == 1 && max_order == n / 2)
    return IncompressibleType::generalized_quaternion;
  return IncompressibleType::compressible;
}

IncompressibleVerdict classify_incompressible(FiniteGroup const &g, std::size_t mu,
                                              std::size_t order_cap)
{
  (void)order_cap;
  IncompressibleVerdict v;
  v.structural_type = structural_type(g);
  v.mu = mu;
  v.cr = compression_ratio(g.order(), mu);
  bool const incompressible = v.cr == Fraction(1, 1);
  if (incompressible != (v.structural_type != IncompressibleType::compressible))
    throw InvariantViolation(g.label() + ": structural type " + to_string(v.structural_type) +
                             " disagrees with cr = " + v.cr.to_string());
  return v;
}

IncompressibleVerdict classify_incompressible(FiniteGroup const &g, std::size_t order_cap)
{
  return classify_incompressible(g, mu_exact(g, order_cap).mu, order_cap);
}

MonotonicityRecord cr_monotonicity_check(FiniteGroup const &g, Subgroup const &h,
                                         std::size_t order_cap)
{
  if (h.parent_order() != g.order())
    throw DomainError("subgroup does not belong to " + g.label());
  MonotonicityRecord rec;
  rec.cr_group = compression_ratio(g, order_cap);
  rec.cr_subgroup = compression_ratio(subgroup_as_group(g, h), order_cap);
  rec.holds = rec.cr_subgroup <= rec.cr_group;
  return rec;
}

SemidirectBoundRecord semidirect_bound_check(FiniteGroup const &g, FiniteGroup const &h,
                                             std::vector<Automorphism> const &action,
                                             std::size_t order_cap)
{
  auto const product = semidirect_product(g, h, action, order_cap);
  SemidirectBoundRecord rec;
  rec.mu_product = mu_exact(product, order_cap).mu;
  rec.bound = g.order() + mu_exact(h, order_cap).mu;
  rec.holds = rec.mu_product <= rec.bound;

  // rho(g0,h0) as (permutation of G, h0); the pair index is g0*|H| + h0.
  std::size_t const n = g.order(), m = h.order(), order = product.order();
  std::vector<std::vector<Element>> perm(order, std::vector<Element>(n));
  std::vector<Element> second(order);
  for (std::size_t x = 0; x < order; ++x) {
    auto const g0 = static_cast<Element>(x / m), h0 = static_cast<Element>(x % m);
    for (Element y = 0; y < n; ++y)
      perm[x][y] = g.mul(g0, action[h0][y]);
    second[x] = h0;
  }

  rec.embedding_homomorphic = true;
  for (Element x = 0; x < order && rec.embedding_homomorphic; ++x)
    for (Element y = 0; y < order && rec.embedding_homomorphic; ++y) {
      auto const xy = product.mul(x, y);
      if (second[xy] != h.mul(second[x], second[y])) {
        rec.embedding_homomorphic = false;
        break;
      }
      for (Element z = 0; z < n; ++z)
        if (perm[xy][z] != perm[x][perm[y][z]]) {
          rec.embedding_homomorphic = false;
          break;
        }
    }

  std::set<std::pair<std::vector<Element>, Element>> images;
  for (std::size_t x = 0; x < order; ++x)
    images.emplace(perm[x], second[x]);
  rec.embedding_injective = images.size() == order;
  return rec;
}

} // namespace mindeg
