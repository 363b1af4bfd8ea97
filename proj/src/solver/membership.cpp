#include <numeric>
#include <string>

#include "mindeg/errors.hpp"
#include "mindeg/theorems.hpp"

namespace mindeg {

bool is_cs(SubgroupLattice const &lattice)
{
  FiniteGroup const &g = lattice.group();
  if (g.order() == 1)
    return false;
  return socle(lattice).is_subgroup_of(center(g));
}

bool is_cs(FiniteGroup const &g, std::size_t order_cap)
{
  if (g.order() == 1)
    return false;
  return is_cs(SubgroupLattice::compute(g, order_cap));
}

CseResult is_cse(FiniteGroup const &g, std::size_t oracle_cap)
{
  if (g.order() > oracle_cap)
    throw ResourceError("CSE test on " + g.label() + " (order " + std::to_string(g.order()) +
                        ") exceeds the oracle cap " + std::to_string(oracle_cap));
  CseResult out;
  if (g.order() == 1)
    return out;

  auto const lattice = SubgroupLattice::compute(g, oracle_cap);
  if (is_cs(lattice)) {
    out.member = true;
    out.witness = Subgroup::whole(g);
    return out;
  }
  std::size_t const mu = mu_exact(lattice).mu;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    auto const &h = lattice.at(i);
    // mu(H) <= |H|, so smaller subgroups cannot reach mu(G)
    if (h.order() < mu || h.order() == g.order())
      continue;
    auto const sub = subgroup_as_group(g, h);
    auto const sub_lattice = SubgroupLattice::compute(sub, oracle_cap);
    if (is_cs(sub_lattice) && mu_exact(sub_lattice).mu == mu) {
      out.member = true;
      out.witness = h;
      return out;
    }
  }
  return out;
}

std::string to_string(AdditivityGuarantee k)
{
  switch (k) {
  case AdditivityGuarantee::coprime: return "coprime";
  case AdditivityGuarantee::cs: return "CS";
  case AdditivityGuarantee::cse: return "CSE";
  case AdditivityGuarantee::none: return "none";
  }
  return "none";
}

AdditivityRecord verify_additivity(FiniteGroup const &g, FiniteGroup const &h,
                                   std::size_t order_cap, std::size_t oracle_cap)
{
  auto const product = direct_product(g, h, order_cap);
  AdditivityRecord rec;
  rec.lhs = mu_exact(product, order_cap).mu;
  rec.rhs = mu_exact(g, order_cap).mu + mu_exact(h, order_cap).mu;
  rec.equal = rec.lhs == rec.rhs;

  if (g.order() > 1 && h.order() > 1) {
    if (std::gcd(g.order(), h.order()) == 1)
      rec.guarantee = AdditivityGuarantee::coprime;
    else if (is_cs(g, order_cap) && is_cs(h, order_cap))
      rec.guarantee = AdditivityGuarantee::cs;
    else if (g.order() <= oracle_cap && h.order() <= oracle_cap && is_cse(g, oracle_cap).member &&
             is_cse(h, oracle_cap).member)
      rec.guarantee = AdditivityGuarantee::cse;
  }

  if (rec.lhs > rec.rhs)
    throw InvariantViolation("mu(" + product.label() + ") = " + std::to_string(rec.lhs) +
                             " exceeds mu(G) + mu(H) = " + std::to_string(rec.rhs));
  return rec;
}

} // namespace mindeg
