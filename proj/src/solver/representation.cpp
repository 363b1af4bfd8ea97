#include <algorithm>
#include <set>
#include <string>

#include "mindeg/errors.hpp"
#include "mindeg/solver.hpp"

namespace mindeg {

std::size_t degree(Representation const &r)
{
  std::size_t d = 0;
  for (auto const &h : r.parts)
    d += index_of(r.parent, h);
  return d;
}

bool is_faithful(Representation const &r)
{
  auto meet = Subgroup::whole(r.parent);
  for (auto const &h : r.parts)
    meet = intersect(meet, core(r.parent, h));
  return meet.is_trivial();
}

std::vector<Permutation> realize_action(Representation const &r)
{
  FiniteGroup const &g = r.parent;
  std::size_t const n = g.order();

  // coset_id[k][x] = point (global numbering) of the coset x H_k
  std::vector<std::vector<std::uint32_t>> coset_id;
  std::uint32_t offset = 0;
  for (auto const &h : r.parts) {
    std::vector<std::uint32_t> id(n, UINT32_MAX);
    std::uint32_t next = offset;
    for (Element x = 0; x < n; ++x) {
      if (id[x] != UINT32_MAX)
        continue;
      h.members().for_each([&](std::size_t y) { id[g.mul(x, static_cast<Element>(y))] = next; });
      ++next;
    }
    coset_id.push_back(std::move(id));
    offset = next;
  }

  std::vector<Permutation> out(n, Permutation(offset));
  for (Element a = 0; a < n; ++a)
    for (std::size_t k = 0; k < r.parts.size(); ++k)
      for (Element x = 0; x < n; ++x)
        out[a][coset_id[k][x]] = coset_id[k][g.mul(a, x)];
  return out;
}

std::size_t image_size(std::vector<Permutation> const &action)
{
  return std::set<Permutation>(action.begin(), action.end()).size();
}

Subgroup action_kernel(FiniteGroup const &g, std::vector<Permutation> const &action)
{
  ElementSet k(g.order());
  for (Element a = 0; a < g.order(); ++a)
    if (action[a] == action[0])
      k.set(a);
  return Subgroup::from_closed_set(std::move(k));
}

std::vector<ElementSet> cover_sets(SubgroupLattice const &lattice)
{
  auto const &mins = lattice.minimal_normals();
  std::vector<ElementSet> out(lattice.size(), ElementSet(mins.size()));
  // A normal N lies in core(H) exactly when it lies in H.
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t k = 0; k < mins.size(); ++k)
      if (!lattice.contained(mins[k], i))
        out[i].set(k);
  return out;
}

Representation induced_representation(Representation const &r, Subgroup const &h)
{
  auto sub = subgroup_as_group(r.parent, h);
  auto elems = h.elements();
  Representation out{sub, {}};
  for (auto const &k : r.parts) {
    ElementSet local(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (k.contains(elems[i]))
        local.set(i);
    out.parts.push_back(Subgroup::from_closed_set(std::move(local)));
  }
  return out;
}

Representation reduce_to_meet_irreducible(Representation const &r, SubgroupLattice const &lattice)
{
  if (r.parent.order() != lattice.group().order())
    throw DomainError("lattice belongs to a different group");
  if (!is_faithful(r))
    throw DomainError("reduce_to_meet_irreducible needs a faithful representation");
  auto const mu = mu_exact(lattice).mu;
  if (degree(r) != mu)
    throw DomainError("reduce_to_meet_irreducible needs a minimal-degree representation (degree " +
                      std::to_string(degree(r)) + ", mu " + std::to_string(mu) + ")");

  std::vector<std::size_t> parts;
  for (auto const &h : r.parts)
    parts.push_back(lattice.index(h));

  // Each step removes one meet-reducible part; the antichain property of a
  // minimal representation rules out revisiting a configuration, and the
  // lattice is finite.
  std::size_t const step_limit = lattice.size() * lattice.size() + 1;
  for (std::size_t step = 0;; ++step) {
    auto it = std::find_if(parts.begin(), parts.end(),
                           [&](std::size_t k) { return !lattice.is_meet_irreducible(k); });
    if (it == parts.end())
      break;
    if (step >= step_limit)
      throw InvariantViolation("meet-irreducible reduction did not terminate");
    auto const &covers = lattice.covers(*it);
    std::size_t m = covers[0], l = covers[1];
    *it = m;
    parts.push_back(l);
  }
  std::sort(parts.begin(), parts.end());

  Representation out{r.parent, {}};
  for (auto k : parts)
    out.parts.push_back(lattice.at(k));
  if (!is_faithful(out) || degree(out) != mu)
    throw InvariantViolation("meet-irreducible reduction changed faithfulness or degree");
  return out;
}

Representation reduce_to_meet_irreducible(Representation const &r)
{
  return reduce_to_meet_irreducible(r, SubgroupLattice::compute(r.parent));
}

} // namespace mindeg
