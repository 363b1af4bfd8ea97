#include "mindeg/lattice.hpp"

#include <algorithm>
#include <string>

#include "mindeg/errors.hpp"

namespace mindeg {

SubgroupLattice SubgroupLattice::compute(FiniteGroup const &g, std::size_t order_cap)
{
  std::size_t const n = g.order();
  if (n > order_cap)
    throw ResourceError("subgroup lattice of " + g.label() + " (order " + std::to_string(n) +
                        ") exceeds the order cap " + std::to_string(order_cap));

  SubgroupLattice lat(g);
  auto add = [&](Subgroup s, std::vector<Element> gens) -> std::pair<std::size_t, bool> {
    auto [it, inserted] = lat.lookup_.try_emplace(s.members(), lat.subgroups_.size());
    if (inserted) {
      lat.subgroups_.push_back(std::move(s));
      lat.generators_.push_back(std::move(gens));
    }
    return {it->second, inserted};
  };

  add(Subgroup::trivial(g), {});

  // cyclic seeds, keyed by their smallest generator
  std::vector<std::pair<std::size_t, Element>> cyclic;
  for (Element a = 1; a < n; ++a) {
    Element const one[] = {a};
    auto [idx, fresh] = add(generate(g, one), {a});
    if (fresh)
      cyclic.emplace_back(idx, a);
  }

  // close under join with cyclic subgroups; joins[i] collects <S_i, C>
  std::vector<std::vector<std::size_t>> joins;
  for (std::size_t i = 0; i < lat.subgroups_.size(); ++i) {
    std::vector<std::size_t> found;
    for (auto [cidx, a] : cyclic) {
      if (lat.subgroups_[i].contains(a))
        continue;
      auto gens = lat.generators_[i];
      gens.push_back(a);
      auto j = generate(g, gens);
      auto [jidx, fresh] = add(std::move(j), std::move(gens));
      found.push_back(jidx);
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    joins.push_back(std::move(found));
  }

  std::size_t const count = lat.subgroups_.size();
  lat.top_ = lat.lookup_.at(Subgroup::whole(g).members());

  std::vector<std::size_t> orders(count);
  for (std::size_t i = 0; i < count; ++i)
    orders[i] = lat.subgroups_[i].order();

  lat.supersets_.assign(count, ElementSet(count));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (orders[j] % orders[i] == 0 &&
          lat.subgroups_[i].members().is_subset_of(lat.subgroups_[j].members()))
        lat.supersets_[i].set(j);

  // Every minimal strict supergroup of S is <S, g> for any g outside S, so
  // the covers are the minimal members of joins[i].
  lat.covers_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    auto const &cand = joins[i];
    for (auto m : cand) {
      bool minimal = true;
      for (auto other : cand)
        if (other != m && lat.supersets_[other].test(m)) {
          minimal = false;
          break;
        }
      if (minimal)
        lat.covers_[i].push_back(m);
    }
  }

  lat.normal_.assign(count, true);
  for (std::size_t i = 0; i < count; ++i)
    for (auto s : g.generators()) {
      bool ok = true;
      for (auto h : lat.generators_[i])
        if (!lat.subgroups_[i].contains(g.conj(s, h))) {
          ok = false;
          break;
        }
      if (!ok) {
        lat.normal_[i] = false;
        break;
      }
    }

  std::vector<bool> minimal(count, false);
  for (std::size_t i = 1; i < count; ++i)
    minimal[i] = lat.normal_[i];
  for (std::size_t i = 1; i < count; ++i) {
    if (!lat.normal_[i])
      continue;
    lat.supersets_[i].for_each([&](std::size_t j) {
      if (j != i)
        minimal[j] = false;
    });
  }
  for (std::size_t i = 1; i < count; ++i)
    if (minimal[i])
      lat.minimal_normals_.push_back(i);

  return lat;
}

std::optional<std::size_t> SubgroupLattice::find(Subgroup const &h) const
{
  auto it = lookup_.find(h.members());
  if (it == lookup_.end())
    return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::index(Subgroup const &h) const
{
  auto i = find(h);
  if (!i)
    throw DomainError("subgroup is not a member of this lattice");
  return *i;
}

bool is_meet_irreducible(SubgroupLattice const &lattice, Subgroup const &h)
{
  return lattice.is_meet_irreducible(lattice.index(h));
}

std::vector<Subgroup> minimal_normal_subgroups(SubgroupLattice const &lattice)
{
  std::vector<Subgroup> out;
  for (auto i : lattice.minimal_normals())
    out.push_back(lattice.at(i));
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(FiniteGroup const &g)
{
  return minimal_normal_subgroups(SubgroupLattice::compute(g));
}

Subgroup socle(SubgroupLattice const &lattice)
{
  std::vector<Element> gens;
  for (auto i : lattice.minimal_normals()) {
    auto const &more = lattice.generators(i);
    gens.insert(gens.end(), more.begin(), more.end());
  }
  return generate(lattice.group(), gens);
}

Subgroup socle(FiniteGroup const &g)
{
  return socle(SubgroupLattice::compute(g));
}

} // namespace mindeg
