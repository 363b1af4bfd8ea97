#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "mindeg/errors.hpp"
#include "mindeg/solver.hpp"

namespace mindeg {

namespace {

/// Weighted set cover over the minimal normal subgroups. Candidates are
/// sorted by (cost, lattice index), so the lowest set bit of any candidate
/// mask is also the cheapest candidate in it.
class CoverSearch
{
public:
  CoverSearch(std::vector<ElementSet> covers, std::vector<std::size_t> costs, std::size_t universe)
    : covers_(std::move(covers)), costs_(std::move(costs)), universe_(universe)
  {
    std::size_t const c = covers_.size();
    coverers_.assign(universe_, ElementSet(c));
    for (std::size_t q = 0; q < c; ++q)
      covers_[q].for_each([&](std::size_t k) { coverers_[k].set(q); });
  }

  void run()
  {
    ElementSet uncovered(universe_);
    for (std::size_t k = 0; k < universe_; ++k)
      uncovered.set(k);
    greedy(uncovered);
    std::vector<std::size_t> chosen;
    search(uncovered, 0, chosen);
  }

  std::size_t best_cost() const { return best_; }
  std::vector<std::size_t> const &best_set() const { return best_set_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  void greedy(ElementSet uncovered)
  {
    std::vector<std::size_t> picked;
    std::size_t cost = 0;
    while (uncovered.any()) {
      std::size_t pick = covers_.size();
      std::size_t gain = 0;
      for (std::size_t q = 0; q < covers_.size(); ++q) {
        std::size_t gq = covers_[q].count_and(uncovered);
        // maximize gain / cost
        if (gq && (pick == covers_.size() || gq * costs_[pick] > gain * costs_[q])) {
          pick = q;
          gain = gq;
        }
      }
      if (pick == covers_.size())
        return;  // infeasible; leave best_ unset
      picked.push_back(pick);
      cost += costs_[pick];
      uncovered -= covers_[pick];
    }
    best_ = cost;
    best_set_ = std::move(picked);
    std::sort(best_set_.begin(), best_set_.end());
  }

  void search(ElementSet const &uncovered, std::size_t cost, std::vector<std::size_t> &chosen)
  {
    ++nodes_;
    // The best completion depends only on what is still uncovered, so a
    // state reached before at no greater cost has nothing left to offer.
    auto [seen, fresh] = reached_.try_emplace(uncovered, cost);
    if (!fresh) {
      if (seen->second <= cost)
        return;
      seen->second = cost;
    }
    if (uncovered.none()) {
      if (cost < best_) {
        best_ = cost;
        best_set_ = chosen;
        std::sort(best_set_.begin(), best_set_.end());
      }
      return;
    }

    // Bound: every uncovered N needs a candidate costing at least the
    // cheapest one that covers N. Branch on the N with the fewest options.
    std::size_t lower = 0;
    std::size_t branch_on = universe_;
    std::size_t fewest = SIZE_MAX;
    bool feasible = true;
    uncovered.for_each([&](std::size_t k) {
      if (!feasible)
        return;
      std::size_t cheapest = coverers_[k].first();
      if (cheapest == covers_.size()) {
        feasible = false;
        return;
      }
      lower = std::max(lower, costs_[cheapest]);
      std::size_t options = coverers_[k].count();
      if (options < fewest) {
        fewest = options;
        branch_on = k;
      }
    });
    if (!feasible || cost + lower >= best_)
      return;

    ElementSet const &options = coverers_[branch_on];
    for (std::size_t q = options.first(); q < options.size(); q = options.next(q)) {
      if (cost + costs_[q] >= best_)
        break;
      chosen.push_back(q);
      search(uncovered - covers_[q], cost + costs_[q], chosen);
      chosen.pop_back();
    }
  }

  std::vector<ElementSet> covers_;
  std::vector<std::size_t> costs_;
  std::size_t universe_;
  std::vector<ElementSet> coverers_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> reached_;
  std::size_t best_ = SIZE_MAX;
  std::vector<std::size_t> best_set_;
  std::uint64_t nodes_ = 0;
};

} // namespace

SolveResult mu_exact(SubgroupLattice const &lattice)
{
  FiniteGroup const &g = lattice.group();
  SolveResult result;
  result.witness.parent = g;
  if (g.order() == 1) {
    result.mu = 1;
    result.witness.parts.push_back(Subgroup::whole(g));
    result.proven_optimal = true;
    return result;
  }

  auto const covers = cover_sets(lattice);
  std::size_t const universe = lattice.minimal_normals().size();

  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < lattice.size(); ++i)
    if (lattice.is_meet_irreducible(i) && covers[i].any())
      cand.push_back(i);

  auto cost = [&](std::size_t i) { return g.order() / lattice.at(i).order(); };

  // Drop H when another candidate covers at least as much for no more;
  // exact ties keep the lower lattice index.
  std::vector<std::size_t> kept;
  for (auto i : cand) {
    bool dominated = false;
    for (auto j : cand) {
      if (j == i || cost(j) > cost(i) || !covers[i].is_subset_of(covers[j]))
        continue;
      if (covers[j] != covers[i] || cost(j) < cost(i) || j < i) {
        dominated = true;
        break;
      }
    }
    if (!dominated)
      kept.push_back(i);
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [&](std::size_t a, std::size_t b) { return cost(a) < cost(b); });

  std::vector<ElementSet> cand_covers;
  std::vector<std::size_t> cand_costs;
  for (auto i : kept) {
    cand_covers.push_back(covers[i]);
    cand_costs.push_back(cost(i));
  }

  CoverSearch search(std::move(cand_covers), std::move(cand_costs), universe);
  search.run();
  if (search.best_cost() == SIZE_MAX)
    throw InvariantViolation("no faithful representation among meet-irreducible subgroups of " +
                             g.label());

  std::vector<std::size_t> parts;
  for (auto q : search.best_set())
    parts.push_back(kept[q]);
  std::sort(parts.begin(), parts.end());

  result.mu = search.best_cost();
  for (auto i : parts)
    result.witness.parts.push_back(lattice.at(i));
  result.nodes_explored = search.nodes();
  result.candidates_considered = kept.size();
  result.proven_optimal = true;
  return result;
}

SolveResult mu_exact(FiniteGroup const &g, std::size_t order_cap)
{
  return mu_exact(SubgroupLattice::compute(g, order_cap));
}

} // namespace mindeg
