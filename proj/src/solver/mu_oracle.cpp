#include <string>
#include <unordered_map>

#include "mindeg/errors.hpp"
#include "mindeg/solver.hpp"

namespace mindeg {

namespace {

/// Kernel of the action on the left cosets of h: the elements g with
/// g x H = x H for every x.
ElementSet coset_action_kernel(FiniteGroup const &g, Subgroup const &h)
{
  std::size_t const n = g.order();
  std::vector<Element> label(n, static_cast<Element>(n));
  for (Element x = 0; x < n; ++x) {
    if (label[x] != n)
      continue;
    h.members().for_each([&](std::size_t y) { label[g.mul(x, static_cast<Element>(y))] = x; });
  }
  ElementSet kernel(n);
  for (Element a = 0; a < n; ++a) {
    bool fixes_all = true;
    for (Element x = 0; x < n && fixes_all; ++x)
      fixes_all = label[g.mul(a, x)] == label[x];
    if (fixes_all)
      kernel.set(a);
  }
  return kernel;
}

struct State
{
  std::size_t cost = 0;
  std::vector<std::size_t> chosen;
};

} // namespace

SolveResult mu_oracle(SubgroupLattice const &lattice, std::size_t oracle_cap)
{
  FiniteGroup const &g = lattice.group();
  std::size_t const n = g.order();
  if (n > oracle_cap)
    throw ResourceError("oracle search on " + g.label() + " (order " + std::to_string(n) +
                        ") exceeds the oracle cap " + std::to_string(oracle_cap));

  SolveResult result;
  result.witness.parent = g;
  result.candidates_considered = lattice.size();
  if (n == 1) {
    result.mu = 1;
    result.witness.parts.push_back(Subgroup::whole(g));
    result.proven_optimal = true;
    return result;
  }

  // Walk the subgroups in order; each subset so far is summarized by the
  // intersection of the kernels of its constituents. Two subsets with the
  // same intersection have identical futures, so only the cheaper survives.
  std::unordered_map<ElementSet, State, ElementSetHash> states;
  states.emplace(Subgroup::whole(g).members(), State{});
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    auto const kernel = coset_action_kernel(g, lattice.at(i));
    std::size_t const cost = n / lattice.at(i).order();
    std::vector<std::pair<ElementSet, State>> snapshot(states.begin(), states.end());
    for (auto const &[meet, st] : snapshot) {
      ++result.nodes_explored;
      std::size_t const c = st.cost + cost;
      if (c > n)
        continue;
      auto next = meet & kernel;
      auto it = states.find(next);
      if (it == states.end() || c < it->second.cost) {
        State s{c, st.chosen};
        s.chosen.push_back(i);
        states.insert_or_assign(std::move(next), std::move(s));
      }
    }
  }

  auto it = states.find(Subgroup::trivial(g).members());
  if (it == states.end())
    throw InvariantViolation("oracle found no faithful representation within the Cayley bound");
  result.mu = it->second.cost;
  for (auto i : it->second.chosen)
    result.witness.parts.push_back(lattice.at(i));
  result.proven_optimal = true;
  return result;
}

SolveResult mu_oracle(FiniteGroup const &g, std::size_t oracle_cap)
{
  if (g.order() > oracle_cap)
    throw ResourceError("oracle search on " + g.label() + " (order " +
                        std::to_string(g.order()) + ") exceeds the oracle cap " +
                        std::to_string(oracle_cap));
  return mu_oracle(SubgroupLattice::compute(g, oracle_cap), oracle_cap);
}

} // namespace mindeg
