#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mindeg/group.hpp"
#include "mindeg/lattice.hpp"

namespace mindeg {

/// A permutation representation of a group, given by the multiset of point
/// stabilizers of its transitive constituents. The action is on the disjoint
/// union of the left coset spaces G/H.
struct Representation
{
  FiniteGroup parent;
  std::vector<Subgroup> parts;
};

/// sum of [G:H] over the parts
std::size_t degree(Representation const &r);
/// The intersection of the cores of the parts is trivial. An empty
/// representation is faithful only on the trivial group.
bool is_faithful(Representation const &r);

using Permutation = std::vector<std::uint32_t>;

/// Coset action of every group element on the disjoint union of the coset
/// spaces (points of part k follow those of parts 0..k-1). Entry g is the
/// permutation by which element g acts.
std::vector<Permutation> realize_action(Representation const &r);
/// Number of distinct permutations among the images.
std::size_t image_size(std::vector<Permutation> const &action);
/// Elements acting as the identity.
Subgroup action_kernel(FiniteGroup const &g, std::vector<Permutation> const &action);

/// For each lattice member H, the positions k (into lattice.minimal_normals())
/// such that minimal normal N_k is not contained in core(H).
std::vector<ElementSet> cover_sets(SubgroupLattice const &lattice);

struct SolveResult
{
  std::size_t mu = 0;
  Representation witness;
  std::uint64_t nodes_explored = 0;
  std::uint64_t candidates_considered = 0;
  bool proven_optimal = false;
};

/// Exact minimal faithful degree by branch-and-bound weighted set cover over
/// the minimal normal subgroups, with meet-irreducible subgroups as
/// candidates. The trivial group has mu = 1 by convention.
SolveResult mu_exact(SubgroupLattice const &lattice);
SolveResult mu_exact(FiniteGroup const &g, std::size_t order_cap = kDefaultOrderCap);

inline constexpr std::size_t kDefaultOracleCap = 48;

/// Brute-force minimal faithful degree over every subset of every subgroup.
/// Subsets reaching the same intersection of cores are merged (keeping the
/// cheapest), and totals above |G| are discarded. Shares nothing with
/// mu_exact beyond the subgroup list. Throws ResourceError above oracle_cap.
SolveResult mu_oracle(FiniteGroup const &g, std::size_t oracle_cap = kDefaultOracleCap);
SolveResult mu_oracle(SubgroupLattice const &lattice, std::size_t oracle_cap = kDefaultOracleCap);

/// Sum of the prime-power factors; the empty decomposition maps to 1.
std::size_t m_value(PrimaryDecomposition const &d);

struct AbelianSolution
{
  std::size_t mu = 0;
  /// One complement-of-a-cyclic-factor subgroup per primary factor.
  Representation witness;
  /// A basis g_1..g_k with G the internal direct product of the <g_i>.
  std::vector<Element> basis;
};

/// mu of an abelian group from its primary decomposition, with the explicit
/// witness: for a basis g_1..g_k of prime-power orders, the k subgroups
/// generated by all basis elements but one. Throws DomainError when nonabelian.
AbelianSolution mu_abelian(FiniteGroup const &g);

/// Parts intersected with h, expressed over subgroup_as_group(parent, h).
Representation induced_representation(Representation const &r, Subgroup const &h);

/// Rewrites a minimal-degree faithful representation until every part is
/// meet-irreducible: a meet-reducible part K is replaced by its first two
/// covers (lattice order), whose meet is K. Throws DomainError if the input
/// is not faithful of degree mu(G).
Representation reduce_to_meet_irreducible(Representation const &r, SubgroupLattice const &lattice);
Representation reduce_to_meet_irreducible(Representation const &r);

} // namespace mindeg
