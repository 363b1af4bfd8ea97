#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mindeg/element_set.hpp"
#include "mindeg/group.hpp"

namespace mindeg {

/// Every subgroup of a finite group, with containment and normality data.
///
/// Subgroups are indexed in construction order: the trivial subgroup first,
/// then cyclic subgroups by smallest generator, then joins in discovery
/// order. That order is the tie-break used throughout the solver.
class SubgroupLattice
{
public:
  /// Enumerates all subgroups by seeding with the cyclic subgroups and
  /// closing under join-with-cyclic. Throws ResourceError if the group
  /// exceeds order_cap.
  static SubgroupLattice compute(FiniteGroup const &g, std::size_t order_cap = kDefaultOrderCap);

  FiniteGroup const &group() const { return group_; }
  std::size_t size() const { return subgroups_.size(); }
  Subgroup const &at(std::size_t i) const { return subgroups_[i]; }
  std::vector<Subgroup> const &subgroups() const { return subgroups_; }

  std::optional<std::size_t> find(Subgroup const &h) const;
  std::size_t index(Subgroup const &h) const;  ///< throws DomainError if absent

  std::size_t trivial_index() const { return 0; }
  std::size_t top_index() const { return top_; }

  /// Subgroup i is contained in subgroup j.
  bool contained(std::size_t i, std::size_t j) const { return supersets_[i].test(j); }
  /// Indices of all subgroups containing subgroup i (including i).
  ElementSet const &supersets(std::size_t i) const { return supersets_[i]; }
  /// Minimal strict supergroups of subgroup i, in index order.
  std::vector<std::size_t> const &covers(std::size_t i) const { return covers_[i]; }

  bool is_normal(std::size_t i) const { return normal_[i]; }
  bool is_meet_irreducible(std::size_t i) const { return i == top_ || covers_[i].size() == 1; }
  std::vector<std::size_t> const &minimal_normals() const { return minimal_normals_; }

  /// A generating set for subgroup i (at most log2 |G| elements).
  std::vector<Element> const &generators(std::size_t i) const { return generators_[i]; }

private:
  FiniteGroup group_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<Element>> generators_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> lookup_;
  std::vector<ElementSet> supersets_;
  std::vector<std::vector<std::size_t>> covers_;
  std::vector<bool> normal_;
  std::vector<std::size_t> minimal_normals_;
  std::size_t top_ = 0;

  explicit SubgroupLattice(FiniteGroup g) : group_(std::move(g)) {}
};

/// Multiset of prime powers, sorted ascending.
struct PrimaryDecomposition
{
  std::vector<std::size_t> factors;
  friend bool operator==(PrimaryDecomposition const &, PrimaryDecomposition const &) = default;
};

Subgroup center(FiniteGroup const &g);
/// Largest normal subgroup of g inside h (intersection of all conjugates).
Subgroup core(FiniteGroup const &g, Subgroup const &h);
bool is_normal(FiniteGroup const &g, Subgroup const &h);

std::vector<Subgroup> minimal_normal_subgroups(SubgroupLattice const &lattice);
std::vector<Subgroup> minimal_normal_subgroups(FiniteGroup const &g);
Subgroup socle(SubgroupLattice const &lattice);
Subgroup socle(FiniteGroup const &g);

/// G[m]: elements whose order divides m. G must be abelian.
Subgroup torsion_layer(FiniteGroup const &g, std::size_t m);
/// Elements of h whose order divides m; h must be abelian.
Subgroup torsion_layer(FiniteGroup const &g, Subgroup const &h, std::size_t m);

/// Factors of order p^e of an abelian group, recovered from torsion layer
/// indices: the number of factors of order >= p^t is log_p [G[p^t] : G[p^(t-1)]].
PrimaryDecomposition primary_decomposition(FiniteGroup const &g);

bool is_meet_irreducible(SubgroupLattice const &lattice, Subgroup const &h);

// ---- small arithmetic helpers shared across modules ----

bool is_prime(std::size_t n);
std::vector<std::size_t> prime_divisors(std::size_t n);
/// Some prime p with n == p^e (e >= 1), or nullopt.
std::optional<std::size_t> prime_power_base(std::size_t n);

} // namespace mindeg
