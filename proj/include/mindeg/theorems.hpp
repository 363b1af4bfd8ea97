#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mindeg/fraction.hpp"
#include "mindeg/solver.hpp"

namespace mindeg {

// ---- decompositions of representations of G x H ----

/// Assignment of the parts of a representation of G x H to the G side
/// (`first`) and the H side (`second`), as indices into parts.
struct Split
{
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
};

enum class DecompositionKind { faithful, weak_faithful, none };

std::string to_string(DecompositionKind k);

struct DecompositionReport
{
  Split split;
  DecompositionKind kind = DecompositionKind::none;
  std::size_t degree = 0;                 ///< degree of R over G x H
  std::size_t induced_degree_first = 0;   ///< degree of R'_G over G
  std::size_t induced_degree_second = 0;  ///< degree of R''_H over H
};

/// {g : (g,1) in K}
Subgroup slice_first(Subgroup const &k, FiniteGroup const &g, FiniteGroup const &h);
/// {h : (1,h) in K}
Subgroup slice_second(Subgroup const &k, FiniteGroup const &g, FiniteGroup const &h);

/// Classifies a split of R (a representation of G x H under pair indexing).
/// faithful: every G-side part is A x H and every H-side part is G x B with
/// the A's (resp. B's) faithful on G (resp. H). weak_faithful: the G-side
/// parts meet G x 1 in a faithful representation of G, and likewise for H.
/// Throws DomainError if split does not partition the parts.
DecompositionReport check_decomposition(FiniteGroup const &g, FiniteGroup const &h,
                                        Representation const &r, Split const &split);

/// First weak-faithful bipartition, scanning masks 0..2^|R|-1 where bit i
/// puts part i on the H side. Throws ResourceError for more than 20 parts.
std::optional<DecompositionReport> find_weak_decomposition(FiniteGroup const &g,
                                                           FiniteGroup const &h,
                                                           Representation const &r);

/// degree(R) >= mu_G(R'_G) + mu_H(R''_H). Throws DomainError unless the
/// report is at least weak-faithful.
bool weak_decomposition_inequality_check(DecompositionReport const &report);

// ---- classes CS and CSE ----

/// Nontrivial with socle contained in the center.
bool is_cs(SubgroupLattice const &lattice);
bool is_cs(FiniteGroup const &g, std::size_t order_cap = kDefaultOrderCap);

struct CseResult
{
  bool member = false;
  std::optional<Subgroup> witness;  ///< a CS subgroup H with mu(H) = mu(G)
};

/// Tries G first, then the other subgroups in lattice order. Needs mu of
/// every subgroup, so throws ResourceError above oracle_cap.
CseResult is_cse(FiniteGroup const &g, std::size_t oracle_cap = kDefaultOracleCap);

enum class AdditivityGuarantee { coprime, cs, cse, none };

std::string to_string(AdditivityGuarantee k);

struct AdditivityRecord
{
  std::size_t lhs = 0;  ///< mu(G x H)
  std::size_t rhs = 0;  ///< mu(G) + mu(H)
  bool equal = false;
  AdditivityGuarantee guarantee = AdditivityGuarantee::none;
};

/// Computes both sides exactly and tags the result that guarantees
/// equality, if any. Throws InvariantViolation if lhs > rhs.
AdditivityRecord verify_additivity(FiniteGroup const &g, FiniteGroup const &h,
                                   std::size_t order_cap = kDefaultOrderCap,
                                   std::size_t oracle_cap = kDefaultOracleCap);

// ---- compression ratio ----

/// |G| / mu(G), exact.
Fraction compression_ratio(FiniteGroup const &g, std::size_t order_cap = kDefaultOrderCap);
Fraction compression_ratio(std::size_t order, std::size_t mu);

enum class IncompressibleType { cyclic_prime_power, generalized_quaternion, klein_four, compressible };

std::string to_string(IncompressibleType t);

/// Structural test alone: cyclic of prime-power order, generalized
/// quaternion (order 2^k >= 8, one involution, cyclic subgroup of index 2),
/// or Klein four. The trivial group counts as cyclic of order p^0.
IncompressibleType structural_type(FiniteGroup const &g);

struct IncompressibleVerdict
{
  IncompressibleType structural_type = IncompressibleType::compressible;
  Fraction cr;
  std::size_t mu = 0;
};

/// Structural type plus cr. Throws InvariantViolation if the structural
/// type disagrees with cr == 1.
IncompressibleVerdict classify_incompressible(FiniteGroup const &g,
                                              std::size_t order_cap = kDefaultOrderCap);
IncompressibleVerdict classify_incompressible(FiniteGroup const &g, std::size_t mu,
                                              std::size_t order_cap);

struct MonotonicityRecord
{
  Fraction cr_subgroup;
  Fraction cr_group;
  bool holds = false;
};

/// cr(H) <= cr(G), i.e. mu(G) <= [G:H] mu(H).
MonotonicityRecord cr_monotonicity_check(FiniteGroup const &g, Subgroup const &h,
                                         std::size_t order_cap = kDefaultOrderCap);

// ---- semidirect products ----

struct SemidirectBoundRecord
{
  std::size_t mu_product = 0;
  std::size_t bound = 0;  ///< |G| + mu(H)
  bool holds = false;
  /// rho(g0,h0) = (g -> g0 phi_h0(g), h0) into Sym(G) x H
  bool embedding_homomorphic = false;
  bool embedding_injective = false;
};

SemidirectBoundRecord semidirect_bound_check(FiniteGroup const &g, FiniteGroup const &h,
                                             std::vector<Automorphism> const &action,
                                             std::size_t order_cap = kDefaultOrderCap);

// ---- induced representation on the socle of a CS group ----

struct SocleBlock
{
  std::size_t prime = 0;
  std::size_t dim = 0;                     ///< dim Z(G)[p]
  std::vector<std::size_t> parts;          ///< indices into R.parts
  std::vector<std::size_t> part_dims;      ///< dim(G_i cap Z(G)[p]) per part
};

struct SocleReport
{
  bool faithful_on_socle = false;
  bool per_prime_decomposition = false;
  bool no_redundant_constituents = false;
  bool codimension_one = false;
  std::vector<SocleBlock> blocks;

  bool all() const
  {
    return faithful_on_socle && per_prime_decomposition && no_redundant_constituents &&
           codimension_one;
  }
};

/// Checks the properties of the representation induced on Soc(G) for G in
/// CS and R minimal-degree faithful with meet-irreducible parts. Throws
/// DomainError if those preconditions fail.
SocleReport socle_induced_properties_check(Representation const &r,
                                           SubgroupLattice const &lattice);
SocleReport socle_induced_properties_check(Representation const &r);

} // namespace mindeg
