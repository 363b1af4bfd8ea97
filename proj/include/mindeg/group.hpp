#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mindeg/element_set.hpp"

namespace mindeg {

using Element = std::uint32_t;

/// Default cap on group order for constructors and lattice enumeration.
inline constexpr std::size_t kDefaultOrderCap = 256;

/// A finite group given by its full multiplication table over element
/// indices 0..n-1. Index 0 is always the identity.
///
/// Instances are immutable and cheap to copy (the tables are shared).
class FiniteGroup
{
public:
  /// The trivial group.
  FiniteGroup();

  /// Validates a multiplication table and builds a group from it. If the
  /// identity is not at index 0 it is swapped there. Throws FormatError on
  /// the first violated axiom, naming the offending cell or triple.
  static FiniteGroup from_multiplication_table(
    std::vector<std::vector<std::size_t>> const &table, std::string label = "table");

  /// Builds a group from a table already known to satisfy the axioms with
  /// identity at 0. Constructors in this library use it; the test suite
  /// checks the axioms for everything they produce.
  static FiniteGroup from_trusted_table(std::size_t order, std::vector<Element> mult,
                                        std::string label);

  std::size_t order() const { return data_->order; }
  std::string const &label() const { return data_->label; }

  Element mul(Element a, Element b) const { return data_->mult[a * data_->order + b]; }
  Element inv(Element a) const { return data_->inv[a]; }
  /// g x g^-1
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }

  std::size_t element_order(Element a) const { return data_->element_order[a]; }
  bool is_abelian() const { return data_->abelian; }
  /// Largest element order divides this; equals lcm of element orders.
  std::size_t exponent() const;

  /// A small generating set (greedy, in index order).
  std::vector<Element> const &generators() const { return data_->generators; }

  /// Row-major table, n*n entries.
  std::span<Element const> table() const { return data_->mult; }

  bool same_as(FiniteGroup const &other) const { return data_ == other.data_; }

  FiniteGroup relabeled(std::string label) const;

private:
  struct Data
  {
    std::size_t order = 0;
    std::vector<Element> mult;
    std::vector<Element> inv;
    std::vector<std::size_t> element_order;
    std::vector<Element> generators;
    bool abelian = true;
    std::string label;
  };

  explicit FiniteGroup(std::shared_ptr<Data const> data) : data_(std::move(data)) {}

  std::shared_ptr<Data const> data_;
};

/// A subgroup stored as a membership bitset over the parent's elements.
/// Functions producing Subgroup values guarantee closure; use
/// Subgroup::from_members to validate an arbitrary set.
class Subgroup
{
public:
  Subgroup() = default;

  static Subgroup trivial(FiniteGroup const &g);
  static Subgroup whole(FiniteGroup const &g);
  /// Throws DomainError if the set is not closed or lacks the identity.
  static Subgroup from_members(FiniteGroup const &g, ElementSet members);
  static Subgroup from_elements(FiniteGroup const &g, std::span<Element const> elements);
  static Subgroup from_closed_set(ElementSet members) { return Subgroup(std::move(members)); }

  ElementSet const &members() const { return members_; }
  std::size_t order() const { return members_.count(); }
  std::size_t parent_order() const { return members_.size(); }
  bool contains(Element x) const { return members_.test(x); }
  bool is_trivial() const { return order() == 1; }
  bool is_subgroup_of(Subgroup const &other) const { return members_.is_subset_of(other.members_); }

  /// Sorted element indices.
  std::vector<Element> elements() const;

  friend bool operator==(Subgroup const &, Subgroup const &) = default;

private:
  explicit Subgroup(ElementSet members) : members_(std::move(members)) {}
  ElementSet members_;
};

/// Subgroup generated by the given elements.
Subgroup generate(FiniteGroup const &g, std::span<Element const> gens);
Subgroup intersect(Subgroup const &a, Subgroup const &b);
/// Subgroup generated by a and b.
Subgroup join(FiniteGroup const &g, Subgroup const &a, Subgroup const &b);
/// [G:H]
std::size_t index_of(FiniteGroup const &g, Subgroup const &h);

/// The subgroup as a group in its own right; element k of the result is the
/// k-th smallest member of h.
FiniteGroup subgroup_as_group(FiniteGroup const &g, Subgroup const &h, std::string label = {});

// ---- constructors ----

FiniteGroup make_cyclic(std::size_t n);
/// Direct product of cyclic groups; element index is mixed-radix with the
/// first factor most significant. An empty list gives the trivial group.
FiniteGroup make_abelian(std::vector<std::size_t> const &factors);
/// Dihedral group of order 2n; element r^k s^e has index e*n + k.
FiniteGroup make_dihedral(std::size_t n);
/// Generalized quaternion group of the given order (a power of two, >= 8).
/// Element a^i b^e has index e*(order/2) + i.
FiniteGroup make_generalized_quaternion(std::size_t order);
/// Symmetric group on n points, 1 <= n <= 5; permutations in lexicographic
/// order of their one-line notation.
FiniteGroup make_symmetric(std::size_t n);
/// SL(2, p) for p in {2, 3, 5}; identity first, then matrices (a,b,c,d) in
/// lexicographic order.
FiniteGroup make_special_linear2(std::size_t p);

/// Direct product; the pair (g, h) has index g*|H| + h.
FiniteGroup direct_product(FiniteGroup const &g, FiniteGroup const &h,
                           std::size_t order_cap = kDefaultOrderCap);

/// An automorphism of a group, given as the image of every element.
using Automorphism = std::vector<Element>;

/// Semidirect product G x| H with (g1,h1)(g2,h2) = (g1 phi_h1(g2), h1 h2).
/// action[h] is phi_h. Index layout matches direct_product. Throws
/// InvalidActionError if action is not a homomorphism H -> Aut(G).
FiniteGroup semidirect_product(FiniteGroup const &g, FiniteGroup const &h,
                               std::vector<Automorphism> const &action,
                               std::size_t order_cap = kDefaultOrderCap);

/// Checks that action is a homomorphism into Aut(G); throws InvalidActionError.
void validate_action(FiniteGroup const &g, FiniteGroup const &h,
                     std::vector<Automorphism> const &action);

/// Embeds a subgroup of a factor into a direct product under pair indexing.
Subgroup embed_first(FiniteGroup const &product, std::size_t second_order, Subgroup const &a);
Subgroup embed_second(FiniteGroup const &product, std::size_t second_order, Subgroup const &b);
/// A x B inside G x H.
Subgroup product_subgroup(Subgroup const &a, Subgroup const &b);

} // namespace mindeg
