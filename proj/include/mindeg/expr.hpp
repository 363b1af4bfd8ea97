#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mindeg/group.hpp"

namespace mindeg {

/// Syntax tree of a group expression.
///
///   expr := term { "x" term }
///   term := "C" INT | "Z" INT | "Ab(" INT {"," INT} ")" | "D" INT | "Q" INT
///         | "S" INT | "SL(2," INT ")" | "table:" PATH | "sd:" PATH | "(" expr ")"
///
/// Dn is the dihedral group of order 2n. Qn is generalized quaternion of
/// order n. C and Z are the same atom.
struct GroupExpr
{
  enum class Kind { cyclic, abelian, dihedral, quaternion, symmetric, sl2, table, semidirect, product };

  Kind kind = Kind::cyclic;
  std::vector<std::size_t> params;  ///< n, the factor list, or p
  std::string path;                 ///< table and semidirect atoms
  std::shared_ptr<GroupExpr const> left, right;

  static GroupExpr atom(Kind k, std::vector<std::size_t> params);
  static GroupExpr file(Kind k, std::string path);
  static GroupExpr product(GroupExpr a, GroupExpr b);

  bool is_atom() const { return kind != Kind::product; }

  friend bool operator==(GroupExpr const &a, GroupExpr const &b);
};

/// Throws ParseError with the 1-based column and the accepted tokens.
GroupExpr parse_group_expr(std::string_view text);

/// Canonical text; parse_group_expr(to_string(e)) == e.
std::string to_string(GroupExpr const &e);

/// Atoms of the product tree, left to right.
std::vector<GroupExpr> atoms(GroupExpr const &e);

/// Atoms printed, sorted, and joined with " x ". Products are commutative
/// up to isomorphism, so this is the cache key.
std::string normalized_key(GroupExpr const &e);

/// Order of the group the expression denotes, computed from the parameters
/// (file atoms are read). Throws DomainError for invalid atom parameters.
std::size_t expected_order(GroupExpr const &e, std::filesystem::path const &base_dir = {});

/// Builds the group. The total order is checked against order_cap before
/// anything is constructed. Relative file paths resolve against base_dir.
FiniteGroup build(GroupExpr const &e, std::size_t order_cap = kDefaultOrderCap,
                  std::filesystem::path const &base_dir = {});

/// Parses and builds.
FiniteGroup build(std::string_view text, std::size_t order_cap = kDefaultOrderCap,
                  std::filesystem::path const &base_dir = {});

} // namespace mindeg
