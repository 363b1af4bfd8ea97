#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "mindeg/expr.hpp"
#include "mindeg/group.hpp"

namespace mindeg {

// ---- multiplication tables ----

/// Text format: first line n, then n rows of n indices; '#' starts a comment.
/// Throws FormatError (including for unreadable files).
FiniteGroup read_table(std::filesystem::path const &path);
FiniteGroup parse_table(std::string const &text, std::string label = "table");
std::string format_table(FiniteGroup const &g);

// ---- semidirect product files ----

struct SemidirectSpec
{
  FiniteGroup g;
  FiniteGroup h;
  std::vector<Automorphism> action;  ///< action[h] for every element of H
};

/// sd-file: "G <expr>", "H <expr>", then "h <index> : <images>" lines giving
/// the automorphism for elements that generate H; the rest of the action
/// follows by composition. '#' starts a comment. Paths inside the file
/// resolve relative to the file's directory.
/// Throws FormatError or InvalidActionError.
SemidirectSpec load_semidirect(std::filesystem::path const &path,
                               std::size_t order_cap = kDefaultOrderCap);
SemidirectSpec parse_semidirect(std::string const &text, std::filesystem::path const &base_dir,
                                std::size_t order_cap = kDefaultOrderCap);

// ---- catalog ----

struct CatalogTags
{
  bool abelian = false;
  bool p_group = false;
  bool cs_expected = false;
  bool incompressible_expected = false;

  friend bool operator==(CatalogTags const &, CatalogTags const &) = default;
};

struct CatalogEntry
{
  std::string name;
  GroupExpr expr;
  std::size_t order = 0;
  CatalogTags tags;
};

/// Every cyclic group, every noncyclic abelian group as Ab(prime powers in
/// descending order), Dn, Qn, S3, S4, SL(2,3), SL(2,5), then the direct
/// products of two of those that are not both abelian; all of order
/// 2..max_order, sorted by order (stable). Deterministic.
std::vector<CatalogEntry> catalog(std::size_t max_order);

std::string tags_to_string(CatalogTags const &t);

} // namespace mindeg
