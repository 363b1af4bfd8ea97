#pragma once

#include <map>
#include <string>
#include <vector>

#include "mindeg/catalog.hpp"
#include "mindeg/expr.hpp"

namespace fixture {

struct Named
{
  std::string name;
  mindeg::CatalogEntry entry;
  mindeg::FiniteGroup group;
};

/// Catalog entries up to max_order, built once per process.
inline std::vector<Named> const &catalog_groups(std::size_t max_order)
{
  static std::map<std::size_t, std::vector<Named>> memo;
  auto it = memo.find(max_order);
  if (it == memo.end()) {
    std::vector<Named> out;
    for (auto const &e : mindeg::catalog(max_order))
      out.push_back({e.name, e, mindeg::build(e.expr)});
    it = memo.emplace(max_order, std::move(out)).first;
  }
  return it->second;
}

/// Catalog atoms only (no products), up to max_order.
inline std::vector<Named> catalog_atoms(std::size_t max_order)
{
  std::vector<Named> out;
  for (auto const &n : catalog_groups(max_order))
    if (n.entry.expr.is_atom())
      out.push_back(n);
  return out;
}

} // namespace fixture
