#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "mindeg/catalog.hpp"
#include "mindeg/lattice.hpp"

namespace mindeg {

namespace {

using K = GroupExpr::Kind;

bool expected_abelian(GroupExpr const &e)
{
  switch (e.kind) {
  case K::cyclic:
  case K::abelian: return true;
  case K::symmetric: return e.params[0] <= 2;
  case K::product: return expected_abelian(*e.left) && expected_abelian(*e.right);
  default: return false;
  }
}

bool expected_cs(GroupExpr const &e)
{
  switch (e.kind) {
  case K::cyclic:
  case K::abelian:
  case K::quaternion: return true;
  case K::dihedral: return std::has_single_bit(e.params[0]);
  case K::symmetric: return e.params[0] == 2;
  case K::sl2: return e.params[0] != 2;
  case K::product: return expected_cs(*e.left) && expected_cs(*e.right);
  default: return false;
  }
}

bool expected_incompressible(GroupExpr const &e)
{
  switch (e.kind) {
  case K::cyclic: return prime_power_base(e.params[0]).has_value();
  case K::quaternion: return true;
  case K::abelian: return e.params == std::vector<std::size_t>{2, 2};
  default: return false;
  }
}

CatalogEntry make_entry(GroupExpr e)
{
  CatalogEntry c;
  c.name = to_string(e);
  c.order = expected_order(e);
  c.tags.abelian = expected_abelian(e);
  c.tags.p_group = prime_power_base(c.order).has_value();
  c.tags.cs_expected = expected_cs(e);
  c.tags.incompressible_expected = expected_incompressible(e);
  c.expr = std::move(e);
  return c;
}

/// Multisets of prime powers (nonincreasing) with product <= max_order that
/// repeat some prime; those with distinct primes are cyclic.
void noncyclic_abelian(std::size_t max_order, std::vector<std::vector<std::size_t>> &out)
{
  std::vector<std::size_t> powers;
  for (std::size_t q = 2; q <= max_order; ++q)
    if (prime_power_base(q))
      powers.push_back(q);

  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t limit_idx, std::size_t prod) {
    if (cur.size() >= 2) {
      std::set<std::size_t> primes;
      for (auto f : cur)
        primes.insert(*prime_power_base(f));
      if (primes.size() < cur.size())
        out.push_back(cur);
    }
    for (std::size_t i = 0; i <= limit_idx && i < powers.size(); ++i) {
      if (prod * powers[i] > max_order)
        break;
      cur.push_back(powers[i]);
      rec(i, prod * powers[i]);
      cur.pop_back();
    }
  };
  rec(powers.empty() ? 0 : powers.size() - 1, 1);
  for (auto &f : out)
    std::sort(f.begin(), f.end(), std::greater<>());
}

} // namespace

std::vector<CatalogEntry> catalog(std::size_t max_order)
{
  std::vector<CatalogEntry> base;
  for (std::size_t n = 2; n <= max_order; ++n)
    base.push_back(make_entry(GroupExpr::atom(K::cyclic, {n})));

  std::vector<std::vector<std::size_t>> ab;
  noncyclic_abelian(max_order, ab);
  std::sort(ab.begin(), ab.end());
  for (auto &f : ab)
    base.push_back(make_entry(GroupExpr::atom(K::abelian, f)));

  for (std::size_t n = 3; 2 * n <= max_order; ++n)
    base.push_back(make_entry(GroupExpr::atom(K::dihedral, {n})));
  for (std::size_t q = 8; q <= max_order; q *= 2)
    base.push_back(make_entry(GroupExpr::atom(K::quaternion, {q})));
  for (std::size_t n : {3, 4})
    base.push_back(make_entry(GroupExpr::atom(K::symmetric, {n})));
  for (std::size_t p : {3, 5})
    base.push_back(make_entry(GroupExpr::atom(K::sl2, {p})));

  std::erase_if(base, [&](CatalogEntry const &c) { return c.order > max_order; });
  std::stable_sort(base.begin(), base.end(),
                   [](auto const &a, auto const &b) { return a.order < b.order; });

  std::vector<CatalogEntry> out = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i].order * base[j].order > max_order)
        break;
      if (base[i].tags.abelian && base[j].tags.abelian)
        continue;
      out.push_back(make_entry(GroupExpr::product(base[i].expr, base[j].expr)));
    }
  std::stable_sort(out.begin(), out.end(),
                   [](auto const &a, auto const &b) { return a.order < b.order; });

  std::set<std::string> seen;
  std::erase_if(out, [&](CatalogEntry const &c) { return !seen.insert(c.name).second; });
  return out;
}

std::string tags_to_string(CatalogTags const &t)
{
  std::string out;
  auto add = [&](bool on, char const *name) {
    if (on)
      out += (out.empty() ? "" : ",") + std::string(name);
  };
  add(t.abelian, "abelian");
  add(t.p_group, "p-group");
  add(t.cs_expected, "CS-expected");
  add(t.incompressible_expected, "incompressible-expected");
  return out;
}

} // namespace mindeg
