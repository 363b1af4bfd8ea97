#include <bit>
#include <limits>
#include <string>

#include "mindeg/catalog.hpp"
#include "mindeg/errors.hpp"
#include "mindeg/expr.hpp"

namespace mindeg {

namespace {

std::filesystem::path resolve(std::string const &path, std::filesystem::path const &base_dir)
{
  std::filesystem::path p(path);
  if (p.is_relative() && !base_dir.empty())
    return base_dir / p;
  return p;
}

std::size_t saturating_mul(std::size_t a, std::size_t b)
{
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

[[noreturn]] void bad_atom(GroupExpr const &e, std::string const &why)
{
  throw DomainError("invalid atom '" + to_string(e) + "': " + why);
}

std::size_t atom_order(GroupExpr const &e, std::filesystem::path const &base_dir)
{
  using K = GroupExpr::Kind;
  switch (e.kind) {
  case K::cyclic:
    if (e.params[0] < 1)
      bad_atom(e, "order must be at least 1");
    return e.params[0];
  case K::abelian: {
    std::size_t n = 1;
    for (auto f : e.params) {
      if (f < 2)
        bad_atom(e, "every factor must be at least 2");
      n = saturating_mul(n, f);
    }
    return n;
  }
  case K::dihedral:
    if (e.params[0] < 3)
      bad_atom(e, "Dn needs n >= 3 (Dn has order 2n)");
    return saturating_mul(2, e.params[0]);
  case K::quaternion:
    if (e.params[0] < 8 || !std::has_single_bit(e.params[0]))
      bad_atom(e, "order must be a power of two, at least 8");
    return e.params[0];
  case K::symmetric: {
    if (e.params[0] < 1 || e.params[0] > 5)
      bad_atom(e, "Sn is supported for 1 <= n <= 5");
    std::size_t n = 1;
    for (std::size_t k = 2; k <= e.params[0]; ++k)
      n *= k;
    return n;
  }
  case K::sl2: {
    auto p = e.params[0];
    if (p != 2 && p != 3 && p != 5)
      bad_atom(e, "SL(2,p) is supported for p in {2, 3, 5}");
    return p * (p * p - 1);
  }
  case K::table: return read_table(resolve(e.path, base_dir)).order();
  case K::semidirect: {
    auto sd = load_semidirect(resolve(e.path, base_dir), std::numeric_limits<std::size_t>::max());
    return sd.g.order() * sd.h.order();
  }
  case K::product: break;
  }
  throw InvariantViolation("atom_order called on a product");
}

FiniteGroup build_tree(GroupExpr const &e, std::size_t cap, std::filesystem::path const &base_dir)
{
  using K = GroupExpr::Kind;
  try {
    switch (e.kind) {
    case K::cyclic: return make_cyclic(e.params[0]);
    case K::abelian: return make_abelian(e.params);
    case K::dihedral: return make_dihedral(e.params[0]);
    case K::quaternion: return make_generalized_quaternion(e.params[0]);
    case K::symmetric: return make_symmetric(e.params[0]);
    case K::sl2: return make_special_linear2(e.params[0]);
    case K::table: return read_table(resolve(e.path, base_dir)).relabeled(to_string(e));
    case K::semidirect: {
      auto sd = load_semidirect(resolve(e.path, base_dir), cap);
      return semidirect_product(sd.g, sd.h, sd.action, cap).relabeled(to_string(e));
    }
    case K::product:
      return direct_product(build_tree(*e.left, cap, base_dir), build_tree(*e.right, cap, base_dir),
                            cap)
        .relabeled(to_string(e));
    }
  } catch (DomainError const &err) {
    if (e.is_atom())
      bad_atom(e, err.what());
    throw;
  }
  throw InvariantViolation("unknown expression kind");
}

} // namespace

std::size_t expected_order(GroupExpr const &e, std::filesystem::path const &base_dir)
{
  if (e.is_atom())
    return atom_order(e, base_dir);
  return saturating_mul(expected_order(*e.left, base_dir), expected_order(*e.right, base_dir));
}

FiniteGroup build(GroupExpr const &e, std::size_t order_cap, std::filesystem::path const &base_dir)
{
  auto const n = expected_order(e, base_dir);
  if (n > order_cap)
    throw ResourceError(to_string(e) + " has order " +
                        (n == std::numeric_limits<std::size_t>::max() ? std::string("beyond 2^64")
                                                                      : std::to_string(n)) +
                        ", above the order cap " + std::to_string(order_cap));
  return build_tree(e, order_cap, base_dir);
}

FiniteGroup build(std::string_view text, std::size_t order_cap, std::filesystem::path const &base_dir)
{
  return build(parse_group_expr(text), order_cap, base_dir);
}

} // namespace mindeg
