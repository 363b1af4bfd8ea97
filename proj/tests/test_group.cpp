#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mindeg/catalog.hpp"
#include "mindeg/errors.hpp"
#include "mindeg/group.hpp"
#include "mindeg/lattice.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mindeg;

namespace {

std::size_t involutions(FiniteGroup const &g)
{
  auto prof = oracle::order_profile(g);
  return prof.count(2) ? prof[2] : 0;
}

Element first_of_order(FiniteGroup const &g, std::size_t k)
{
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == k)
      return x;
  FAIL("no element of order " << k);
  return 0;
}

Subgroup cyclic(FiniteGroup const &g, Element x)
{
  std::vector<Element> gens{x};
  return generate(g, gens);
}

std::vector<Subgroup> subgroups_of(FiniteGroup const &g)
{
  return SubgroupLattice::compute(g).subgroups();
}

std::vector<Automorphism> inversion_action(FiniteGroup const &cn)
{
  Automorphism id(cn.order()), inv(cn.order());
  for (Element x = 0; x < cn.order(); ++x) {
    id[x] = x;
    inv[x] = cn.inv(x);
  }
  return {id, inv};
}

} // namespace

TEST_CASE("cyclic and abelian constructors")
{
  CHECK(make_cyclic(1).order() == 1);
  auto c6 = make_cyclic(6);
  CHECK(c6.element_order(2) == 3);
  CHECK(c6.element_order(3) == 2);

  auto v4 = make_abelian({2, 2});
  CHECK(v4.order() == 4);
  CHECK(v4.exponent() == 2);
  CHECK(oracle::isomorphic(make_abelian({4, 3}), make_cyclic(12)));
  CHECK(make_abelian({}).order() == 1);
}

TEST_CASE("dihedral groups")
{
  auto d3 = make_dihedral(3);
  CHECK(d3.order() == 6);
  CHECK_FALSE(d3.is_abelian());
  CHECK(oracle::center(d3).size() == 1);
  CHECK(oracle::center(make_dihedral(4)).size() == 2);
  CHECK(oracle::isomorphic(d3, make_symmetric(3)));
  CHECK_THROWS_AS(make_dihedral(2), DomainError);
}

TEST_CASE("generalized quaternion groups")
{
  CHECK(involutions(make_generalized_quaternion(8)) == 1);
  CHECK(involutions(make_generalized_quaternion(16)) == 1);
  CHECK(involutions(make_generalized_quaternion(32)) == 1);
  CHECK_THROWS_AS(make_generalized_quaternion(12), DomainError);
  CHECK_THROWS_AS(make_generalized_quaternion(4), DomainError);
}

TEST_CASE("symmetric groups")
{
  CHECK(make_symmetric(3).order() == 6);
  auto s4 = make_symmetric(4);
  CHECK(s4.order() == 24);
  CHECK(oracle::center(s4).size() == 1);
  CHECK(oracle::isomorphic(make_symmetric(2), make_cyclic(2)));
  CHECK_THROWS_AS(make_symmetric(6), DomainError);
  CHECK_THROWS_AS(make_symmetric(0), DomainError);
}

TEST_CASE("SL(2,p)")
{
  auto sl5 = make_special_linear2(5);
  CHECK(sl5.order() == 120);
  CHECK(involutions(sl5) == 1);
  CHECK(make_special_linear2(3).order() == 24);
  CHECK(oracle::isomorphic(make_special_linear2(2), make_symmetric(3)));
  CHECK_THROWS_AS(make_special_linear2(7), DomainError);
}

TEST_CASE("direct products")
{
  CHECK(oracle::isomorphic(direct_product(make_cyclic(2), make_cyclic(3)), make_cyclic(6)));
  CHECK(oracle::isomorphic(direct_product(make_cyclic(2), make_cyclic(1)), make_cyclic(2)));
  CHECK(direct_product(make_generalized_quaternion(8), make_cyclic(3)).order() == 24);
  CHECK_THROWS_AS(direct_product(make_symmetric(5), make_cyclic(3)), ResourceError);

  auto g = make_symmetric(3), h = make_cyclic(4);
  auto p = direct_product(g, h);
  for (Element a = 0; a < p.order(); ++a)
    for (Element b = 0; b < p.order(); ++b)
      REQUIRE(p.mul(a, b) == g.mul(a / 4, b / 4) * 4 + h.mul(a % 4, b % 4));
}

TEST_CASE("semidirect products")
{
  auto c4 = make_cyclic(4), c3 = make_cyclic(3);
  std::vector<Automorphism> trivial(3, Automorphism{0, 1, 2, 3});
  auto sd = semidirect_product(c4, c3, trivial);
  auto dp = direct_product(c4, c3);
  CHECK(std::ranges::equal(sd.table(), dp.table()));

  for (std::size_t n = 3; n <= 8; ++n) {
    CAPTURE(n);
    auto cn = make_cyclic(n);
    CHECK(oracle::isomorphic(semidirect_product(cn, make_cyclic(2), inversion_action(cn)),
                             make_dihedral(n)));
  }

  auto s = semidirect_product(c3, make_cyclic(2), inversion_action(c3));
  CHECK(s.order() == 6);
  CHECK_FALSE(s.is_abelian());

  // x -> x+1 is not an automorphism
  std::vector<Automorphism> shift{{0, 1, 2, 3}, {1, 2, 3, 0}};
  CHECK_THROWS_AS(semidirect_product(c4, make_cyclic(2), shift), InvalidActionError);
  // an automorphism of order 2 cannot be the image of a generator of C3
  std::vector<Automorphism> bad{{0, 1, 2, 3}, {0, 3, 2, 1}, {0, 1, 2, 3}};
  CHECK_THROWS_AS(semidirect_product(c4, c3, bad), InvalidActionError);
}

TEST_CASE("table axioms hold for every constructed group")
{
  for (auto const &n : fixture::catalog_groups(48)) {
    CAPTURE(n.name);
    REQUIRE(oracle::table_axioms_hold(n.group));
  }
  CHECK(oracle::table_axioms_hold(make_special_linear2(5)));
  CHECK(oracle::table_axioms_hold(make_symmetric(5)));
  CHECK(oracle::table_axioms_hold(make_generalized_quaternion(64)));
}

TEST_CASE("multiplication tables")
{
  CHECK(FiniteGroup::from_multiplication_table({{0}}).order() == 1);

  auto z3 = FiniteGroup::from_multiplication_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(oracle::isomorphic(z3, make_cyclic(3)));

  // identity at index 2
  auto moved = FiniteGroup::from_multiplication_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  CHECK(moved.order() == 3);
  CHECK(moved.mul(0, 1) == 1);
  CHECK(oracle::table_axioms_hold(moved));

  // Latin square with identity 0 but not associative
  std::vector<std::vector<std::size_t>> nonassoc{
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_WITH_AS(FiniteGroup::from_multiplication_table(nonassoc),
                       doctest::Contains("associat"), FormatError);

  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({{0, 1}, {0, 1}}), FormatError);
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({{1, 1}, {1, 0}}), FormatError);
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({{0, 5}, {1, 0}}), FormatError);
  CHECK_THROWS_AS(FiniteGroup::from_multiplication_table({}), FormatError);

  for (auto const &n : fixture::catalog_groups(16)) {
    CAPTURE(n.name);
    auto again = parse_table(format_table(n.group));
    CHECK(oracle::order_profile(again) == oracle::order_profile(n.group));
    CHECK(oracle::isomorphic(again, n.group));
  }
}

TEST_CASE("center")
{
  auto c12 = make_cyclic(12);
  CHECK(center(c12).order() == 12);
  CHECK(center(make_symmetric(3)).is_trivial());
  auto q8 = make_generalized_quaternion(8);
  CHECK(center(q8).order() == 2);
  CHECK(center(q8).contains(first_of_order(q8, 2)));

  for (auto const &n : fixture::catalog_groups(48)) {
    CAPTURE(n.name);
    CHECK(center(n.group).elements() == oracle::center(n.group));
  }
}

TEST_CASE("subgroup lattice examples")
{
  auto l6 = SubgroupLattice::compute(make_cyclic(6));
  CHECK(l6.size() == 4);
  std::vector<std::size_t> orders;
  for (auto const &s : l6.subgroups())
    orders.push_back(s.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::size_t>{1, 2, 3, 6});

  CHECK(SubgroupLattice::compute(make_abelian({2, 2})).size() == 5);

  auto lq = SubgroupLattice::compute(make_generalized_quaternion(8));
  CHECK(lq.size() == 6);
  for (std::size_t i = 0; i < lq.size(); ++i)
    CHECK(lq.is_normal(i));

  CHECK_THROWS_AS(SubgroupLattice::compute(make_special_linear2(5), 100), ResourceError);
}

TEST_CASE("lattice agrees with brute-force subgroup enumeration")
{
  for (auto const &n : fixture::catalog_groups(48)) {
    CAPTURE(n.name);
    auto lat = SubgroupLattice::compute(n.group);
    std::set<oracle::ElementList> mine;
    for (auto const &s : lat.subgroups())
      mine.insert(s.elements());
    REQUIRE(mine.size() == lat.size());
    auto expected = n.group.order() <= 16 ? oracle::all_subgroups_by_subsets(n.group)
                                          : oracle::all_subgroups_by_pairs(n.group);
    CHECK(mine == expected);

    CHECK(lat.at(lat.trivial_index()).is_trivial());
    CHECK(lat.at(lat.top_index()).order() == n.group.order());
    for (std::size_t i = 0; i < lat.size(); ++i) {
      REQUIRE(n.group.order() % lat.at(i).order() == 0);
      CHECK(lat.is_normal(i) == oracle::is_normal(n.group, lat.at(i).elements()));
      for (std::size_t j = 0; j < lat.size(); ++j) {
        CHECK(lat.contained(i, j) ==
              oracle::subset(lat.at(i).elements(), lat.at(j).elements()));
        CHECK(lat.find(intersect(lat.at(i), lat.at(j))).has_value());
      }
    }
  }
}

TEST_CASE("core")
{
  auto s3 = make_symmetric(3);
  auto t = cyclic(s3, first_of_order(s3, 2));
  CHECK(core(s3, t).is_trivial());
  auto a3 = cyclic(s3, first_of_order(s3, 3));
  CHECK(core(s3, a3) == a3);

  auto q8 = make_generalized_quaternion(8);
  auto minus_one = first_of_order(q8, 2);
  for (auto const &h : subgroups_of(q8))
    if (!h.is_trivial())
      CHECK(core(q8, h).contains(minus_one));

  for (auto const &n : fixture::catalog_groups(24)) {
    CAPTURE(n.name);
    for (auto const &h : subgroups_of(n.group))
      CHECK(core(n.group, h).elements() == oracle::core(n.group, h.elements()));
  }
}

TEST_CASE("minimal normal subgroups and socle")
{
  auto v4 = make_abelian({2, 2});
  auto mins = minimal_normal_subgroups(v4);
  CHECK(mins.size() == 3);
  for (auto const &m : mins)
    CHECK(m.order() == 2);
  CHECK(socle(v4).order() == 4);

  auto sl5 = make_special_linear2(5);
  auto sl5_mins = minimal_normal_subgroups(sl5);
  REQUIRE(sl5_mins.size() == 1);
  CHECK(sl5_mins[0] == center(sl5));

  for (std::size_t q : {2, 4, 8, 16, 3, 9, 27, 5, 25}) {
    auto m = minimal_normal_subgroups(make_cyclic(q));
    REQUIRE(m.size() == 1);
    CHECK(prime_power_base(q) == m[0].order());
  }

  auto q8 = make_generalized_quaternion(8);
  CHECK(socle(q8) == center(q8));
  CHECK(socle(make_cyclic(1)).is_trivial());

  auto s3 = make_symmetric(3);
  auto s3s3 = direct_product(s3, s3);
  CHECK(socle(s3s3) == product_subgroup(socle(s3), socle(s3)));

  for (auto const &n : fixture::catalog_groups(24)) {
    CAPTURE(n.name);
    auto subs = oracle::all_subgroups_by_pairs(n.group);
    std::set<oracle::ElementList> expected, got;
    for (auto const &m : oracle::minimal_normals(n.group, subs))
      expected.insert(m);
    for (auto const &m : minimal_normal_subgroups(n.group))
      got.insert(m.elements());
    CHECK(got == expected);
    CHECK(socle(n.group).elements() == oracle::socle(n.group, subs));
  }
}

TEST_CASE("torsion layers")
{
  auto g = make_abelian({4, 2});
  CHECK(torsion_layer(g, 1).is_trivial());
  CHECK(torsion_layer(g, 2).order() == 4);
  CHECK(torsion_layer(g, 8).order() == 8);
  CHECK_THROWS_AS(torsion_layer(make_symmetric(3), 2), DomainError);

  for (auto const &n : fixture::catalog_groups(64)) {
    if (!n.group.is_abelian())
      continue;
    CAPTURE(n.name);
    CHECK(torsion_layer(n.group, n.group.order()).order() == n.group.order());
    for (std::size_t m = 1; m <= 12; ++m) {
      std::size_t count = 0;
      for (Element x = 0; x < n.group.order(); ++x)
        count += m % n.group.element_order(x) == 0;
      CHECK(torsion_layer(n.group, m).order() == count);
    }
  }
}

TEST_CASE("primary decomposition")
{
  CHECK(primary_decomposition(make_cyclic(6)).factors == std::vector<std::size_t>{2, 3});
  CHECK(primary_decomposition(make_abelian({4, 2})).factors == std::vector<std::size_t>{2, 4});
  CHECK(primary_decomposition(make_abelian({2, 2})).factors == std::vector<std::size_t>{2, 2});
  CHECK(primary_decomposition(make_cyclic(1)).factors.empty());
  CHECK_THROWS_AS(primary_decomposition(make_generalized_quaternion(8)), DomainError);

  for (auto const &n : fixture::catalog_groups(100)) {
    if (!n.group.is_abelian())
      continue;
    CAPTURE(n.name);
    auto f = primary_decomposition(n.group).factors;
    CHECK(f == oracle::abelian_invariants(n.group));
    CHECK(std::accumulate(f.begin(), f.end(), std::size_t{1}, std::multiplies<>()) ==
          n.group.order());
  }
}

TEST_CASE("meet-irreducibility")
{
  auto v4 = SubgroupLattice::compute(make_abelian({2, 2}));
  CHECK(is_meet_irreducible(v4, v4.at(v4.top_index())));
  CHECK_FALSE(is_meet_irreducible(v4, v4.at(v4.trivial_index())));

  for (std::size_t q : {4, 8, 9, 27, 25}) {
    auto c = make_cyclic(q);
    auto lat = SubgroupLattice::compute(c);
    auto p = *prime_power_base(q);
    CHECK(is_meet_irreducible(lat, cyclic(c, static_cast<Element>(p))));
  }

  for (auto const &n : fixture::catalog_groups(24)) {
    CAPTURE(n.name);
    auto lat = SubgroupLattice::compute(n.group);
    auto subs = oracle::all_subgroups_by_pairs(n.group);
    for (std::size_t i = 0; i < lat.size(); ++i)
      CHECK(lat.is_meet_irreducible(i) != oracle::meet_reducible(lat.at(i).elements(), subs));
  }
}

TEST_CASE("subgroups of coprime products split")
{
  auto atoms = fixture::catalog_atoms(48);
  std::size_t checked = 0;
  for (auto const &a : atoms)
    for (auto const &b : atoms) {
      if (std::gcd(a.group.order(), b.group.order()) != 1 || a.group.order() * b.group.order() > 48)
        continue;
      CAPTURE(a.name);
      CAPTURE(b.name);
      auto p = direct_product(a.group, b.group);
      std::size_t const m = b.group.order();
      for (auto const &k : subgroups_of(p)) {
        std::set<Element> left, right;
        for (auto x : k.elements()) {
          left.insert(x / m);
          right.insert(static_cast<Element>(x % m));
        }
        CHECK(k.order() == left.size() * right.size());
        for (auto x : left)
          for (auto y : right)
            CHECK(k.contains(static_cast<Element>(x * m + y)));
        ++checked;
      }
    }
  CHECK(checked > 0);

  // the named cases
  for (auto [g, h] : {std::pair{make_cyclic(4), make_cyclic(3)},
                      std::pair{make_symmetric(3), make_cyclic(5)}}) {
    auto p = direct_product(g, h);
    for (auto const &k : subgroups_of(p)) {
      auto a = Subgroup::from_elements(g, [&] {
        std::vector<Element> v;
        for (auto x : k.elements())
          v.push_back(static_cast<Element>(x / h.order()));
        return v;
      }());
      auto b = Subgroup::from_elements(h, [&] {
        std::vector<Element> v;
        for (auto x : k.elements())
          v.push_back(static_cast<Element>(x % h.order()));
        return v;
      }());
      CHECK(k == product_subgroup(a, b));
    }
  }
}

TEST_CASE("socle of a CS group is the product of the central p-torsion")
{
  std::size_t cs_groups = 0;
  for (auto const &n : fixture::catalog_groups(48)) {
    auto soc = socle(n.group);
    auto z = center(n.group);
    if (!soc.is_subgroup_of(z))
      continue;
    CAPTURE(n.name);
    ++cs_groups;
    std::vector<Element> gens;
    for (auto p : prime_divisors(z.order()))
      for (auto x : z.elements())
        if (n.group.element_order(x) == p)
          gens.push_back(x);
    CHECK(soc == generate(n.group, gens));
  }
  CHECK(cs_groups > 20);
}

TEST_CASE("socle of a direct product")
{
  auto atoms = fixture::catalog_atoms(48);
  for (auto const &a : atoms)
    for (auto const &b : atoms) {
      if (a.group.order() * b.group.order() > 48)
        continue;
      CAPTURE(a.name);
      CAPTURE(b.name);
      auto p = direct_product(a.group, b.group);
      CHECK(socle(p) == product_subgroup(socle(a.group), socle(b.group)));
    }
}

TEST_CASE("subgroups of abelian p-groups are dominated factorwise")
{
  std::size_t groups = 0;
  for (auto const &n : fixture::catalog_groups(64)) {
    if (!n.group.is_abelian() || !prime_power_base(n.group.order()))
      continue;
    CAPTURE(n.name);
    ++groups;
    auto big = primary_decomposition(n.group).factors;
    std::sort(big.rbegin(), big.rend());
    for (auto const &h : subgroups_of(n.group)) {
      auto small = primary_decomposition(subgroup_as_group(n.group, h)).factors;
      std::sort(small.rbegin(), small.rend());
      REQUIRE(small.size() <= big.size());
      for (std::size_t i = 0; i < small.size(); ++i)
        CHECK(small[i] <= big[i]);
    }
  }
  CHECK(groups > 10);
}

TEST_CASE("subgroup validation")
{
  auto c6 = make_cyclic(6);
  ElementSet bad(6);
  bad.set(0);
  bad.set(1);
  CHECK_THROWS_AS(Subgroup::from_members(c6, bad), DomainError);
  ElementSet good(6);
  good.set(0);
  good.set(3);
  CHECK(Subgroup::from_members(c6, good).order() == 2);
  CHECK(index_of(c6, Subgroup::from_members(c6, good)) == 3);
}
