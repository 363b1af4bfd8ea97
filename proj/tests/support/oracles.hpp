#pragma once

// Independent reference computations for the test suites. Everything here is
// deliberately naive and shares no code with the library beyond FiniteGroup's
// table accessors.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mindeg/gfp.hpp"
#include "mindeg/group.hpp"

namespace oracle {

using mindeg::Element;
using mindeg::FiniteGroup;
using ElementList = std::vector<Element>;  // sorted

/// multiset of element orders
std::map<std::size_t, std::size_t> order_profile(FiniteGroup const &g);

/// Exhaustive isomorphism search by generator images; order <= 16.
bool isomorphic(FiniteGroup const &a, FiniteGroup const &b);

/// associativity, identity at 0, inverses, Latin square
bool table_axioms_hold(FiniteGroup const &g);

/// every subgroup by closure of every subset containing 1; order <= 16
std::set<ElementList> all_subgroups_by_subsets(FiniteGroup const &g);
/// every subgroup as the closure of pairs of elements joined to a fixed point,
/// computed with plain sets; fine up to order ~64
std::set<ElementList> all_subgroups_by_pairs(FiniteGroup const &g);

ElementList closure(FiniteGroup const &g, ElementList gens);
ElementList center(FiniteGroup const &g);
/// intersection of all conjugates x H x^-1
ElementList core(FiniteGroup const &g, ElementList const &h);
bool is_normal(FiniteGroup const &g, ElementList const &h);
ElementList intersect(ElementList const &a, ElementList const &b);
bool subset(ElementList const &a, ElementList const &b);
/// minimal nontrivial normal subgroups among the given subgroups
std::vector<ElementList> minimal_normals(FiniteGroup const &g, std::set<ElementList> const &subs);
/// group generated by the minimal normal subgroups
ElementList socle(FiniteGroup const &g, std::set<ElementList> const &subs);

/// true if h is the meet of two strictly larger subgroups
bool meet_reducible(ElementList const &h, std::set<ElementList> const &subs);

/// smallest sum of indices over sets of subgroups with trivial core meet,
/// by depth-first search over subgroups in decreasing order with a cost cap
std::size_t mu_brute(FiniteGroup const &g, std::set<ElementList> const &subs);

/// All faithful sets of subgroups with total index exactly `target`.
std::vector<std::vector<ElementList>> faithful_sets_of_degree(FiniteGroup const &g,
                                                               std::set<ElementList> const &subs,
                                                               std::size_t target);

/// prime-power factors of an abelian group from element orders alone:
/// counts elements of each order per prime and peels off cyclic factors
std::vector<std::size_t> abelian_invariants(FiniteGroup const &g);

// ---- GF(p) ----

/// Leibniz determinant, n <= 7
mindeg::gfp::Residue det_leibniz(mindeg::gfp::MatrixGFp const &m);
mindeg::gfp::MatrixGFp random_matrix(std::mt19937_64 &rng, mindeg::gfp::Residue p, std::size_t rows,
                                     std::size_t cols);
mindeg::gfp::MatrixGFp random_invertible(std::mt19937_64 &rng, mindeg::gfp::Residue p,
                                         std::size_t n);
/// rank by brute-force: size of the row span, enumerated
std::size_t span_size(mindeg::gfp::Residue p, std::vector<mindeg::gfp::Vector> const &rows);

} // namespace oracle
