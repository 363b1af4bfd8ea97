#include "mindeg/group.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "mindeg/errors.hpp"

namespace mindeg {

FiniteGroup::FiniteGroup() : FiniteGroup(from_trusted_table(1, {0}, "C1")) {}

namespace {

ElementSet closure_raw(std::size_t n, std::span<Element const> mult,
                       std::span<Element const> gens, std::vector<Element> *list_out = nullptr)
{
  ElementSet set(n);
  std::vector<Element> list{0};
  set.set(0);
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (Element s : gens) {
      Element z = mult[list[k] * n + s];
      if (!set.test(z)) {
        set.set(z);
        list.push_back(z);
      }
    }
  }
  if (list_out)
    *list_out = std::move(list);
  return set;
}

} // namespace

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order, std::vector<Element> mult,
                                            std::string label)
{
  auto d = std::make_shared<Data>();
  d->order = order;
  d->mult = std::move(mult);
  d->label = std::move(label);

  d->inv.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (d->mult[a * order + b] == 0) {
        d->inv[a] = static_cast<Element>(b);
        break;
      }

  d->element_order.assign(order, 1);
  for (std::size_t a = 1; a < order; ++a) {
    std::size_t k = 1;
    Element x = static_cast<Element>(a);
    while (x != 0) {
      x = d->mult[x * order + a];
      ++k;
    }
    d->element_order[a] = k;
  }

  for (std::size_t a = 0; a < order && d->abelian; ++a)
    for (std::size_t b = a + 1; b < order; ++b)
      if (d->mult[a * order + b] != d->mult[b * order + a]) {
        d->abelian = false;
        break;
      }

  ElementSet reached(order);
  reached.set(0);
  for (std::size_t a = 1; a < order; ++a) {
    if (reached.test(a))
      continue;
    d->generators.push_back(static_cast<Element>(a));
    reached = closure_raw(order, d->mult, d->generators);
  }

  return FiniteGroup(std::move(d));
}

FiniteGroup FiniteGroup::from_multiplication_table(
  std::vector<std::vector<std::size_t>> const &table, std::string label)
{
  std::size_t const n = table.size();
  if (n == 0)
    throw FormatError("multiplication table is empty");
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n) {
      std::ostringstream os;
      os << "row " << r << " has " << table[r].size() << " entries, expected " << n;
      throw FormatError(os.str());
    }
    for (std::size_t c = 0; c < n; ++c)
      if (table[r][c] >= n) {
        std::ostringstream os;
        os << "entry (" << r << "," << c << ") = " << table[r][c] << " is out of range 0.." << n - 1;
        throw FormatError(os.str());
      }
  }

  // Latin square
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (std::size_t c = 0; c < n; ++c) {
      if (row_seen[table[r][c]]) {
        std::ostringstream os;
        os << "not a Latin square: value " << table[r][c] << " repeats in row " << r
           << " at cell (" << r << "," << c << ")";
        throw FormatError(os.str());
      }
      row_seen[table[r][c]] = true;
      if (col_seen[table[c][r]]) {
        std::ostringstream os;
        os << "not a Latin square: value " << table[c][r] << " repeats in column " << r
           << " at cell (" << c << "," << r << ")";
        throw FormatError(os.str());
      }
      col_seen[table[c][r]] = true;
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok)
      identity = e;
  }
  if (!identity)
    throw FormatError("no identity element: no row/column pair equals the index sequence");

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          std::ostringstream os;
          os << "not associative: (" << a << "*" << b << ")*" << c << " = "
             << table[table[a][b]][c] << " but " << a << "*(" << b << "*" << c
             << ") = " << table[a][table[b][c]] << " (witness triple " << a << ","
             << b << "," << c << ")";
          throw FormatError(os.str());
        }

  // swap identity into slot 0
  std::vector<std::size_t> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[*identity]);
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mult[relabel[a] * n + relabel[b]] = static_cast<Element>(relabel[table[a][b]]);
  return from_trusted_table(n, std::move(mult), std::move(label));
}

std::size_t FiniteGroup::exponent() const
{
  std::size_t e = 1;
  for (auto o : data_->element_order)
    e = std::lcm(e, o);
  return e;
}

FiniteGroup FiniteGroup::relabeled(std::string label) const
{
  auto d = std::make_shared<Data>(*data_);
  d->label = std::move(label);
  return FiniteGroup(std::move(d));
}

// ---- Subgroup ----

Subgroup Subgroup::trivial(FiniteGroup const &g)
{
  ElementSet s(g.order());
  s.set(0);
  return Subgroup(std::move(s));
}

Subgroup Subgroup::whole(FiniteGroup const &g)
{
  ElementSet s(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    s.set(i);
  return Subgroup(std::move(s));
}

Subgroup Subgroup::from_members(FiniteGroup const &g, ElementSet members)
{
  if (members.size() != g.order())
    throw DomainError("member set width does not match group order");
  if (!members.test(0))
    throw DomainError("subset does not contain the identity");
  auto idx = members.indices();
  for (auto a : idx) {
    if (!members.test(g.inv(static_cast<Element>(a))))
      throw DomainError("subset is not closed under inverses");
    for (auto b : idx)
      if (!members.test(g.mul(static_cast<Element>(a), static_cast<Element>(b))))
        throw DomainError("subset is not closed under multiplication");
  }
  return Subgroup(std::move(members));
}

Subgroup Subgroup::from_elements(FiniteGroup const &g, std::span<Element const> elements)
{
  ElementSet s(g.order());
  for (auto e : elements) {
    if (e >= g.order())
      throw DomainError("element index out of range");
    s.set(e);
  }
  return from_members(g, std::move(s));
}

std::vector<Element> Subgroup::elements() const
{
  std::vector<Element> out;
  out.reserve(order());
  members_.for_each([&](std::size_t i) { out.push_back(static_cast<Element>(i)); });
  return out;
}

Subgroup generate(FiniteGroup const &g, std::span<Element const> gens)
{
  return Subgroup::from_closed_set(closure_raw(g.order(), g.table(), gens));
}

Subgroup intersect(Subgroup const &a, Subgroup const &b)
{
  return Subgroup::from_closed_set(a.members() & b.members());
}

Subgroup join(FiniteGroup const &g, Subgroup const &a, Subgroup const &b)
{
  auto gens = a.elements();
  auto more = b.elements();
  gens.insert(gens.end(), more.begin(), more.end());
  return generate(g, gens);
}

std::size_t index_of(FiniteGroup const &g, Subgroup const &h)
{
  return g.order() / h.order();
}

FiniteGroup subgroup_as_group(FiniteGroup const &g, Subgroup const &h, std::string label)
{
  auto elems = h.elements();
  std::size_t const m = elems.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t k = 0; k < m; ++k)
    local[elems[k]] = static_cast<Element>(k);
  std::vector<Element> mult(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      mult[a * m + b] = local[g.mul(elems[a], elems[b])];
  if (label.empty())
    label = "subgroup of order " + std::to_string(m) + " in " + g.label();
  return FiniteGroup::from_trusted_table(m, std::move(mult), std::move(label));
}

Subgroup embed_first(FiniteGroup const &product, std::size_t second_order, Subgroup const &a)
{
  ElementSet s(product.order());
  a.members().for_each([&](std::size_t x) { s.set(x * second_order); });
  return Subgroup::from_closed_set(std::move(s));
}

Subgroup embed_second(FiniteGroup const &product, std::size_t second_order, Subgroup const &b)
{
  (void)second_order;
  ElementSet s(product.order());
  b.members().for_each([&](std::size_t y) { s.set(y); });
  return Subgroup::from_closed_set(std::move(s));
}

Subgroup product_subgroup(Subgroup const &a, Subgroup const &b)
{
  std::size_t const m = b.parent_order();
  ElementSet s(a.parent_order() * m);
  a.members().for_each([&](std::size_t x) {
    b.members().for_each([&](std::size_t y) { s.set(x * m + y); });
  });
  return Subgroup::from_closed_set(std::move(s));
}

} // namespace mindeg
