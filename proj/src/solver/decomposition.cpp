#include <string>

#include "mindeg/errors.hpp"
#include "mindeg/theorems.hpp"

namespace mindeg {

std::string to_string(DecompositionKind k)
{
  switch (k) {
  case DecompositionKind::faithful: return "faithful";
  case DecompositionKind::weak_faithful: return "weak-faithful";
  case DecompositionKind::none: return "none";
  }
  return "none";
}

Subgroup slice_first(Subgroup const &k, FiniteGroup const &g, FiniteGroup const &h)
{
  ElementSet s(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (k.contains(static_cast<Element>(x * h.order())))
      s.set(x);
  return Subgroup::from_closed_set(std::move(s));
}

Subgroup slice_second(Subgroup const &k, FiniteGroup const &g, FiniteGroup const &h)
{
  (void)g;
  ElementSet s(h.order());
  for (std::size_t y = 0; y < h.order(); ++y)
    if (k.contains(static_cast<Element>(y)))
      s.set(y);
  return Subgroup::from_closed_set(std::move(s));
}

namespace {

bool faithful_on(FiniteGroup const &grp, std::vector<Subgroup> const &parts)
{
  return is_faithful(Representation{grp, parts});
}

/// K = A x H for A = slice_first(K)
bool is_first_preimage(Subgroup const &k, FiniteGroup const &g, FiniteGroup const &h)
{
  return k.order() == slice_first(k, g, h).order() * h.order();
}

bool is_second_preimage(Subgroup const &k, FiniteGroup const &g, FiniteGroup const &h)
{
  return k.order() == slice_second(k, g, h).order() * g.order();
}

DecompositionReport classify(FiniteGroup const &g, FiniteGroup const &h, Representation const &r,
                             Split split)
{
  DecompositionReport rep;
  rep.degree = degree(r);

  std::vector<Subgroup> first_slices, second_slices;
  bool preimages = true;
  for (auto i : split.first) {
    first_slices.push_back(slice_first(r.parts[i], g, h));
    preimages = preimages && is_first_preimage(r.parts[i], g, h);
  }
  for (auto i : split.second) {
    second_slices.push_back(slice_second(r.parts[i], g, h));
    preimages = preimages && is_second_preimage(r.parts[i], g, h);
  }
  rep.induced_degree_first = degree(Representation{g, first_slices});
  rep.induced_degree_second = degree(Representation{h, second_slices});

  // For preimage parts the slice is the A (resp. B) of the definition, so
  // the faithful case adds only the shape condition to the weak one.
  bool const weak = faithful_on(g, first_slices) && faithful_on(h, second_slices);
  if (weak && preimages)
    rep.kind = DecompositionKind::faithful;
  else if (weak)
    rep.kind = DecompositionKind::weak_faithful;
  rep.split = std::move(split);
  return rep;
}

void require_product(FiniteGroup const &g, FiniteGroup const &h, Representation const &r)
{
  if (r.parent.order() != g.order() * h.order())
    throw DomainError("representation is not over " + g.label() + " x " + h.label());
}

} // namespace

DecompositionReport check_decomposition(FiniteGroup const &g, FiniteGroup const &h,
                                        Representation const &r, Split const &split)
{
  require_product(g, h, r);
  std::vector<int> seen(r.parts.size(), 0);
  for (auto i : split.first)
    if (i >= seen.size() || seen[i]++)
      throw DomainError("split is not a partition of the representation");
  for (auto i : split.second)
    if (i >= seen.size() || seen[i]++)
      throw DomainError("split is not a partition of the representation");
  for (auto s : seen)
    if (s != 1)
      throw DomainError("split is not a partition of the representation");
  return classify(g, h, r, split);
}

std::optional<DecompositionReport> find_weak_decomposition(FiniteGroup const &g,
                                                           FiniteGroup const &h,
                                                           Representation const &r)
{
  require_product(g, h, r);
  std::size_t const k = r.parts.size();
  if (k > 20)
    throw ResourceError("bipartition search is limited to 20 parts, got " + std::to_string(k));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    Split split;
    for (std::size_t i = 0; i < k; ++i)
      ((mask >> i) & 1u ? split.second : split.first).push_back(i);
    auto rep = classify(g, h, r, std::move(split));
    if (rep.kind != DecompositionKind::none)
      return rep;
  }
  return std::nullopt;
}

bool weak_decomposition_inequality_check(DecompositionReport const &report)
{
  if (report.kind == DecompositionKind::none)
    throw DomainError("inequality check needs a weak-faithful decomposition");
  return report.degree >= report.induced_degree_first + report.induced_degree_second;
}

} // namespace mindeg
