#include <map>
#include <string>

#include "mindeg/errors.hpp"
#include "mindeg/gfp.hpp"
#include "mindeg/theorems.hpp"

namespace mindeg {

namespace {

/// Z(G)[p] as GF(p)^d: a basis and the coordinate vector of each member.
struct Layer
{
  std::size_t prime = 0;
  std::vector<Element> basis;
  std::map<Element, gfp::Vector> coords;

  std::size_t dim() const { return basis.size(); }

  gfp::SubspaceGFp span_of(Subgroup const &h) const
  {
    std::vector<gfp::Vector> vs;
    for (auto const &[x, v] : coords)
      if (h.contains(x))
        vs.push_back(v);
    return gfp::SubspaceGFp(static_cast<gfp::Residue>(prime), dim(), vs);
  }
};

Layer make_layer(FiniteGroup const &g, Subgroup const &z, std::size_t p)
{
  Layer layer;
  layer.prime = p;
  auto span = Subgroup::trivial(g);
  for (auto x : z.elements())
    if (g.element_order(x) == p && !span.contains(x)) {
      layer.basis.push_back(x);
      span = generate(g, layer.basis);
    }

  std::size_t const d = layer.dim();
  gfp::Vector c(d, 0);
  for (;;) {
    Element x = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (gfp::Residue k = 0; k < c[i]; ++k)
        x = g.mul(x, layer.basis[i]);
    layer.coords.emplace(x, c);
    std::size_t i = 0;
    while (i < d && ++c[i] == p)
      c[i++] = 0;
    if (i == d)
      break;
  }
  if (layer.coords.size() != span.order())
    throw InvariantViolation("coordinate map of Z(G)[" + std::to_string(p) + "] is not bijective");
  return layer;
}

gfp::SubspaceGFp meet_all(Layer const &layer, std::vector<gfp::SubspaceGFp> const &spaces,
                          std::vector<std::size_t> const &which, std::size_t skip)
{
  auto acc = gfp::SubspaceGFp::full(static_cast<gfp::Residue>(layer.prime), layer.dim());
  for (auto i : which)
    if (i != skip)
      acc = intersect(acc, spaces[i]);
  return acc;
}

} // namespace

SocleReport socle_induced_properties_check(Representation const &r, SubgroupLattice const &lattice)
{
  FiniteGroup const &g = lattice.group();
  if (r.parent.order() != g.order())
    throw DomainError("lattice belongs to a different group");
  if (!is_cs(lattice))
    throw DomainError(g.label() + " is not in CS");
  if (!is_faithful(r) || degree(r) != mu_exact(lattice).mu)
    throw DomainError("socle check needs a minimal-degree faithful representation");
  for (auto const &h : r.parts)
    if (!lattice.is_meet_irreducible(lattice.index(h)))
      throw DomainError("socle check needs meet-irreducible parts");

  SocleReport rep;
  auto const soc = socle(lattice);
  auto meet = soc;
  for (auto const &h : r.parts)
    meet = intersect(meet, h);
  rep.faithful_on_socle = meet.is_trivial();

  auto const z = center(g);
  std::vector<Layer> layers;
  for (auto p : prime_divisors(z.order()))
    layers.push_back(make_layer(g, z, p));

  // spaces[j][i] = G_i cap Z(G)[p_j]
  std::size_t const n = r.parts.size();
  std::vector<std::vector<gfp::SubspaceGFp>> spaces(layers.size());
  for (std::size_t j = 0; j < layers.size(); ++j)
    for (auto const &h : r.parts)
      spaces[j].push_back(layers[j].span_of(h));

  // A part belongs to the block of the one prime whose layer it does not
  // contain; a part containing every layer goes to the first block.
  bool shape = true;
  for (std::size_t j = 0; j < layers.size(); ++j)
    rep.blocks.push_back(SocleBlock{layers[j].prime, layers[j].dim(), {}, {}});
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t block = 0, missing = 0;
    for (std::size_t j = 0; j < layers.size(); ++j)
      if (spaces[j][i].dim() < layers[j].dim()) {
        block = j;
        ++missing;
      }
    shape = shape && missing <= 1;
    if (!layers.empty()) {
      rep.blocks[block].parts.push_back(i);
      rep.blocks[block].part_dims.push_back(spaces[block][i].dim());
    }
  }

  rep.per_prime_decomposition = shape;
  rep.no_redundant_constituents = true;
  rep.codimension_one = true;
  for (std::size_t j = 0; j < layers.size(); ++j) {
    auto const &b = rep.blocks[j];
    if (meet_all(layers[j], spaces[j], b.parts, n).dim() != 0)
      rep.per_prime_decomposition = false;
    for (std::size_t k = 0; k < b.parts.size(); ++k) {
      if (meet_all(layers[j], spaces[j], b.parts, b.parts[k]).dim() == 0)
        rep.no_redundant_constituents = false;
      if (b.part_dims[k] + 1 != b.dim)
        rep.codimension_one = false;
    }
  }
  return rep;
}

SocleReport socle_induced_properties_check(Representation const &r)
{
  return socle_induced_properties_check(r, SubgroupLattice::compute(r.parent));
}

} // namespace mindeg
