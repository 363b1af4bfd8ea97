#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <string>

#include "mindeg/errors.hpp"
#include "mindeg/group.hpp"

namespace mindeg {

namespace {

void check_cap(std::size_t order, std::size_t cap, std::string const &what)
{
  if (order > cap)
    throw ResourceError(what + " has order " + std::to_string(order) +
                        ", above the order cap " + std::to_string(cap));
}

} // namespace

FiniteGroup make_cyclic(std::size_t n)
{
  if (n == 0)
    throw DomainError("cyclic group order must be positive");
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      mult[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_trusted_table(n, std::move(mult), "C" + std::to_string(n));
}

FiniteGroup make_abelian(std::vector<std::size_t> const &factors)
{
  std::size_t n = 1;
  std::string label = "Ab(";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k] < 2)
      throw DomainError("abelian factor " + std::to_string(factors[k]) + " must be at least 2");
    n *= factors[k];
    if (n > (std::size_t{1} << 24))
      throw ResourceError("abelian group order overflows the supported range");
    label += (k ? "," : "") + std::to_string(factors[k]);
  }
  label += ")";
  if (factors.empty())
    label = "C1";

  std::vector<std::size_t> stride(factors.size(), 1);
  for (std::size_t k = factors.size(); k-- > 1;)
    stride[k - 1] = stride[k] * factors[k];

  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t r = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        std::size_t da = (a / stride[k]) % factors[k];
        std::size_t db = (b / stride[k]) % factors[k];
        r += ((da + db) % factors[k]) * stride[k];
      }
      mult[a * n + b] = static_cast<Element>(r);
    }
  return FiniteGroup::from_trusted_table(n, std::move(mult), label);
}

FiniteGroup make_dihedral(std::size_t n)
{
  if (n < 3)
    throw DomainError("dihedral parameter must be at least 3, got " + std::to_string(n));
  std::size_t const order = 2 * n;
  std::vector<Element> mult(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t e = x / n, a = x % n, f = y / n, b = y % n;
      // r^a s^e r^b s^f = r^(a + (-1)^e b) s^(e+f)
      std::size_t k = e ? (a + n - b) % n : (a + b) % n;
      mult[x * order + y] = static_cast<Element>(((e + f) % 2) * n + k);
    }
  return FiniteGroup::from_trusted_table(order, std::move(mult), "D" + std::to_string(n));
}

FiniteGroup make_generalized_quaternion(std::size_t order)
{
  if (order < 8 || !std::has_single_bit(order))
    throw DomainError("generalized quaternion order must be a power of two >= 8, got " +
                      std::to_string(order));
  std::size_t const half = order / 2;   // order of a
  std::size_t const m = half / 2;       // b^2 = a^m
  std::vector<Element> mult(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t e = x / half, i = x % half, f = y / half, j = y % half;
      // a^i b^e a^j b^f = a^(i + (-1)^e j) b^(e+f), and b^2 = a^m
      std::size_t k = e ? (i + half - j) % half : (i + j) % half;
      std::size_t s = e + f;
      if (s == 2) {
        k = (k + m) % half;
        s = 0;
      }
      mult[x * order + y] = static_cast<Element>(s * half + k);
    }
  return FiniteGroup::from_trusted_table(order, std::move(mult), "Q" + std::to_string(order));
}

FiniteGroup make_symmetric(std::size_t n)
{
  if (n < 1 || n > 5)
    throw DomainError("symmetric group degree must be in 1..5, got " + std::to_string(n));
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::size_t const order = perms.size();
  auto rank = [&](std::vector<std::size_t> const &q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<Element> mult(order * order);
  std::vector<std::size_t> q(n);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      // (a * b)(x) = a(b(x))
      for (std::size_t x = 0; x < n; ++x)
        q[x] = perms[a][perms[b][x]];
      mult[a * order + b] = rank(q);
    }
  return FiniteGroup::from_trusted_table(order, std::move(mult), "S" + std::to_string(n));
}

FiniteGroup make_special_linear2(std::size_t p)
{
  if (p != 2 && p != 3 && p != 5)
    throw DomainError("SL(2,p) is supported for p in {2,3,5}, got " + std::to_string(p));
  using Mat = std::array<std::size_t, 4>;
  std::vector<Mat> mats;
  Mat const id{1, 0, 0, 1};
  mats.push_back(id);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c)
        for (std::size_t d = 0; d < p; ++d) {
          Mat m{a, b, c, d};
          if ((a * d + p * p - b * c) % p == 1 && m != id)
            mats.push_back(m);
        }
  std::vector<Mat> sorted(mats.begin() + 1, mats.end());
  auto rank = [&](Mat const &m) -> Element {
    if (m == id)
      return 0;
    return static_cast<Element>(1 + (std::lower_bound(sorted.begin(), sorted.end(), m) - sorted.begin()));
  };
  std::size_t const order = mats.size();
  std::vector<Element> mult(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      Mat const &u = mats[x], &v = mats[y];
      Mat w{(u[0] * v[0] + u[1] * v[2]) % p, (u[0] * v[1] + u[1] * v[3]) % p,
            (u[2] * v[0] + u[3] * v[2]) % p, (u[2] * v[1] + u[3] * v[3]) % p};
      mult[x * order + y] = rank(w);
    }
  return FiniteGroup::from_trusted_table(order, std::move(mult),
                                         "SL(2," + std::to_string(p) + ")");
}

FiniteGroup direct_product(FiniteGroup const &g, FiniteGroup const &h, std::size_t order_cap)
{
  std::size_t const n = g.order(), m = h.order(), order = n * m;
  check_cap(order, order_cap, g.label() + " x " + h.label());
  std::vector<Element> mult(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      auto gx = static_cast<Element>(x / m), hx = static_cast<Element>(x % m);
      auto gy = static_cast<Element>(y / m), hy = static_cast<Element>(y % m);
      mult[x * order + y] = static_cast<Element>(g.mul(gx, gy) * m + h.mul(hx, hy));
    }
  return FiniteGroup::from_trusted_table(order, std::move(mult), g.label() + " x " + h.label());
}

void validate_action(FiniteGroup const &g, FiniteGroup const &h,
                     std::vector<Automorphism> const &action)
{
  std::size_t const n = g.order(), m = h.order();
  if (action.size() != m)
    throw InvalidActionError("action must give one automorphism per element of H (" +
                             std::to_string(m) + "), got " + std::to_string(action.size()));
  for (std::size_t k = 0; k < m; ++k) {
    auto const &phi = action[k];
    if (phi.size() != n)
      throw InvalidActionError("automorphism for h=" + std::to_string(k) + " has wrong length");
    std::vector<bool> seen(n, false);
    for (auto x : phi) {
      if (x >= n || seen[x])
        throw InvalidActionError("map for h=" + std::to_string(k) + " is not a bijection of G");
      seen[x] = true;
    }
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b]))
          throw InvalidActionError("map for h=" + std::to_string(k) +
                                   " does not preserve multiplication at (" +
                                   std::to_string(a) + "," + std::to_string(b) + ")");
  }
  for (Element x = 0; x < n; ++x)
    if (action[0][x] != x)
      throw InvalidActionError("the identity of H must act trivially");
  for (Element h1 = 0; h1 < m; ++h1)
    for (Element h2 = 0; h2 < m; ++h2) {
      auto const &lhs = action[h.mul(h1, h2)];
      for (Element x = 0; x < n; ++x)
        if (lhs[x] != action[h1][action[h2][x]])
          throw InvalidActionError("action is not a homomorphism: phi(" + std::to_string(h1) +
                                   "*" + std::to_string(h2) + ") != phi(" +
                                   std::to_string(h1) + ") o phi(" + std::to_string(h2) + ")");
    }
}

FiniteGroup semidirect_product(FiniteGroup const &g, FiniteGroup const &h,
                               std::vector<Automorphism> const &action, std::size_t order_cap)
{
  std::size_t const n = g.order(), m = h.order(), order = n * m;
  check_cap(order, order_cap, g.label() + " x| " + h.label());
  validate_action(g, h, action);
  std::vector<Element> mult(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      auto g1 = static_cast<Element>(x / m), h1 = static_cast<Element>(x % m);
      auto g2 = static_cast<Element>(y / m), h2 = static_cast<Element>(y % m);
      mult[x * order + y] = static_cast<Element>(g.mul(g1, action[h1][g2]) * m + h.mul(h1, h2));
    }
  return FiniteGroup::from_trusted_table(order, std::move(mult), g.label() + " x| " + h.label());
}

} // namespace mindeg
