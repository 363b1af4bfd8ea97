#include <charconv>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "mindeg/catalog.hpp"
#include "mindeg/errors.hpp"

namespace mindeg {

namespace {

struct Line
{
  std::size_t number = 0;
  std::string text;
};

/// Non-blank lines with '#' comments removed.
std::vector<Line> content_lines(std::string const &text)
{
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    if (raw.find_first_not_of(" \t\r\n") != std::string::npos)
      out.push_back({no, raw});
  }
  return out;
}

std::vector<std::string> split_ws(std::string const &s)
{
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;)
    out.push_back(tok);
  return out;
}

std::size_t to_index(std::string const &tok, std::size_t line, std::string const &what)
{
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || end != tok.data() + tok.size())
    throw FormatError("line " + std::to_string(line) + ": expected " + what + ", found '" + tok +
                      "'");
  return v;
}

std::string slurp(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

FiniteGroup parse_table(std::string const &text, std::string label)
{
  auto lines = content_lines(text);
  if (lines.empty())
    throw FormatError("empty table");
  auto head = split_ws(lines[0].text);
  if (head.size() != 1)
    throw FormatError("line " + std::to_string(lines[0].number) + ": expected the order n alone");
  std::size_t const n = to_index(head[0], lines[0].number, "the order n");
  if (n == 0)
    throw FormatError("line " + std::to_string(lines[0].number) + ": order must be positive");
  if (lines.size() != n + 1)
    throw FormatError("expected " + std::to_string(n) + " table rows, found " +
                      std::to_string(lines.size() - 1));

  std::vector<std::vector<std::size_t>> table(n);
  for (std::size_t r = 0; r < n; ++r) {
    auto const &ln = lines[r + 1];
    auto toks = split_ws(ln.text);
    if (toks.size() != n)
      throw FormatError("line " + std::to_string(ln.number) + ": expected " + std::to_string(n) +
                        " entries, found " + std::to_string(toks.size()));
    for (auto const &t : toks)
      table[r].push_back(to_index(t, ln.number, "an element index"));
  }
  return FiniteGroup::from_multiplication_table(table, std::move(label));
}

FiniteGroup read_table(std::filesystem::path const &path)
{
  return parse_table(slurp(path), "table:" + path.string());
}

std::string format_table(FiniteGroup const &g)
{
  std::string out = std::to_string(g.order()) + "\n";
  auto t = g.table();
  for (std::size_t r = 0; r < g.order(); ++r) {
    for (std::size_t c = 0; c < g.order(); ++c)
      out += (c ? " " : "") + std::to_string(t[r * g.order() + c]);
    out += "\n";
  }
  return out;
}

SemidirectSpec parse_semidirect(std::string const &text, std::filesystem::path const &base_dir,
                                std::size_t order_cap)
{
  auto lines = content_lines(text);
  auto header = [&](std::size_t i, char tag) {
    if (i >= lines.size())
      throw FormatError(std::string("missing '") + tag + " <expr>' line");
    auto const &s = lines[i].text;
    auto start = s.find_first_not_of(" \t");
    if (s[start] != tag || start + 1 >= s.size() || !std::isspace(static_cast<unsigned char>(s[start + 1])))
      throw FormatError("line " + std::to_string(lines[i].number) + ": expected '" + tag +
                        " <expr>'");
    return build(parse_group_expr(s.substr(start + 2)), order_cap, base_dir);
  };

  SemidirectSpec sd{header(0, 'G'), header(1, 'H'), {}};
  std::size_t const n = sd.g.order(), m = sd.h.order();

  std::vector<Automorphism> given(m);
  std::vector<Element> gens;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto const &ln = lines[i];
    auto toks = split_ws(ln.text);
    if (toks.size() < 3 || toks[0] != "h" || toks[2] != ":")
      throw FormatError("line " + std::to_string(ln.number) + ": expected 'h <index> : <images>'");
    auto h = to_index(toks[1], ln.number, "an element index of H");
    if (h >= m)
      throw FormatError("line " + std::to_string(ln.number) + ": H has no element " + toks[1]);
    if (!given[h].empty())
      throw FormatError("line " + std::to_string(ln.number) + ": element " + toks[1] +
                        " of H listed twice");
    if (toks.size() != n + 3)
      throw FormatError("line " + std::to_string(ln.number) + ": expected " + std::to_string(n) +
                        " images, found " + std::to_string(toks.size() - 3));
    for (std::size_t k = 3; k < toks.size(); ++k) {
      auto img = to_index(toks[k], ln.number, "an element index of G");
      if (img >= n)
        throw InvalidActionError("line " + std::to_string(ln.number) + ": image " + toks[k] +
                                 " is not an element of G");
      given[h].push_back(static_cast<Element>(img));
    }
    gens.push_back(static_cast<Element>(h));

    std::vector<char> hit(n, 0);
    for (auto y : given[h])
      if (std::exchange(hit[y], 1))
        throw InvalidActionError("line " + std::to_string(ln.number) + ": map for element " +
                                 toks[1] + " of H is not a bijection of G");
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (given[h][sd.g.mul(a, b)] != sd.g.mul(given[h][a], given[h][b]))
          throw InvalidActionError("line " + std::to_string(ln.number) + ": map for element " +
                                   toks[1] + " of H is not an automorphism of G (fails at " +
                                   std::to_string(a) + " * " + std::to_string(b) + ")");
  }

  // phi_{h s} = phi_h o phi_s, spread from the identity along the listed
  // elements; reaching an element twice with different maps means the
  // listed maps do not define a homomorphism.
  Automorphism id(n);
  for (Element x = 0; x < n; ++x)
    id[x] = x;
  sd.action.assign(m, {});
  sd.action[0] = id;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    auto h = queue.front();
    queue.pop_front();
    for (auto s : gens) {
      Automorphism next(n);
      for (Element x = 0; x < n; ++x)
        next[x] = sd.action[h][given[s][x]];
      auto hs = sd.h.mul(h, s);
      if (sd.action[hs].empty()) {
        sd.action[hs] = std::move(next);
        queue.push_back(hs);
      } else if (sd.action[hs] != next) {
        throw InvalidActionError("listed maps do not define a homomorphism H -> Aut(G): element " +
                                 std::to_string(hs) + " of H gets two different automorphisms");
      }
    }
  }
  for (std::size_t h = 0; h < m; ++h)
    if (sd.action[h].empty())
      throw FormatError("the listed elements do not generate H (element " + std::to_string(h) +
                        " is not reached)");

  validate_action(sd.g, sd.h, sd.action);
  return sd;
}

SemidirectSpec load_semidirect(std::filesystem::path const &path, std::size_t order_cap)
{
  return parse_semidirect(slurp(path), path.parent_path(), order_cap);
}

} // namespace mindeg
