#include <algorithm>
#include <cctype>
#include <string>

#include "mindeg/errors.hpp"
#include "mindeg/expr.hpp"

namespace mindeg {

GroupExpr GroupExpr::atom(Kind k, std::vector<std::size_t> params)
{
  GroupExpr e;
  e.kind = k;
  e.params = std::move(params);
  return e;
}

GroupExpr GroupExpr::file(Kind k, std::string path)
{
  GroupExpr e;
  e.kind = k;
  e.path = std::move(path);
  return e;
}

GroupExpr GroupExpr::product(GroupExpr a, GroupExpr b)
{
  GroupExpr e;
  e.kind = Kind::product;
  e.left = std::make_shared<GroupExpr const>(std::move(a));
  e.right = std::make_shared<GroupExpr const>(std::move(b));
  return e;
}

bool operator==(GroupExpr const &a, GroupExpr const &b)
{
  if (a.kind != b.kind || a.params != b.params || a.path != b.path)
    return false;
  if (a.kind != GroupExpr::Kind::product)
    return true;
  return *a.left == *b.left && *a.right == *b.right;
}

namespace {

std::vector<std::string> const kTermStarts = {"C", "Z", "Ab(", "D", "Q", "S", "SL(2,", "table:",
                                              "sd:", "("};

class Parser
{
public:
  explicit Parser(std::string_view text) : s_(text) {}

  GroupExpr parse()
  {
    auto e = expr();
    skip_ws();
    if (pos_ < s_.size())
      fail({"x", "end of input"});
    return e;
  }

private:
  GroupExpr expr()
  {
    auto e = term();
    for (;;) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == 'x') {
        ++pos_;
        e = GroupExpr::product(std::move(e), term());
      } else {
        return e;
      }
    }
  }

  GroupExpr term()
  {
    using K = GroupExpr::Kind;
    skip_ws();
    if (take("SL")) {
      expect('(');
      expect('2');
      expect(',');
      auto p = integer();
      expect(')');
      return GroupExpr::atom(K::sl2, {p});
    }
    if (take("Ab")) {
      expect('(');
      std::vector<std::size_t> f{integer()};
      for (;;) {
        skip_ws();
        if (take(","))
          f.push_back(integer());
        else if (take(")"))
          return GroupExpr::atom(K::abelian, std::move(f));
        else
          fail({",", ")"});
      }
    }
    if (take("table:"))
      return GroupExpr::file(K::table, path());
    if (take("sd:"))
      return GroupExpr::file(K::semidirect, path());
    if (take("(")) {
      auto e = expr();
      expect(')');
      return e;
    }
    if (pos_ < s_.size()) {
      switch (s_[pos_]) {
      case 'C':
      case 'Z': ++pos_; return GroupExpr::atom(K::cyclic, {integer()});
      case 'D': ++pos_; return GroupExpr::atom(K::dihedral, {integer()});
      case 'Q': ++pos_; return GroupExpr::atom(K::quaternion, {integer()});
      case 'S': ++pos_; return GroupExpr::atom(K::symmetric, {integer()});
      default: break;
      }
    }
    fail(kTermStarts);
  }

  std::size_t integer()
  {
    skip_ws();
    std::size_t start = pos_, v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (v > 1'000'000'000) {
        pos_ = start;
        fail({"INT (at most 10^9)"});
      }
      ++pos_;
    }
    if (pos_ == start)
      fail({"INT"});
    return v;
  }

  std::string path()
  {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != ')')
      ++pos_;
    if (pos_ == start)
      fail({"PATH"});
    return std::string(s_.substr(start, pos_ - start));
  }

  void expect(char c)
  {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c)
      ++pos_;
    else
      fail({std::string(1, c)});
  }

  bool take(std::string_view lit)
  {
    if (s_.substr(pos_, lit.size()) != lit)
      return false;
    pos_ += lit.size();
    return true;
  }

  void skip_ws()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const
  {
    std::size_t end = pos_;
    while (end < s_.size() && end - pos_ < 8 && !std::isspace(static_cast<unsigned char>(s_[end])))
      ++end;
    throw ParseError(pos_ + 1, std::move(expected), std::string(s_.substr(pos_, end - pos_)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string join_params(std::vector<std::size_t> const &v)
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

} // namespace

GroupExpr parse_group_expr(std::string_view text)
{
  return Parser(text).parse();
}

std::string to_string(GroupExpr const &e)
{
  using K = GroupExpr::Kind;
  switch (e.kind) {
  case K::cyclic: return "C" + join_params(e.params);
  case K::abelian: return "Ab(" + join_params(e.params) + ")";
  case K::dihedral: return "D" + join_params(e.params);
  case K::quaternion: return "Q" + join_params(e.params);
  case K::symmetric: return "S" + join_params(e.params);
  case K::sl2: return "SL(2," + join_params(e.params) + ")";
  case K::table: return "table:" + e.path;
  case K::semidirect: return "sd:" + e.path;
  case K::product: {
    auto rhs = to_string(*e.right);
    if (e.right->kind == K::product)
      rhs = "(" + rhs + ")";
    return to_string(*e.left) + " x " + rhs;
  }
  }
  return {};
}

std::vector<GroupExpr> atoms(GroupExpr const &e)
{
  if (e.is_atom())
    return {e};
  auto out = atoms(*e.left);
  auto rhs = atoms(*e.right);
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

std::string normalized_key(GroupExpr const &e)
{
  std::vector<std::string> names;
  for (auto const &a : atoms(e))
    names.push_back(to_string(a));
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i)
    out += (i ? " x " : "") + names[i];
  return out;
}

} // namespace mindeg
