#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "mindeg/fraction.hpp"
#include "mindeg/group.hpp"

namespace mindeg::cli {

struct CliConfig
{
  std::size_t order_cap = kDefaultOrderCap;
  std::size_t oracle_cap = 48;
  std::optional<std::filesystem::path> cache_path;
  bool json = false;
  std::size_t threads = 1;
};

struct SolverStats
{
  std::uint64_t nodes_explored = 0;
  std::uint64_t candidates_considered = 0;
  bool proven_optimal = false;
  bool cached = false;
};

struct ResultRecord
{
  std::string expr;
  std::size_t order = 0;
  std::size_t mu = 0;
  Fraction cr;
  std::optional<std::vector<std::vector<Element>>> witness;
  std::string classification;  ///< "incompressible" or "compressible"
  bool is_cs = false;
  std::optional<bool> is_cse;
  std::string incompressible_type;
  double timing_ms = 0;
  SolverStats stats;
};

nlohmann::json to_json(ResultRecord const &r);
std::string to_text(ResultRecord const &r);

inline constexpr int kCacheVersion = 1;

struct CacheEntry
{
  std::size_t order = 0;
  std::size_t mu = 0;
};

/// JSON map from normalized expression to {order, mu, version}. Entries
/// with another version are ignored. Safe for concurrent use.
class ResultCache
{
public:
  /// A missing file is an empty cache; a malformed one throws FormatError.
  explicit ResultCache(std::filesystem::path path);

  std::optional<CacheEntry> find(std::string const &key) const;
  void put(std::string const &key, CacheEntry entry);
  void save() const;
  std::size_t size() const;

private:
  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, CacheEntry> entries_;
};

/// Runs the command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 bad input, 2 resource cap, 3 invariant violation or
/// failed check. Nothing is written to out when the code is 1.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace mindeg::cli
