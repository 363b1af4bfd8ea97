#include <fstream>
#include <sstream>

#include "mindeg/cli.hpp"
#include "mindeg/errors.hpp"

namespace mindeg::cli {

nlohmann::json to_json(ResultRecord const &r)
{
  nlohmann::json j;
  j["expr"] = r.expr;
  j["order"] = r.order;
  j["mu"] = r.mu;
  j["cr"] = r.cr.to_string();
  j["cr_decimal"] = r.cr.to_double();
  j["classification"] = r.classification;
  j["flags"] = {{"is_CS", r.is_cs}, {"incompressible_type", r.incompressible_type}};
  j["flags"]["is_CSE"] = r.is_cse ? nlohmann::json(*r.is_cse) : nlohmann::json(nullptr);
  if (r.witness)
    j["witness"] = *r.witness;
  j["timing_ms"] = r.timing_ms;
  j["stats"] = {{"nodes_explored", r.stats.nodes_explored},
                {"candidates_considered", r.stats.candidates_considered},
                {"proven_optimal", r.stats.proven_optimal},
                {"cached", r.stats.cached}};
  return j;
}

std::string to_text(ResultRecord const &r)
{
  std::ostringstream os;
  os << r.expr << "  order=" << r.order << " mu=" << r.mu << " cr=" << r.cr.to_string()
     << " type=" << r.incompressible_type << " CS=" << (r.is_cs ? "true" : "false");
  if (r.is_cse)
    os << " CSE=" << (*r.is_cse ? "true" : "false");
  if (r.stats.cached)
    os << " (cached)";
  if (r.witness) {
    os << "\n  witness:";
    for (auto const &part : *r.witness) {
      os << " [";
      for (std::size_t i = 0; i < part.size(); ++i)
        os << (i ? "," : "") << part[i];
      os << "]";
    }
  }
  return os.str();
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path))
{
  std::ifstream in(path_);
  if (!in)
    return;
  nlohmann::json j;
  try {
    in >> j;
  } catch (nlohmann::json::exception const &e) {
    throw FormatError("cache file " + path_.string() + " is not valid JSON: " + e.what());
  }
  if (!j.is_object())
    throw FormatError("cache file " + path_.string() + " must hold a JSON object");
  for (auto const &[key, v] : j.items()) {
    if (!v.is_object() || v.value("version", -1) != kCacheVersion || !v.contains("order") ||
        !v.contains("mu"))
      continue;
    entries_[key] = CacheEntry{v["order"].get<std::size_t>(), v["mu"].get<std::size_t>()};
  }
}

std::optional<CacheEntry> ResultCache::find(std::string const &key) const
{
  std::lock_guard lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end())
    return std::nullopt;
  return it->second;
}

void ResultCache::put(std::string const &key, CacheEntry entry)
{
  std::lock_guard lock(mu_);
  entries_[key] = entry;
}

std::size_t ResultCache::size() const
{
  std::lock_guard lock(mu_);
  return entries_.size();
}

void ResultCache::save() const
{
  nlohmann::json j = nlohmann::json::object();
  {
    std::lock_guard lock(mu_);
    for (auto const &[key, e] : entries_)
      j[key] = {{"order", e.order}, {"mu", e.mu}, {"version", kCacheVersion}};
  }
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out)
      throw FormatError("cannot write cache file " + tmp.string());
    out << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path_);
}

} // namespace mindeg::cli
