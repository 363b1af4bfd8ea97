#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "mindeg/catalog.hpp"
#include "mindeg/cli.hpp"
#include "mindeg/errors.hpp"
#include "mindeg/gfp.hpp"
#include "mindeg/theorems.hpp"

namespace mindeg::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string join_elements(std::vector<Element> const &v)
{
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

ResultRecord solve_record(std::string const &expr, FiniteGroup const &g, CliConfig const &cfg,
                          bool want_witness, std::optional<CacheEntry> cached)
{
  auto const t0 = Clock::now();
  ResultRecord rec;
  rec.expr = expr;
  rec.order = g.order();

  auto const lattice = SubgroupLattice::compute(g, cfg.order_cap);
  if (cached && !want_witness) {
    if (cached->order != g.order())
      throw InvariantViolation("cache entry for " + expr + " records order " +
                               std::to_string(cached->order) + ", built group has order " +
                               std::to_string(g.order()));
    rec.mu = cached->mu;
    rec.stats.cached = true;
  } else {
    auto r = mu_exact(lattice);
    rec.mu = r.mu;
    rec.stats = {r.nodes_explored, r.candidates_considered, r.proven_optimal, false};
    if (want_witness) {
      rec.witness.emplace();
      for (auto const &h : r.witness.parts)
        rec.witness->push_back(h.elements());
    }
  }

  auto v = classify_incompressible(g, rec.mu, cfg.order_cap);
  rec.cr = v.cr;
  rec.incompressible_type = to_string(v.structural_type);
  rec.classification =
    v.structural_type == IncompressibleType::compressible ? "compressible" : "incompressible";
  rec.is_cs = is_cs(lattice);
  if (g.order() <= cfg.oracle_cap)
    rec.is_cse = is_cse(g, cfg.oracle_cap).member;
  rec.timing_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return rec;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }
std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

// ---- mu ----

int cmd_mu(CliConfig const &cfg, std::string const &text, bool oracle, bool witness, bool stats,
           std::ostream &out)
{
  auto const expr = parse_group_expr(text);
  auto const g = build(expr, cfg.order_cap);
  auto const key = normalized_key(expr);

  std::optional<ResultCache> cache;
  if (cfg.cache_path)
    cache.emplace(*cfg.cache_path);
  std::optional<CacheEntry> hit;
  if (cache && !witness && !stats)
    hit = cache->find(key);

  auto rec = solve_record(to_string(expr), g, cfg, witness, hit);

  std::optional<std::size_t> oracle_mu;
  if (oracle)
    oracle_mu = mu_oracle(g, cfg.oracle_cap).mu;

  if (cache && !rec.stats.cached) {
    cache->put(key, {g.order(), rec.mu});
    cache->save();
  }

  if (cfg.json) {
    auto j = to_json(rec);
    if (oracle_mu) {
      j["oracle_mu"] = *oracle_mu;
      j["agree"] = *oracle_mu == rec.mu;
    }
    out << j.dump() << "\n";
  } else {
    out << "mu(" << rec.expr << ") = " << rec.mu << (rec.stats.cached ? "  (cached)" : "") << "\n";
    if (oracle_mu)
      out << "oracle = " << *oracle_mu << ", " << (*oracle_mu == rec.mu ? "agree" : "DISAGREE")
          << "\n";
    if (rec.witness) {
      out << "witness:";
      for (auto const &part : *rec.witness)
        out << " " << join_elements(part);
      out << "\n";
    }
    if (stats)
      out << "nodes=" << rec.stats.nodes_explored << " candidates=" << rec.stats.candidates_considered
          << " proven_optimal=" << yes_no(rec.stats.proven_optimal) << " time_ms=" << rec.timing_ms
          << "\n";
  }

  if (oracle_mu && *oracle_mu != rec.mu)
    throw InvariantViolation("oracle disagrees with the exact solver on " + rec.expr + ": " +
                             std::to_string(*oracle_mu) + " vs " + std::to_string(rec.mu));
  return 0;
}

// ---- classify ----

int cmd_classify(CliConfig const &cfg, std::string const &text, std::ostream &out)
{
  auto const expr = parse_group_expr(text);
  auto const g = build(expr, cfg.order_cap);
  auto rec = solve_record(to_string(expr), g, cfg, false, std::nullopt);
  std::optional<CseResult> cse;
  if (g.order() <= cfg.oracle_cap)
    cse = is_cse(g, cfg.oracle_cap);

  if (cfg.json) {
    auto j = to_json(rec);
    if (cse && cse->witness)
      j["cse_witness"] = cse->witness->elements();
    out << j.dump() << "\n";
    return 0;
  }
  out << rec.expr << "\n"
      << "  order  " << rec.order << "\n"
      << "  mu     " << rec.mu << "\n"
      << "  cr     " << rec.cr.to_string() << "\n"
      << "  type   " << rec.incompressible_type << "\n"
      << "  CS     " << yes_no(rec.is_cs) << "\n";
  if (cse) {
    out << "  CSE    " << yes_no(cse->member);
    if (cse->witness)
      out << " (witness: subgroup of order " << cse->witness->order() << ", elements "
          << join_elements(cse->witness->elements()) << ")";
    out << "\n";
  } else {
    out << "  CSE    not computed (order above the oracle cap " << cfg.oracle_cap << ")\n";
  }
  return 0;
}

// ---- lattice ----

int cmd_lattice(CliConfig const &cfg, std::string const &text, std::ostream &out)
{
  auto const expr = parse_group_expr(text);
  auto const g = build(expr, cfg.order_cap);
  auto const lat = SubgroupLattice::compute(g, cfg.order_cap);

  struct Census
  {
    std::size_t total = 0, normal = 0, meet_irreducible = 0;
  };
  std::map<std::size_t, Census> by_order;
  Census all;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    auto &c = by_order[lat.at(i).order()];
    bool const n = lat.is_normal(i), mi = lat.is_meet_irreducible(i);
    ++c.total, ++all.total;
    c.normal += n, all.normal += n;
    c.meet_irreducible += mi, all.meet_irreducible += mi;
  }

  if (cfg.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (auto const &[o, c] : by_order)
      rows.push_back({{"order", o}, {"subgroups", c.total}, {"normal", c.normal},
                      {"meet_irreducible", c.meet_irreducible}});
    out << nlohmann::json{{"expr", to_string(expr)},
                          {"order", g.order()},
                          {"subgroups", all.total},
                          {"normal", all.normal},
                          {"meet_irreducible", all.meet_irreducible},
                          {"minimal_normal", lat.minimal_normals().size()},
                          {"by_order", rows}}
             .dump()
        << "\n";
    return 0;
  }
  out << to_string(expr) << ": " << all.total << " subgroups, " << all.normal << " normal, "
      << lat.minimal_normals().size() << " minimal normal, " << all.meet_irreducible
      << " meet-irreducible\n";
  for (auto const &[o, c] : by_order)
    out << "  order " << o << ": " << c.total << " (normal " << c.normal << ", meet-irreducible "
        << c.meet_irreducible << ")\n";
  return 0;
}

// ---- verify ----

struct VerifyOptions
{
  std::size_t trials = 200;
  std::uint64_t seed = 1;
};

/// One checker result: a text line, or a JSON object in --json mode.
bool emit(CliConfig const &cfg, std::ostream &out, std::string const &text, nlohmann::json data,
          bool ok)
{
  if (cfg.json) {
    data["pass"] = ok;
    out << data.dump() << "\n";
  } else {
    out << text << " " << pass_fail(ok) << "\n";
  }
  return ok;
}

bool verify_additivity_case(CliConfig const &cfg, std::string const &a, std::string const &b,
                            std::ostream &out)
{
  auto const ea = parse_group_expr(a), eb = parse_group_expr(b);
  auto const ga = build(ea, cfg.order_cap), gb = build(eb, cfg.order_cap);
  auto const rec = verify_additivity(ga, gb, cfg.order_cap, cfg.oracle_cap);
  bool const ok = rec.guarantee == AdditivityGuarantee::none || rec.equal;
  std::ostringstream line;
  line << "additivity " << to_string(ea) << " x " << to_string(eb) << ": lhs=" << rec.lhs
       << " rhs=" << rec.rhs << (rec.equal ? " equal" : " strict")
       << " guarantee=" << to_string(rec.guarantee);
  return emit(cfg, out, line.str(),
              {{"check", "additivity"}, {"g", to_string(ea)}, {"h", to_string(eb)},
               {"lhs", rec.lhs}, {"rhs", rec.rhs}, {"equal", rec.equal},
               {"guarantee", to_string(rec.guarantee)}},
              ok);
}

bool report_semidirect(std::string const &name, FiniteGroup const &g, FiniteGroup const &h,
                       std::vector<Automorphism> const &action, CliConfig const &cfg,
                       std::ostream &out)
{
  auto const rec = semidirect_bound_check(g, h, action, cfg.order_cap);
  bool const ok = rec.holds && rec.embedding_homomorphic && rec.embedding_injective;
  std::ostringstream line;
  line << "semidirect " << name << ": mu=" << rec.mu_product << " bound=" << rec.bound
       << " rho homomorphic=" << yes_no(rec.embedding_homomorphic)
       << " injective=" << yes_no(rec.embedding_injective);
  return emit(cfg, out, line.str(),
              {{"check", "semidirect"}, {"group", name}, {"mu", rec.mu_product},
               {"bound", rec.bound}, {"rho_homomorphic", rec.embedding_homomorphic},
               {"rho_injective", rec.embedding_injective}},
              ok);
}

bool verify_semidirect_case(CliConfig const &cfg, std::string const &text, std::ostream &out)
{
  auto const expr = parse_group_expr(text);
  if (expr.kind != GroupExpr::Kind::semidirect)
    throw DomainError("verify semidirect expects an sd: atom, got '" + to_string(expr) + "'");
  auto const sd = load_semidirect(expr.path, cfg.order_cap);
  return report_semidirect(to_string(expr), sd.g, sd.h, sd.action, cfg, out);
}

/// C_n x| C_2 with the generator acting by inversion.
bool verify_dihedral_case(CliConfig const &cfg, std::size_t n, std::ostream &out)
{
  auto const g = make_cyclic(n), h = make_cyclic(2);
  std::vector<Automorphism> action(2, Automorphism(n));
  for (Element x = 0; x < n; ++x) {
    action[0][x] = x;
    action[1][x] = g.inv(x);
  }
  return report_semidirect("C" + std::to_string(n) + " x| C2", g, h, action, cfg, out);
}

bool verify_socle_case(CliConfig const &cfg, std::string const &text, std::ostream &out)
{
  auto const expr = parse_group_expr(text);
  auto const g = build(expr, cfg.order_cap);
  auto const lat = SubgroupLattice::compute(g, cfg.order_cap);
  auto const w = reduce_to_meet_irreducible(mu_exact(lat).witness, lat);
  auto const rep = socle_induced_properties_check(w, lat);
  std::ostringstream line;
  line << "socle " << to_string(expr) << ": faithful=" << yes_no(rep.faithful_on_socle)
       << " per-prime=" << yes_no(rep.per_prime_decomposition)
       << " no-redundant=" << yes_no(rep.no_redundant_constituents)
       << " codim-1=" << yes_no(rep.codimension_one);
  nlohmann::json blocks = nlohmann::json::array();
  for (auto const &b : rep.blocks) {
    line << " [p=" << b.prime << " dim=" << b.dim << " parts:";
    for (auto d : b.part_dims)
      line << " " << d;
    line << "]";
    blocks.push_back({{"prime", b.prime}, {"dim", b.dim}, {"part_dims", b.part_dims}});
  }
  return emit(cfg, out, line.str(),
              {{"check", "socle"}, {"group", to_string(expr)},
               {"faithful_on_socle", rep.faithful_on_socle},
               {"per_prime_decomposition", rep.per_prime_decomposition},
               {"no_redundant_constituents", rep.no_redundant_constituents},
               {"codimension_one", rep.codimension_one}, {"blocks", blocks}},
              rep.all());
}

gfp::MatrixGFp random_matrix(std::mt19937_64 &rng, gfp::Residue p, std::size_t n)
{
  std::uniform_int_distribution<gfp::Residue> d(0, p - 1);
  gfp::MatrixGFp m(p, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.set(r, c, d(rng));
  return m;
}

gfp::MatrixGFp random_invertible(std::mt19937_64 &rng, gfp::Residue p, std::size_t n)
{
  for (;;)
    if (auto m = random_matrix(rng, p, n); gfp::det(m) != 0)
      return m;
}

bool verify_laplace_sweep(CliConfig const &cfg, VerifyOptions const &opt, std::ostream &out)
{
  std::mt19937_64 rng(opt.seed);
  gfp::Residue const primes[] = {2, 3, 5, 7};

  std::size_t ok_lap = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    auto p = primes[t % 4];
    std::size_t n = 2 + rng() % 5;
    auto m = random_matrix(rng, p, n);
    std::vector<std::size_t> cols;
    while (cols.empty() || cols.size() == n) {
      cols.clear();
      for (std::size_t c = 0; c < n; ++c)
        if (rng() & 1)
          cols.push_back(c);
    }
    ok_lap += gfp::det_laplace(m, cols) == gfp::det(m);
  }
  emit(cfg, out,
       "laplace: " + std::to_string(ok_lap) + "/" + std::to_string(opt.trials) +
         " expansions match elimination",
       {{"check", "laplace"}, {"passed", ok_lap}, {"trials", opt.trials}}, ok_lap == opt.trials);

  std::size_t ok_block = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    auto p = primes[t % 4];
    std::size_t n = 2 + rng() % 5, top = 1 + rng() % (n - 1);
    auto m = random_invertible(rng, p, n);
    auto perm = gfp::block_row_permutation(m, top);
    auto pm = m.permute_rows(perm);
    std::vector<std::size_t> a(top), d(n - top);
    std::iota(a.begin(), a.end(), 0);
    std::iota(d.begin(), d.end(), top);
    ok_block += gfp::det(pm.submatrix(a, a)) != 0 && gfp::det(pm.submatrix(d, d)) != 0;
  }
  emit(cfg, out,
       "block-permutation: " + std::to_string(ok_block) + "/" + std::to_string(opt.trials) +
         " with invertible blocks",
       {{"check", "block-permutation"}, {"passed", ok_block}, {"trials", opt.trials}},
       ok_block == opt.trials);

  std::size_t ok_basis = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) {
    gfp::Residue p = primes[t % 3];
    std::size_t d = 1 + rng() % 5;
    auto m = random_invertible(rng, p, d);
    std::vector<gfp::SubspaceGFp> hyper;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<gfp::Vector> others;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i)
          others.push_back(m.row_vector(j));
      hyper.emplace_back(p, d, others);
    }
    bool good = true;
    if (d >= 2) {
      auto v = gfp::recover_coordinate_basis(hyper);
      for (std::size_t i = 0; i < d; ++i)
        good = good && gfp::SubspaceGFp(p, d, {v[i]}) == gfp::SubspaceGFp(p, d, {m.row_vector(i)});
    }
    ok_basis += good;
  }
  emit(cfg, out,
       "coordinate-basis: " + std::to_string(ok_basis) + "/" + std::to_string(opt.trials) +
         " round trips",
       {{"check", "coordinate-basis"}, {"passed", ok_basis}, {"trials", opt.trials}},
       ok_basis == opt.trials);
  return ok_lap == opt.trials && ok_block == opt.trials && ok_basis == opt.trials;
}

int cmd_verify(CliConfig const &cfg, std::string const &kind, std::vector<std::string> const &args,
               VerifyOptions const &opt, std::ostream &out)
{
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw DomainError("verify " + kind + " takes " + std::to_string(k) + " argument(s), got " +
                        std::to_string(args.size()));
  };
  bool ok = true;
  if (kind == "additivity") {
    need(2);
    ok = verify_additivity_case(cfg, args[0], args[1], out);
  } else if (kind == "semidirect") {
    need(1);
    ok = verify_semidirect_case(cfg, args[0], out);
  } else if (kind == "laplace") {
    need(0);
    ok = verify_laplace_sweep(cfg, opt, out);
  } else if (kind == "socle") {
    need(1);
    ok = verify_socle_case(cfg, args[0], out);
  } else if (kind == "all") {
    need(0);
    std::pair<char const *, char const *> const pairs[] = {
      {"C4", "C3"}, {"C2", "C3"}, {"Q8", "C4"}, {"Q8", "Q8"}, {"S3", "C5"}, {"S3", "S3"}};
    for (auto const &[a, b] : pairs)
      ok &= verify_additivity_case(cfg, a, b, out);
    for (std::size_t n = 3; n <= 12; ++n)
      ok &= verify_dihedral_case(cfg, n, out);
    ok &= verify_laplace_sweep(cfg, opt, out);
    for (auto const *s : {"Ab(2,2)", "Q8", "C9 x C3", "SL(2,3)", "Ab(2,2,2)"})
      ok &= verify_socle_case(cfg, s, out);
  } else {
    throw DomainError("unknown verify kind '" + kind +
                      "' (expected additivity, semidirect, laplace, socle, or all)");
  }
  if (cfg.json)
    out << nlohmann::json{{"summary", {{"pass", ok}}}}.dump() << "\n";
  else
    out << (ok ? "all checks PASS" : "some checks FAILED") << "\n";
  return ok ? 0 : 3;
}

// ---- batch ----

struct BatchOptions
{
  std::size_t max_order = 24;
  bool witness = false;
  std::uint64_t seed = 0;
};

int cmd_batch(CliConfig const &cfg, BatchOptions const &opt, std::ostream &out)
{
  if (opt.max_order > cfg.order_cap)
    throw ResourceError("--max-order " + std::to_string(opt.max_order) + " exceeds the order cap " +
                        std::to_string(cfg.order_cap));
  auto const entries = catalog(opt.max_order);
  std::size_t const n = entries.size();

  std::optional<ResultCache> cache;
  if (cfg.cache_path)
    cache.emplace(*cfg.cache_path);

  // Cache lookups and spot-check draws happen up front in catalog order so
  // the run is reproducible for a given seed.
  std::mt19937_64 rng(opt.seed);
  std::bernoulli_distribution spot(0.1);
  std::vector<std::optional<CacheEntry>> hits(n);
  std::vector<bool> recheck(n, false);
  std::vector<std::string> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    keys[i] = normalized_key(entries[i].expr);
    if (cache)
      hits[i] = cache->find(keys[i]);
    if (hits[i])
      recheck[i] = spot(rng);
  }

  std::vector<ResultRecord> records(n);
  std::vector<std::exception_ptr> failures(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        auto const g = build(entries[i].expr, cfg.order_cap);
        records[i] = solve_record(entries[i].name, g, cfg, opt.witness, hits[i]);
        if (recheck[i]) {
          auto const fresh = mu_exact(g, cfg.order_cap).mu;
          if (fresh != hits[i]->mu)
            throw InvariantViolation("cached mu " + std::to_string(hits[i]->mu) + " for " +
                                     entries[i].name + " disagrees with recomputed " +
                                     std::to_string(fresh));
        }
        if (cache && !records[i].stats.cached)
          cache->put(keys[i], {records[i].order, records[i].mu});
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::size_t const threads = std::max<std::size_t>(1, std::min(cfg.threads, n));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  for (auto const &f : failures)
    if (f)
      std::rethrow_exception(f);
  if (cache)
    cache->save();

  std::size_t cached = 0, checked = 0;
  std::optional<std::size_t> best;
  std::optional<std::size_t> best_odd;
  Fraction const one(1, 1);
  for (std::size_t i = 0; i < n; ++i) {
    auto const &r = records[i];
    cached += r.stats.cached;
    checked += recheck[i];
    if (r.cr > one) {
      if (!best || r.cr < records[*best].cr)
        best = i;
      if (r.order % 2 == 1 && (!best_odd || r.cr < records[*best_odd].cr))
        best_odd = i;
    }
    if (cfg.json)
      out << to_json(r).dump() << "\n";
    else
      out << to_text(r) << "\n";
  }

  if (cfg.json) {
    nlohmann::json s{{"groups", n}, {"solved", n - cached}, {"cached", cached},
                     {"spot_checked", checked}};
    s["min_cr_above_1"] = best ? nlohmann::json(records[*best].cr.to_string()) : nlohmann::json();
    s["min_cr_above_1_expr"] = best ? nlohmann::json(records[*best].expr) : nlohmann::json();
    s["min_odd_cr_above_1"] =
      best_odd ? nlohmann::json(records[*best_odd].cr.to_string()) : nlohmann::json();
    out << nlohmann::json{{"summary", s}}.dump() << "\n";
  } else {
    out << "summary: " << n << " groups, " << n - cached << " solved, " << cached << " cached ("
        << checked << " spot-checked); min cr > 1: "
        << (best ? records[*best].cr.to_string() + " (" + records[*best].expr + ")" : "none")
        << "; min odd-order cr > 1: "
        << (best_odd ? records[*best_odd].cr.to_string() + " (" + records[*best_odd].expr + ")"
                     : "none")
        << "\n";
  }
  return 0;
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Minimal faithful permutation degree of finite groups", "mu-perm"};
  app.fallthrough();
  app.require_subcommand(1);

  CliConfig cfg;
  if (char const *env = std::getenv("MU_PERM_CACHE"); env && *env)
    cfg.cache_path = env;
  std::string cache_flag;
  app.add_option("--order-cap", cfg.order_cap, "Largest group order to build or enumerate")
    ->capture_default_str();
  app.add_option("--oracle-cap", cfg.oracle_cap, "Largest order for brute-force checks")
    ->capture_default_str();
  app.add_option("--cache", cache_flag, "Result cache file (default: $MU_PERM_CACHE)");
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--threads", cfg.threads, "Worker threads for batch")->capture_default_str();

  std::string expr;
  bool oracle = false, witness = false, stats = false;
  auto *mu = app.add_subcommand("mu", "Compute mu(G)");
  mu->add_option("expr", expr, "Group expression, e.g. \"Q8 x C3\"")->required();
  mu->add_flag("--oracle", oracle, "Cross-check with the brute-force oracle");
  mu->add_flag("--witness", witness, "Print a minimal faithful representation");
  mu->add_flag("--stats", stats, "Print solver statistics");

  auto *classify = app.add_subcommand("classify", "cr, incompressible type, CS and CSE");
  classify->add_option("expr", expr)->required();

  auto *lattice = app.add_subcommand("lattice", "Subgroup lattice census");
  lattice->add_option("expr", expr)->required();

  std::string kind;
  std::vector<std::string> vargs;
  VerifyOptions vopt;
  auto *verify = app.add_subcommand("verify", "Run theorem checkers");
  verify->add_option("kind", kind, "additivity | semidirect | laplace | socle | all")->required();
  verify->add_option("args", vargs, "Group expressions");
  verify->add_option("--trials", vopt.trials, "Random instances per linear-algebra check")
    ->capture_default_str();
  verify->add_option("--seed", vopt.seed, "Random seed")->capture_default_str();

  BatchOptions bopt;
  auto *batch = app.add_subcommand("batch", "Solve and classify the built-in catalog");
  batch->add_option("--max-order", bopt.max_order, "Largest catalog order")->capture_default_str();
  batch->add_flag("--witness", bopt.witness, "Include witnesses");
  batch->add_option("--seed", bopt.seed, "Seed for the cache spot-check sample")
    ->capture_default_str();

  std::ostringstream buf;
  int code = 0;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    if (!cache_flag.empty())
      cfg.cache_path = cache_flag;
    if (cfg.oracle_cap > cfg.order_cap)
      throw DomainError("--oracle-cap must not exceed --order-cap");

    if (*mu)
      code = cmd_mu(cfg, expr, oracle, witness, stats, buf);
    else if (*classify)
      code = cmd_classify(cfg, expr, buf);
    else if (*lattice)
      code = cmd_lattice(cfg, expr, buf);
    else if (*verify)
      code = cmd_verify(cfg, kind, vargs, vopt, buf);
    else if (*batch)
      code = cmd_batch(cfg, bopt, buf);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return 0;
  } catch (CLI::CallForAllHelp const &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (CLI::ParseError const &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (ParseError const &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (ResourceError const &e) {
    err << "resource limit: " << e.what() << "\n";
    code = 2;
  } catch (InvariantViolation const &e) {
    err << "invariant violation: " << e.what() << "\n";
    code = 3;
  } catch (Error const &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (std::filesystem::filesystem_error const &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (std::exception const &e) {
    err << "internal error: " << e.what() << "\n";
    code = 3;
  }
  out << buf.str();
  return code;
}

} // namespace mindeg::cli
