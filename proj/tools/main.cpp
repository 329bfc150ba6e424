#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jacring/cache.hpp"
#include "jacring/conjectures.hpp"
#include "jacring/oracles.hpp"
#include "jacring/parallel.hpp"
#include "jacring/rational.hpp"

using namespace jacring;

namespace {

using Csv = std::vector<std::vector<std::string>>;

struct Outcome {
  Json data = Json::object();
  std::vector<Verdict> verdicts;
  std::vector<std::string> hashes;
  Json bounds = Json::object();
  Csv csv;
  std::string text;
};

struct Globals {
  bool json = false, csv = false, timing = false;
  std::string cache_dir, out;
  int jobs = 1;
  unsigned long long seed = 1;
};

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
  return s.str();
}

std::string series(const std::vector<std::size_t>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || c[i] != 1) out += std::to_string(c[i]);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) out.push_back(std::stoi(item));
  return out;
}

Csv table_csv(const std::vector<std::vector<std::size_t>>& t, const std::string& a, const std::string& b,
              const std::string& v) {
  Csv out{{a, b, v}};
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) out.push_back({std::to_string(i), std::to_string(j), std::to_string(t[i][j])});
  return out;
}

Outcome run_report(const ConjectureReport& rep, bool timing) {
  Outcome o;
  o.data = rep.to_json(timing);
  o.bounds = rep.bounds;
  o.verdicts.push_back(rep.verdict);
  o.text = rep.conjecture + ": " + to_string(rep.verdict) + "\n";
  for (const auto& d : rep.diagnostics) o.text += "  note: " + d + "\n";
  return o;
}

// ---- commands --------------------------------------------------------------

Outcome cmd_hilbert(int p, int q) {
  Outcome o;
  auto pres = build_IO(p, q);
  o.hashes.push_back(presentation_hash(pres));
  OData od = o_qp_hilbert(p, q);
  const auto closed = closed_hilbert_series(p, q, static_cast<int>(od.hilbert.size()) + 1);
  bool agree = true;
  for (std::size_t d = 0; d < closed.size(); ++d) {
    const Integer mine = d < od.hilbert.size() ? Integer(static_cast<unsigned long>(od.hilbert[d])) : Integer(0);
    agree = agree && mine == closed[d];
  }
  o.data = {{"p", p}, {"q", q}, {"hilbert", od.hilbert}, {"dim", od.total},
            {"catalan", to_string(catalan_count(p, q))}, {"certified", od.certified}, {"matches_closed_form", agree}};
  o.csv = {{"degree", "dim"}};
  for (std::size_t d = 0; d < od.hilbert.size(); ++d) o.csv.push_back({std::to_string(d), std::to_string(od.hilbert[d])});
  o.text = "H(O_{" + std::to_string(q) + "/" + std::to_string(p) + "}) = " + join(od.hilbert) + "  (dim " +
           std::to_string(od.total) + ")\n";
  return o;
}

Outcome cmd_betti(int p, int q) {
  Outcome o;
  o.hashes.push_back(presentation_hash(build_R_eps1(p, q, (p - 1) * (q - 1) + 2)));
  BettiVector b = betti_J(p, q);
  const auto dyck = dyck_poly(p, q);
  o.data = {{"p", p}, {"q", q}, {"betti", b.values}, {"total", b.total}, {"certified", b.certified},
            {"nonnegative_differences", b.nonnegative_differences}, {"method", b.method},
            {"dyck", dyck}, {"dyck_equal", dyck == b.values}};
  o.bounds = {{"stable_degree", (p - 1) * (q - 1) + 2}};
  o.csv = {{"i", "b_2i"}};
  for (std::size_t i = 0; i < b.values.size(); ++i) o.csv.push_back({std::to_string(i), std::to_string(b.values[i])});
  o.text = "betti = [" + join(b.values) + "]  total " + std::to_string(b.total) + "\n";
  return o;
}

Outcome cmd_filtration(int p, int q, int stable_degree) {
  Outcome o;
  FiltrationTable t = filtration_table(p, q, stable_degree);
  o.hashes.push_back(presentation_hash(build_R_eps1(p, q, t.stable_degree)));
  auto inv = t.check_invariants();
  Json rows = Json::array();
  for (const auto& r : t.dims) rows.push_back(r);
  o.data = {{"p", p}, {"q", q}, {"delta", t.delta}, {"stable_degree", t.stable_degree}, {"dim_V", t.dim_v},
            {"stable", t.stable}, {"table", rows}, {"row_sums", t.row_sums()}, {"column_sums", t.column_sums()},
            {"support_ok", inv.support}, {"lefschetz_ok", inv.lefschetz}, {"exhausted", inv.exhausted}};
  o.bounds = {{"stable_degree", t.stable_degree}};
  o.csv = table_csv(t.dims, "i", "j", "dim");
  for (const auto& r : t.dims) o.text += join(r, " ") + "\n";
  return o;
}

Outcome cmd_modules(int p, int q) {
  Outcome o;
  auto g = std::make_shared<const NumericalSemigroup>(std::vector<int>{p, q});
  Json mods = Json::array();
  o.csv = {{"index", "shift", "adjoined_gaps", "p_basis", "q_basis"}};
  bool sums_ok = true;
  const long a_target = static_cast<long>(p) * q * (p - 1) / 2, b_target = static_cast<long>(p) * q * (q - 1) / 2;
  for (const auto& m : enumerate_modules(g)) {
    BalancedModule b = balance(m);
    auto pb = p_basis(b, p), qb = q_basis(b, q);
    sums_ok = sums_ok && std::accumulate(pb.begin(), pb.end(), 0L) == a_target &&
            std::accumulate(qb.begin(), qb.end(), 0L) == b_target;
    mods.push_back(to_json(b, p, q));
    o.csv.push_back({std::to_string(o.csv.size() - 1), std::to_string(b.shift), join(m.adjoined_gaps, " "),
                     join(pb, " "), join(qb, " ")});
  }
  o.data = {{"p", p}, {"q", q}, {"count", mods.size()}, {"catalan", to_string(catalan_count(p, q))},
            {"basis_sums_ok", sums_ok}, {"modules", mods}};
  o.text = std::to_string(mods.size()) + " balanced modules; basis sums " + (sums_ok ? "ok" : "FAIL") + "\n";
  return o;
}

Outcome cmd_dyck(int p, int q) {
  Outcome o;
  auto d = dyck_poly(p, q);
  std::size_t total = std::accumulate(d.begin(), d.end(), std::size_t{0});
  o.data = {{"p", p}, {"q", q}, {"dyck", d}, {"total", total}, {"catalan", to_string(catalan_count(p, q))}};
  o.csv = {{"size", "count"}};
  for (std::size_t i = 0; i < d.size(); ++i) o.csv.push_back({std::to_string(i), std::to_string(d[i])});
  o.text = series(d) + "\n";
  return o;
}

Outcome cmd_grm(int p, int q, bool timing) {
  auto rep = check_grm(p, q);
  Outcome o = run_report(rep, timing);
  o.hashes.push_back(presentation_hash(build_IO(p, q)));
  const auto betti = rep.evidence["betti"].get<std::vector<std::size_t>>();
  const auto gr = rep.evidence["gr_m"].get<std::vector<std::size_t>>();
  const auto rev = rep.evidence["gr_m_reversed"].get<std::vector<std::size_t>>();
  o.text += "  betti         " + series(betti) + "\n  Gr_m(O)       " + series(gr) + "\n";
  o.csv = {{"i", "b_2i", "gr_m_delta_minus_i"}};
  for (std::size_t i = 0; i < betti.size(); ++i)
    o.csv.push_back({std::to_string(i), std::to_string(betti[i]), std::to_string(rev[i])});
  return o;
}

Outcome cmd_toric(const std::vector<int>& gens, int max_bound, bool timing) {
  auto rep = check_toric(gens, max_bound);
  Outcome o = run_report(rep, timing);
  const auto h = rep.evidence["hilbert_O"].get<std::vector<std::size_t>>();
  o.text += "  dim O = " + rep.evidence["dim_O"].dump() + ", modules = " + rep.evidence["module_count"].dump() + "\n";
  o.csv = {{"degree", "dim"}};
  for (std::size_t d = 0; d < h.size(); ++d) o.csv.push_back({std::to_string(d), std::to_string(h[d])});
  return o;
}

Outcome cmd_planar(int q, int s, const std::string& convention, const std::string& reference, bool timing) {
  std::optional<std::vector<std::size_t>> ref;
  if (!reference.empty()) {
    std::vector<std::size_t> r;
    for (int x : parse_ints(reference)) r.push_back(static_cast<std::size_t>(x));
    ref = r;
  }
  auto rep = check_planar(q, s, parse_rigidification(convention), ref);
  Outcome o = run_report(rep, timing);
  if (rep.evidence.contains("fake_betti")) {
    const auto fake = rep.evidence["fake_betti"].get<std::vector<std::size_t>>();
    const auto refv = rep.evidence["reference_betti"].get<std::vector<std::size_t>>();
    o.text += "  fake      " + join(fake) + "\n  reference " + join(refv) + "\n";
    o.csv = {{"i", "reference", "fake"}};
    for (std::size_t i = 0; i < fake.size(); ++i)
      o.csv.push_back({std::to_string(i), std::to_string(refv[i]), std::to_string(fake[i])});
  }
  return o;
}

Outcome cmd_flatness(int p, int q, const std::string& window, bool timing) {
  int a = -1, b = -1;
  if (!window.empty()) {
    auto w = parse_ints(window);
    if (w.size() != 2) throw CLI::ValidationError("--window", "expected A,B");
    a = w[0], b = w[1];
  }
  auto rep = check_flatness(p, q, a, b);
  Outcome o = run_report(rep, timing);
  o.hashes.push_back(presentation_hash(build_F_family_reduced(p, q)));
  o.csv = {{"a", "b", "dim_R", "dim_image"}};
  const auto& R = rep.evidence["dim_R"];
  const auto& I = rep.evidence["dim_image"];
  for (std::size_t i = 0; i < R.size(); ++i)
    for (std::size_t j = 0; j < R[i].size(); ++j)
      o.csv.push_back({std::to_string(i), std::to_string(j), R[i][j].dump(), I[i][j].dump()});
  return o;
}

Outcome cmd_sp_points(int p, int q, bool timing) {
  auto rep = check_sp_points(p, q);
  Outcome o = run_report(rep, timing);
  o.hashes.push_back(presentation_hash(build_parabolic_ideal(p, q)));
  o.csv = {{"tuple"}};
  for (const auto& t : rep.evidence["tilde_sigma"]) o.csv.push_back({join(t.get<std::vector<int>>(), " ")});
  o.text += "  " + rep.evidence["tilde_sigma_count"].dump() + " flag tuples\n";
  return o;
}

// Randomized property checks, reproducible from --seed.
Outcome cmd_props(unsigned long long seed, int rounds) {
  Outcome o;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-5, 5);
  auto random_matrix = [&](std::size_t r, std::size_t c) {
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = make_rational(coef(rng), 1 + std::abs(coef(rng)));
    return m;
  };
  bool incl_excl = true, kernel_ok = true;
  for (int k = 0; k < rounds; ++k) {
    auto u = random_matrix(3, 5), v = random_matrix(3, 5);
    auto d = subspace_ops(u, v);
    incl_excl = incl_excl && d.dim_intersection + d.dim_sum == d.dim_u + d.dim_v;
    auto m = random_matrix(3, 6);
    auto ker = kernel_basis(m);
    kernel_ok = kernel_ok && ker.size() == 6 - m.rank();
    for (const auto& vec : ker)
      for (const auto& x : m.apply(vec)) kernel_ok = kernel_ok && x == 0;
  }
  const bool all = incl_excl && kernel_ok;
  o.data = {{"seed", seed}, {"rounds", rounds}, {"inclusion_exclusion", incl_excl}, {"kernel", kernel_ok}};
  o.verdicts.push_back(all ? Verdict::holds : Verdict::fails);
  o.csv = {{"property", "ok"}, {"inclusion_exclusion", incl_excl ? "1" : "0"}, {"kernel", kernel_ok ? "1" : "0"}};
  o.text = std::string("properties: ") + (all ? "ok" : "FAIL") + "\n";
  return o;
}

Outcome cmd_batch(const std::string& command, int max_sum, int jobs, bool timing) {
  std::vector<std::pair<int, int>> pairs;
  for (int s = 5; s <= max_sum; ++s)
    for (int p = 2; 2 * p < s; ++p)
      if (std::gcd(p, s - p) == 1) pairs.emplace_back(p, s - p);
  std::vector<Outcome> results(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    auto [p, q] = pairs[i];
    if (command == "hilbert") results[i] = cmd_hilbert(p, q);
    else if (command == "betti") results[i] = cmd_betti(p, q);
    else if (command == "grm") results[i] = cmd_grm(p, q, timing);
    else if (command == "modules") results[i] = cmd_modules(p, q);
    else if (command == "dyck") results[i] = cmd_dyck(p, q);
    else if (command == "toric") results[i] = cmd_toric({p, q}, 0, timing);
    else throw std::invalid_argument("batch does not support '" + command + "'");
  });
  Outcome o;
  Json items = Json::array();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    items.push_back(results[i].data);
    for (auto v : results[i].verdicts) o.verdicts.push_back(v);
    for (auto& h : results[i].hashes) o.hashes.push_back(h);
    o.text += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ") " + results[i].text;
    if (i == 0 && !results[i].csv.empty()) {
      auto head = results[i].csv.front();
      head.insert(head.begin(), {"p", "q"});
      o.csv.push_back(head);
    }
    for (std::size_t r = 1; r < results[i].csv.size(); ++r) {
      auto row = results[i].csv[r];
      row.insert(row.begin(), {std::to_string(pairs[i].first), std::to_string(pairs[i].second)});
      o.csv.push_back(row);
    }
  }
  o.data = {{"command", command}, {"max_sum", max_sum}, {"results", items}};
  return o;
}

std::string csv_text(const Csv& rows) {
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      const bool quote = r[i].find_first_of(",\"") != std::string::npos;
      out += (i ? "," : "") + (quote ? "\"" + r[i] + "\"" : r[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the rings of the curve x^q = y^p"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Canonical JSON output");
  app.add_flag("--csv", g.csv, "CSV projection of the main table");
  app.add_option("--cache-dir", g.cache_dir, "Result and degree-piece cache (default: $JACRING_CACHE_DIR)");
  app.add_option("--jobs", g.jobs, "Parallel jobs for batch runs")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized property checks");
  app.add_flag("--timing", g.timing, "Include wall-clock seconds in JSON");
  app.add_option("--out", g.out, "Also write the JSON result here, with a .manifest.json next to it");

  int p = 0, q = 0, s = 0, stable_degree = 0, max_bound = 0, max_sum = 13, rounds = 20;
  std::string gens, family = "4,2q,s", convention = "strict", window, reference, batch_command = "betti";
  auto add_pq = [&](CLI::App* sub) {
    sub->add_option("-p", p, "p")->required()->check(CLI::Range(2, 64));
    sub->add_option("-q", q, "q")->required()->check(CLI::Range(2, 64));
  };
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of O_{q/p}");
  add_pq(hilbert);
  auto* betti = app.add_subcommand("betti", "Betti numbers of the compactified Jacobian");
  add_pq(betti);
  auto* filtration = app.add_subcommand("filtration", "Double-filtration table of R_{eps=1,s=1}");
  add_pq(filtration);
  filtration->add_option("--stable-degree", stable_degree, "Degree B of the stable piece (default 2 delta + 2)");
  auto* grm = app.add_subcommand("grm", "Compare Betti numbers with Gr_m of O_{q/p}");
  add_pq(grm);
  auto* toric = app.add_subcommand("toric", "dim O_Gamma versus the number of Gamma-modules");
  toric->add_option("--gens", gens, "Minimal generators, e.g. 4,6,7")->required();
  toric->add_option("--max-bound", max_bound, "Largest toric degree bound to try");
  auto* planar = app.add_subcommand("planar", "Fake Betti numbers of the family (t^4, t^{2q} + t^s)");
  planar->add_option("--family", family, "Family tag")->check(CLI::IsMember({"4,2q,s"}));
  planar->add_option("-q", q, "q")->required();
  planar->add_option("-s", s, "s")->required();
  planar->add_option("--convention", convention, "Rigidification")->check(CLI::IsMember({"paper", "strict"}));
  planar->add_option("--reference", reference, "Reference row b_{2(delta-i)}, comma separated");
  auto* flatness = app.add_subcommand("flatness", "Flatness probe of R over Q[eps,s]");
  add_pq(flatness);
  flatness->add_option("--window", window, "A,B (default 2 delta + 2 for both)");
  auto* sp = app.add_subcommand("sp-points", "Parabolic ideal versus flag tuples");
  add_pq(sp);
  auto* modules = app.add_subcommand("modules", "Balanced <p,q>-modules");
  add_pq(modules);
  auto* dyck = app.add_subcommand("dyck", "Young diagrams under the (q,p) diagonal");
  add_pq(dyck);
  auto* batch = app.add_subcommand("batch", "Run a command over all coprime 2 <= p < q with p + q <= max-sum");
  batch->add_option("--command", batch_command, "hilbert|betti|grm|modules|dyck|toric");
  batch->add_option("--max-sum", max_sum, "Largest p + q")->check(CLI::Range(5, 30));
  auto* props = app.add_subcommand("props", "Randomized property checks (uses --seed)");
  props->add_option("--rounds", rounds, "Number of random trials")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  try {
    std::shared_ptr<DiskCache> cache;
    if (!g.cache_dir.empty()) cache = std::make_shared<DiskCache>(g.cache_dir);
    else if (auto env = DiskCache::root_from_env()) cache = std::make_shared<DiskCache>(*env);
    set_default_cache(cache);

    Json params = Json::object();
    for (const auto* opt : sub->get_options())
      if (opt->count() > 0 && opt->get_name() != "--help") {
        std::string name = opt->get_name();
        name.erase(0, name.find_first_not_of('-'));
        const auto value = opt->as<std::string>();
        const bool numeric = !value.empty() && value.find_first_not_of("-0123456789") == std::string::npos;
        params[name] = numeric ? Json(std::stol(value)) : Json(value);
      }
    if (command == "props") params["seed"] = g.seed;

    Json manifest = {{"schema", kSchemaVersion}, {"command", command}, {"parameters", params},
                     {"tool_version", version()}};
    const std::string key = sha256_hex(manifest.dump());

    const auto t0 = std::chrono::steady_clock::now();
    std::optional<Json> cached;
    if (cache && !g.timing) cached = cache->get("results", key);

    Json result;
    Outcome o;
    if (cached) {
      result = *cached;
      for (const auto& v : result.value("verdicts", Json::array())) {
        const auto name = v.get<std::string>();
        o.verdicts.push_back(name == "holds" ? Verdict::holds
                             : name == "consistent_up_to_window" ? Verdict::consistent_up_to_window
                             : name == "fails" ? Verdict::fails : Verdict::inconclusive_at_bound);
      }
      o.text = result.value("text", std::string());
      o.csv = result.value("csv", Csv{});
    } else {
      if (command == "hilbert") o = cmd_hilbert(p, q);
      else if (command == "betti") o = cmd_betti(p, q);
      else if (command == "filtration") o = cmd_filtration(p, q, stable_degree);
      else if (command == "grm") o = cmd_grm(p, q, g.timing);
      else if (command == "toric") o = cmd_toric(parse_ints(gens), max_bound, g.timing);
      else if (command == "planar") o = cmd_planar(q, s, convention, reference, g.timing);
      else if (command == "flatness") o = cmd_flatness(p, q, window, g.timing);
      else if (command == "sp-points") o = cmd_sp_points(p, q, g.timing);
      else if (command == "modules") o = cmd_modules(p, q);
      else if (command == "dyck") o = cmd_dyck(p, q);
      else if (command == "batch") o = cmd_batch(batch_command, max_sum, g.jobs, g.timing);
      else if (command == "props") o = cmd_props(g.seed, rounds);

      manifest["presentation_hashes"] = o.hashes;
      manifest["bounds"] = o.bounds;
      manifest["outputs"] = Json::array();
      manifest["sha256"] = key;

      result = {{"schema", kSchemaVersion}, {"command", command}};
      for (auto& [k, v] : o.data.items()) result[k] = v;
      Json verdicts = Json::array();
      for (auto v : o.verdicts) verdicts.push_back(to_string(v));
      result["verdicts"] = verdicts;
      result["manifest"] = manifest;
      if (cache && !g.timing) {
        Json stored = result;
        stored["text"] = o.text;
        stored["csv"] = o.csv;
        cache->put("results", key, stored);
      }
    }
    Json outputs = Json::array();
    if (!g.out.empty()) outputs = {g.out, g.out + ".manifest.json"};
    result["manifest"]["outputs"] = outputs;
    result.erase("text");
    result.erase("csv");
    if (g.timing)
      result["wall_clock_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (!g.out.empty()) {
      std::ofstream(g.out) << dump(result);
      std::ofstream(g.out + ".manifest.json") << dump(result["manifest"]);
    }
    if (g.json) std::cout << dump(result);
    else if (g.csv) std::cout << csv_text(o.csv);
    else std::cout << o.text;
    return exit_code_for(o.verdicts);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
