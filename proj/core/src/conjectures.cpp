#include "jacring/conjectures.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "jacring/oracles.hpp"
#include "jacring/semigroup.hpp"

#ifndef JACRING_DATA_DIR
#define JACRING_DATA_DIR "data"
#endif

namespace jacring {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void require_coprime(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw std::invalid_argument("need coprime p, q >= 2");
}

std::string series_text(const std::vector<std::size_t>& c) {
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

Json table_json(const std::vector<std::vector<std::size_t>>& t) {
  Json out = Json::array();
  for (const auto& r : t) out.push_back(r);
  return out;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::consistent_up_to_window: return "consistent_up_to_window";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive_at_bound: return "inconclusive_at_bound";
  }
  return "?";
}

int exit_code_for(const std::vector<Verdict>& verdicts) {
  int code = 0;
  for (auto v : verdicts) {
    if (v == Verdict::inconclusive_at_bound) code = 2;
    if (v == Verdict::fails && code == 0) code = 1;
  }
  return code;
}

Json ConjectureReport::to_json(bool include_timing) const {
  Json j;
  j["schema"] = kSchemaVersion;
  j["conjecture"] = conjecture;
  j["parameters"] = parameters;
  j["verdict"] = jacring::to_string(verdict);
  j["bounds"] = bounds;
  j["diagnostics"] = diagnostics;
  j["evidence"] = evidence;
  if (include_timing) j["wall_clock_seconds"] = wall_clock_seconds;
  return j;
}

OData o_qp_hilbert(int p, int q) {
  require_coprime(p, q);
  const int delta = (p - 1) * (q - 1) / 2;
  GradedQuotient o(build_IO(p, q));
  auto cert = o.artinian(2 * delta + p + q + 2);
  OData out{cert.hilbert, 0, cert.certified};
  for (auto h : out.hilbert) out.total += h;
  return out;
}

ToricDimension toric_dimension(const NumericalSemigroup& g, int max_bound) {
  ToricDimension out;
  const int start = default_toric_bound(g);
  const int last = max_bound > 0 ? std::max(max_bound, start + 1) : start + 1;
  // Socle degree of the quotient is at most twice the gap count plus the
  // largest variable weight; the certificate below confirms it.
  out.ceiling = 2 * g.delta() + 2 * g.generators().back() + 2;
  std::optional<std::size_t> prev;
  for (int bound = start; bound <= last; ++bound) {
    ToricOptions opts;
    opts.degree_bound = bound;
    opts.max_equation_degree = out.ceiling;
    GradedQuotient quo(build_toric_equations(g, opts));
    auto cert = quo.artinian(out.ceiling);
    if (!cert.certified) {
      out.artinian = false;
      out.by_bound.emplace_back(bound, 0);
      return out;
    }
    std::size_t dim = 0;
    for (auto h : cert.hilbert) dim += h;
    out.by_bound.emplace_back(bound, dim);
    out.artinian = true;
    if (prev && *prev == dim) {
      out.dim = dim;
      out.hilbert = cert.hilbert;
      out.stabilized = true;
      return out;
    }
    prev = dim;
    out.dim = dim;
    out.hilbert = cert.hilbert;
  }
  return out;
}

ConjectureReport check_grm(int p, int q) {
  require_coprime(p, q);
  const auto t0 = Clock::now();
  const int delta = (p - 1) * (q - 1) / 2;
  ConjectureReport rep;
  rep.conjecture = "grm";
  rep.parameters = {{"p", p}, {"q", q}, {"delta", delta}};

  FiltrationTable table = filtration_table(p, q);
  BettiVector betti = betti_from_table(table);
  auto inv = table.check_invariants();

  GradedQuotient o(build_IO(p, q));
  auto cert = o.artinian(2 * delta + p + q + 2);
  GrMResult gr = gr_m_filtration(o, std::max(cert.top_degree, 0));
  const std::size_t catalan = catalan_count(p, q).get_ui();

  std::vector<std::size_t> gr_pad = gr.gr;
  gr_pad.resize(std::max<std::size_t>(gr_pad.size(), delta + 1), 0);
  std::vector<std::size_t> gr_reversed;
  for (int i = 0; i <= delta; ++i) gr_reversed.push_back(gr_pad[delta - i]);

  std::vector<std::size_t> hilbert = cert.hilbert;
  hilbert.resize(2 * delta + 1, 0);
  const bool rows_ok = table.row_sums() == betti.values;
  const bool cols_ok = table.column_sums() == hilbert;

  // F^eps_{<=i} O[j] contains m^{j-i} ∩ O[j].
  Json containment = Json::array();
  bool containment_ok = true;
  for (int j = 0; j <= 2 * delta; ++j)
    for (int i = 0; i <= delta; ++i) {
      std::size_t lhs = 0, rhs = 0;
      for (int k = 0; k <= i; ++k) lhs += table.at(k, j);
      if (j < static_cast<int>(gr.by_degree.size()))
        for (std::size_t c = std::max(0, j - i); c < gr.by_degree[j].size(); ++c) rhs += gr.by_degree[j][c];
      if (lhs < rhs) {
        containment_ok = false;
        containment.push_back({{"i", i}, {"j", j}, {"filtration", lhs}, {"power_of_m", rhs}});
      }
    }

  const bool certified = cert.certified && table.stable && betti.certified && table.dim_v == catalan;
  rep.evidence = {{"betti", betti.values},
                  {"gr_m", gr.gr},
                  {"gr_m_series", series_text(gr.gr)},
                  {"gr_m_reversed", gr_reversed},
                  {"hilbert_O", hilbert},
                  {"filtration_table", table_json(table.dims)},
                  {"row_sums", table.row_sums()},
                  {"column_sums", table.column_sums()},
                  {"marginals_consistent", rows_ok && cols_ok},
                  {"support_ok", inv.support},
                  {"lefschetz_ok", inv.lefschetz},
                  {"containment_ok", containment_ok},
                  {"containment_violations", containment},
                  {"dim_V", table.dim_v},
                  {"catalan", catalan}};
  rep.bounds = {{"stable_degree", table.stable_degree}, {"artinian_checked_up_to", cert.checked_up_to}};
  for (const auto& v : inv.violations) rep.diagnostics.push_back(v);
  if (!certified) {
    rep.verdict = Verdict::inconclusive_at_bound;
    rep.diagnostics.push_back("stabilization certificate missing (dim V " + std::to_string(table.dim_v) +
                              ", expected " + std::to_string(catalan) + ")");
  } else if (!(rows_ok && cols_ok)) {
    rep.verdict = Verdict::inconclusive_at_bound;
    rep.diagnostics.push_back("filtration table marginals inconsistent; verdict withheld");
  } else {
    rep.verdict = betti.values == gr_reversed ? Verdict::holds : Verdict::fails;
  }
  rep.wall_clock_seconds = seconds_since(t0);
  return rep;
}

ConjectureReport check_toric(const std::vector<int>& generators, int max_bound) {
  const auto t0 = Clock::now();
  auto g = std::make_shared<const NumericalSemigroup>(generators);
  ConjectureReport rep;
  rep.conjecture = "toric";
  rep.parameters = {{"generators", g->generators()}};
  if (!g->is_minimally_generated()) throw std::invalid_argument("generators are not minimal");
  ToricDimension lhs = toric_dimension(*g, max_bound);
  const std::size_t rhs = enumerate_modules(g).size();
  Json by_bound = Json::array();
  for (const auto& [b, d] : lhs.by_bound) by_bound.push_back({{"degree_bound", b}, {"dim", d}});
  rep.evidence = {{"dim_O", lhs.dim},
                  {"hilbert_O", lhs.hilbert},
                  {"module_count", rhs},
                  {"delta", g->delta()},
                  {"conductor", g->conductor()},
                  {"stabilization", by_bound}};
  rep.bounds = {{"socle_ceiling", lhs.ceiling}, {"artinian_certified", lhs.artinian}, {"stabilized", lhs.stabilized}};
  if (!lhs.artinian || !lhs.stabilized) {
    rep.verdict = Verdict::inconclusive_at_bound;
    rep.diagnostics.push_back(!lhs.artinian ? "quotient not certified Artinian below the ceiling"
                                            : "dimension did not stabilize across consecutive degree bounds");
  } else {
    rep.verdict = lhs.dim == rhs ? Verdict::holds : Verdict::fails;
  }
  rep.wall_clock_seconds = seconds_since(t0);
  return rep;
}

namespace {

ConjectureReport compare_planar(ConjectureReport rep, const std::vector<std::size_t>& fake_in,
                                const std::vector<std::size_t>& reference, bool certified) {
  std::vector<std::size_t> fake = fake_in;
  if (fake.size() > reference.size()) {
    for (std::size_t i = reference.size(); i < fake.size(); ++i)
      if (fake[i] != 0) throw std::invalid_argument("reference row shorter than the computed filtration");
    fake.resize(reference.size());
  }
  fake.resize(reference.size(), 0);
  std::vector<int> strict;
  bool ok = true;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (reference[i] < fake[i]) ok = false;
    if (reference[i] > fake[i]) strict.push_back(static_cast<int>(i));
  }
  rep.evidence["fake_betti"] = fake;
  rep.evidence["reference_betti"] = reference;
  rep.evidence["strict_at"] = strict;
  rep.verdict = !certified ? Verdict::inconclusive_at_bound : (ok ? Verdict::holds : Verdict::fails);
  return rep;
}

}  // namespace

ConjectureReport check_planar(int q, int s, Rigidification convention,
                              const std::optional<std::vector<std::size_t>>& reference) {
  const auto t0 = Clock::now();
  ConjectureReport rep;
  rep.conjecture = "planar";
  rep.parameters = {{"family", "4,2q,s"}, {"q", q}, {"s", s}, {"convention", to_string(convention)}};
  std::vector<std::size_t> ref;
  if (reference) {
    ref = *reference;
  } else if (auto row = find_reference(q, s)) {
    ref = row->betti;
  } else {
    throw std::invalid_argument("no reference Betti row for q=" + std::to_string(q) + ", s=" + std::to_string(s));
  }
  ParamCurve curve = family_curve(q, s);
  LocalArtinianModel model;
  try {
    model = mrig_equations(curve, convention);
  } catch (const ConflictingRigidification& e) {
    rep.verdict = Verdict::inconclusive_at_bound;
    rep.diagnostics.push_back(std::string("conflicting rigidification: ") + e.what());
    rep.evidence["reference_betti"] = ref;
    rep.wall_clock_seconds = seconds_since(t0);
    return rep;
  }
  // Gr^i of the order-N truncation is exact for i < N, so once one of those
  // exceeds the reference no larger N can bring it back.
  int exceeded_at = -1;
  auto over_reference = [&](const ArtinianDims& d) {
    for (std::size_t i = 0; i < d.gr.size() && static_cast<int>(i) < d.order; ++i)
      if (d.gr[i] > (i < ref.size() ? ref[i] : 0)) {
        exceeded_at = static_cast<int>(i);
        return true;
      }
    return false;
  };
  ArtinianDims dims = artinian_dims(model, 0, over_reference);
  rep.evidence["implicit_equation"] = to_string(model.relation);
  rep.evidence["rigidifying_equations"] = model.rigidifying;
  rep.evidence["support_translation"] = to_string(model.translation);
  rep.evidence["embedding_dimension"] = dims.free_variables;
  rep.evidence["total_dim"] = dims.total;
  rep.evidence["gr_m"] = dims.gr;
  rep.evidence["truncation_trace"] = dims.trace;
  rep.bounds = {{"truncation_order", dims.order}, {"certified", dims.certified},
                {"ceiling", model.default_ceiling}};
  if (exceeded_at >= 0) {
    // Certified failure of the inequality in degree exceeded_at, whatever the
    // higher-order behaviour of the model.
    rep.verdict = Verdict::fails;
    rep.evidence["reference_betti"] = ref;
    rep.evidence["exceeds_reference_at"] = exceeded_at;
    rep.diagnostics.push_back("Gr^" + std::to_string(exceeded_at) + " of the order-" + std::to_string(dims.order) +
                              " truncation (exact in that degree) exceeds the reference");
    rep.diagnostics.push_back("truncation trace had not stabilized; the rigidified model may not be an isolated point");
    rep.wall_clock_seconds = seconds_since(t0);
    return rep;
  }
  if (!dims.certified) rep.diagnostics.push_back("jet truncation did not stabilize below the ceiling");
  rep = compare_planar(std::move(rep), dims.gr, ref, dims.certified);
  rep.wall_clock_seconds = seconds_since(t0);
  return rep;
}

ConjectureReport check_planar_toric(int p, int q) {
  require_coprime(p, q);
  const auto t0 = Clock::now();
  ConjectureReport rep;
  rep.conjecture = "planar";
  rep.parameters = {{"family", "toric"}, {"p", p}, {"q", q}, {"convention", "strict"}};
  BettiVector b = betti_J(p, q);
  std::vector<std::size_t> ref(b.values.rbegin(), b.values.rend());  // b_{2(delta-i)}
  LocalArtinianModel model = mrig_equations(toric_curve(p, q), Rigidification::strict);
  ArtinianDims dims = artinian_dims(model);
  rep.evidence["gr_m"] = dims.gr;
  rep.evidence["total_dim"] = dims.total;
  rep.bounds = {{"truncation_order", dims.order}, {"certified", dims.certified}};
  rep = compare_planar(std::move(rep), dims.gr, ref, dims.certified && b.certified);
  rep.evidence["equality"] = rep.evidence["strict_at"].empty();
  rep.wall_clock_seconds = seconds_since(t0);
  return rep;
}

ConjectureReport check_flatness(int p, int q, int a_max, int b_max) {
  require_coprime(p, q);
  const auto t0 = Clock::now();
  FlatnessReport f = flatness_probe(p, q, a_max, b_max);
  ConjectureReport rep;
  rep.conjecture = "flatness";
  rep.parameters = {{"p", p}, {"q", q}};
  rep.bounds = {{"window", {f.a_max, f.b_max}}, {"certified", f.certified}};
  auto slot_json = [](const std::vector<FlatnessSlot>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back({{"a", s.a}, {"b", s.b}, {"dim_R", s.ring_dim}, {"dim_image", s.image_dim}});
    return a;
  };
  std::vector<std::vector<std::size_t>> ring(f.a_max + 1, std::vector<std::size_t>(f.b_max + 1)), image = ring;
  for (const auto& s : f.slots) ring[s.a][s.b] = s.ring_dim, image[s.a][s.b] = s.image_dim;
  rep.evidence = {{"dim_R", table_json(ring)},
                  {"dim_image", table_json(image)},
                  {"strict_slots", slot_json(f.strict)},
                  {"anomalous_slots", slot_json(f.anomalies)}};
  if (!f.certified) {
    rep.verdict = Verdict::inconclusive_at_bound;
    rep.diagnostics.push_back("saturation or stable-degree certificate missing");
  } else if (f.consistent()) {
    rep.verdict = Verdict::consistent_up_to_window;
  } else {
    rep.verdict = Verdict::fails;
    rep.diagnostics.push_back("strict inclusion found inside the window");
  }
  rep.wall_clock_seconds = seconds_since(t0);
  return rep;
}

ConjectureReport check_sp_points(int p, int q) {
  require_coprime(p, q);
  const auto t0 = Clock::now();
  ConjectureReport rep;
  rep.conjecture = "sp_points";
  rep.parameters = {{"p", p}, {"q", q}};
  TildeSigmaSearch search = enumerate_tilde_sigma(p, q);
  IdealPresentation ideal = build_parabolic_ideal(p, q);

  auto vanishes = [&](const std::vector<Rational>& pt) {
    for (const auto& g : ideal.generators)
      if (evaluate(g, pt) != 0) return false;
    return true;
  };
  auto as_point = [](const std::vector<int>& d) {
    std::vector<Rational> pt;
    for (int x : d) pt.emplace_back(x);
    return pt;
  };

  bool all_vanish = true;
  Json tuples = Json::array();
  for (const auto& d : search.tuples) {
    tuples.push_back(d.d);
    if (!vanishes(as_point(d.d))) all_vanish = false;
  }

  // Integer zeros of the ideal in the window.
  std::vector<FlagTuple> zeros;
  std::vector<int> cur(p, search.window_lo);
  bool touches_boundary = false;
  for (;;) {
    if (vanishes(as_point(cur))) {
      zeros.push_back(FlagTuple{cur});
      for (int x : cur)
        if (x == search.window_lo || x == search.window_hi) touches_boundary = true;
    }
    int k = 0;
    while (k < p && cur[k] == search.window_hi) cur[k++] = search.window_lo;
    if (k == p) break;
    ++cur[k];
  }
  std::sort(zeros.begin(), zeros.end());
  const bool same = zeros == search.tuples;

  rep.evidence = {{"tilde_sigma", tuples},
                  {"tilde_sigma_count", search.tuples.size()},
                  {"generator_count", ideal.generators.size()},
                  {"all_generators_vanish", all_vanish},
                  {"zero_count_in_window", zeros.size()},
                  {"zero_set_equals_tilde_sigma", same}};
  rep.bounds = {{"window", {search.window_lo, search.window_hi}}};
  if (touches_boundary) {
    rep.verdict = Verdict::inconclusive_at_bound;
    rep.diagnostics.push_back("an integer zero lies on the window boundary");
  } else {
    rep.verdict = all_vanish && same ? Verdict::holds : Verdict::fails;
  }
  rep.wall_clock_seconds = seconds_since(t0);
  return rep;
}

std::filesystem::path reference_data_path() {
  if (const char* env = std::getenv("JACRING_DATA_DIR")) return std::filesystem::path(env) / "reference_betti.json";
  return std::filesystem::path(JACRING_DATA_DIR) / "reference_betti.json";
}

std::vector<ReferenceRow> load_reference_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference data " + path.string());
  Json j = Json::parse(in);
  std::vector<ReferenceRow> out;
  for (const auto& r : j.at("rows")) {
    ReferenceRow row;
    row.family = r.at("family").get<std::string>();
    row.q = r.at("q").get<int>();
    row.s = r.at("s").get<int>();
    row.betti = r.at("betti").get<std::vector<std::size_t>>();
    row.fake = r.at("fake_betti").get<std::vector<std::size_t>>();
    out.push_back(std::move(row));
  }
  return out;
}

std::optional<ReferenceRow> find_reference(int q, int s, const std::filesystem::path& path) {
  for (auto& r : load_reference_rows(path))
    if (r.q == q && r.s == s) return r;
  return std::nullopt;
}

}  // namespace jacring
