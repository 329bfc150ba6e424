#include "jacring/filtration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jacring {

namespace {

int delta_of(int p, int q) { return (p - 1) * (q - 1) / 2; }

void require_coprime(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw std::invalid_argument("need coprime p, q >= 2");
}

}  // namespace

std::size_t FiltrationTable::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(dims.size()) || j >= static_cast<int>(dims[i].size())) return 0;
  return dims[i][j];
}

std::size_t FiltrationTable::cumulative_at(int i, int j) const {
  if (i < 0 || j < 0 || cumulative.empty()) return 0;
  i = std::min<int>(i, static_cast<int>(cumulative.size()) - 1);
  j = std::min<int>(j, static_cast<int>(cumulative[i].size()) - 1);
  return cumulative[i][j];
}

std::vector<std::size_t> FiltrationTable::row_sums() const {
  std::vector<std::size_t> out;
  for (const auto& r : dims) out.push_back(std::accumulate(r.begin(), r.end(), std::size_t{0}));
  return out;
}

std::vector<std::size_t> FiltrationTable::column_sums() const {
  std::vector<std::size_t> out(2 * delta + 1, 0);
  for (const auto& r : dims)
    for (std::size_t j = 0; j < r.size(); ++j) out[j] += r[j];
  return out;
}

FiltrationTable::Invariants FiltrationTable::check_invariants() const {
  Invariants inv;
  auto note = [&](bool& flag, const std::string& what) {
    flag = false;
    inv.violations.push_back(what);
  };
  for (int i = 0; i <= delta; ++i)
    for (int j = 0; j <= 2 * delta; ++j) {
      const auto v = at(i, j);
      if (v != 0 && (j < i || j > 2 * i))
        note(inv.support, "support (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (v != at(delta - j + i, 2 * delta - j))
        note(inv.lefschetz, "lefschetz (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  const int top = static_cast<int>(cumulative.size()) - 1;
  if (cumulative_at(delta, 2 * delta) != cumulative_at(top, top) || cumulative_at(top, top) != dim_v)
    note(inv.exhausted, "filtration steps outside the delta x 2 delta box");
  return inv;
}

FiltrationTable filtration_table(int p, int q, int stable_degree) {
  require_coprime(p, q);
  FiltrationTable t;
  t.p = p;
  t.q = q;
  t.delta = delta_of(p, q);
  const int B = stable_degree > 0 ? stable_degree : 2 * t.delta + 2;
  t.stable_degree = B;

  GradedQuotientOptions opts;
  opts.eliminate_linear = false;
  GradedQuotient ring(build_R_eps1(p, q, B), opts);
  const auto& ctx = *ring.working().context;
  const std::size_t s_idx = ctx.index("s");
  std::vector<int> eps_w(ctx.size(), 0);  // first weight of e_i is i - 1
  for (std::size_t v = 0; v < ctx.size(); ++v)
    if (v != s_idx) eps_w[v] = ctx.weight1()[v] - 1;

  DegreePiece& pc = ring.reduced_piece(B);
  t.dim_v = pc.quotient_dim();
  t.stable = B >= 1 && ring.dim(B - 1) == t.dim_v;

  // s-filtration level (second weight of the e-part) of every free coordinate;
  // columns run by increasing power of s, so levels are non-increasing.
  const auto free_cols = pc.ideal.free_columns();
  std::vector<int> level(free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) level[k] = B - pc.basis.monomials[free_cols[k]][s_idx];

  int top_i = 0;
  std::vector<std::vector<int>> by_eps;
  for (std::size_t c = 0; c < pc.basis.size(); ++c) {
    const int i = weighted_degree(pc.basis.monomials[c], eps_w);
    if (static_cast<int>(by_eps.size()) <= i) by_eps.resize(i + 1);
    by_eps[i].push_back(static_cast<int>(c));
    top_i = std::max(top_i, i);
  }
  const int top = std::max(top_i, B);
  by_eps.resize(top + 1);

  SparseEchelon span(static_cast<int>(t.dim_v));
  t.cumulative.assign(top + 1, std::vector<std::size_t>(B + 1, 0));
  for (int i = 0; i <= top; ++i) {
    for (int c : by_eps[i]) span.insert(integer_row(pc.ideal.normal_form_of_column(c)));
    for (const auto& row : span.rows()) {
      const int lvl = level[row.front().first];
      for (int j = std::max(lvl, 0); j <= B; ++j) ++t.cumulative[i][j];
    }
  }
  t.dims.assign(t.delta + 1, std::vector<std::size_t>(2 * t.delta + 1, 0));
  for (int i = 0; i <= t.delta; ++i)
    for (int j = 0; j <= 2 * t.delta; ++j) {
      const long v = static_cast<long>(t.cumulative_at(i, j)) - static_cast<long>(t.cumulative_at(i - 1, j)) -
                     static_cast<long>(t.cumulative_at(i, j - 1)) + static_cast<long>(t.cumulative_at(i - 1, j - 1));
      if (v < 0) throw std::logic_error("negative double-graded dimension");
      t.dims[i][j] = static_cast<std::size_t>(v);
    }
  return t;
}

BettiVector betti_from_table(const FiltrationTable& t) {
  BettiVector out;
  out.method = "eps-filtration of R_{eps=1,s=1}";
  const int B = t.stable_degree;
  for (int i = 0; i <= t.delta; ++i) {
    const long d = static_cast<long>(t.cumulative_at(i, B)) - static_cast<long>(t.cumulative_at(i - 1, B));
    if (d < 0) out.nonnegative_differences = false;
    out.values.push_back(static_cast<std::size_t>(std::max(0L, d)));
    out.total += out.values.back();
  }
  out.certified = t.stable && t.check_invariants().exhausted;
  return out;
}

BettiVector betti_J(int p, int q, int stable_degree) { return betti_from_table(filtration_table(p, q, stable_degree)); }

BettiVector betti_J_saturation(int p, int q, int b_max) {
  require_coprime(p, q);
  const int delta = delta_of(p, q);
  BigradedQuotient r(build_F_family_reduced(p, q));
  BettiVector out;
  out.method = "saturated bigraded ring, s=1 colimit";
  out.certified = true;
  std::size_t prev = 0;
  for (int a = 0; a <= delta + 1; ++a) {
    auto last = r.saturated_dim(a, b_max);
    auto before = r.saturated_dim(a, b_max - 1);
    out.certified = out.certified && last.certified && before.certified && last.saturated == before.saturated;
    const long d = static_cast<long>(last.saturated) - static_cast<long>(prev);
    if (d < 0) out.nonnegative_differences = false;
    if (a <= delta) {
      out.values.push_back(static_cast<std::size_t>(std::max(0L, d)));
      out.total += out.values.back();
    } else if (d != 0) {
      out.certified = false;  // a class above the top degree means b_max is too small
    }
    prev = last.saturated;
  }
  return out;
}

FlatnessReport flatness_probe(int p, int q, int a_max, int b_max) {
  require_coprime(p, q);
  const int delta = delta_of(p, q);
  FlatnessReport rep;
  rep.p = p;
  rep.q = q;
  rep.a_max = a_max < 0 ? 2 * delta + 2 : a_max;
  rep.b_max = b_max < 0 ? 2 * delta + 2 : b_max;
  FiltrationTable t = filtration_table(p, q, std::max(rep.b_max, 2 * delta + 2));
  BigradedQuotient r(build_F_family_reduced(p, q));
  SaturationTable sat = saturate_and_dims(r, rep.a_max, rep.b_max);
  rep.certified = sat.certified && t.stable;
  for (int a = 0; a <= rep.a_max; ++a)
    for (int b = 0; b <= rep.b_max; ++b) {
      FlatnessSlot s{a, b, sat.dims[a][b], t.cumulative_at(a, b)};
      rep.slots.push_back(s);
      if (s.ring_dim < s.image_dim) rep.strict.push_back(s);
      if (s.ring_dim > s.image_dim) rep.anomalies.push_back(s);
    }
  return rep;
}

}  // namespace jacring
