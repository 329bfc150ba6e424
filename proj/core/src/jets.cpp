#include "jacring/jets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "jacring/matrix.hpp"

namespace jacring {

namespace {

using UniPoly = std::vector<Rational>;  // coefficient of t^k at index k

UniPoly to_uni(const SparsePoly& p) {
  UniPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (static_cast<int>(out.size()) <= m[0]) out.resize(m[0] + 1, Rational(0));
    out[m[0]] = c;
  }
  return out;
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void trim(UniPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UniPoly uni_mod(UniPoly a, const UniPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = uni_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

UniPoly uni_derivative(const UniPoly& a) {
  UniPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Rational(static_cast<long>(i)));
  trim(out);
  return out;
}

Rational uni_eval(const UniPoly& a, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  if (n == 0) return out;
  if (n > Integer("1000000000000")) throw std::runtime_error("rational root search: coefficient too large");
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

/// Distinct rational roots of a nonzero polynomial.
std::vector<Rational> rational_roots(UniPoly a) {
  trim(a);
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.push_back(Rational(0));
  a.erase(a.begin(), a.begin() + low);
  if (a.size() <= 1) return roots;
  Integer den = 1;
  for (const auto& c : a) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : a) ints.push_back(Integer(c * Rational(den)));
  for (const auto& num : divisors(ints.front()))
    for (const auto& dd : divisors(ints.back()))
      for (int sign : {1, -1}) {
        Rational r = make_rational(Integer(num * sign), dd);
        if (uni_eval(a, r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

int gcd_all(int a, int b) { return std::gcd(a, b); }

}  // namespace

int ParamCurve::deg_x() const { return degree_in(x, 0); }
int ParamCurve::deg_y() const { return degree_in(y, 0); }

ParamCurve family_curve(int q, int s) {
  if (q < 2 || s <= 2 * q || s % 2 == 0) throw std::invalid_argument("family needs s > 2q >= 4 with s odd");
  auto ctx = make_context({"t"}, {1});
  const auto t = SparsePoly::variable(ctx, "t");
  ParamCurve c{pow(t, 4), pow(t, 2 * q) + pow(t, s), "4,2q,s", q, s};
  return c;
}

ParamCurve toric_curve(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw std::invalid_argument("need coprime p, q >= 2");
  auto ctx = make_context({"t"}, {1});
  const auto t = SparsePoly::variable(ctx, "t");
  return ParamCurve{pow(t, p), pow(t, q), "toric", 0, 0};
}

ParamCurve curve_from(const std::vector<Rational>& xc, const std::vector<Rational>& yc) {
  auto ctx = make_context({"t"}, {1});
  ParamCurve c{SparsePoly(ctx), SparsePoly(ctx), "custom", 0, 0};
  for (std::size_t k = 0; k < xc.size(); ++k) c.x.add_term({static_cast<int>(k)}, xc[k]);
  for (std::size_t k = 0; k < yc.size(); ++k) c.y.add_term({static_cast<int>(k)}, yc[k]);
  if (c.x.is_zero() || c.y.is_zero() || c.x.terms().rbegin()->second != 1 || c.y.terms().rbegin()->second != 1)
    throw std::invalid_argument("curve coordinates must be monic");
  return c;
}

Implicitization implicitize(const ParamCurve& c, int max_degree) {
  const int n = c.deg_x(), m = c.deg_y();
  if (n < 1 || m < 1 || gcd_all(n, m) != 1) throw std::invalid_argument("implicitize needs coprime degrees");
  const int top = max_degree > 0 ? max_degree : n * m;
  const UniPoly ux = to_uni(c.x), uy = to_uni(c.y);
  std::vector<UniPoly> xp{UniPoly{Rational(1)}}, yp{UniPoly{Rational(1)}};
  for (int D = 1; D <= top; ++D) {
    std::vector<std::pair<int, int>> mons;
    for (int b = 0; b * m <= D; ++b)
      for (int a = 0; a * n + b * m <= D; ++a) mons.emplace_back(a, b);
    while (static_cast<int>(xp.size()) * n <= D) xp.push_back(uni_mul(xp.back(), ux));
    while (static_cast<int>(yp.size()) * m <= D) yp.push_back(uni_mul(yp.back(), uy));
    ExactMatrix ev(D + 1, mons.size());
    for (std::size_t k = 0; k < mons.size(); ++k) {
      UniPoly col = uni_mul(xp[mons[k].first], yp[mons[k].second]);
      for (std::size_t r = 0; r < col.size(); ++r) ev.at(r, k) = col[r];
    }
    auto ker = kernel_basis(ev);
    if (ker.empty()) continue;
    if (ker.size() > 1) throw std::runtime_error("implicitize: relation of minimal degree is not unique");
    auto ring = make_context({"x", "y"}, {n, m});
    Implicitization out{SparsePoly(ring), D, false};
    for (std::size_t k = 0; k < mons.size(); ++k)
      if (ker[0][k] != 0) out.relation.add_term({mons[k].first, mons[k].second}, ker[0][k]);
    int top_b = 0;
    for (const auto& [mon, coef] : out.relation.terms()) top_b = std::max(top_b, mon[1]);
    const Rational lead = out.relation.coefficient({0, top_b});
    if (lead == 0) throw std::runtime_error("implicitize: leading y-power coefficient is not constant");
    out.relation *= Rational(1) / lead;
    out.residual_zero = compose(out.relation, c.x.context(), {c.x, c.y}).is_zero();
    if (!out.residual_zero) throw std::logic_error("implicitize: nonzero residual");
    return out;
  }
  throw std::runtime_error("implicitize: no relation up to weighted degree " + std::to_string(top) +
                           "; try a larger bound");
}

const char* to_string(Rigidification r) { return r == Rigidification::strict ? "strict" : "paper"; }

Rigidification parse_rigidification(const std::string& s) {
  if (s == "strict") return Rigidification::strict;
  if (s == "paper") return Rigidification::paper;
  throw std::invalid_argument("unknown convention '" + s + "' (expected paper or strict)");
}

LocalArtinianModel mrig_equations(const ParamCurve& c, Rigidification convention) {
  const int n = c.deg_x(), m = c.deg_y();
  Implicitization imp = implicitize(c);

  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  for (int j = 1; j <= m; ++j) names.push_back("f" + std::to_string(j));
  const std::size_t nv = names.size();
  auto ring = make_context(names, std::vector<int>(nv, 1));
  names.push_back("t");
  auto work = make_context(names, std::vector<int>(nv + 1, 1));
  const auto t = SparsePoly::variable(work, "t");
  SparsePoly phx = pow(t, n), phy = pow(t, m);
  for (int i = 1; i <= n; ++i) phx += SparsePoly::variable(work, i - 1) * pow(t, n - i);
  for (int j = 1; j <= m; ++j) phy += SparsePoly::variable(work, n + j - 1) * pow(t, m - j);

  std::vector<SparsePoly> back;  // work -> ring, t unused in coefficients
  for (std::size_t v = 0; v < nv; ++v) back.push_back(SparsePoly::variable(ring, v));
  back.push_back(SparsePoly(ring));

  SparsePoly G = compose(imp.relation, work, {phx, phy});
  std::vector<SparsePoly> gens;
  for (int k = 0; k <= degree_in(G, nv); ++k) {
    SparsePoly coeff = compose(coeff_of(G, nv, k), ring, back);
    if (!coeff.is_zero()) gens.push_back(std::move(coeff));
  }

  // Base coefficients as functions of a translation t -> t + c.
  auto cctx = make_context({"c", "t"}, {1, 1});
  const auto cc = SparsePoly::variable(cctx, "c");
  const auto tt = SparsePoly::variable(cctx, "t");
  const SparsePoly xs = compose(c.x, cctx, {tt + cc}), ys = compose(c.y, cctx, {tt + cc});
  std::vector<UniPoly> orbit;  // orbit[v](c)
  for (int i = 1; i <= n; ++i) orbit.push_back(to_uni(coeff_of(xs, 1, n - i)));
  for (int j = 1; j <= m; ++j) orbit.push_back(to_uni(coeff_of(ys, 1, m - j)));
  for (auto& u : orbit) trim(u);

  LocalArtinianModel model;
  model.context = ring;
  model.convention = convention;
  model.relation = imp.relation;
  model.default_ceiling = (n - 1) * (m - 1) + 4;

  // Rigidifying equations, as polynomials in the unknowns.
  std::vector<SparsePoly> rigid;
  auto var = [&](const std::string& name) { return SparsePoly::variable(ring, name); };
  auto base_value = [&](std::size_t v) { return orbit[v].empty() ? Rational(0) : orbit[v][0]; };
  if (convention == Rigidification::strict) {
    rigid.push_back(var("e1") - SparsePoly::constant(ring, base_value(0)));
    rigid.push_back(var("f1") - SparsePoly::constant(ring, base_value(n)));
  } else {
    if (c.tag != "4,2q,s") throw std::invalid_argument("paper convention is defined for the 4,2q,s family only");
    rigid.push_back(var("f" + std::to_string(c.s - 2 * c.q)) - SparsePoly::constant(ring, 1));
    rigid.push_back(var("f1") * Rational(4) - var("e1") * Rational(c.s));
  }
  for (const auto& r : rigid) model.rigidifying.push_back(to_string(r) + " = 0");

  // Support: monic reparametrizations fixing infinity are translations, so
  // restrict each rigidifying equation to the orbit and intersect the roots.
  UniPoly g;
  for (const auto& r : rigid) {
    UniPoly acc;
    for (const auto& [mon, coef] : r.terms()) {
      UniPoly term{coef};
      for (std::size_t v = 0; v < nv; ++v)
        for (int e = 0; e < mon[v]; ++e) term = uni_mul(term, orbit[v]);
      if (acc.size() < term.size()) acc.resize(term.size(), Rational(0));
      for (std::size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
    }
    trim(acc);
    g = g.empty() ? acc : uni_gcd(g, acc);
    if (!acc.empty() && g.empty()) g = acc;
  }
  trim(g);
  if (g.empty()) throw std::runtime_error("support is not a single point: rigidification leaves the translation free");
  if (g.size() == 1) throw ConflictingRigidification("rigidifying equations " + model.rigidifying.front() + ", " +
                                                     model.rigidifying.back() + " have no common solution on the curve");
  const UniPoly sqfree = [&] {
    UniPoly d = uni_gcd(g, uni_derivative(g));
    // g / d by long division
    UniPoly num = g, quo(g.size() >= d.size() ? g.size() - d.size() + 1 : 1, Rational(0));
    while (num.size() >= d.size() && !num.empty()) {
      const Rational f = num.back() / d.back();
      const std::size_t shift = num.size() - d.size();
      quo[shift] = f;
      for (std::size_t i = 0; i < d.size(); ++i) num[shift + i] -= f * d[i];
      trim(num);
    }
    return quo;
  }();
  auto roots = rational_roots(g);
  if (roots.size() != sqfree.size() - 1 || roots.size() != 1)
    throw std::runtime_error("support is not a single rational point (" + std::to_string(sqfree.size() - 1) +
                             " distinct translations)");
  model.translation = roots.front();
  for (std::size_t v = 0; v < nv; ++v) model.center.push_back(uni_eval(orbit[v], model.translation));

  std::vector<SparsePoly> shift;
  for (std::size_t v = 0; v < nv; ++v)
    shift.push_back(SparsePoly::variable(ring, v) + SparsePoly::constant(ring, model.center[v]));
  for (const auto& gen : gens) model.generators.push_back(compose(gen, ring, shift));
  for (const auto& r : rigid) model.generators.push_back(compose(r, ring, shift));
  for (const auto& gen : model.generators)
    if (gen.constant_term() != 0) throw std::logic_error("support point is not a zero of the equations");
  return model;
}

LocalArtinianModel local_model(ContextPtr ctx, std::vector<SparsePoly> generators) {
  LocalArtinianModel model;
  model.context = ctx;
  model.center.assign(ctx->size(), Rational(0));
  for (auto& g : generators) {
    if (g.constant_term() != 0) throw std::invalid_argument("generator does not vanish at the origin");
    model.generators.push_back(std::move(g));
  }
  model.relation = SparsePoly(ctx);
  return model;
}

ArtinianDims truncated_dims(const LocalArtinianModel& model, int N) {
  if (N < 1) throw std::invalid_argument("truncation order must be positive");
  const auto& ctx = model.context;
  const std::size_t n = ctx->size();
  std::vector<SparsePoly> gens;
  for (const auto& g : model.generators)
    if (!g.is_zero()) gens.push_back(g);

  // Linear parts, with an identity block recording the combinations.
  ExactMatrix lin(gens.size(), n + gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      Monomial u(n, 0);
      u[v] = 1;
      lin.at(k, v) = gens[k].coefficient(u);
    }
    lin.at(k, n + k) = 1;
  }
  auto rr = lin.rref();
  std::vector<std::size_t> pivot_vars;
  std::vector<SparsePoly> solved;  // x_p + (higher order) for each pivot variable
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    if (rr.pivots[r] >= n) break;
    SparsePoly comb(ctx);
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (rr.matrix.at(r, n + k) != 0) comb += gens[k] * rr.matrix.at(r, n + k);
    pivot_vars.push_back(rr.pivots[r]);
    solved.push_back(std::move(comb));
  }
  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < n; ++v)
    if (std::find(pivot_vars.begin(), pivot_vars.end(), v) == pivot_vars.end()) free_vars.push_back(v);

  std::vector<std::string> fnames;
  for (auto v : free_vars) fnames.push_back(ctx->name(v));
  auto fctx = make_context(fnames, std::vector<int>(fnames.size(), 1));
  const std::vector<int> ones(fnames.size(), 1);
  const int cap = N - 1;

  auto compose_trunc = [&](const SparsePoly& g, const std::vector<SparsePoly>& phi) {
    std::vector<std::vector<SparsePoly>> powers(n);
    SparsePoly out(fctx);
    for (const auto& [mon, coef] : g.terms()) {
      if (total_degree(mon) > cap) continue;  // every image has order >= 1
      SparsePoly acc = SparsePoly::constant(fctx, coef);
      for (std::size_t v = 0; v < n && !acc.is_zero(); ++v) {
        if (mon[v] == 0) continue;
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(SparsePoly::constant(fctx, 1));
        while (static_cast<int>(cache.size()) <= mon[v])
          cache.push_back(mul_truncated_weight(cache.back(), phi[v], ones, cap));
        acc = mul_truncated_weight(acc, cache[mon[v]], ones, cap);
      }
      out += acc;
    }
    return out;
  };

  // Implicit-function substitution for the pivot variables, one order per pass.
  std::vector<SparsePoly> phi(n, SparsePoly(fctx));
  for (std::size_t k = 0; k < free_vars.size(); ++k) phi[free_vars[k]] = SparsePoly::variable(fctx, k);
  for (int pass = 0; pass < N; ++pass) {
    std::vector<SparsePoly> next = phi;
    for (std::size_t r = 0; r < pivot_vars.size(); ++r) {
      Monomial u(n, 0);
      u[pivot_vars[r]] = 1;
      SparsePoly rest = solved[r] - SparsePoly::term(ctx, u, Rational(1));
      next[pivot_vars[r]] = -compose_trunc(rest, phi);
    }
    phi = std::move(next);
  }

  // Monomials of order < N in the free variables, by order then lex.
  std::vector<Monomial> mons;
  std::map<Monomial, int, GrlexLess> index;
  {
    const std::size_t f = free_vars.size();
    Monomial cur(f, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int rest) {
      if (k == f) {
        mons.push_back(cur);
        return;
      }
      for (int e = 0; e <= rest; ++e) {
        cur[k] = e;
        rec(k + 1, rest - e);
      }
      cur[k] = 0;
    };
    rec(0, cap);
    std::sort(mons.begin(), mons.end(), GrlexLess{});
    for (std::size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], static_cast<int>(i));
  }

  SparseEchelon ideal(static_cast<int>(mons.size()));
  for (const auto& g : gens) {
    SparsePoly o = compose_trunc(g, phi);
    if (o.is_zero()) continue;
    const int low = total_degree(o.terms().begin()->first);
    Integer den = 1;
    for (const auto& [mon, coef] : o.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coef.get_den_mpz_t());
    for (const auto& mul : mons) {
      if (total_degree(mul) + low > cap) break;
      SparseRow row;
      for (const auto& [mon, coef] : o.terms()) {
        Monomial mm = monomial_product(mul, mon);
        if (total_degree(mm) > cap) continue;
        row.emplace_back(index.at(mm), Integer(coef * Rational(den)));
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      ideal.insert(std::move(row));
    }
  }

  ArtinianDims out;
  out.order = N;
  out.free_variables = free_vars.size();
  out.gr.assign(N, 0);
  for (const auto& mon : mons) ++out.gr[total_degree(mon)];
  for (std::size_t c = 0; c < mons.size(); ++c)
    if (ideal.is_pivot(static_cast<int>(c))) --out.gr[total_degree(mons[c])];
  for (auto x : out.gr) out.total += x;
  return out;
}

ArtinianDims artinian_dims(const LocalArtinianModel& model, int ceiling,
                           const std::function<bool(const ArtinianDims&)>& stop) {
  const int top = ceiling > 0 ? ceiling : model.default_ceiling;
  std::vector<std::size_t> trace;
  ArtinianDims prev;
  for (int N = 1; N <= top; ++N) {
    ArtinianDims cur = truncated_dims(model, N);
    trace.push_back(cur.total);
    if (N > 1 && cur.total == prev.total) {
      prev.certified = true;
      prev.trace = trace;
      while (prev.gr.size() > 1 && prev.gr.back() == 0) prev.gr.pop_back();
      return prev;
    }
    if (stop && stop(cur)) {
      cur.trace = trace;
      return cur;
    }
    prev = std::move(cur);
  }
  prev.certified = false;
  prev.trace = trace;
  return prev;
}

}  // namespace jacring
