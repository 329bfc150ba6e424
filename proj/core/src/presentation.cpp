#include "jacring/presentation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace jacring {

namespace {

void require_coprime_pair(int p, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("need p, q >= 2");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
}

std::string idx_name(const char* stem, int i) { return std::string(stem) + std::to_string(i); }

// Moves polynomials to `target`, mapping variables by name; variables absent
// from target must not occur.
SparsePoly rehome(const SparsePoly& p, const ContextPtr& target) {
  const auto& src = *p.context();
  std::vector<SparsePoly> images;
  images.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (auto j = target->find(src.name(i)))
      images.push_back(SparsePoly::variable(target, *j));
    else
      images.push_back(SparsePoly(target));
  }
  for (const auto& [m, c] : p.terms())
    for (std::size_t i = 0; i < src.size(); ++i)
      if (m[i] > 0 && !target->find(src.name(i)))
        throw std::logic_error("rehome: variable " + src.name(i) + " still occurs");
  return compose(p, target, images);
}

SparsePoly shift_var(const SparsePoly& p, std::size_t var, const SparsePoly& by) {
  return substitute(p, var, SparsePoly::variable(p.context(), var) + by);
}

}  // namespace

const char* to_string(Homogeneity h) {
  switch (h) {
    case Homogeneity::none: return "none";
    case Homogeneity::graded: return "graded";
    case Homogeneity::bigraded: return "bigraded";
  }
  return "?";
}

void audit_homogeneity(const IdealPresentation& pres) {
  for (std::size_t k = 0; k < pres.generators.size(); ++k) {
    const auto& g = pres.generators[k];
    if (g.is_zero()) continue;
    bool ok = true;
    if (pres.homogeneity == Homogeneity::graded) ok = homogeneous_degree(g, 1).has_value();
    if (pres.homogeneity == Homogeneity::bigraded) ok = bidegree(g).has_value();
    if (!ok) throw std::invalid_argument("generator " + std::to_string(k) + " is not homogeneous");
  }
}

IdealPresentation deduplicate(IdealPresentation pres) {
  std::vector<SparsePoly> kept;
  for (auto& g : pres.generators) {
    if (g.is_zero()) continue;
    SparsePoly n = primitive_part(g);
    if (n.terms().rbegin()->second < 0) n = -n;
    if (std::find(kept.begin(), kept.end(), n) == kept.end()) kept.push_back(std::move(n));
  }
  pres.generators = std::move(kept);
  return pres;
}

IdealPresentation build_IO(int p, int q) {
  require_coprime_pair(p, q);
  std::vector<std::string> names;
  std::vector<int> w;
  for (int i = 2; i <= p; ++i) names.push_back(idx_name("e", i)), w.push_back(i);
  for (int j = 2; j <= q; ++j) names.push_back(idx_name("f", j)), w.push_back(j);
  auto ring = make_context(names, w);
  names.push_back("w");
  w.push_back(-1);  // keeps e_i w^i of degree 0 so coefficients stay homogeneous
  auto work = make_context(names, w);

  auto wv = [&](int k) { return pow(SparsePoly::variable(work, "w"), k); };
  SparsePoly e = SparsePoly::constant(work, 1), de(work);
  SparsePoly f = SparsePoly::constant(work, 1), df(work);
  for (int i = 2; i <= p; ++i) {
    auto v = SparsePoly::variable(work, idx_name("e", i));
    e += v * wv(i);
    de += v * wv(i - 1) * Rational(i);
  }
  for (int j = 2; j <= q; ++j) {
    auto v = SparsePoly::variable(work, idx_name("f", j));
    f += v * wv(j);
    df += v * wv(j - 1) * Rational(j);
  }
  SparsePoly h = Rational(q) * (de * f) - Rational(p) * (e * df);
  if (!coeff_of(h, "w", p + q - 1).is_zero())
    throw std::logic_error("build_IO: top coefficient does not cancel");

  IdealPresentation out{ring, {}, Homogeneity::graded};
  for (int k = 1; k <= p + q - 2; ++k) out.generators.push_back(rehome(coeff_of(h, "w", k), ring));
  audit_homogeneity(out);
  return out;
}

IdealPresentation build_g_ideal(int p, int q) {
  require_coprime_pair(p, q);
  std::vector<std::string> names;
  std::vector<int> w;
  for (int i = 2; i <= p; ++i) names.push_back(idx_name("e", i)), w.push_back(i);
  auto ring = make_context(names, w);
  names.push_back("w");
  w.push_back(-1);
  auto work = make_context(names, w);

  SparsePoly e = SparsePoly::constant(work, 1);
  for (int i = 2; i <= p; ++i)
    e += SparsePoly::variable(work, idx_name("e", i)) * pow(SparsePoly::variable(work, "w"), i);
  SparsePoly series = rational_power_series(e, make_rational(q, p), "w", p + q - 1);

  IdealPresentation out{ring, {}, Homogeneity::graded};
  for (int i = 1; i <= p - 1; ++i) out.generators.push_back(rehome(coeff_of(series, "w", q + i), ring));
  audit_homogeneity(out);
  return out;
}

namespace {

struct FamilyWork {
  ContextPtr work;
  ContextPtr ring;
};

FamilyWork family_contexts(int p, int q, bool with_s) {
  std::vector<std::string> names{"eps"};
  std::vector<int> w1{1}, w2{0};
  if (with_s) names.push_back("s"), w1.push_back(0), w2.push_back(1);
  for (int i = 2; i <= p; ++i) names.push_back(idx_name("e", i)), w1.push_back(i - 1), w2.push_back(i);
  for (int j = 2; j <= q; ++j) names.push_back(idx_name("f", j)), w1.push_back(j - 1), w2.push_back(j);
  auto ring = with_s ? make_context(names, w1, w2) : make_context(names, w1);
  names.push_back("z");
  w1.push_back(1);
  w2.push_back(1);
  auto work = with_s ? make_context(names, w1, w2) : make_context(names, w1);
  return {work, ring};
}

// prod_{j<q} A(z + j p s eps) - prod_{i<p} B(z + i q s eps); s is replaced by 1
// when the context has no s.
SparsePoly family_difference(int p, int q, const ContextPtr& work) {
  const bool with_s = work->find("s").has_value();
  const auto eps = SparsePoly::variable(work, "eps");
  const auto s = with_s ? SparsePoly::variable(work, "s") : SparsePoly::constant(work, 1);
  const auto z = SparsePoly::variable(work, "z");
  const std::size_t zi = work->index("z");

  auto side = [&](int n, int m, const char* stem) {
    // n = degree, m = number of shifted copies; first coefficient n(m-1)/2 s.
    SparsePoly poly = pow(z, n);
    for (int i = 1; i <= n; ++i) {
      SparsePoly coeff = i == 1 ? s * make_rational(static_cast<long>(m) * (n - 1), 2)
                                : SparsePoly::variable(work, idx_name(stem, i));
      poly += Rational(n) * eps * coeff * pow(z, n - i);
    }
    SparsePoly prod = SparsePoly::constant(work, 1);
    for (int j = 0; j < m; ++j) prod = prod * shift_var(poly, zi, Rational(static_cast<long>(j) * n) * s * eps);
    return prod;
  };
  return side(p, q, "e") - side(q, p, "f");
}

}  // namespace

IdealPresentation build_F_family(int p, int q) {
  require_coprime_pair(p, q);
  auto ctx = family_contexts(p, q, true);
  SparsePoly diff = family_difference(p, q, ctx.work);
  IdealPresentation out{ctx.ring, {}, Homogeneity::bigraded};
  for (int d = 0; d <= p * q; ++d) out.generators.push_back(rehome(coeff_of(diff, "z", d), ctx.ring));
  if (!out.generators.back().is_zero()) throw std::logic_error("F_{pq} does not vanish");
  audit_homogeneity(out);
  return out;
}

IdealPresentation build_theorem_HSp_ideal(int p, int q) {
  require_coprime_pair(p, q);
  auto ctx = family_contexts(p, q, false);
  SparsePoly diff = family_difference(p, q, ctx.work);
  IdealPresentation out{ctx.ring, {}, Homogeneity::graded};
  for (int d = 0; d <= p * q; ++d) out.generators.push_back(rehome(coeff_of(diff, "z", d), ctx.ring));
  audit_homogeneity(out);
  return out;
}

IdealPresentation build_F_family_reduced(int p, int q) {
  auto divided = divide_generators_by(build_F_family(p, q), "eps");
  auto elim = eliminate_linear_variables(divided);
  for (const auto& name : elim.presentation.context->names())
    if (name[0] == 'f') throw std::logic_error("f-elimination incomplete at " + name);
  return elim.presentation;
}

IdealPresentation build_R_eps1(int p, int q, int max_degree) {
  require_coprime_pair(p, q);
  // s goes last so that reverse-lex column order sorts by the power of s.
  std::vector<std::string> names;
  std::vector<int> w;
  for (int i = 2; i <= p; ++i) names.push_back(idx_name("e", i)), w.push_back(i);
  names.push_back("s"), w.push_back(1);
  auto ring = make_context(names, w);
  const int top = std::min(max_degree, p * q);
  const auto s = SparsePoly::variable(ring, "s");

  // Coefficients of A(z) = z^p + sum a_k z^{p-k}, with a_1 = p e_1.
  std::vector<SparsePoly> a(p + 1, SparsePoly(ring));
  a[1] = s * make_rational(static_cast<long>(p) * q * (p - 1), 2);
  for (int k = 2; k <= p; ++k) a[k] = SparsePoly::variable(ring, idx_name("e", k)) * Rational(p);

  // Newton: power sums of a monic polynomial from its coefficients.
  auto power_sums = [&](const std::vector<SparsePoly>& coeff, int n, int upto) {
    std::vector<SparsePoly> S(upto + 1, SparsePoly(ring));
    S[0] = SparsePoly::constant(ring, n);
    for (int r = 1; r <= upto; ++r) {
      SparsePoly acc(ring);
      for (int k = 1; k <= std::min(r - 1, n); ++k) acc += coeff[k] * S[r - k];
      if (r <= n) acc += coeff[r] * Rational(r);
      S[r] = -acc;
    }
    return S;
  };
  // sum over j < copies of (-j*step*s)^k.
  auto shift_sum = [&](int copies, int step, int k) {
    Integer total = 0, t;
    for (int j = 0; j < copies; ++j) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(j) * step, static_cast<unsigned long>(k));
      if (k % 2 == 1) t = -t;
      total += t;
    }
    return pow(s, k) * Rational(total);
  };
  // Power sums of the roots of the product of shifted copies.
  auto shifted_power_sum = [&](const std::vector<SparsePoly>& S, int copies, int step, int m) {
    SparsePoly acc(ring);
    for (int r = 0; r <= m; ++r) acc += S[r] * shift_sum(copies, step, m - r) * Rational(binomial(m, r));
    return acc;
  };

  auto Sa = power_sums(a, p, top);
  std::vector<SparsePoly> PC(top + 1, SparsePoly(ring));
  for (int m = 1; m <= top; ++m) PC[m] = shifted_power_sum(Sa, q, p, m);

  // Solve the power sums of B's roots from the top q relations.
  std::vector<SparsePoly> Sb(std::max(top, q) + 1, SparsePoly(ring));
  Sb[0] = SparsePoly::constant(ring, q);
  const int solve_to = q;
  std::vector<SparsePoly> PCfull = PC;
  if (top < q) {
    PCfull.resize(q + 1, SparsePoly(ring));
    auto SaFull = power_sums(a, p, q);
    for (int m = top + 1; m <= q; ++m) PCfull[m] = shifted_power_sum(SaFull, q, p, m);
  }
  for (int m = 1; m <= solve_to; ++m) {
    SparsePoly rest(ring);
    for (int r = 0; r < m; ++r) rest += Sb[r] * shift_sum(p, q, m - r) * Rational(binomial(m, r));
    Sb[m] = (PCfull[m] - rest) * make_rational(1, p);
  }
  std::vector<SparsePoly> b(q + 1, SparsePoly(ring));
  for (int k = 1; k <= q; ++k) {
    SparsePoly acc = Sb[k];
    for (int i = 1; i < k; ++i) acc += b[i] * Sb[k - i];
    b[k] = acc * make_rational(-1, k);
  }
  if (!(b[1] == s * make_rational(static_cast<long>(p) * q * (q - 1), 2)))
    throw std::logic_error("build_R_eps1: solved f_1 disagrees with its fixed value");
  for (int r = q + 1; r <= top; ++r) {
    SparsePoly acc(ring);
    for (int k = 1; k <= q; ++k) acc += b[k] * Sb[r - k];
    Sb[r] = -acc;
  }

  IdealPresentation out{ring, {}, Homogeneity::graded};
  for (int m = q + 1; m <= top; ++m) out.generators.push_back(PC[m] - shifted_power_sum(Sb, p, q, m));
  audit_homogeneity(out);
  return out;
}

int default_toric_bound(const NumericalSemigroup& g) { return 2 * g.generators().back() + g.conductor(); }

IdealPresentation build_toric_equations(const NumericalSemigroup& g, ToricOptions opts) {
  if (!g.is_minimally_generated()) throw std::invalid_argument("toric equations need minimal generators");
  const int bound = opts.degree_bound > 0 ? opts.degree_bound : default_toric_bound(g);
  const auto& gens = g.generators();

  std::vector<std::string> names;
  std::vector<int> w;
  for (int x : gens)
    for (int i = 2; i <= x; ++i) names.push_back("c" + std::to_string(x) + "_" + std::to_string(i)), w.push_back(i);
  auto ring = make_context(names, w);
  names.push_back("t");
  std::vector<int> cweights = w;
  cweights.push_back(0);
  w.push_back(1);
  auto work = make_context(names, w);
  const int cap = opts.max_equation_degree > 0 ? opts.max_equation_degree : bound;

  std::vector<SparsePoly> xs;
  const auto t = SparsePoly::variable(work, "t");
  for (int x : gens) {
    SparsePoly poly = pow(t, x);
    for (int i = 2; i <= x; ++i)
      poly += SparsePoly::variable(work, "c" + std::to_string(x) + "_" + std::to_string(i)) * pow(t, x - i);
    xs.push_back(poly);
  }
  // Truncated powers of each x_g, keyed by exponent.
  std::vector<std::vector<SparsePoly>> powers(gens.size());
  auto power_of = [&](std::size_t k, int e) -> const SparsePoly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(SparsePoly::constant(work, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(mul_truncated_weight(cache.back(), xs[k], cweights, cap));
    return cache[e];
  };
  auto product_for = [&](const std::vector<int>& u) {
    SparsePoly acc = SparsePoly::constant(work, 1);
    for (std::size_t k = 0; k < u.size(); ++k)
      if (u[k] > 0) acc = mul_truncated_weight(acc, power_of(k, u[k]), cweights, cap);
    return acc;
  };

  IdealPresentation out{ring, {}, Homogeneity::graded};
  for (int n = 1; n <= bound; ++n) {
    std::vector<std::vector<int>> facts;
    std::vector<int> u(gens.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int rest) {
      if (k == gens.size()) {
        if (rest == 0) facts.push_back(u);
        return;
      }
      for (int e = 0; e * gens[k] <= rest; ++e) {
        u[k] = e;
        rec(k + 1, rest - e * gens[k]);
      }
      u[k] = 0;
    };
    rec(0, n);
    if (facts.size() < 2) continue;
    SparsePoly first = product_for(facts.front());
    for (std::size_t f = 1; f < facts.size(); ++f) {
      SparsePoly diff = product_for(facts[f]) - first;
      for (int k = 1; k <= std::min(n, cap); ++k) {
        SparsePoly c = coeff_of(diff, "t", n - k);
        if (!c.is_zero()) out.generators.push_back(rehome(c, ring));
      }
    }
  }
  audit_homogeneity(out);
  return out;
}

IdealPresentation build_sigma_ideal(int p, int q) {
  auto r = build_R_eps1(p, q, p * q);
  std::vector<std::string> names;
  std::vector<int> w;
  for (int i = 1; i <= p; ++i) names.push_back(idx_name("e", i)), w.push_back(i);
  auto ring = make_context(names, w);
  // e_k -> e_k, s -> 1.
  std::vector<SparsePoly> images;
  for (int i = 2; i <= p; ++i) images.push_back(SparsePoly::variable(ring, idx_name("e", i)));
  images.push_back(SparsePoly::constant(ring, 1));
  IdealPresentation out{ring, {}, Homogeneity::none};
  out.generators.push_back(SparsePoly::variable(ring, "e1") -
                           SparsePoly::constant(ring, make_rational(static_cast<long>(q) * (p - 1), 2)));
  for (const auto& g : r.generators) out.generators.push_back(compose(g, ring, images));
  return out;
}

IdealPresentation build_parabolic_ideal(int p, int q) {
  auto sigma = build_sigma_ideal(p, q);
  std::vector<std::string> names;
  for (int k = 1; k <= p; ++k) names.push_back(idx_name("xi", k));
  auto ring = make_context(names, std::vector<int>(p, 1));
  names.push_back("T");
  auto work = make_context(names, std::vector<int>(p + 1, 1));
  const auto T = SparsePoly::variable(work, "T");

  IdealPresentation out{ring, {}, Homogeneity::none};
  for (int i = 1; i <= p; ++i) {
    const int c = p - i;
    // Entries of the i-th chain lattice basis, moved back into Sigma by -c.
    SparsePoly gen = SparsePoly::constant(work, 1);
    for (int k = 1; k <= p; ++k) {
      SparsePoly y = SparsePoly::variable(work, k - 1) + SparsePoly::constant(work, (k <= i ? 0 : p) - c);
      gen = gen * (SparsePoly::constant(work, 1) + y * T);
    }
    std::vector<SparsePoly> images;
    for (int j = 1; j <= p; ++j) images.push_back(rehome(coeff_of(gen, "T", j), ring) * make_rational(1, p));
    for (const auto& g : sigma.generators) out.generators.push_back(compose(g, ring, images));
  }
  return out;
}

EliminationResult eliminate_linear_variables(const IdealPresentation& pres) {
  const auto& ctx = pres.context;
  const std::size_t n = ctx->size();
  std::vector<SparsePoly> gens;
  for (const auto& g : pres.generators)
    if (!g.is_zero()) gens.push_back(g);
  std::vector<std::pair<std::size_t, SparsePoly>> solved;
  std::vector<bool> gone(n, false);

  for (;;) {
    bool progress = false;
    for (std::size_t k = 0; k < gens.size() && !progress; ++k) {
      const SparsePoly& g = gens[k];
      for (std::size_t v = n; v-- > 0;) {
        if (gone[v]) continue;
        Monomial unit(n, 0);
        unit[v] = 1;
        Rational c = g.coefficient(unit);
        if (c == 0) continue;
        bool only_linear = true;
        for (const auto& [m, coef] : g.terms())
          if (m[v] > 0 && m != unit) only_linear = false;
        if (!only_linear) continue;
        SparsePoly expr = (g - SparsePoly::term(ctx, unit, c)) * Rational(-1 / c);
        SparsePoly removed = gens[k];
        gens.erase(gens.begin() + static_cast<long>(k));
        for (auto& h : gens) h = substitute(h, v, expr);
        std::erase_if(gens, [](const SparsePoly& h) { return h.is_zero(); });
        for (auto& [u, e] : solved) e = substitute(e, v, expr);
        solved.emplace_back(v, expr);
        gone[v] = true;
        progress = true;
        break;
      }
    }
    if (!progress) break;
  }

  std::vector<std::string> names;
  std::vector<int> w1, w2;
  for (std::size_t v = 0; v < n; ++v) {
    if (gone[v]) continue;
    names.push_back(ctx->name(v));
    w1.push_back(ctx->weight1()[v]);
    if (ctx->bigraded()) w2.push_back(ctx->weight2()[v]);
  }
  auto ring = ctx->bigraded() ? make_context(names, w1, w2) : make_context(names, w1);
  EliminationResult out{IdealPresentation{ring, {}, pres.homogeneity}, {}};
  for (const auto& g : gens) out.presentation.generators.push_back(rehome(g, ring));
  for (const auto& [v, e] : solved) out.eliminated.emplace_back(ctx->name(v), e);
  audit_homogeneity(out.presentation);
  return out;
}

IdealPresentation specialize(const IdealPresentation& pres, const std::map<std::string, Rational>& values,
                             bool regrade_by_second) {
  const auto& ctx = *pres.context;
  for (const auto& [name, v] : values) ctx.index(name);
  std::vector<std::string> names;
  std::vector<int> w1, w2;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (values.count(ctx.name(i))) continue;
    names.push_back(ctx.name(i));
    if (regrade_by_second) {
      w1.push_back(ctx.weight2()[i]);
    } else {
      w1.push_back(ctx.weight1()[i]);
      if (ctx.bigraded()) w2.push_back(ctx.weight2()[i]);
    }
  }
  const bool keep_bi = !regrade_by_second && ctx.bigraded();
  auto ring = keep_bi ? make_context(names, w1, w2) : make_context(names, w1);
  std::vector<SparsePoly> images;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    auto it = values.find(ctx.name(i));
    images.push_back(it != values.end() ? SparsePoly::constant(ring, it->second)
                                        : SparsePoly::variable(ring, ctx.name(i)));
  }
  IdealPresentation out{ring, {}, Homogeneity::none};
  for (const auto& g : pres.generators) {
    SparsePoly h = compose(g, ring, images);
    if (!h.is_zero()) out.generators.push_back(std::move(h));
  }
  // Setting a degree-zero variable (or one invisible to the kept grading) preserves homogeneity.
  out.homogeneity = keep_bi ? Homogeneity::bigraded : Homogeneity::graded;
  try {
    audit_homogeneity(out);
  } catch (const std::invalid_argument&) {
    out.homogeneity = Homogeneity::none;
  }
  return out;
}

IdealPresentation divide_generators_by(const IdealPresentation& pres, const std::string& var) {
  const std::size_t v = pres.context->index(var);
  IdealPresentation out{pres.context, {}, pres.homogeneity};
  for (const auto& g : pres.generators) out.generators.push_back(divide_by_variable(g, v));
  return out;
}

}  // namespace jacring
