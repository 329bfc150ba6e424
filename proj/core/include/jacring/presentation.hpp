#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacring/poly.hpp"
#include "jacring/semigroup.hpp"

namespace jacring {

enum class Homogeneity { none, graded, bigraded };

const char* to_string(Homogeneity h);

struct IdealPresentation {
  ContextPtr context;
  std::vector<SparsePoly> generators;
  Homogeneity homogeneity = Homogeneity::none;
};

/// Term-by-term weight audit; throws std::invalid_argument on failure.
void audit_homogeneity(const IdealPresentation& pres);

/// Drops zero generators and generators equal up to a scalar.
IdealPresentation deduplicate(IdealPresentation pres);

/// Generators of O_{q/p}: coefficients of w^1..w^{p+q-2} of q e'(w) f(w) - p e(w) f'(w).
IdealPresentation build_IO(int p, int q);

/// Generators g_{q+1}..g_{p+q-1} from e(w)^{q/p}, in e_2..e_p.
IdealPresentation build_g_ideal(int p, int q);

/// F_0..F_{pq} in eps, s, e_2..e_p, f_2..f_q with eps=(1,0), s=(0,1), e_i=f_i=(i-1,i).
IdealPresentation build_F_family(int p, int q);

/// The s=1 specialization of build_F_family, graded by the first weight.
IdealPresentation build_theorem_HSp_ideal(int p, int q);

/// F_0..F_{pq} divided by eps, then f_2..f_q eliminated: a bigraded
/// presentation in eps, s, e_2..e_p with the same eps-saturation.
IdealPresentation build_F_family_reduced(int p, int q);

/// The eps=1 ring in s, e_2..e_p (graded by the second weight), from
/// power-sum differences up to max_degree (Newton-equivalent to the F_d).
IdealPresentation build_R_eps1(int p, int q, int max_degree);

struct ToricOptions {
  int degree_bound = 0;         // 0 selects default_toric_bound
  int max_equation_degree = 0;  // 0 keeps every coefficient equation
};
int default_toric_bound(const NumericalSemigroup& g);
IdealPresentation build_toric_equations(const NumericalSemigroup& g, ToricOptions opts = {});

/// The eps=1, s=1 ideal in e_1..e_p whose zeros are the p-bases of Sigma_{q/p}
/// (scaled by 1/p): e_1 fixed, plus the power-sum relations at s=1.
IdealPresentation build_sigma_ideal(int p, int q);

/// Generators in xi_1..xi_p: for each i the Sigma-ideal pulled back along the
/// i-th chain lattice, e_j -> c_j(xi_i-c,...,xi_1-c, xi_p+p-c,...,xi_{i+1}+p-c)/p, c=p-i.
IdealPresentation build_parabolic_ideal(int p, int q);

struct EliminationResult {
  IdealPresentation presentation;
  std::vector<std::pair<std::string, SparsePoly>> eliminated;  // in the original context
};

/// Repeatedly solves a generator with a pure linear term c*x for x (the last
/// such variable in context order) and substitutes it everywhere.
EliminationResult eliminate_linear_variables(const IdealPresentation& pres);

/// Sets the named variables to constants and drops them from the context.
/// With regrade, the second weight becomes the only grading.
IdealPresentation specialize(const IdealPresentation& pres,
                             const std::map<std::string, Rational>& values, bool regrade_by_second);

/// Divides every generator by the named variable (exactly).
IdealPresentation divide_generators_by(const IdealPresentation& pres, const std::string& var);

}  // namespace jacring
