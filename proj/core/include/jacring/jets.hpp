#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacring/poly.hpp"

namespace jacring {

/// A plane curve t -> (x(t), y(t)) with monic x, y in a one-variable context "t".
struct ParamCurve {
  SparsePoly x, y;
  std::string tag;  // e.g. "4,2q,s" or "toric"
  int q = 0, s = 0;  // family parameters when tag == "4,2q,s"

  int deg_x() const;
  int deg_y() const;
};

ParamCurve family_curve(int q, int s);    // (t^4, t^{2q} + t^s)
ParamCurve toric_curve(int p, int q);     // (t^p, t^q)
ParamCurve curve_from(const std::vector<Rational>& x_coeffs, const std::vector<Rational>& y_coeffs);

struct Implicitization {
  SparsePoly relation;  // in variables x, y with weights deg x(t), deg y(t)
  int degree = 0;       // weighted degree of the search at which the kernel appeared
  bool residual_zero = false;
};

/// Lowest weighted-degree relation F with F(x(t), y(t)) = 0, leading y-power
/// coefficient normalized to 1. max_degree <= 0 uses deg x * deg y.
Implicitization implicitize(const ParamCurve& c, int max_degree = 0);

enum class Rigidification { strict, paper };
const char* to_string(Rigidification r);
Rigidification parse_rigidification(const std::string& s);

/// Artinian local model: ideal generators (not homogeneous) recentred at the
/// unique support point.
struct LocalArtinianModel {
  ContextPtr context;                 // unknowns e_1..e_n, f_1..f_m
  std::vector<SparsePoly> generators;  // recentred: the support point is the origin
  std::vector<Rational> center;        // support point in the original coordinates
  Rational translation;                // the point is the base curve reparametrized by t -> t + translation
  Rigidification convention = Rigidification::strict;
  std::vector<std::string> rigidifying;  // printable rigidifying equations
  SparsePoly relation = SparsePoly(make_context({}, {}));  // implicit equation used
  int default_ceiling = 16;
};

/// Raised when the rigidifying equations cut out no point of the support.
struct ConflictingRigidification : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Equations of maps t -> (t^n + sum e_i t^{n-i}, t^m + sum f_j t^{m-j}) into the
/// curve. strict fixes e_1 and f_1 at their base values; paper imposes
/// f_{s-2q} = 1 and 4 f_1 = s e_1 (family curves only).
LocalArtinianModel mrig_equations(const ParamCurve& c, Rigidification convention);

struct ArtinianDims {
  std::vector<std::size_t> gr;      // dim Gr^i_m
  std::size_t total = 0;
  int order = 0;                    // N with dims(A_N) == dims(A_{N+1})
  bool certified = false;
  std::vector<std::size_t> trace;   // total dim of A_N for each N tried, from N = 1
  std::size_t free_variables = 0;   // embedding dimension
};

/// Gr_m of ambient / (I + m^N) for increasing N until the total stabilizes.
/// ceiling <= 0 uses the model default, (deg x - 1)(deg y - 1) + 4 for curves.
/// `stop` sees each uncertified truncation and may end the scan early; the
/// result is then that truncation, uncertified.
ArtinianDims artinian_dims(const LocalArtinianModel& m, int ceiling = 0,
                           const std::function<bool(const ArtinianDims&)>& stop = {});

/// The same quantities at a fixed truncation order N.
ArtinianDims truncated_dims(const LocalArtinianModel& m, int order);

/// Model for generic input: generators vanishing at the origin of ctx.
LocalArtinianModel local_model(ContextPtr ctx, std::vector<SparsePoly> generators);

}  // namespace jacring
