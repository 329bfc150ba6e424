#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jacring/filtration.hpp"
#include "jacring/jets.hpp"
#include "jacring/serialize.hpp"

namespace jacring {

enum class Verdict { holds, consistent_up_to_window, fails, inconclusive_at_bound };
const char* to_string(Verdict v);

/// 0 for holds / consistent, 1 for fails, 2 for inconclusive (worst wins).
int exit_code_for(const std::vector<Verdict>& verdicts);

struct ConjectureReport {
  std::string conjecture;
  Json parameters = Json::object();
  Verdict verdict = Verdict::inconclusive_at_bound;
  Json evidence = Json::object();
  Json bounds = Json::object();
  std::vector<std::string> diagnostics;
  double wall_clock_seconds = 0;

  /// Wall-clock time is only included on request, keeping default output
  /// byte-identical across reruns.
  Json to_json(bool include_timing = false) const;
};

ConjectureReport check_grm(int p, int q);
ConjectureReport check_toric(const std::vector<int>& generators, int max_bound = 0);
ConjectureReport check_planar(int q, int s, Rigidification convention,
                              const std::optional<std::vector<std::size_t>>& reference = std::nullopt);
/// Reference comparison for a toric pair, with betti_J as the reference.
ConjectureReport check_planar_toric(int p, int q);
ConjectureReport check_flatness(int p, int q, int a_max = -1, int b_max = -1);
ConjectureReport check_sp_points(int p, int q);

/// Reference Betti rows b_{2(delta-i)}, i = 0..delta, keyed by family parameters.
struct ReferenceRow {
  std::string family;
  int q = 0, s = 0;
  std::vector<std::size_t> betti;
  std::vector<std::size_t> fake;
};
std::filesystem::path reference_data_path();
std::vector<ReferenceRow> load_reference_rows(const std::filesystem::path& path = reference_data_path());
std::optional<ReferenceRow> find_reference(int q, int s, const std::filesystem::path& path = reference_data_path());

/// Quotient dimension and Hilbert function of O_{q/p} from build_IO, with an
/// Artinian certificate.
struct OData {
  std::vector<std::size_t> hilbert;
  std::size_t total = 0;
  bool certified = false;
};
OData o_qp_hilbert(int p, int q);

/// Toric quotient dimension with the degree-bound stabilization loop.
struct ToricDimension {
  std::size_t dim = 0;
  std::vector<std::size_t> hilbert;
  std::vector<std::pair<int, std::size_t>> by_bound;  // (degree bound, dim)
  int ceiling = 0;
  bool artinian = false;
  bool stabilized = false;
};
ToricDimension toric_dimension(const NumericalSemigroup& g, int max_bound = 0);

}  // namespace jacring
