#ifndef ORBITFIB_REPORT_HPP
#define ORBITFIB_REPORT_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orbitfib/sl2.hpp"
#include "orbitfib/transport.hpp"

namespace orbitfib {

struct AnalysisRequest {
  int n = 2;
  std::vector<Complex> h0;
  std::vector<double> h;  // must be real and regular
  double form_constant = 1.0;
  std::uint64_t seed = 0;
  FlowConfig flow;
  std::vector<std::string> checks;  // empty selects the defaults
};

/// Checks run when the request leaves them unspecified: symplectic and kks
/// always, lagrangian when H0 is real, sl2 for the canonical n = 2 setup.
std::vector<std::string> default_checks(const AnalysisRequest& req);

/// Orbit enumeration, critical values, general position and Hessian
/// certificates for the requested fibration.
FibrationAnalysis analyze(const AnalysisRequest& req);

/// Structure of the singular fibre through an orbit point w: the affine
/// piece w + n+(w) with numerical checks that f_H is constant on it and
/// that unipotent conjugation stays inside it.
struct SingularFibreReport {
  CartanElement w_point;
  Complex critical_value;
  std::vector<Root> nplus_roots;
  int affine_piece_dim = 0;  // complex dimension of n+(w)
  std::string bundle_piece_note;
  double f_constancy_dev = 0.0;
  double conjugation_residual = 0.0;
};

SingularFibreReport singular_fibre_report(const CartanElement& w, const AnalysisRequest& req);

// --- full JSON-serializable report --------------------------------------

struct FibreVerdictEntry {
  Complex f_value;
  int subspace_dim = 0;
  double gram_min_sv = 0.0;
  bool nondegenerate = false;
};

struct AffinePieceEntry {
  SingularFibreReport fibre;
  double omega_min_sv = 0.0;
  bool omega_nondegenerate = false;
};

struct LagrangianEntry {
  std::string description;
  int sample_count = 0;
  double max_abs_omega = 0.0;
  bool is_lagrangian = false;
  bool dimension_check = false;
};

LagrangianEntry to_entry(const LagrangianVerdict& v);

struct SymplecticSection {
  std::vector<FibreVerdictEntry> fibre_verdicts;
  std::vector<AffinePieceEntry> affine_pieces;
  std::optional<LagrangianEntry> lagrangian_flag;
  std::string note;
};

struct KksWitnessEntry {
  double max_abs = 0.0;
  int samples = 0;
  std::string note;
};

struct BettiEntry {
  int regular = 0;
  int singular = 0;
  std::string status;
};

struct Sl2Section {
  double surface_max_residual = 0.0;
  bool thimble_endpoints_exact = false;
  bool membership_consistent = false;
  LagrangianEntry thimble_check_pos;
  LagrangianEntry thimble_check_neg;
  LagrangianEntry sphere_check;
  std::vector<std::pair<std::string, int>> fs_objects;
  std::array<std::array<int, 2>, 2> fs_hom_ranks{};
  std::vector<std::string> fs_products;
  std::string fs_products_note;
  int fs_intersection_count = 0;
};

struct AnalysisReport {
  AnalysisRequest request;
  WeylOrbitRecord orbit;
  GeneralPositionReport gp;
  std::vector<HessianCertificate> hessians;
  std::optional<SymplecticSection> symplectic;
  std::optional<KksWitnessEntry> kks;
  BettiEntry betti;
  std::optional<Sl2Section> sl2;
  std::vector<std::string> failures;
};

/// Runs the analysis plus every enabled check and assembles the report.
AnalysisReport run_full_analysis(const AnalysisRequest& req);

// --- serialization -------------------------------------------------------

nlohmann::ordered_json to_json(const AnalysisReport& rep);
AnalysisReport report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json flow_state_json(const FlowState& s);
void write_trajectory_jsonl(std::ostream& os, const FlowResult& result);
std::vector<Complex> read_trajectory_f_values(std::istream& is);

/// Critical values as marked points in the value plane, straight matching
/// paths from the base value, and optional f-trajectories.  Byte output is
/// deterministic for identical inputs.
std::string render_svg(const std::vector<Complex>& critical_values, Complex base_value,
                       const std::vector<std::vector<Complex>>& trajectories);

std::string render_svg(const AnalysisReport& rep,
                       const std::vector<std::vector<Complex>>& trajectories = {});

}  // namespace orbitfib

#endif
