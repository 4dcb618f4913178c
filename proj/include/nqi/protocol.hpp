#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nqi/measurement.hpp"

namespace nqi {

/// Probe-plus-detector presets.
enum class Scheme : std::uint8_t {
  /// Two independent counter-propagating photons (right-going +, left-going
  /// -), circular-basis detectors.
  IndependentCircular = 0,
  /// Polarization-entangled pair (|+->+|-+>)/sqrt(2), circular detectors.
  EprCircular = 1,
  /// Same entangled pair, x/y detectors: the nondistortion scheme.
  EprLinear = 2,
  /// Single right-going x-polarized photon, x/y detectors.
  SinglePhotonLinear = 3,
};

inline constexpr std::array<Scheme, 4> kAllSchemes = {
    Scheme::IndependentCircular, Scheme::EprCircular, Scheme::EprLinear,
    Scheme::SinglePhotonLinear};

std::string to_string(Scheme scheme);
Scheme parse_scheme(const std::string& name);

DetectorConfig scheme_detector_config(Scheme scheme);
int scheme_photon_count(Scheme scheme);

/// Full experiment description. alpha/beta are the atom's initial
/// amplitudes on m+ / m-.
struct ExperimentConfig {
  Scheme scheme = Scheme::EprLinear;
  Complex alpha{0.7071067811865475244, 0.0};
  Complex beta{0.7071067811865475244, 0.0};
  bool atom_present = true;
  Path atom_arm = Path::Lower;
  int max_rounds = 1;
  long long mc_trials = 0;
  std::uint64_t rng_seed = 42;

  /// Throws std::invalid_argument on an unnormalized (alpha, beta) or
  /// nonsensical counts.
  void validate() const;

  AtomSuperposition initial_atom() const { return {alpha, beta}; }
};

/// Normalized probe state of a scheme, in the circular basis.
PhotonState build_probe(Scheme scheme);

/// One exact pass through the interferometer:
/// tensor -> beam splitter -> atom channel -> beam splitter -> detection,
/// with every outcome classified against the initial atom state.
std::vector<OutcomeRecord> run_single_shot(const ExperimentConfig& config);

/// Exact per-category masses of a record list.
std::map<OutcomeCategory, double> category_masses(
    const std::vector<OutcomeRecord>& records);

/// Cumulative statistics after k rounds of the repeat-until-detected
/// protocol.
struct RoundCumulative {
  int round = 0;
  /// Probability mass that has terminated in each detected category by
  /// round k.
  std::map<OutcomeCategory, double> cumulative;
  /// Mass still undetected and eligible for another round (r^k).
  double undetected = 0.0;
};

struct RoundReport {
  /// The exact single-round outcome records (identical every round).
  std::vector<OutcomeRecord> per_round;
  /// One entry per round, k = 1..max_rounds.
  std::vector<RoundCumulative> rounds;
};

/// Analytic repeated-trial statistics: after each round only the
/// repeatable (all-upper, atom-unperturbed) mass continues with a fresh
/// probe. Throws std::runtime_error if any repeatable outcome of the scheme
/// fails to preserve the atom's state, since repetition is then unsound.
RoundReport run_repeated(const ExperimentConfig& config);

struct MonteCarloSummary {
  long long trials = 0;
  std::uint64_t seed = 0;
  std::map<OutcomeCategory, long long> counts;
  std::map<OutcomeCategory, double> frequencies;
};

/// Samples the exact single-shot distribution `config.mc_trials` times with
/// a deterministic per-trial generator derived from `config.rng_seed`.
/// Counts are reproducible for a fixed seed and independent of `workers`.
MonteCarloSummary monte_carlo(const ExperimentConfig& config,
                              unsigned workers = 1);

/// Head-to-head success probabilities of the entangled-pair scheme versus
/// the single-photon scheme for the same atom state.
struct NqiComparison {
  double epr_linear_success = 0.0;
  double single_photon_success = 0.0;
  double ratio = 0.0;
};

NqiComparison compare_nqi_success(Complex alpha, Complex beta);

}  // namespace nqi
