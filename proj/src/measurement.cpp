#include "nqi/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nqi {

bool DetectionPattern::all_upper() const {
  if (absorbed) return false;
  return std::all_of(clicks.begin(), clicks.end(),
                     [](const Click& c) { return c.path == Path::Upper; });
}

std::string DetectionPattern::to_string() const {
  if (absorbed) return "absorbed";
  std::string s;
  for (const Click& c : clicks) {
    if (!s.empty()) s += ' ';
    s += c.direction == Direction::Right ? 'R' : 'L';
    s += c.path == Path::Upper ? 'u' : 'l';
    s += ':';
    s += static_cast<char>(c.polarization);
  }
  return s;
}

std::string to_string(OutcomeCategory category) {
  switch (category) {
    case OutcomeCategory::NotDetectedRepeatable:
      return "not-detected-repeatable";
    case OutcomeCategory::NQISuccess:
      return "nqi-success";
    case OutcomeCategory::PhaseFlipDetection:
      return "phase-flip-detection";
    case OutcomeCategory::CollapseDetection:
      return "collapse-detection";
    case OutcomeCategory::Absorbed:
      return "absorbed";
  }
  return "unknown";
}

namespace {

DetectionPattern pattern_from_occupation(const Occupation& occ,
                                         const DetectorConfig& config) {
  DetectionPattern pattern;
  for (int slot = 0; slot < kModeCount; ++slot) {
    const ModeId mode = ModeId::from_index(slot);
    const int port = DetectorConfig::port_index(mode.direction, mode.path);
    PolarizationLabel label;
    if (config.per_port[static_cast<std::size_t>(port)] ==
        DetectorBasis::Circular) {
      label = mode.polarization == Polarization::Plus
                  ? PolarizationLabel::Plus
                  : PolarizationLabel::Minus;
    } else {
      // In a linear-analyzed port the Plus slot reads as x, the Minus as y.
      label = mode.polarization == Polarization::Plus ? PolarizationLabel::X
                                                      : PolarizationLabel::Y;
    }
    for (int n = 0; n < occ[static_cast<std::size_t>(slot)]; ++n) {
      pattern.clicks.push_back(Click{mode.direction, mode.path, label});
    }
  }
  return pattern;
}

}  // namespace

std::vector<Outcome> enumerate_outcomes(const JointState& state,
                                        const DetectorConfig& config) {
  if (std::abs(state.total_probability() - 1.0) > kAmplitudeTolerance) {
    throw std::invalid_argument(
        "enumerate_outcomes: total probability of input is not 1");
  }

  // Rotate the coherent sector port by port where the detectors analyze in
  // the linear basis. Slot labels then read per-port.
  std::map<Occupation, std::array<Complex, 2>> analyzed;
  {
    const Mat2 rot = circular_to_linear_matrix();
    for (int level = 0; level < 2; ++level) {
      std::map<Occupation, Complex> slice;
      for (const auto& [occ, amps] : state.coherent) {
        const Complex amp = amps[static_cast<std::size_t>(level)];
        if (std::abs(amp) >= kPurgeThreshold) slice[occ] = amp;
      }
      for (Direction d : {Direction::Right, Direction::Left}) {
        for (Path p : {Path::Upper, Path::Lower}) {
          const int port = DetectorConfig::port_index(d, p);
          if (config.per_port[static_cast<std::size_t>(port)] !=
              DetectorBasis::Linear) {
            continue;
          }
          const int plus_slot = ModeId{d, p, Polarization::Plus}.index();
          const int minus_slot = ModeId{d, p, Polarization::Minus}.index();
          slice = detail::substitute_pair(slice, plus_slot, minus_slot, rot);
        }
      }
      for (const auto& [occ, amp] : slice) {
        analyzed[occ][static_cast<std::size_t>(level)] += amp;
      }
    }
  }

  std::vector<Outcome> outcomes;
  for (const auto& [occ, amps] : analyzed) {
    const double probability = std::norm(amps[0]) + std::norm(amps[1]);
    if (probability < kPurgeThreshold * kPurgeThreshold) continue;
    Outcome outcome;
    outcome.pattern = pattern_from_occupation(occ, config);
    outcome.probability = probability;
    outcome.post_atom = AtomSuperposition::normalized(amps[0], amps[1]);
    outcomes.push_back(std::move(outcome));
  }

  const double absorbed_mass = state.scattered_probability();
  if (absorbed_mass > kPurgeThreshold * kPurgeThreshold) {
    Outcome absorbed;
    absorbed.pattern = DetectionPattern::make_absorbed();
    absorbed.probability = absorbed_mass;
    absorbed.post_atom = std::nullopt;
    outcomes.push_back(std::move(absorbed));
  }

  return outcomes;
}

OutcomeCategory classify(const Outcome& outcome,
                         const AtomSuperposition& initial_atom) {
  if (outcome.pattern.absorbed) return OutcomeCategory::Absorbed;
  if (outcome.pattern.all_upper()) {
    return OutcomeCategory::NotDetectedRepeatable;
  }

  if (!outcome.post_atom.has_value()) {
    throw std::logic_error("classify: click pattern without a post state");
  }
  const AtomSuperposition& post = *outcome.post_atom;

  if (fidelity(post, initial_atom) >= 1.0 - kAmplitudeTolerance) {
    return OutcomeCategory::NQISuccess;
  }
  if (fidelity(post, initial_atom.phase_flipped()) >=
      1.0 - kAmplitudeTolerance) {
    return OutcomeCategory::PhaseFlipDetection;
  }
  const bool basis_state = std::norm(post.alpha) <= kAmplitudeTolerance ||
                           std::norm(post.beta) <= kAmplitudeTolerance;
  if (basis_state) return OutcomeCategory::CollapseDetection;

  throw std::logic_error(
      "classify: outcome '" + outcome.pattern.to_string() +
      "' fits no category; measurement pipeline is defective");
}

}  // namespace nqi
