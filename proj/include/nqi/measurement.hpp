#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nqi/atom.hpp"
#include "nqi/optics.hpp"

namespace nqi {

enum class DetectorBasis : std::uint8_t { Circular = 0, Linear = 1 };

/// Detection basis per port, ports ordered (R,u), (R,l), (L,u), (L,l).
/// The schemes of interest use a uniform basis at all four detectors;
/// per-port mixtures are supported as an extension of the same machinery.
struct DetectorConfig {
  std::array<DetectorBasis, 4> per_port;

  static DetectorConfig uniform(DetectorBasis basis) {
    return DetectorConfig{{basis, basis, basis, basis}};
  }

  static constexpr int port_index(Direction d, Path p) {
    return static_cast<int>(d) * 2 + static_cast<int>(p);
  }
};

/// Polarization label as reported by a detector; which pair appears depends
/// on that port's analysis basis.
enum class PolarizationLabel : char { Plus = '+', Minus = '-', X = 'x', Y = 'y' };

struct Click {
  Direction direction;
  Path path;
  PolarizationLabel polarization;

  friend bool operator==(const Click& a, const Click& b) {
    return a.direction == b.direction && a.path == b.path &&
           a.polarization == b.polarization;
  }
};

/// A detector coincidence pattern: one click per detected photon, or the
/// distinguished Absorbed value for the scattered sector.
struct DetectionPattern {
  bool absorbed = false;
  std::vector<Click> clicks;

  static DetectionPattern make_absorbed() { return DetectionPattern{true, {}}; }

  bool all_upper() const;

  /// Canonical text form, e.g. "Ru:x Ll:x" or "absorbed".
  std::string to_string() const;

  friend bool operator==(const DetectionPattern& a, const DetectionPattern& b) {
    return a.absorbed == b.absorbed && a.clicks == b.clicks;
  }
};

/// One measurement outcome: its pattern, probability, and the atomic state
/// conditioned on it (nullopt = ground, i.e. the absorbed sector).
struct Outcome {
  DetectionPattern pattern;
  double probability = 0.0;
  std::optional<AtomSuperposition> post_atom;
};

enum class OutcomeCategory : std::uint8_t {
  NotDetectedRepeatable = 0,
  NQISuccess = 1,
  PhaseFlipDetection = 2,
  CollapseDetection = 3,
  Absorbed = 4,
};

inline constexpr std::array<OutcomeCategory, 5> kAllCategories = {
    OutcomeCategory::NotDetectedRepeatable, OutcomeCategory::NQISuccess,
    OutcomeCategory::PhaseFlipDetection, OutcomeCategory::CollapseDetection,
    OutcomeCategory::Absorbed};

std::string to_string(OutcomeCategory category);

/// A classified outcome. fidelity_to_initial is |<initial|post>|^2, or 1
/// for the absorbed record (no superposition left to compare).
struct OutcomeRecord {
  Outcome outcome;
  OutcomeCategory category;
  double fidelity_to_initial = 0.0;
};

/// Projective polarization-sensitive detection at the four ports.
///
/// Rotates each Linear-configured port of the coherent sector to the x/y
/// basis, groups amplitudes by detection pattern, and emits one record per
/// pattern with nonzero probability plus a single Absorbed record carrying
/// the whole scattered mass. The post-measurement atomic state of a click
/// pattern is its normalized atomic component.
///
/// Records come back in canonical pattern order with Absorbed last.
/// Throws std::invalid_argument if the input's total probability is not 1.
std::vector<Outcome> enumerate_outcomes(const JointState& state,
                                        const DetectorConfig& config);

/// The outcome taxonomy, applied against the atom's initial superposition:
/// upper-ports-only patterns are repeatable non-detections; lower-port
/// patterns are detections, split by what they leave behind (the initial
/// state, its pi-phase flip, or a collapsed basis state). An outcome that
/// fits none of these within tolerance throws std::logic_error.
OutcomeCategory classify(const Outcome& outcome,
                         const AtomSuperposition& initial_atom);

}  // namespace nqi
