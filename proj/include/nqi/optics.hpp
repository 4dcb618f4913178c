#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "nqi/fock.hpp"

namespace nqi {

/// Reflection phase convention of the (identical, non-polarizing) 50-50
/// beam splitters: each reflection multiplies the amplitude by +i for
/// right-movers and -i for left-movers. The assignment is pinned by the
/// end-to-end interferometer fixtures.
struct BeamSplitterConvention {
  static constexpr double kRightReflectionSign = +1.0;
  static constexpr double kLeftReflectionSign = -1.0;
};

/// Per-direction beam-splitter matrix acting on the (lower, upper) mode
/// pair, in the a†_A -> u00 a†_A + u10 a†_B column convention:
///   a†_l -> (a†_u + s*i a†_l)/sqrt(2),  a†_u -> (a†_l + s*i a†_u)/sqrt(2).
Mat2 beam_splitter_matrix(Direction direction);

/// Applies one beam splitter: every (direction, polarization) lower/upper
/// mode pair is mixed by the 50-50 matrix above. Polarization and
/// propagation direction are untouched.
PhotonState beam_splitter(const PhotonState& state);

/// Linear polarization labels for detector-side analysis.
enum class LinearPolarization : std::uint8_t { X = 0, Y = 1 };

/// Mode label in the linear-polarization basis. Shares the canonical slot
/// layout with ModeId: X occupies the Plus slot, Y the Minus slot of the
/// same (direction, path).
struct LinearModeId {
  Direction direction;
  Path path;
  LinearPolarization polarization;

  constexpr int index() const {
    return static_cast<int>(direction) * 4 + static_cast<int>(path) * 2 +
           static_cast<int>(polarization);
  }

  friend constexpr bool operator==(LinearModeId a, LinearModeId b) {
    return a.index() == b.index();
  }
};

/// Short label such as "Ru:x".
std::string to_string(LinearModeId mode);

Occupation make_linear_occupation(std::initializer_list<LinearModeId> modes);

/// A photonic state expressed over (direction, path, x/y) occupation
/// states. Produced and consumed only by the basis rotations below.
struct LinearState {
  std::map<Occupation, Complex> terms;

  Complex amplitude(const Occupation& occ) const;
  double squared_norm() const;
};

/// Substitution matrix taking circular creation operators to linear ones:
///   a†_+ -> -(a†_x + i a†_y)/sqrt(2),   a†_- -> (a†_x - i a†_y)/sqrt(2).
Mat2 circular_to_linear_matrix();

/// Inverse substitution (the adjoint):
///   a†_x -> (a†_- - a†_+)/sqrt(2),   a†_y -> i(a†_- + a†_+)/sqrt(2).
Mat2 linear_to_circular_matrix();

/// Re-expresses a circular-basis state over the linear x/y basis.
LinearState rotate_to_linear(const PhotonState& state);

/// Exact inverse of rotate_to_linear.
PhotonState rotate_to_circular(const LinearState& state);

}  // namespace nqi
