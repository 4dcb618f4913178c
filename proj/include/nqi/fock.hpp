#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>

namespace nqi {

using Complex = std::complex<double>;

/// Tolerance used for norm and unitarity checks on public operations.
inline constexpr double kAmplitudeTolerance = 1e-10;

/// Stored amplitudes with magnitude below this are purged from the sparse map.
inline constexpr double kPurgeThreshold = 1e-14;

/// Per-mode occupancy cap. Probes carry at most two photons, so exceeding
/// this signals a miswired pipeline rather than a physical configuration.
inline constexpr int kDefaultMaxOccupancy = 4;

enum class Direction : std::uint8_t { Right = 0, Left = 1 };
enum class Path : std::uint8_t { Upper = 0, Lower = 1 };

/// Circular polarization. The atom channel is diagonal in this basis, so it
/// is the internal storage basis; linear x/y exists only via explicit
/// rotation (optics module).
enum class Polarization : std::uint8_t { Plus = 0, Minus = 1 };

inline constexpr int kModeCount = 8;

/// One of the 8 optical modes of the four-port interferometer:
/// propagation direction, arm, and circular polarization.
///
/// Canonical mode order sorts by direction, then path, then polarization,
/// so occupation vectors indexed by ModeId::index() are canonical.
struct ModeId {
  Direction direction;
  Path path;
  Polarization polarization;

  constexpr int index() const {
    return static_cast<int>(direction) * 4 + static_cast<int>(path) * 2 +
           static_cast<int>(polarization);
  }

  static constexpr ModeId from_index(int i) {
    return ModeId{static_cast<Direction>((i >> 2) & 1),
                  static_cast<Path>((i >> 1) & 1),
                  static_cast<Polarization>(i & 1)};
  }

  friend constexpr bool operator==(ModeId a, ModeId b) {
    return a.index() == b.index();
  }
  friend constexpr bool operator<(ModeId a, ModeId b) {
    return a.index() < b.index();
  }
};

/// Short label such as "Ru:+" or "Ll:-".
std::string to_string(ModeId mode);

/// Photon counts per mode, in canonical mode order. Two equal count vectors
/// denote the same Fock basis state.
using Occupation = std::array<std::uint8_t, kModeCount>;

int total_photons(const Occupation& occ);

/// Occupation with one photon added per listed mode (modes may repeat).
Occupation make_occupation(std::initializer_list<ModeId> modes);

/// 2x2 complex matrix, row-major: u[row][col].
using Mat2 = std::array<std::array<Complex, 2>, 2>;

bool is_unitary(const Mat2& u, double tol = kAmplitudeTolerance);

/// Sparse superposition of normalized Fock states over the 8 modes.
///
/// Basis kets are normalized: |n> carries the 1/sqrt(n!) factor, so the
/// squared norm of a state is the plain sum of |amplitude|^2 over terms.
/// Values are immutable from the caller's perspective; every operation
/// returns a new state.
class PhotonState {
 public:
  PhotonState() = default;

  static PhotonState vacuum();

  /// Builds a state from explicit (occupation, amplitude) terms. Near-zero
  /// amplitudes are purged; non-finite amplitudes are rejected.
  static PhotonState from_terms(std::map<Occupation, Complex> terms);

  const std::map<Occupation, Complex>& terms() const { return terms_; }

  /// Amplitude on a basis state; zero if absent.
  Complex amplitude(const Occupation& occ) const;

  bool empty() const { return terms_.empty(); }

 private:
  std::map<Occupation, Complex> terms_;
};

/// Applies the creation operator of `mode`: a term with count n in that mode
/// maps to count n+1 with amplitude multiplied by sqrt(n+1).
/// Throws std::runtime_error if a count would exceed `max_occupancy`.
PhotonState create_photon(const PhotonState& state, ModeId mode,
                          int max_occupancy = kDefaultMaxOccupancy);

/// Rewrites creation operators over a mode pair by a unitary matrix:
///   a†_A -> u00 a†_A + u10 a†_B,   a†_B -> u01 a†_A + u11 a†_B
/// and re-expands into the normalized occupation basis.
/// Throws std::invalid_argument if `u` is not unitary within tolerance.
PhotonState apply_mode_pair_unitary(const PhotonState& state, ModeId mode_a,
                                    ModeId mode_b, const Mat2& u);

/// <a|b>, conjugate-linear in the first argument.
Complex inner_product(const PhotonState& a, const PhotonState& b);

double squared_norm(const PhotonState& state);

/// a + b (amplitude-wise).
PhotonState add(const PhotonState& a, const PhotonState& b);

/// factor * a.
PhotonState scale(const PhotonState& a, Complex factor);

namespace detail {

/// Core substitution a†_A -> u00 a†_A + u10 a†_B, a†_B -> u01 a†_A + u11 a†_B
/// on a raw term map, with bosonic normalization carried through. Shared by
/// the mode-pair unitary and the polarization-basis rotations, which reuse
/// the slot indices across bases.
std::map<Occupation, Complex> substitute_pair(
    const std::map<Occupation, Complex>& terms, int slot_a, int slot_b,
    const Mat2& u);

/// Drops near-zero amplitudes; throws std::runtime_error on NaN/Inf.
void purge(std::map<Occupation, Complex>& terms);

}  // namespace detail

}  // namespace nqi
