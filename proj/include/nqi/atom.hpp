#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "nqi/fock.hpp"

namespace nqi {

/// Atomic levels. The metastable m+ / m- pair carries the superposition of
/// interest; Ground appears only inside scattered branches, after the atom
/// absorbed a photon and decayed. The short-lived excited level is never
/// represented: absorption and decay are fused into one instantaneous
/// channel.
enum class AtomLevel : std::uint8_t { MPlus = 0, MMinus = 1, Ground = 2 };

/// alpha |m+> + beta |m->, validated to unit norm at construction.
struct AtomSuperposition {
  Complex alpha;
  Complex beta;

  /// Throws std::invalid_argument unless |alpha|^2 + |beta|^2 = 1 within
  /// tolerance.
  AtomSuperposition(Complex alpha_amp, Complex beta_amp);

  /// Normalizes (a, b) and constructs; rejects the zero vector.
  static AtomSuperposition normalized(Complex a, Complex b);

  /// (alpha, -beta): the pi-phase-shifted superposition.
  AtomSuperposition phase_flipped() const;
};

/// |<a|b>|^2.
double fidelity(const AtomSuperposition& a, const AtomSuperposition& b);

/// Terminal record of an absorption event: the photons still in flight at
/// the moment of absorption, the branch amplitude, and which circular
/// polarization was taken. No further optical evolution applies to it.
struct ScatteredBranch {
  Occupation surviving_photons;
  Complex amplitude;
  Polarization absorbed_polarization;
};

/// Entangled photon (x) atom superposition plus the terminal scattered
/// sector. Coherent amplitudes are keyed by photonic occupation, with one
/// amplitude per metastable level (index 0 = m+, 1 = m-).
struct JointState {
  std::map<Occupation, std::array<Complex, 2>> coherent;
  std::vector<ScatteredBranch> scattered;

  double coherent_probability() const;
  double scattered_probability() const;
  /// Sum of both sectors; 1 within tolerance for any state produced from a
  /// normalized input.
  double total_probability() const;

  /// The photonic amplitudes attached to one metastable level, as a
  /// PhotonState.
  PhotonState level_slice(AtomLevel level) const;
};

/// Product state |probe> (x) (alpha |m+> + beta |m->), empty scattered
/// sector. Throws std::invalid_argument if the probe is not normalized.
JointState tensor(const PhotonState& probe, const AtomSuperposition& atom);

/// Unit-efficiency polarization-selective absorption in `atom_arm`.
///
/// With no atom present this is the exact identity. Otherwise, every
/// coherent term whose occupation holds a photon in an atom-arm mode whose
/// circular polarization matches the term's atomic level loses that photon
/// to a scattered branch; terms with no matching photon pass unchanged.
/// When both directions' atom-arm modes match, the amplitude splits
/// equally (1/sqrt(2) each) over one branch per mode. Scattered branches
/// already present are terminal and pass through untouched.
JointState interact_atom(const JointState& state, bool atom_present,
                         Path atom_arm = Path::Lower);

/// Lifts a photonic map over the atom tensor factor: applies `op` to each
/// metastable level's photon slice. Atom amplitudes and scattered branches
/// are untouched.
JointState apply_optics(const JointState& state,
                        const std::function<PhotonState(const PhotonState&)>& op);

/// Beam-splitter lift (convenience for the common pipeline step).
JointState beam_splitter(const JointState& state);

}  // namespace nqi
