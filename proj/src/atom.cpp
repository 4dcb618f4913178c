#include "nqi/atom.hpp"

#include <cmath>
#include <stdexcept>

#include "nqi/optics.hpp"

namespace nqi {

AtomSuperposition::AtomSuperposition(Complex alpha_amp, Complex beta_amp)
    : alpha(alpha_amp), beta(beta_amp) {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm2 - 1.0) > kAmplitudeTolerance) {
    throw std::invalid_argument(
        "AtomSuperposition: |alpha|^2 + |beta|^2 must be 1, got " +
        std::to_string(norm2));
  }
}

AtomSuperposition AtomSuperposition::normalized(Complex a, Complex b) {
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  if (norm < kPurgeThreshold) {
    throw std::invalid_argument("AtomSuperposition: zero vector");
  }
  return AtomSuperposition(a / norm, b / norm);
}

AtomSuperposition AtomSuperposition::phase_flipped() const {
  return AtomSuperposition(alpha, -beta);
}

double fidelity(const AtomSuperposition& a, const AtomSuperposition& b) {
  return std::norm(std::conj(a.alpha) * b.alpha + std::conj(a.beta) * b.beta);
}

double JointState::coherent_probability() const {
  double sum = 0.0;
  for (const auto& [occ, amps] : coherent) {
    sum += std::norm(amps[0]) + std::norm(amps[1]);
  }
  return sum;
}

double JointState::scattered_probability() const {
  double sum = 0.0;
  for (const auto& branch : scattered) sum += std::norm(branch.amplitude);
  return sum;
}

double JointState::total_probability() const {
  return coherent_probability() + scattered_probability();
}

PhotonState JointState::level_slice(AtomLevel level) const {
  if (level == AtomLevel::Ground) {
    throw std::invalid_argument("level_slice: Ground holds no coherent terms");
  }
  const std::size_t idx = level == AtomLevel::MPlus ? 0 : 1;
  std::map<Occupation, Complex> terms;
  for (const auto& [occ, amps] : coherent) {
    if (std::abs(amps[idx]) >= kPurgeThreshold) terms[occ] = amps[idx];
  }
  return PhotonState::from_terms(std::move(terms));
}

JointState tensor(const PhotonState& probe, const AtomSuperposition& atom) {
  if (std::abs(squared_norm(probe) - 1.0) > kAmplitudeTolerance) {
    throw std::invalid_argument("tensor: probe state not normalized");
  }
  JointState joint;
  for (const auto& [occ, amp] : probe.terms()) {
    joint.coherent[occ] = {amp * atom.alpha, amp * atom.beta};
  }
  return joint;
}

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

void prune_coherent(JointState& state) {
  for (auto it = state.coherent.begin(); it != state.coherent.end();) {
    if (std::abs(it->second[0]) < kPurgeThreshold &&
        std::abs(it->second[1]) < kPurgeThreshold) {
      it = state.coherent.erase(it);
    } else {
      ++it;
    }
  }
}

}  // namespace

JointState interact_atom(const JointState& state, bool atom_present,
                         Path atom_arm) {
  if (!atom_present) return state;

  JointState result;
  result.scattered = state.scattered;

  for (const auto& [occ, amps] : state.coherent) {
    for (int level = 0; level < 2; ++level) {
      const Complex amp = amps[static_cast<std::size_t>(level)];
      if (std::abs(amp) < kPurgeThreshold) continue;
      const Polarization pol =
          level == 0 ? Polarization::Plus : Polarization::Minus;

      // Atom-arm modes whose polarization drives this level's transition.
      std::vector<std::size_t> matching;
      for (Direction d : {Direction::Right, Direction::Left}) {
        const auto slot =
            static_cast<std::size_t>(ModeId{d, atom_arm, pol}.index());
        if (occ[slot] > 0) matching.push_back(slot);
      }

      if (matching.empty()) {
        result.coherent[occ][static_cast<std::size_t>(level)] += amp;
        continue;
      }

      const Complex branch_amp =
          matching.size() == 1 ? amp : amp * kInvSqrt2;
      for (std::size_t slot : matching) {
        Occupation surviving = occ;
        --surviving[slot];
        result.scattered.push_back(
            ScatteredBranch{surviving, branch_amp, pol});
      }
    }
  }

  prune_coherent(result);
  return result;
}

JointState apply_optics(
    const JointState& state,
    const std::function<PhotonState(const PhotonState&)>& op) {
  JointState result;
  result.scattered = state.scattered;
  for (int level = 0; level < 2; ++level) {
    const AtomLevel lv = level == 0 ? AtomLevel::MPlus : AtomLevel::MMinus;
    const PhotonState mapped = op(state.level_slice(lv));
    for (const auto& [occ, amp] : mapped.terms()) {
      result.coherent[occ][static_cast<std::size_t>(level)] += amp;
    }
  }
  prune_coherent(result);
  return result;
}

JointState beam_splitter(const JointState& state) {
  return apply_optics(
      state, [](const PhotonState& s) { return beam_splitter(s); });
}

}  // namespace nqi
