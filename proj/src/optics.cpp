#include "nqi/optics.hpp"

#include <cmath>

namespace nqi {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

}  // namespace

Mat2 beam_splitter_matrix(Direction direction) {
  const double sign = direction == Direction::Right
                          ? BeamSplitterConvention::kRightReflectionSign
                          : BeamSplitterConvention::kLeftReflectionSign;
  const Complex refl{0.0, sign * kInvSqrt2};
  const Complex trans{kInvSqrt2, 0.0};
  return Mat2{{{refl, trans}, {trans, refl}}};
}

PhotonState beam_splitter(const PhotonState& state) {
  std::map<Occupation, Complex> terms = state.terms();
  for (Direction d : {Direction::Right, Direction::Left}) {
    const Mat2 u = beam_splitter_matrix(d);
    for (Polarization p : {Polarization::Plus, Polarization::Minus}) {
      const ModeId lower{d, Path::Lower, p};
      const ModeId upper{d, Path::Upper, p};
      terms = detail::substitute_pair(terms, lower.index(), upper.index(), u);
    }
  }
  return PhotonState::from_terms(std::move(terms));
}

std::string to_string(LinearModeId mode) {
  std::string s;
  s += mode.direction == Direction::Right ? 'R' : 'L';
  s += mode.path == Path::Upper ? 'u' : 'l';
  s += ':';
  s += mode.polarization == LinearPolarization::X ? 'x' : 'y';
  return s;
}

Occupation make_linear_occupation(std::initializer_list<LinearModeId> modes) {
  Occupation occ{};
  for (LinearModeId m : modes) ++occ[static_cast<std::size_t>(m.index())];
  return occ;
}

Complex LinearState::amplitude(const Occupation& occ) const {
  auto it = terms.find(occ);
  return it == terms.end() ? Complex{0.0, 0.0} : it->second;
}

double LinearState::squared_norm() const {
  double sum = 0.0;
  for (const auto& [occ, amp] : terms) sum += std::norm(amp);
  return sum;
}

Mat2 circular_to_linear_matrix() {
  return Mat2{{{Complex{-kInvSqrt2, 0.0}, Complex{kInvSqrt2, 0.0}},
               {Complex{0.0, -kInvSqrt2}, Complex{0.0, -kInvSqrt2}}}};
}

Mat2 linear_to_circular_matrix() {
  return Mat2{{{Complex{-kInvSqrt2, 0.0}, Complex{0.0, kInvSqrt2}},
               {Complex{kInvSqrt2, 0.0}, Complex{0.0, kInvSqrt2}}}};
}

namespace {

// The circular and linear slot layouts coincide, so the rotation is four
// independent pair substitutions, one per (direction, path) port.
std::map<Occupation, Complex> rotate_all_ports(
    std::map<Occupation, Complex> terms, const Mat2& u) {
  for (Direction d : {Direction::Right, Direction::Left}) {
    for (Path p : {Path::Upper, Path::Lower}) {
      const int plus_slot = ModeId{d, p, Polarization::Plus}.index();
      const int minus_slot = ModeId{d, p, Polarization::Minus}.index();
      terms = detail::substitute_pair(terms, plus_slot, minus_slot, u);
    }
  }
  return terms;
}

}  // namespace

LinearState rotate_to_linear(const PhotonState& state) {
  return LinearState{rotate_all_ports(state.terms(), circular_to_linear_matrix())};
}

PhotonState rotate_to_circular(const LinearState& state) {
  return PhotonState::from_terms(
      rotate_all_ports(state.terms, linear_to_circular_matrix()));
}

}  // namespace nqi
