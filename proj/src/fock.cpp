#include "nqi/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace nqi {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Complex ipow(Complex base, int exponent) {
  Complex result{1.0, 0.0};
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

std::string to_string(ModeId mode) {
  std::string s;
  s += mode.direction == Direction::Right ? 'R' : 'L';
  s += mode.path == Path::Upper ? 'u' : 'l';
  s += ':';
  s += mode.polarization == Polarization::Plus ? '+' : '-';
  return s;
}

int total_photons(const Occupation& occ) {
  int total = 0;
  for (auto n : occ) total += n;
  return total;
}

Occupation make_occupation(std::initializer_list<ModeId> modes) {
  Occupation occ{};
  for (ModeId m : modes) ++occ[static_cast<std::size_t>(m.index())];
  return occ;
}

bool is_unitary(const Mat2& u, double tol) {
  // u† u == I, entrywise.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex dot = std::conj(u[0][i]) * u[0][j] + std::conj(u[1][i]) * u[1][j];
      Complex expected = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(dot - expected) > tol) return false;
    }
  }
  return true;
}

namespace detail {

void purge(std::map<Occupation, Complex>& terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (!std::isfinite(it->second.real()) || !std::isfinite(it->second.imag())) {
      throw std::runtime_error("non-finite amplitude in photon state");
    }
    if (std::abs(it->second) < kPurgeThreshold) {
      it = terms.erase(it);
    } else {
      ++it;
    }
  }
}

std::map<Occupation, Complex> substitute_pair(
    const std::map<Occupation, Complex>& terms, int slot_a, int slot_b,
    const Mat2& u) {
  std::map<Occupation, Complex> result;
  for (const auto& [occ, amp] : terms) {
    const int n_a = occ[static_cast<std::size_t>(slot_a)];
    const int n_b = occ[static_cast<std::size_t>(slot_b)];
    if (n_a == 0 && n_b == 0) {
      result[occ] += amp;
      continue;
    }
    // |n_a, n_b> = a†_A^n_a a†_B^n_b / sqrt(n_a! n_b!) |0>; expand the
    // substituted operator product binomially and renormalize each image ket.
    const Complex base = amp / std::sqrt(factorial(n_a) * factorial(n_b));
    for (int j = 0; j <= n_a; ++j) {
      for (int k = 0; k <= n_b; ++k) {
        const int on_a = j + k;
        const int on_b = n_a + n_b - on_a;
        const Complex coeff = binomial(n_a, j) * ipow(u[0][0], j) *
                              ipow(u[1][0], n_a - j) * binomial(n_b, k) *
                              ipow(u[0][1], k) * ipow(u[1][1], n_b - k);
        Occupation out = occ;
        out[static_cast<std::size_t>(slot_a)] = static_cast<std::uint8_t>(on_a);
        out[static_cast<std::size_t>(slot_b)] = static_cast<std::uint8_t>(on_b);
        result[out] +=
            base * coeff * std::sqrt(factorial(on_a) * factorial(on_b));
      }
    }
  }
  purge(result);
  return result;
}

}  // namespace detail

PhotonState PhotonState::vacuum() {
  PhotonState state;
  state.terms_[Occupation{}] = Complex{1.0, 0.0};
  return state;
}

PhotonState PhotonState::from_terms(std::map<Occupation, Complex> terms) {
  detail::purge(terms);
  PhotonState state;
  state.terms_ = std::move(terms);
  return state;
}

Complex PhotonState::amplitude(const Occupation& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

PhotonState create_photon(const PhotonState& state, ModeId mode,
                          int max_occupancy) {
  std::map<Occupation, Complex> result;
  const auto slot = static_cast<std::size_t>(mode.index());
  for (const auto& [occ, amp] : state.terms()) {
    const int n = occ[slot];
    if (n + 1 > max_occupancy) {
      throw std::runtime_error("create_photon: occupancy of mode " +
                               to_string(mode) + " would exceed cap " +
                               std::to_string(max_occupancy));
    }
    Occupation out = occ;
    out[slot] = static_cast<std::uint8_t>(n + 1);
    result[out] += amp * std::sqrt(static_cast<double>(n + 1));
  }
  detail::purge(result);
  return PhotonState::from_terms(std::move(result));
}

PhotonState apply_mode_pair_unitary(const PhotonState& state, ModeId mode_a,
                                    ModeId mode_b, const Mat2& u) {
  if (mode_a == mode_b) {
    throw std::invalid_argument("apply_mode_pair_unitary: modes must differ");
  }
  if (!is_unitary(u)) {
    throw std::invalid_argument("apply_mode_pair_unitary: matrix not unitary");
  }
  return PhotonState::from_terms(
      detail::substitute_pair(state.terms(), mode_a.index(), mode_b.index(), u));
}

Complex inner_product(const PhotonState& a, const PhotonState& b) {
  // Iterate the smaller map.
  const PhotonState& small = a.terms().size() <= b.terms().size() ? a : b;
  const PhotonState& large = a.terms().size() <= b.terms().size() ? b : a;
  Complex sum{0.0, 0.0};
  for (const auto& [occ, amp] : small.terms()) {
    const Complex other = large.amplitude(occ);
    if (&small == &a) {
      sum += std::conj(amp) * other;
    } else {
      sum += std::conj(other) * amp;
    }
  }
  return sum;
}

double squared_norm(const PhotonState& state) {
  double sum = 0.0;
  for (const auto& [occ, amp] : state.terms()) sum += std::norm(amp);
  return sum;
}

PhotonState add(const PhotonState& a, const PhotonState& b) {
  std::map<Occupation, Complex> terms = a.terms();
  for (const auto& [occ, amp] : b.terms()) terms[occ] += amp;
  return PhotonState::from_terms(std::move(terms));
}

PhotonState scale(const PhotonState& a, Complex factor) {
  std::map<Occupation, Complex> terms = a.terms();
  for (auto& [occ, amp] : terms) amp *= factor;
  return PhotonState::from_terms(std::move(terms));
}

}  // namespace nqi
