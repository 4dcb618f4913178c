#include "nqi/protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace nqi {

std::string to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::IndependentCircular:
      return "independent-circular";
    case Scheme::EprCircular:
      return "epr-circular";
    case Scheme::EprLinear:
      return "epr-linear";
    case Scheme::SinglePhotonLinear:
      return "single-photon-linear";
  }
  return "unknown";
}

Scheme parse_scheme(const std::string& name) {
  for (Scheme s : kAllSchemes) {
    if (to_string(s) == name) return s;
  }
  throw std::invalid_argument("unknown scheme: " + name);
}

DetectorConfig scheme_detector_config(Scheme scheme) {
  switch (scheme) {
    case Scheme::IndependentCircular:
    case Scheme::EprCircular:
      return DetectorConfig::uniform(DetectorBasis::Circular);
    case Scheme::EprLinear:
    case Scheme::SinglePhotonLinear:
      return DetectorConfig::uniform(DetectorBasis::Linear);
  }
  throw std::invalid_argument("unknown scheme");
}

int scheme_photon_count(Scheme scheme) {
  return scheme == Scheme::SinglePhotonLinear ? 1 : 2;
}

void ExperimentConfig::validate() const {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm2 - 1.0) > kAmplitudeTolerance) {
    throw std::invalid_argument(
        "ExperimentConfig: |alpha|^2 + |beta|^2 must be 1, got " +
        std::to_string(norm2));
  }
  if (max_rounds < 1) {
    throw std::invalid_argument("ExperimentConfig: max_rounds must be >= 1");
  }
  if (mc_trials < 0) {
    throw std::invalid_argument("ExperimentConfig: mc_trials must be >= 0");
  }
}

PhotonState build_probe(Scheme scheme) {
  const ModeId right_plus{Direction::Right, Path::Lower, Polarization::Plus};
  const ModeId right_minus{Direction::Right, Path::Lower, Polarization::Minus};
  const ModeId left_plus{Direction::Left, Path::Lower, Polarization::Plus};
  const ModeId left_minus{Direction::Left, Path::Lower, Polarization::Minus};

  switch (scheme) {
    case Scheme::IndependentCircular:
      return create_photon(create_photon(PhotonState::vacuum(), right_plus),
                           left_minus);
    case Scheme::EprCircular:
    case Scheme::EprLinear: {
      const PhotonState plus_minus = create_photon(
          create_photon(PhotonState::vacuum(), right_plus), left_minus);
      const PhotonState minus_plus = create_photon(
          create_photon(PhotonState::vacuum(), right_minus), left_plus);
      return scale(add(plus_minus, minus_plus),
                   Complex{0.7071067811865475244, 0.0});
    }
    case Scheme::SinglePhotonLinear: {
      LinearState probe;
      probe.terms[make_linear_occupation({LinearModeId{
          Direction::Right, Path::Lower, LinearPolarization::X}})] =
          Complex{1.0, 0.0};
      return rotate_to_circular(probe);
    }
  }
  throw std::invalid_argument("unknown scheme");
}

std::vector<OutcomeRecord> run_single_shot(const ExperimentConfig& config) {
  config.validate();
  const AtomSuperposition initial = config.initial_atom();

  JointState joint = tensor(build_probe(config.scheme), initial);
  joint = beam_splitter(joint);
  joint = interact_atom(joint, config.atom_present, config.atom_arm);
  joint = beam_splitter(joint);

  const std::vector<Outcome> outcomes =
      enumerate_outcomes(joint, scheme_detector_config(config.scheme));

  std::vector<OutcomeRecord> records;
  records.reserve(outcomes.size());
  for (const Outcome& outcome : outcomes) {
    OutcomeRecord record;
    record.category = classify(outcome, initial);
    record.fidelity_to_initial =
        outcome.post_atom ? fidelity(initial, *outcome.post_atom) : 1.0;
    record.outcome = outcome;
    records.push_back(std::move(record));
  }
  return records;
}

std::map<OutcomeCategory, double> category_masses(
    const std::vector<OutcomeRecord>& records) {
  std::map<OutcomeCategory, double> masses;
  for (OutcomeCategory c : kAllCategories) masses[c] = 0.0;
  for (const OutcomeRecord& record : records) {
    masses[record.category] += record.outcome.probability;
  }
  return masses;
}

RoundReport run_repeated(const ExperimentConfig& config) {
  config.validate();
  RoundReport report;
  report.per_round = run_single_shot(config);

  // Repetition is only sound when the undetected outcomes leave the atom
  // exactly where it started.
  for (const OutcomeRecord& record : report.per_round) {
    if (record.category == OutcomeCategory::NotDetectedRepeatable &&
        record.fidelity_to_initial < 1.0 - kAmplitudeTolerance) {
      throw std::runtime_error(
          "run_repeated: scheme '" + to_string(config.scheme) +
          "' has a repeatable outcome that perturbs the atom (fidelity " +
          std::to_string(record.fidelity_to_initial) + "); cannot recurse");
    }
  }

  const std::map<OutcomeCategory, double> masses =
      category_masses(report.per_round);
  const double repeat_mass = masses.at(OutcomeCategory::NotDetectedRepeatable);

  std::map<OutcomeCategory, double> cumulative;
  for (OutcomeCategory c : kAllCategories) {
    if (c != OutcomeCategory::NotDetectedRepeatable) cumulative[c] = 0.0;
  }
  double continuing = 1.0;
  for (int k = 1; k <= config.max_rounds; ++k) {
    for (auto& [category, total] : cumulative) {
      total += continuing * masses.at(category);
    }
    continuing *= repeat_mass;
    report.rounds.push_back(RoundCumulative{k, cumulative, continuing});
  }
  return report;
}

namespace {

// Finalizer of the splitmix64 generator; trial i draws from the stream
// position seed + (i+1) steps, which makes the sample for a given trial
// independent of how trials are sharded over workers.
std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double trial_uniform(std::uint64_t seed, std::uint64_t trial) {
  const std::uint64_t z =
      mix64(seed + (trial + 1) * 0x9E3779B97F4A7C15ULL);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

MonteCarloSummary monte_carlo(const ExperimentConfig& config,
                              unsigned workers) {
  config.validate();
  if (config.mc_trials < 1) {
    throw std::invalid_argument("monte_carlo: mc_trials must be >= 1");
  }

  const std::vector<OutcomeRecord> records = run_single_shot(config);
  std::vector<double> cdf(records.size());
  std::vector<OutcomeCategory> category(records.size());
  double running = 0.0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    running += records[i].outcome.probability;
    cdf[i] = running;
    category[i] = records[i].category;
  }

  using CountArray = std::array<long long, kAllCategories.size()>;
  auto sample_range = [&](std::uint64_t begin, std::uint64_t end,
                          CountArray& counts) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const double u = trial_uniform(config.rng_seed, i);
      std::size_t pick = records.size() - 1;
      for (std::size_t r = 0; r < cdf.size(); ++r) {
        if (u < cdf[r]) {
          pick = r;
          break;
        }
      }
      ++counts[static_cast<std::size_t>(category[pick])];
    }
  };

  const auto trials = static_cast<std::uint64_t>(config.mc_trials);
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(
      workers, static_cast<unsigned>(std::min<std::uint64_t>(trials, 64)));

  CountArray totals{};
  if (workers <= 1) {
    sample_range(0, trials, totals);
  } else {
    std::vector<CountArray> partial(workers, CountArray{});
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = std::min(trials, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(sample_range, begin, end, std::ref(partial[w]));
    }
    for (auto& t : pool) t.join();
    for (const CountArray& counts : partial) {
      for (std::size_t c = 0; c < totals.size(); ++c) totals[c] += counts[c];
    }
  }

  MonteCarloSummary summary;
  summary.trials = config.mc_trials;
  summary.seed = config.rng_seed;
  for (OutcomeCategory c : kAllCategories) {
    const long long n = totals[static_cast<std::size_t>(c)];
    summary.counts[c] = n;
    summary.frequencies[c] =
        static_cast<double>(n) / static_cast<double>(config.mc_trials);
  }
  return summary;
}

NqiComparison compare_nqi_success(Complex alpha, Complex beta) {
  ExperimentConfig config;
  config.alpha = alpha;
  config.beta = beta;

  NqiComparison comparison;
  config.scheme = Scheme::EprLinear;
  comparison.epr_linear_success =
      category_masses(run_single_shot(config)).at(OutcomeCategory::NQISuccess);
  config.scheme = Scheme::SinglePhotonLinear;
  comparison.single_photon_success =
      category_masses(run_single_shot(config)).at(OutcomeCategory::NQISuccess);
  comparison.ratio =
      comparison.epr_linear_success / comparison.single_photon_success;
  return comparison;
}

}  // namespace nqi
