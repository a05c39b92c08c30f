#include "termite/pso.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "termite/error.hpp"

namespace termite {
namespace {

constexpr int kNumAnchors = 6;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t particle_seed(std::uint64_t master_seed, int index) {
  return splitmix64(master_seed ^ splitmix64(static_cast<std::uint64_t>(index) + 1));
}

Vec5 anchor_position(int index) {
  if (index < 5) {
    Vec5 v{};
    v[index] = 1.0;
    return v;
  }
  return {0.5, 0.5, 0.5, 0.5, 0.5};
}

// Global best = best personal best; ties go to the lowest particle index.
void refresh_global_best(SwarmState& state) {
  for (const auto& p : state.particles) {
    if (p.best_fitness > state.best_fitness) {
      state.best_fitness = p.best_fitness;
      state.best_position = p.best_position;
    }
  }
}

}  // namespace

void SwarmConfig::validate() const {
  if (num_particles < 2) {
    throw Error(ErrorCode::invalid_config, "num_particles must be >= 2");
  }
  if (max_iterations < 1) {
    throw Error(ErrorCode::invalid_config, "max_iterations must be >= 1");
  }
  if (c1 <= 0.0 || c2 <= 0.0) {
    throw Error(ErrorCode::invalid_config, "c1 and c2 must be positive");
  }
  if (v_max <= 0.0) {
    throw Error(ErrorCode::invalid_config, "v_max must be positive");
  }
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

SwarmState initialize_swarm(const SwarmConfig& cfg, const Objective& objective) {
  cfg.validate();
  SwarmState state;
  state.particles.resize(cfg.num_particles);
  for (int i = 0; i < cfg.num_particles; ++i) {
    Particle& p = state.particles[i];
    p.rng.seed(particle_seed(cfg.rng_seed, i));
    if (i < kNumAnchors) {
      p.position = anchor_position(i);
    } else {
      for (double& x : p.position) x = uniform01(p.rng);
    }
    for (double& v : p.velocity) {
      v = (2.0 * uniform01(p.rng) - 1.0) * cfg.v_max;
    }
    p.best_position = p.position;
    p.best_fitness = objective(p.position);
  }
  state.best_fitness = state.particles.front().best_fitness;
  state.best_position = state.particles.front().best_position;
  refresh_global_best(state);
  state.trace.push_back(state.best_fitness);
  return state;
}

Vec5 update_velocity(const Particle& p, const Vec5& global_best, double inertia,
                     const SwarmConfig& cfg, const Vec5& r1, const Vec5& r2) {
  Vec5 v;
  for (std::size_t d = 0; d < 5; ++d) {
    double value = inertia * p.velocity[d] +
                   cfg.c1 * r1[d] * (p.best_position[d] - p.position[d]) +
                   cfg.c2 * r2[d] * (global_best[d] - p.position[d]);
    v[d] = std::clamp(value, -cfg.v_max, cfg.v_max);
  }
  return v;
}

void update_position(Particle& p) {
  for (std::size_t d = 0; d < 5; ++d) {
    double x = p.position[d] + p.velocity[d];
    if (x < 0.0) {
      x = 0.0;
      p.velocity[d] = 0.0;
    } else if (x > 1.0) {
      x = 1.0;
      p.velocity[d] = 0.0;
    }
    p.position[d] = x;
  }
}

SwarmState run_swarm(const Objective& objective, const SwarmConfig& cfg,
                     std::optional<double> stop_at) {
  std::mt19937_64 master(cfg.rng_seed);
  SwarmState state = initialize_swarm(cfg, objective);

  while (state.iterations < cfg.max_iterations &&
         !(stop_at && state.best_fitness >= *stop_at)) {
    double inertia = 0.5 + uniform01(master) / 2.0;  // shared by all particles
    for (auto& p : state.particles) {
      Vec5 r1, r2;
      for (double& r : r1) r = uniform01(p.rng);
      for (double& r : r2) r = uniform01(p.rng);
      p.velocity = update_velocity(p, state.best_position, inertia, cfg, r1, r2);
      update_position(p);
      double value = objective(p.position);
      if (value > p.best_fitness) {
        p.best_fitness = value;
        p.best_position = p.position;
      }
    }
    refresh_global_best(state);
    ++state.iterations;
    state.trace.push_back(state.best_fitness);
  }
  return state;
}

namespace {

std::vector<std::uint8_t> gold_mask(const FeatureMatrix& features,
                                    const std::set<TermKey>& gold) {
  std::vector<std::uint8_t> mask(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    mask[i] = gold.count(features.keys[i]) != 0;
  }
  return mask;
}

std::int64_t hits_in_top_k(const Vec5& weights, const FeatureMatrix& features,
                           const std::vector<std::uint8_t>& in_gold,
                           std::int64_t k) {
  const std::size_t n = features.size();
  const std::size_t cutoff = std::min<std::size_t>(static_cast<std::size_t>(k), n);
  std::vector<double> scores(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = features.rows[i].normalized;
    scores[i] = std::inner_product(weights.begin(), weights.end(), f.begin(), 0.0);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // keys are sorted ascending, so index order is the tie-break order
  auto better = [&](std::size_t a, std::size_t b) {
    return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
  };
  if (cutoff < n) {
    std::nth_element(order.begin(), order.begin() + cutoff, order.end(), better);
  }
  std::int64_t hits = 0;
  for (std::size_t i = 0; i < cutoff; ++i) {
    hits += in_gold[order[i]];
  }
  return hits;
}

}  // namespace

std::int64_t fitness(const Vec5& weights, const FeatureMatrix& features,
                     const std::set<TermKey>& gold, std::int64_t k) {
  if (features.size() == 0) {
    throw Error(ErrorCode::no_candidates, "empty feature matrix");
  }
  if (gold.empty()) {
    throw Error(ErrorCode::empty_gold_standard, "gold standard is empty");
  }
  if (k < 1) {
    throw Error(ErrorCode::invalid_config, "fitness cutoff must be >= 1");
  }
  return hits_in_top_k(weights, features, gold_mask(features, gold), k);
}

TrainResult optimize_weights(const FeatureMatrix& features,
                             const std::set<TermKey>& gold,
                             const SwarmConfig& cfg) {
  cfg.validate();
  if (gold.empty()) {
    throw Error(ErrorCode::empty_gold_standard, "gold standard is empty");
  }
  const std::int64_t k =
      cfg.fitness_k > 0 ? cfg.fitness_k : static_cast<std::int64_t>(gold.size());
  if (features.size() == 0) {
    throw Error(ErrorCode::no_candidates, "empty feature matrix");
  }

  const std::vector<std::uint8_t> in_gold = gold_mask(features, gold);
  // gold terms that are candidates at all; the best any weighting can do
  const std::int64_t reachable =
      std::accumulate(in_gold.begin(), in_gold.end(), std::int64_t{0});

  Objective objective = [&](const Vec5& w) {
    return static_cast<double>(hits_in_top_k(w, features, in_gold, k));
  };
  SwarmState state =
      run_swarm(objective, cfg, static_cast<double>(reachable));

  TrainResult result;
  result.weights = state.best_position;
  result.best_fitness = static_cast<std::int64_t>(state.best_fitness);
  result.iterations = state.iterations;
  result.k = k;
  result.trace.reserve(state.trace.size());
  for (double v : state.trace) {
    result.trace.push_back(static_cast<std::int64_t>(v));
  }
  return result;
}

}  // namespace termite
