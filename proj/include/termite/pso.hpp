#ifndef TERMITE_PSO_HPP
#define TERMITE_PSO_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "termite/features.hpp"
#include "termite/term.hpp"

namespace termite {

using Vec5 = std::array<double, 5>;

struct SwarmConfig {
  int num_particles = 40;
  int max_iterations = 500;
  double c1 = 2.0;
  double c2 = 2.0;
  double v_max = 0.25;  // velocity clamp, per dimension
  std::uint64_t rng_seed = 42;
  std::int64_t fitness_k = 0;  // 0 = use the gold-standard size

  void validate() const;  // throws InvalidConfig
};

struct Particle {
  Vec5 position{};
  Vec5 velocity{};
  Vec5 best_position{};
  double best_fitness = 0.0;
  std::mt19937_64 rng;
};

struct SwarmState {
  std::vector<Particle> particles;
  Vec5 best_position{};
  double best_fitness = 0.0;
  int iterations = 0;
  std::vector<double> trace;  // global best after init, then per iteration
};

using Objective = std::function<double(const Vec5&)>;

// Uniform draw in [0,1) from the top 53 bits, identical on every platform.
double uniform01(std::mt19937_64& rng);

// Particles 0..5 are deterministic anchors (the five one-hot vectors and
// the equal-weight vector); the rest start uniform in [0,1]^5. Velocities
// start uniform in [-v_max, v_max], each particle on its own seeded stream.
SwarmState initialize_swarm(const SwarmConfig& cfg, const Objective& objective);

// w*v + c1*r1*(pbest - x) + c2*r2*(g - x), clamped to [-v_max, v_max].
Vec5 update_velocity(const Particle& p, const Vec5& global_best, double inertia,
                     const SwarmConfig& cfg, const Vec5& r1, const Vec5& r2);

// x += v, clamped to [0,1]; a clipped dimension has its velocity zeroed.
void update_position(Particle& p);

// Full loop: one shared inertia draw 0.5 + u/2 per iteration, velocity and
// position updates, personal/global best bookkeeping. Stops after
// max_iterations or once the global best reaches stop_at.
SwarmState run_swarm(const Objective& objective, const SwarmConfig& cfg,
                     std::optional<double> stop_at = std::nullopt);

// Number of gold terms among the top-k candidates ranked by the weighted
// feature score (ties broken by term order).
std::int64_t fitness(const Vec5& weights, const FeatureMatrix& features,
                     const std::set<TermKey>& gold, std::int64_t k);

struct TrainResult {
  Vec5 weights{};
  std::int64_t best_fitness = 0;
  std::vector<std::int64_t> trace;
  int iterations = 0;
  std::int64_t k = 0;  // resolved fitness cutoff
};

// Learns the five feature weights by maximizing fitness on the training
// feature matrix; stops early on a perfect score.
TrainResult optimize_weights(const FeatureMatrix& features,
                             const std::set<TermKey>& gold,
                             const SwarmConfig& cfg);

}  // namespace termite

#endif  // TERMITE_PSO_HPP
