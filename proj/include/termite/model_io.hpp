#ifndef TERMITE_MODEL_IO_HPP
#define TERMITE_MODEL_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "termite/pso.hpp"

namespace termite {

// Trained-model file contents: the learned weights plus everything needed
// to rerun the command that produced them.
struct TrainedModel {
  Vec5 weights{};
  std::int64_t final_fitness = 0;
  std::int64_t fitness_k = 0;
  int iterations = 0;
  std::vector<std::int64_t> fitness_trace;
  nlohmann::ordered_json config;  // command config echo

  void save(const std::filesystem::path& path) const;
  static TrainedModel load(const std::filesystem::path& path);
};

}  // namespace termite

#endif  // TERMITE_MODEL_IO_HPP
