#include "termite/model_io.hpp"

#include <fstream>

#include "termite/error.hpp"

namespace termite {

namespace {
constexpr const char* kFormat = "termite-model";
constexpr int kVersion = 1;
}  // namespace

void TrainedModel::save(const std::filesystem::path& path) const {
  nlohmann::ordered_json j;
  j["format"] = kFormat;
  j["version"] = kVersion;
  j["weights"] = weights;
  j["final_fitness"] = final_fitness;
  j["fitness_k"] = fitness_k;
  j["iterations"] = iterations;
  j["fitness_trace"] = fitness_trace;
  j["config"] = config;

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::io_failure, "cannot write model: " + path.string());
  }
  out << j.dump(2) << '\n';
}

TrainedModel TrainedModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::missing_file,
                "cannot open model: " + path.string());
  }
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error,
                path.string() + ": invalid JSON: " + e.what());
  }

  TrainedModel model;
  try {
    if (j.at("format").get<std::string>() != kFormat) {
      throw Error(ErrorCode::parse_error,
                  path.string() + ": not a termite model file");
    }
    j.at("weights").get_to(model.weights);
    j.at("final_fitness").get_to(model.final_fitness);
    j.at("fitness_k").get_to(model.fitness_k);
    j.at("iterations").get_to(model.iterations);
    j.at("fitness_trace").get_to(model.fitness_trace);
    model.config = j.at("config");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error,
                path.string() + ": missing or malformed field: " + e.what());
  }
  return model;
}

}  // namespace termite
