#include "termite/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "termite/candidates.hpp"
#include "termite/corpus.hpp"
#include "termite/error.hpp"
#include "termite/eval.hpp"
#include "termite/features.hpp"
#include "termite/model_io.hpp"
#include "termite/pso.hpp"
#include "termite/scoring.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace termite::cli {
namespace {

constexpr std::size_t kDefaultMaxLen = 4;
constexpr std::int64_t kDefaultMinFreq = 1;
const std::vector<std::size_t> kDefaultKValues = {25, 50, 150, 250};

std::string corpus_label(const std::string& dir) {
  fs::path p(dir);
  std::string name = p.filename().string();
  if (name.empty()) name = p.parent_path().filename().string();
  return name.empty() ? dir : name;
}

StopwordSet resolve_stopwords(const std::string& source) {
  if (source.empty() || source == "builtin") return StopwordSet::builtin();
  return StopwordSet::from_file(source);
}

struct PipelineOptions {
  std::string target_dir;
  std::vector<std::string> contrastive_dirs;
  std::string stopword_path;  // empty = builtin
  std::size_t max_len = kDefaultMaxLen;
  std::int64_t min_freq = kDefaultMinFreq;

  std::string stopword_source() const {
    return stopword_path.empty() ? "builtin" : stopword_path;
  }
};

struct Analysis {
  Corpus target;
  std::vector<Corpus> contrastive;
  StopwordSet stopwords;
  std::vector<CandidateTerm> candidates;
  FrequencyModel model;
  FeatureMatrix matrix;
};

Analysis analyze(const PipelineOptions& opt) {
  Analysis a;
  a.stopwords = resolve_stopwords(opt.stopword_source());
  a.target = load_corpus(opt.target_dir, corpus_label(opt.target_dir),
                         CorpusRole::target);
  tokenize_corpus(a.target, a.stopwords);
  for (const auto& dir : opt.contrastive_dirs) {
    Corpus c = load_corpus(dir, corpus_label(dir), CorpusRole::contrastive);
    tokenize_corpus(c, a.stopwords);
    a.contrastive.push_back(std::move(c));
  }
  a.candidates = build_candidate_set(a.target, opt.max_len, opt.min_freq);
  a.model = build_frequency_model(a.target, a.contrastive, a.candidates,
                                  opt.max_len);
  a.matrix = feature_matrix(a.candidates, a.model);
  return a;
}

ordered_json pipeline_echo(const PipelineOptions& opt) {
  ordered_json j;
  j["target"] = opt.target_dir;
  j["contrastive"] = opt.contrastive_dirs;
  j["stopwords"] = opt.stopword_source();
  j["max_len"] = opt.max_len;
  j["min_freq"] = opt.min_freq;
  return j;
}

void write_text_file(const fs::path& path, const std::string& what,
                     const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::io_failure,
                "cannot write " + what + ": " + path.string());
  }
  body(out);
  out.flush();
  if (!out) {
    throw Error(ErrorCode::io_failure,
                "write failure on " + what + ": " + path.string());
  }
}

void maybe_write_features(const std::string& path, const FeatureMatrix& matrix) {
  if (path.empty()) return;
  write_text_file(path, "feature matrix", [&](std::ostream& out) {
    write_feature_matrix(out, matrix);
  });
  std::cout << "features: " << path << '\n';
}

void check_k_values(const std::vector<std::size_t>& ks) {
  if (ks.empty()) {
    throw Error(ErrorCode::invalid_config, "need at least one --k value");
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 1 || (i > 0 && ks[i] <= ks[i - 1])) {
      throw Error(ErrorCode::invalid_config,
                  "--k values must be strictly increasing positive integers");
    }
  }
}

void load_pipeline_from_model(const TrainedModel& model, PipelineOptions& opt,
                              const std::string& stopword_override) {
  const auto& cfg = model.config;
  opt.max_len = cfg.value("max_len", kDefaultMaxLen);
  opt.min_freq = cfg.value("min_freq", kDefaultMinFreq);
  std::string source = cfg.value("stopwords", std::string("builtin"));
  if (!stopword_override.empty()) source = stopword_override;
  opt.stopword_path = source == "builtin" ? "" : source;
}

void write_report_files(const std::string& out_base,
                        const PrecisionReport& report,
                        const ordered_json& echo) {
  const std::string echo_line = echo.dump();
  write_text_file(out_base + ".json", "report", [&](std::ostream& out) {
    ordered_json j;
    j["k_values"] = report.k_values;
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < report.methods.size(); ++r) {
      ordered_json row;
      row["method"] = report.methods[r];
      row["precision"] = report.precision[r];
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    j["config"] = echo;
    out << j.dump(2) << '\n';
  });
  write_text_file(out_base + ".txt", "report", [&](std::ostream& out) {
    write_report_text(out, report, echo_line);
  });
  write_text_file(out_base + ".csv", "report", [&](std::ostream& out) {
    write_report_csv(out, report, echo_line);
  });
  std::cout << "report: " << out_base << ".{json,txt,csv}\n";
}

// ---- subcommand option blocks ----------------------------------------

struct TrainArgs {
  PipelineOptions pipeline;
  std::string gold_path;
  std::string out_path;
  std::string features_out;
  SwarmConfig swarm;
};

struct ExtractArgs {
  PipelineOptions pipeline;  // max_len/min_freq/stopwords come from the model
  std::string model_path;
  std::string stopword_override;
  std::string out_path;
  std::string features_out;
  std::size_t top_n = 25;
};

struct EvaluateArgs {
  std::vector<std::string> ranked_files;
  std::string gold_path;
  std::string stopword_path;
  std::size_t max_len = kDefaultMaxLen;
  std::vector<std::size_t> k_values;
  std::string out_base;
};

struct CompareArgs {
  PipelineOptions pipeline;
  std::string model_path;
  std::string stopword_override;
  std::string gold_path;
  std::vector<std::size_t> k_values;
  std::string out_base;
  bool per_feature = false;
};

struct SplitArgs {
  std::string target_dir;
  double ratio = 0.8;
  std::uint64_t seed = 42;
  std::string train_out;
  std::string test_out;
};

int do_train(const TrainArgs& args) {
  Analysis a = analyze(args.pipeline);
  GoldStandard gold =
      load_gold(args.gold_path, a.stopwords, args.pipeline.max_len);
  if (gold.skipped > 0) {
    std::cerr << "warning: skipped " << gold.skipped
              << " unusable gold line(s)\n";
  }
  if (a.contrastive.empty()) {
    std::cerr << "warning: no contrastive corpora, domain relevance is "
                 "constant 1\n";
  }

  TrainResult result = optimize_weights(a.matrix, gold.keys, args.swarm);

  TrainedModel model;
  model.weights = result.weights;
  model.final_fitness = result.best_fitness;
  model.fitness_k = result.k;
  model.iterations = result.iterations;
  model.fitness_trace = result.trace;
  model.config = pipeline_echo(args.pipeline);
  model.config["command"] = "train";
  model.config["gold"] = args.gold_path;
  model.config["particles"] = args.swarm.num_particles;
  model.config["iterations"] = args.swarm.max_iterations;
  model.config["c1"] = args.swarm.c1;
  model.config["c2"] = args.swarm.c2;
  model.config["vmax"] = args.swarm.v_max;
  model.config["seed"] = args.swarm.rng_seed;
  model.config["fitness_k"] = result.k;
  model.save(args.out_path);

  maybe_write_features(args.features_out, a.matrix);
  std::printf("fitness %lld of %zu gold terms (k=%lld, %d iterations)\n",
              static_cast<long long>(result.best_fitness), gold.keys.size(),
              static_cast<long long>(result.k), result.iterations);
  std::printf("weights: %.6f %.6f %.6f %.6f %.6f\n", result.weights[0],
              result.weights[1], result.weights[2], result.weights[3],
              result.weights[4]);
  std::cout << "model: " << args.out_path << '\n';
  return 0;
}

int do_extract(ExtractArgs args) {
  TrainedModel model = TrainedModel::load(args.model_path);
  load_pipeline_from_model(model, args.pipeline, args.stopword_override);

  Analysis a = analyze(args.pipeline);
  if (a.contrastive.empty()) {
    std::cerr << "warning: no contrastive corpora, domain relevance is "
                 "constant 1\n";
  }
  RankedTermList ranked = rank_swarm(a.matrix, model.weights);
  if (args.top_n > ranked.entries.size()) {
    throw Error(ErrorCode::k_too_large,
                "top-n=" + std::to_string(args.top_n) + " but only " +
                    std::to_string(ranked.entries.size()) + " candidates");
  }

  ordered_json echo = pipeline_echo(args.pipeline);
  echo["command"] = "extract";
  echo["model"] = args.model_path;
  echo["top_n"] = args.top_n;
  write_text_file(args.out_path, "ranked list", [&](std::ostream& out) {
    write_ranked_list(out, ranked, echo.dump(), args.top_n);
  });
  maybe_write_features(args.features_out, a.matrix);
  std::cout << "ranked list: " << args.out_path << " (" << args.top_n
            << " terms)\n";
  return 0;
}

int do_evaluate(const EvaluateArgs& args) {
  check_k_values(args.k_values);
  StopwordSet stopwords = resolve_stopwords(
      args.stopword_path.empty() ? "builtin" : args.stopword_path);
  GoldStandard gold = load_gold(args.gold_path, stopwords, args.max_len);

  std::vector<RankedTermList> lists;
  for (const auto& file : args.ranked_files) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::missing_file, "cannot open ranked list: " + file);
    }
    RankedTermList list = read_ranked_list(in, file);
    if (list.method.empty()) list.method = fs::path(file).stem().string();
    lists.push_back(std::move(list));
  }

  PrecisionReport report = compare_methods(lists, gold, args.k_values);

  ordered_json echo;
  echo["command"] = "evaluate";
  echo["ranked_files"] = args.ranked_files;
  echo["gold"] = args.gold_path;
  echo["stopwords"] =
      args.stopword_path.empty() ? "builtin" : args.stopword_path;
  echo["max_len"] = args.max_len;
  echo["k"] = args.k_values;
  write_report_files(args.out_base, report, echo);
  return 0;
}

int do_compare(CompareArgs args) {
  check_k_values(args.k_values);
  TrainedModel model = TrainedModel::load(args.model_path);
  load_pipeline_from_model(model, args.pipeline, args.stopword_override);

  Analysis a = analyze(args.pipeline);
  GoldStandard gold =
      load_gold(args.gold_path, a.stopwords, args.pipeline.max_len);

  std::vector<RankedTermList> lists;
  if (args.per_feature) {
    for (int f = 0; f < 5; ++f) {
      Vec5 one_hot{};
      one_hot[f] = 1.0;
      lists.push_back(
          rank_by_weights(a.matrix, one_hot, "f" + std::to_string(f + 1)));
    }
  }
  lists.push_back(rank_tfidf(a.candidates, a.target, a.contrastive,
                             args.pipeline.max_len));
  if (!a.contrastive.empty()) {
    lists.push_back(rank_weirdness(a.model));
    lists.push_back(rank_glossary(a.matrix, a.model));
    lists.push_back(rank_termextractor(a.matrix));
  } else {
    std::cerr << "warning: no contrastive corpora; skipping Weirdness, "
                 "GlossaryExtraction and TermExtractor\n";
  }
  lists.push_back(rank_by_weights(a.matrix, model.weights, "Swarm Model"));

  PrecisionReport report = compare_methods(lists, gold, args.k_values);

  ordered_json echo = pipeline_echo(args.pipeline);
  echo["command"] = "compare";
  echo["model"] = args.model_path;
  echo["gold"] = args.gold_path;
  echo["k"] = args.k_values;
  echo["per_feature"] = args.per_feature;
  write_report_files(args.out_base, report, echo);
  return 0;
}

int do_split(const SplitArgs& args) {
  if (args.ratio <= 0.0 || args.ratio >= 1.0) {
    throw Error(ErrorCode::invalid_config, "--ratio must be in (0, 1)");
  }
  if (!fs::is_directory(args.target_dir)) {
    throw Error(ErrorCode::missing_directory,
                "corpus directory does not exist: " + args.target_dir);
  }
  std::vector<std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(args.target_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(
          entry.path().lexically_relative(args.target_dir).generic_string());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.size() < 2) {
    throw Error(ErrorCode::empty_corpus,
                "need at least two documents to split");
  }

  // Fisher-Yates with the project-wide uniform draw, so the split is
  // reproducible independent of the standard library.
  std::mt19937_64 rng(args.seed);
  for (std::size_t i = files.size() - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(uniform01(rng) * (i + 1));
    std::swap(files[i], files[j]);
  }
  std::size_t n_train = static_cast<std::size_t>(
      args.ratio * static_cast<double>(files.size()) + 0.5);
  n_train = std::clamp<std::size_t>(n_train, 1, files.size() - 1);

  auto copy_to = [&](const std::string& rel, const std::string& dest_dir) {
    fs::path dest = fs::path(dest_dir) / rel;
    fs::create_directories(dest.parent_path());
    fs::copy_file(fs::path(args.target_dir) / rel, dest,
                  fs::copy_options::overwrite_existing);
  };
  for (std::size_t i = 0; i < files.size(); ++i) {
    copy_to(files[i], i < n_train ? args.train_out : args.test_out);
  }
  std::cout << "split " << files.size() << " documents: " << n_train
            << " train -> " << args.train_out << ", "
            << files.size() - n_train << " test -> " << args.test_out << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"term extraction with swarm-trained feature weights", "termite"};
  app.require_subcommand(1);

  TrainArgs train;
  ExtractArgs extract;
  EvaluateArgs evaluate;
  CompareArgs compare;
  SplitArgs split;

  auto add_pipeline_flags = [](CLI::App* cmd, PipelineOptions& opt,
                               bool with_tuning) {
    cmd->add_option("--target", opt.target_dir, "target corpus directory")
        ->required();
    cmd->add_option("--contrastive", opt.contrastive_dirs,
                    "contrastive corpus directory (repeatable)");
    if (with_tuning) {
      cmd->add_option("--stopwords", opt.stopword_path, "stopword list file");
      cmd->add_option("--max-len", opt.max_len, "max candidate length in words");
      cmd->add_option("--min-freq", opt.min_freq, "min candidate frequency");
    }
  };

  CLI::App* train_cmd = app.add_subcommand("train", "learn feature weights");
  add_pipeline_flags(train_cmd, train.pipeline, true);
  train_cmd->add_option("--gold", train.gold_path, "gold-standard term file")
      ->required();
  train_cmd->add_option("--particles", train.swarm.num_particles, "swarm size");
  train_cmd->add_option("--iterations", train.swarm.max_iterations,
                        "max iterations");
  train_cmd->add_option("--c1", train.swarm.c1, "cognitive coefficient");
  train_cmd->add_option("--c2", train.swarm.c2, "social coefficient");
  train_cmd->add_option("--vmax", train.swarm.v_max, "velocity clamp");
  train_cmd->add_option("--seed", train.swarm.rng_seed, "RNG seed");
  train_cmd->add_option("--fitness-k", train.swarm.fitness_k,
                        "fitness cutoff (default: gold size)");
  train_cmd->add_option("--out", train.out_path, "model file to write")
      ->required();
  train_cmd->add_option("--features-out", train.features_out,
                        "write the feature matrix here");

  CLI::App* extract_cmd =
      app.add_subcommand("extract", "rank terms of a test corpus");
  extract_cmd->add_option("--model", extract.model_path, "trained model file")
      ->required();
  add_pipeline_flags(extract_cmd, extract.pipeline, false);
  extract_cmd->add_option("--stopwords", extract.stopword_override,
                          "override the model's stopword list");
  extract_cmd->add_option("--top-n", extract.top_n, "terms to write");
  extract_cmd->add_option("--out", extract.out_path, "ranked list to write")
      ->required();
  extract_cmd->add_option("--features-out", extract.features_out,
                          "write the feature matrix here");

  CLI::App* eval_cmd =
      app.add_subcommand("evaluate", "precision@k of ranked lists");
  eval_cmd
      ->add_option("ranked", evaluate.ranked_files, "ranked list file(s)")
      ->required();
  eval_cmd->add_option("--gold", evaluate.gold_path, "gold-standard term file")
      ->required();
  eval_cmd->add_option("--stopwords", evaluate.stopword_path,
                       "stopword list file");
  eval_cmd->add_option("--max-len", evaluate.max_len,
                       "max gold term length in words");
  eval_cmd->add_option("--k", evaluate.k_values,
                       "evaluation cutoffs (repeatable)");
  eval_cmd->add_option("--out", evaluate.out_base,
                       "report base path (.json/.txt/.csv)")
      ->required();

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "swarm model vs the four baseline rankers");
  compare_cmd->add_option("--model", compare.model_path, "trained model file")
      ->required();
  add_pipeline_flags(compare_cmd, compare.pipeline, false);
  compare_cmd->add_option("--stopwords", compare.stopword_override,
                          "override the model's stopword list");
  compare_cmd->add_option("--gold", compare.gold_path, "gold-standard term file")
      ->required();
  compare_cmd->add_option("--k", compare.k_values,
                          "evaluation cutoffs (repeatable)");
  compare_cmd->add_flag("--per-feature", compare.per_feature,
                        "also rank by each single feature");
  compare_cmd->add_option("--out", compare.out_base,
                          "report base path (.json/.txt/.csv)")
      ->required();

  CLI::App* split_cmd =
      app.add_subcommand("split", "seeded random train/test file split");
  split_cmd->add_option("--target", split.target_dir, "corpus directory")
      ->required();
  split_cmd->add_option("--ratio", split.ratio, "train fraction");
  split_cmd->add_option("--seed", split.seed, "RNG seed");
  split_cmd->add_option("--train-out", split.train_out, "train directory")
      ->required();
  split_cmd->add_option("--test-out", split.test_out, "test directory")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("termite");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (evaluate.k_values.empty()) evaluate.k_values = kDefaultKValues;
    if (compare.k_values.empty()) compare.k_values = kDefaultKValues;
    if (train_cmd->parsed()) return do_train(train);
    if (extract_cmd->parsed()) return do_extract(extract);
    if (eval_cmd->parsed()) return do_evaluate(evaluate);
    if (compare_cmd->parsed()) return do_compare(compare);
    if (split_cmd->parsed()) return do_split(split);
  } catch (const Error& e) {
    std::cerr << "termite: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "termite: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace termite::cli
