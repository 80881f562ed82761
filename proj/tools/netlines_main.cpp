// Command-line front end: dataset generation, training, prediction and
// evaluation protocols over the netlines library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "netlines/csv.hpp"
#include "netlines/datagen.hpp"
#include "netlines/eval.hpp"
#include "netlines/model.hpp"

namespace {

// Exit codes by failure class; 0 on success, 1 on flag/usage errors.
constexpr int kExitIo = 2;
constexpr int kExitParse = 3;
constexpr int kExitValidation = 4;
constexpr int kExitTraining = 5;

struct SharedFlags {
  std::uint64_t seed = 0;
  double epsilon = 0.02;
  double annealing = 1e-3;
  double theta = 6.0;
  double t0 = 0.0;
  double tstop = 0.2;
  int max_epochs = 20000;
  int hmax = 0;
  int emax = 0;
  bool no_fallback = false;
  std::string multiclass = "";  // "", wta, ton, ton-ensemble
  int ensemble = 0;
  int positive = 1;
  bool positive_set = false;
};

void add_shared_flags(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--seed", f.seed, "master seed for every random choice");
  cmd->add_option("--epsilon", f.epsilon, "learning rate");
  cmd->add_option("--annealing", f.annealing, "inverse-temperature step per epoch");
  cmd->add_option("--theta", f.theta, "error/correct temperature ratio");
  cmd->add_option("--t0", f.t0, "initial temperature (0 = sqrt(N+1))");
  cmd->add_option("--tstop", f.tstop, "stop temperature");
  cmd->add_option("--max-epochs", f.max_epochs, "epoch budget per unit");
  cmd->add_option("--hmax", f.hmax, "hidden unit budget (0 = pattern count)");
  cmd->add_option("--emax", f.emax, "tolerated training errors");
  cmd->add_flag("--no-fallback", f.no_fallback, "disable the fallback construction");
  cmd->add_option("--multiclass", f.multiclass,
                  "multi-class strategy: wta, ton or ton-ensemble")
      ->check(CLI::IsMember({"wta", "ton", "ton-ensemble"}));
  cmd->add_option("--ensemble", f.ensemble, "committee size for ton-ensemble");
  cmd->add_option("--positive", f.positive, "class mapped to +1 in binary tasks")
      ->each([&f](const std::string&) { f.positive_set = true; });
}

netlines::TrainSpec make_spec(const SharedFlags& f, const netlines::Dataset& data) {
  netlines::TrainSpec spec;
  spec.growth.trainer.learning_rate = f.epsilon;
  spec.growth.trainer.annealing_rate = f.annealing;
  spec.growth.trainer.temperature_ratio = f.theta;
  spec.growth.trainer.initial_temperature = f.t0;
  spec.growth.trainer.stop_temperature = f.tstop;
  spec.growth.trainer.max_epochs = f.max_epochs;
  spec.growth.max_hidden = f.hmax;
  spec.growth.max_errors = f.emax;
  spec.growth.fallback_enabled = !f.no_fallback;
  spec.seed = f.seed;
  spec.positive_class = f.positive;
  spec.positive_set = f.positive_set;
  spec.ensemble_size = f.ensemble;

  if (f.multiclass == "wta") {
    spec.kind = netlines::ModelKind::wta;
  } else if (f.multiclass == "ton") {
    spec.kind = netlines::ModelKind::ton;
  } else if (f.multiclass == "ton-ensemble") {
    spec.kind = netlines::ModelKind::ensemble;
  } else {
    const std::size_t classes = data.class_ids().size();
    if (classes > 2) {
      throw netlines::Error("dataset has " + std::to_string(classes) +
                            " classes; pick a --multiclass strategy");
    }
    spec.kind = netlines::ModelKind::binary;
  }
  return spec;
}

netlines::Dataset load_dataset(const std::string& path, bool monks) {
  if (!monks) return netlines::load_csv(path);
  const netlines::BinaryLabeledSet set = netlines::load_monks(path);
  std::vector<netlines::Pattern> patterns;
  patterns.reserve(set.size());
  for (std::size_t mu = 0; mu < set.size(); ++mu) {
    netlines::Pattern p;
    const auto& row = set.input(mu);
    p.features.assign(row.begin() + 1, row.end());
    p.label = set.target(mu);
    patterns.push_back(std::move(p));
  }
  return netlines::Dataset(std::move(patterns));
}

void print_class_balance(const netlines::Dataset& data) {
  std::cout << "P=" << data.size() << " N=" << data.feature_dim() << " classes:";
  for (int c : data.class_ids()) {
    std::cout << ' ' << c << ':' << data.count_label(c);
  }
  std::cout << '\n';
}

void print_training_log(const netlines::TrainOutcome& outcome) {
  const auto& reports = outcome.reports;
  for (std::size_t n = 0; n < reports.size(); ++n) {
    for (const netlines::StageRecord& s : reports[n].trace) {
      std::cout << "net " << n << " stage h=" << s.hidden_units
                << " errors=" << s.errors << (s.fallback ? " [fallback]" : "")
                << '\n';
    }
  }
  long long kept = 0, total = 0;
  for (const auto& r : reports) {
    kept += r.weight_updates_kept;
    total += r.weight_updates_total;
  }
  std::cout << "H=" << netlines::total_hidden_units(outcome.model)
            << " weights=" << netlines::weight_count(outcome.model) << '\n';
  std::cout << "weight updates: kept=" << kept << " total=" << total
            << " (total includes dropped output units)\n";
}

void print_summary(const netlines::EvalSummary& summary) {
  std::printf("runs=%zu\n", summary.runs.size());
  std::printf("eps_t mean=%.6f\n", summary.mean_train_error());
  std::printf("eps_g mean=%.6f stddev=%.6f\n", summary.mean_test_error(),
              summary.stddev_test_error());
  std::printf("hidden mean=%.2f weights mean=%.2f\n", summary.mean_hidden(),
              summary.mean_weights());
  if (!summary.runs.empty() && !summary.runs.front().per_ton_test_error.empty()) {
    std::printf("per-ton eps_g mean=%.6f\n", summary.mean_per_ton_error());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw netlines::IoError("cannot write " + path);
  out << text;
  if (!out) throw netlines::IoError("failed writing " + path);
}

int run(int argc, char** argv) {
  CLI::App app{"netlines: constructive threshold-unit classifiers"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "write a synthetic benchmark CSV");
  std::string gen_kind, gen_out;
  int gen_n = 0;
  double gen_k = 3.0;
  std::size_t gen_p = 0;
  std::uint64_t gen_seed = 0;
  double gen_noise = 1.0;
  gen->add_option("generator", gen_kind, "parity, clumps or waveforms")
      ->required()
      ->check(CLI::IsMember({"parity", "clumps", "waveforms"}));
  gen->add_option("--n", gen_n, "bit count");
  gen->add_option("--k", gen_k, "clump density parameter");
  gen->add_option("--p", gen_p, "pattern count");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--noise", gen_noise, "waveform noise level");
  gen->add_option("--out", gen_out, "output CSV path")->required();

  // ---- train --------------------------------------------------------------
  auto* train = app.add_subcommand("train", "grow a classifier and save it");
  SharedFlags train_flags;
  std::string train_data, train_out;
  bool train_monks = false;
  train->add_option("--data", train_data, "training CSV")->required();
  train->add_flag("--monks", train_monks, "read --data in UCI monks format");
  train->add_option("--out", train_out, "model output path")->required();
  add_shared_flags(train, train_flags);

  // ---- predict ------------------------------------------------------------
  auto* predict_cmd = app.add_subcommand("predict", "classify each CSV row");
  std::string pred_model, pred_data, pred_out;
  bool pred_monks = false;
  double pred_confidence = 0.0;
  predict_cmd->add_option("--model", pred_model, "model path")->required();
  predict_cmd->add_option("--data", pred_data, "input CSV")->required();
  predict_cmd->add_flag("--monks", pred_monks, "read --data in UCI monks format");
  predict_cmd->add_option("--confidence", pred_confidence,
                          "emit per-unit confidences at this temperature");
  predict_cmd->add_option("--out", pred_out, "write predictions here instead of stdout");

  // ---- eval ---------------------------------------------------------------
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a model or a protocol");
  SharedFlags eval_flags;
  std::string eval_model, eval_data, eval_test, eval_report;
  bool eval_monks = false, eval_test_monks = false, eval_loo = false;
  std::size_t eval_holdout = 0;
  int eval_repeats = 1;
  eval_cmd->add_option("--model", eval_model, "evaluate this saved model");
  eval_cmd->add_option("--data", eval_data, "dataset CSV")->required();
  eval_cmd->add_flag("--monks", eval_monks, "read --data in UCI monks format");
  eval_cmd->add_option("--test", eval_test, "fixed test set CSV");
  eval_cmd->add_flag("--test-monks", eval_test_monks,
                     "read --test in UCI monks format");
  eval_cmd->add_option("--holdout", eval_holdout,
                       "train on this many randomly drawn patterns per run");
  eval_cmd->add_option("--repeats", eval_repeats, "holdout repetitions");
  eval_cmd->add_flag("--loo", eval_loo, "leave-one-out over the dataset");
  eval_cmd->add_option("--report", eval_report, "write per-run CSV here");
  add_shared_flags(eval_cmd, eval_flags);

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    netlines::Dataset data;
    if (gen_kind == "parity") {
      data = netlines::gen_parity(gen_n);
    } else if (gen_kind == "clumps") {
      data = netlines::gen_clumps(gen_n, gen_k, gen_p, gen_seed);
    } else {
      data = netlines::gen_waveforms(gen_p, gen_seed, gen_noise);
    }
    netlines::save_csv(data, gen_out);
    print_class_balance(data);
    std::cout << "written to " << gen_out << '\n';
    return 0;
  }

  if (train->parsed()) {
    const netlines::Dataset data = load_dataset(train_data, train_monks);
    print_class_balance(data);
    const netlines::TrainSpec spec = make_spec(train_flags, data);
    const netlines::TrainOutcome outcome = netlines::train_model(data, spec);
    print_training_log(outcome);
    netlines::save_model(outcome.model, train_out);
    std::cout << "model written to " << train_out << '\n';
    return 0;
  }

  if (predict_cmd->parsed()) {
    const netlines::Model model = netlines::load_model(pred_model);
    const netlines::Dataset data = load_dataset(pred_data, pred_monks);
    std::ostringstream out;
    for (const netlines::Pattern& p : data.patterns()) {
      out << netlines::predict(model, p.features);
      if (pred_confidence > 0.0) {
        for (const netlines::NetLinesNetwork* net : netlines::model_networks(model)) {
          const auto row = netlines::augment(p.features);
          for (const auto& unit : net->hidden) {
            out << ',' << netlines::format_double(
                              netlines::confidence(unit, row, pred_confidence));
          }
        }
      }
      out << '\n';
    }
    if (pred_out.empty()) {
      std::cout << out.str();
    } else {
      write_text(pred_out, out.str());
    }
    return 0;
  }

  // eval
  const netlines::Dataset data = load_dataset(eval_data, eval_monks);
  netlines::EvalSummary summary;
  if (!eval_model.empty()) {
    const netlines::Model model = netlines::load_model(eval_model);
    const netlines::Dataset& target = data;
    netlines::RunResult r;
    r.run_id = 0;
    r.train_size = 0;
    r.test_size = target.size();
    r.hidden_total = netlines::total_hidden_units(model);
    r.weights = netlines::weight_count(model);
    r.test_error = netlines::error_fraction(model, target);
    r.train_error = r.test_error;
    summary.runs.push_back(r);
    std::printf("eps=%.6f (%zu patterns, %zu wrong)\n", r.test_error, target.size(),
                static_cast<std::size_t>(r.test_error * target.size() + 0.5));
  } else {
    const netlines::TrainSpec spec = make_spec(eval_flags, data);
    std::optional<netlines::Dataset> fixed;
    if (!eval_test.empty()) fixed = load_dataset(eval_test, eval_test_monks);
    if (eval_loo) {
      summary = netlines::loo_eval(data, spec);
    } else if (eval_holdout > 0) {
      summary = netlines::holdout_eval(data, eval_holdout, eval_repeats, fixed, spec);
    } else if (fixed) {
      summary = netlines::fixed_eval(data, *fixed, spec);
    } else {
      throw netlines::Error("pick --loo, --holdout P or --test FILE");
    }
    print_summary(summary);
  }
  if (!eval_report.empty()) {
    write_text(eval_report, netlines::report_csv(summary));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const netlines::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const netlines::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const netlines::FallbackExhausted& e) {
    std::cerr << "training error: " << e.what() << '\n';
    return kExitTraining;
  } catch (const netlines::ConflictingLabels& e) {
    std::cerr << "training error: " << e.what() << '\n';
    return kExitTraining;
  } catch (const netlines::DegenerateClass& e) {
    std::cerr << "training error: " << e.what() << '\n';
    return kExitTraining;
  } catch (const netlines::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}
