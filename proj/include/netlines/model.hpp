#pragma once

#include <string>
#include <vector>

#include "netlines/multiclass.hpp"

namespace netlines {

enum class ModelKind { binary, ton, ensemble, wta };

// Trained classifier of any supported shape plus the per-network standardizer
// echoes kept for provenance (prediction itself runs in user units).
struct Model {
  ModelKind kind = ModelKind::binary;
  std::size_t input_dim = 0;

  int positive_class = 1;   // binary only
  int negative_class = -1;  // binary only
  NetLinesNetwork binary;

  Ton ton;
  TonEnsemble ensemble;
  WtaClassifier wta;

  std::vector<Standardizer> standardizers;  // canonical network order
};

int predict(const Model& m, const std::vector<double>& features);

/// Networks in canonical order: the binary net, the chain, ton-major chains,
/// or the per-class list.
std::vector<const NetLinesNetwork*> model_networks(const Model& m);

std::size_t total_hidden_units(const Model& m);

/// Total parameter count: per network, H*(N+1) hidden weights plus H+1 output
/// weights.
std::size_t weight_count(const Model& m);

std::string model_kind_name(ModelKind kind);

// Line-oriented text format with a version header and full-precision floats;
// save -> load -> save reproduces the file byte for byte.
std::string serialize_model(const Model& m);
Model parse_model(const std::string& text);
void save_model(const Model& m, const std::string& path);
Model load_model(const std::string& path);

}  // namespace netlines
