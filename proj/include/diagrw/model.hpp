#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "diagrw/tensor.hpp"

namespace diagrw {

/// Fixed complex tensors for named generators, as stored in a model
/// manifest:
///
///   {"index_size": 2, "tolerance": 1e-9,
///    "generators": {"h": {"inputs": 1, "outputs": 1, "entries": [[re, im], ...]}}}
///
/// Entries are row-major as in Tensor.
struct TensorModel {
  IndexSet index{2};
  ComplexField field{};
  std::map<std::string, Tensor<ComplexField>> generators;

  /// Looks generators up by label name. Throws InterpretationError for an
  /// unknown name or a size other than the stored one.
  Interpretation<ComplexField> interpretation() const;
};

/// Throws nlohmann::json::exception or ShapeError on malformed input.
TensorModel model_from_json(const nlohmann::json& j);
nlohmann::json to_json(const TensorModel& model);

}  // namespace diagrw
