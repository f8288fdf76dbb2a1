#include "diagrw/model.hpp"

namespace diagrw {

Interpretation<ComplexField> TensorModel::interpretation() const {
  return [gens = generators](const Label& label, std::size_t n, std::size_t m) {
    auto it = gens.find(label.name);
    if (it == gens.end()) throw InterpretationError("model has no tensor for '" + label.name + "'");
    if (it->second.inputs() != n || it->second.outputs() != m) {
      throw InterpretationError("model tensor for '" + label.name + "' is " + std::to_string(it->second.inputs()) +
                                " -> " + std::to_string(it->second.outputs()) + ", requested " + std::to_string(n) +
                                " -> " + std::to_string(m));
    }
    return it->second;
  };
}

TensorModel model_from_json(const nlohmann::json& j) {
  TensorModel model;
  model.index = IndexSet(j.value("index_size", std::size_t{2}));
  model.field.tolerance = j.value("tolerance", 1e-9);
  for (const auto& [name, g] : j.at("generators").items()) {
    std::vector<std::complex<double>> entries;
    for (const auto& e : g.at("entries")) {
      if (e.is_number()) {
        entries.emplace_back(e.get<double>(), 0.0);
      } else {
        entries.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
      }
    }
    model.generators.emplace(name, Tensor<ComplexField>(g.at("inputs").get<std::size_t>(),
                                                        g.at("outputs").get<std::size_t>(), model.index,
                                                        model.field, std::move(entries)));
  }
  return model;
}

nlohmann::json to_json(const TensorModel& model) {
  nlohmann::json gens = nlohmann::json::object();
  for (const auto& [name, t] : model.generators) {
    auto entries = nlohmann::json::array();
    for (const auto& z : t.entries()) entries.push_back({z.real(), z.imag()});
    gens[name] = {{"inputs", t.inputs()}, {"outputs", t.outputs()}, {"entries", std::move(entries)}};
  }
  return {{"index_size", model.index.size()}, {"tolerance", model.field.tolerance}, {"generators", std::move(gens)}};
}

}  // namespace diagrw
