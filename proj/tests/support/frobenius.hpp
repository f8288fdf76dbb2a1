#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "diagrw/parser.hpp"
#include "diagrw/tensor.hpp"

namespace diagrw::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string theory_path(const std::string& file) { return std::string(DIAGRW_SOURCE_DIR) + "/theories/" + file; }

inline Theory load(const std::string& file) {
  auto r = load_theory(read_file(theory_path(file)));
  if (!r.theory) throw std::runtime_error("theory " + file + " does not load");
  return *r.theory;
}

/// Copy/delete with merge/create over {0,1}: every generator is 1 exactly
/// when all its legs agree (u and v are all-ones).
inline Interpretation<IntegerRing> frobenius_model() {
  return [](const Label& label, std::size_t n, std::size_t m) {
    static const std::map<std::string, std::pair<std::size_t, std::size_t>> arity{
        {"m", {2, 1}}, {"u", {0, 1}}, {"n", {1, 2}}, {"v", {1, 0}}};
    auto it = arity.find(label.name);
    if (it == arity.end() || it->second != std::pair{n, m}) throw InterpretationError("not in the model");
    return Tensor<IntegerRing>(n, m, IndexSet{2}, IntegerRing{}, [](auto in, auto out) -> std::int64_t {
      std::size_t first = in.empty() ? out[0] : in[0];
      for (auto x : in) if (x != first) return 0;
      for (auto x : out) if (x != first) return 0;
      return 1;
    });
  };
}

}  // namespace diagrw::testing
