#include "diagrw/label.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace diagrw {

std::string to_string(const Label& label) {
  if (label.params.empty()) return label.name;
  std::ostringstream os;
  os << label.name << '(';
  for (std::size_t i = 0; i < label.params.size(); ++i) {
    if (i) os << ',';
    os << label.params[i];
  }
  os << ')';
  return os.str();
}

LabelEquiv exact_label_equiv() {
  return [](const Label& a, const Label& b) { return a == b; };
}

LabelEquiv phase_label_equiv(double tolerance) {
  return [tolerance](const Label& a, const Label& b) {
    if (a.name != b.name || a.params.size() != b.params.size()) return false;
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < a.params.size(); ++i) {
      double r = std::remainder(a.params[i] - b.params[i], kTwoPi);
      if (std::abs(r) > tolerance) return false;
    }
    return true;
  };
}

}  // namespace diagrw
