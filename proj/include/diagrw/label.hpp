#pragma once

#include <functional>
#include <string>
#include <vector>

namespace diagrw {

/// Generator label carried by a hyperedge or a generator term.
///
/// Plain theories only use `name`. Parametric families (ZX spiders, scalar
/// constants) put their real parameters in `params`; how those compare is
/// decided by the theory's LabelEquiv, not by operator==.
struct Label {
  std::string name;
  std::vector<double> params;

  Label() = default;
  Label(std::string n) : name(std::move(n)) {}  // NOLINT(google-explicit-constructor)
  Label(const char* n) : name(n) {}              // NOLINT(google-explicit-constructor)
  Label(std::string n, std::vector<double> p) : name(std::move(n)), params(std::move(p)) {}

  bool operator==(const Label&) const = default;
  auto operator<=>(const Label&) const = default;
};

std::string to_string(const Label& label);

/// Equivalence relation on labels supplied per theory.
using LabelEquiv = std::function<bool(const Label&, const Label&)>;

/// Exact equality of name and parameters.
LabelEquiv exact_label_equiv();

/// Same name; parameters compared modulo 2*pi within `tolerance`.
/// Intended for phase-carrying labels.
LabelEquiv phase_label_equiv(double tolerance = 1e-9);

}  // namespace diagrw
