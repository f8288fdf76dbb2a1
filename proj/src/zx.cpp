#include "diagrw/zx.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diagrw/errors.hpp"
#include "diagrw/parser.hpp"

namespace diagrw::zx {

namespace {

constexpr std::string_view kTheory = R"(theory zx

# Phase-0 spiders at the arities the CNOT proofs use, the Hadamard box,
# and two scalars.
gen z11 : 1 -> 1
gen z12 : 1 -> 2
gen z13 : 1 -> 3
gen z21 : 2 -> 1
gen x11 : 1 -> 1
gen x21 : 2 -> 1
gen x31 : 3 -> 1
gen h : 1 -> 1
gen half : 0 -> 0
gen sqrt2 : 0 -> 0

rule z_wire : z11 = id 1
rule x_wire : x11 = id 1
rule z_fuse : z12 ; z12 * id 1 = z13
rule x_fuse : id 1 * x21 ; x21 = x31
rule hopf : z13 * id 1 ; id 1 * x31 = half * z11 * x11
rule h_involution : h ; h = id 1
rule color_change : h * h ; z21 ; h = x21
rule bialgebra : x21 ; z12 = sqrt2 * (z12 * z12 ; id 1 * sw 1 1 * id 1 ; x21 * x21)

# CNOT ; CNOT is proportional to the identity on two wires.
lemma cnot_cnot : z12 * id 1 ; id 1 * x21 ; z12 * id 1 ; id 1 * x21 = half * id 2
proof
  rw z_fuse
  rw x_fuse
  rw hopf
  rw z_wire
  rw x_wire
  iso
qed
)";

double parity_sign(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  std::size_t ones = 0;
  for (std::size_t v : a) ones += v;
  for (std::size_t v : b) ones += v;
  return ones % 2 == 0 ? 1.0 : -1.0;
}

bool all_equal(std::span<const std::size_t> a, std::span<const std::size_t> b, std::size_t value) {
  for (std::size_t v : a) {
    if (v != value) return false;
  }
  for (std::size_t v : b) {
    if (v != value) return false;
  }
  return true;
}

Tensor<ComplexField> scalar(std::complex<double> c, ComplexField field = {}) {
  return Tensor<ComplexField>(0, 0, IndexSet{2}, field, std::vector<std::complex<double>>{c});
}

Tensor<ComplexField> with_field(const Tensor<ComplexField>& t, ComplexField field) {
  return Tensor<ComplexField>(t.inputs(), t.outputs(), t.index_set(), field,
                              std::vector<std::complex<double>>(t.entries().begin(), t.entries().end()));
}

}  // namespace

Label spider_label(Color color, double phase) { return Label(color == Color::Z ? "Z" : "X", {phase}); }
Label hadamard_label() { return Label("H"); }
Label constant_label(std::complex<double> value) { return Label("const", {value.real(), value.imag()}); }

LabelEquiv label_equiv() { return phase_label_equiv(1e-9); }

Tensor<ComplexField> spider_tensor(Color color, std::size_t inputs, std::size_t outputs, double phase) {
  const std::complex<double> e = std::polar(1.0, phase);
  if (color == Color::Z) {
    return Tensor<ComplexField>(inputs, outputs, IndexSet{2}, ComplexField{}, [&](auto in, auto out) {
      if (all_equal(in, out, 0)) return in.empty() && out.empty() ? 1.0 + e : std::complex<double>(1.0);
      if (all_equal(in, out, 1)) return e;
      return std::complex<double>(0.0);
    });
  }
  const double norm = std::pow(2.0, -0.5 * static_cast<double>(inputs + outputs));
  return Tensor<ComplexField>(inputs, outputs, IndexSet{2}, ComplexField{}, [&](auto in, auto out) {
    return norm * (1.0 + e * parity_sign(in, out));
  });
}

Tensor<ComplexField> hadamard_tensor() {
  const double r = 1.0 / std::numbers::sqrt2;
  return Tensor<ComplexField>(1, 1, IndexSet{2}, ComplexField{}, std::vector<std::complex<double>>{r, r, r, -r});
}

Interpretation<ComplexField> interp(double tolerance) {
  const ComplexField field{tolerance};
  return [field](const Label& label, std::size_t n, std::size_t m) {
    if ((label.name == "Z" || label.name == "X") && label.params.size() == 1) {
      return with_field(spider_tensor(label.name == "Z" ? Color::Z : Color::X, n, m, label.params[0]), field);
    }
    if (label.name == "H" && label.params.empty()) {
      if (n != 1 || m != 1) throw InterpretationError("the Hadamard box exists only at 1 -> 1");
      return with_field(hadamard_tensor(), field);
    }
    if (label.name == "const" && label.params.size() == 2) {
      if (n != 0 || m != 0) throw InterpretationError("constants exist only at 0 -> 0");
      return scalar({label.params[0], label.params[1]}, field);
    }
    throw InterpretationError("no ZX interpretation for " + to_string(label));
  };
}

Term spider(Color color, std::size_t inputs, std::size_t outputs, double phase) {
  return Term::generator(spider_label(color, phase), inputs, outputs);
}

Term hadamard() { return Term::generator(hadamard_label(), 1, 1); }

Term constant(std::complex<double> value) { return Term::generator(constant_label(value), 0, 0); }

Term cnot() {
  return Term::compose(Term::stack(spider(Color::Z, 1, 2), Term::id(1)),
                       Term::stack(Term::id(1), spider(Color::X, 2, 1)));
}

Term notc() {
  return Term::compose(Term::stack(spider(Color::X, 1, 2), Term::id(1)),
                       Term::stack(Term::id(1), spider(Color::Z, 2, 1)));
}

Term n_wire(std::size_t n) { return Term::id(n); }

std::string_view theory_source() { return kTheory; }

Interpretation<ComplexField> theory_interp(double tolerance) {
  const ComplexField field{tolerance};
  return [field](const Label& label, std::size_t n, std::size_t m) -> Tensor<ComplexField> {
    const std::string& s = label.name;
    if (s.size() == 3 && (s[0] == 'z' || s[0] == 'x') && s[1] >= '0' && s[1] <= '9' && s[2] >= '0' && s[2] <= '9') {
      const auto want_n = static_cast<std::size_t>(s[1] - '0');
      const auto want_m = static_cast<std::size_t>(s[2] - '0');
      if (n != want_n || m != want_m) throw InterpretationError("'" + s + "' used at the wrong arity");
      return with_field(spider_tensor(s[0] == 'z' ? Color::Z : Color::X, n, m), field);
    }
    if (s == "h") return interp(field.tolerance)(hadamard_label(), n, m);
    if (s == "half" && n == 0 && m == 0) return scalar(0.5, field);
    if (s == "sqrt2" && n == 0 && m == 0) return scalar(std::numbers::sqrt2, field);
    throw InterpretationError("no ZX interpretation for '" + s + "' at " + std::to_string(n) + " -> " +
                              std::to_string(m));
  };
}

TensorModel theory_model() {
  auto parsed = load_theory(kTheory);
  TensorModel model;
  auto i = theory_interp();
  for (const auto& [name, arity] : parsed.theory->signature.generators) {
    model.generators.emplace(name, i(Label(name), arity.first, arity.second));
  }
  return model;
}

Theory theory() {
  auto loaded = load_theory(kTheory);
  if (!loaded.theory) throw std::runtime_error("zx theory does not parse: " + to_string(loaded.diagnostics.front()));
  auto i = theory_interp();
  for (const Rule& r : loaded.theory->signature.rules) {
    if (!concrete_model_check<ComplexField>(r.lhs, r.rhs, i)) {
      throw std::runtime_error("zx rule '" + r.name + "' does not hold in the qubit model");
    }
  }
  return std::move(*loaded.theory);
}

}  // namespace diagrw::zx
