#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

#include "diagrw/model.hpp"
#include "diagrw/tensor.hpp"
#include "diagrw/term.hpp"
#include "diagrw/theory.hpp"

namespace diagrw::zx {

enum class Color { Z, X };

/// Labels: "Z"/"X" with the phase as sole parameter, "H", and "const"
/// with (re, im).
Label spider_label(Color color, double phase = 0.0);
Label hadamard_label();
Label constant_label(std::complex<double> value);

/// Phases compared modulo 2*pi within 1e-9.
LabelEquiv label_equiv();

/// Qubit semantics. A Z spider is 1 on all-zero legs, e^{i phase} on
/// all-one legs and 0 elsewhere; an X spider is a Z spider with a Hadamard
/// on every leg. H is 1/sqrt(2) [[1, 1], [1, -1]] and exists only at 1 -> 1;
/// constants exist only at 0 -> 0. Other arities and unknown labels throw
/// InterpretationError.
Interpretation<ComplexField> interp(double tolerance = 1e-9);

Tensor<ComplexField> spider_tensor(Color color, std::size_t inputs, std::size_t outputs, double phase = 0.0);
Tensor<ComplexField> hadamard_tensor();

Term spider(Color color, std::size_t inputs, std::size_t outputs, double phase = 0.0);
Term hadamard();
Term constant(std::complex<double> value);

/// Z(1->2) * id ; id * X(2->1): control on top.
Term cnot();
/// X(1->2) * id ; id * Z(2->1): control on the bottom.
Term notc();
Term n_wire(std::size_t n);

/// Source of the shipped zx.thy: phase-0 spider instances named
/// z<in><out> / x<in><out>, h, and the scalars half and sqrt2.
std::string_view theory_source();

/// Interpretation of the names used in theory_source().
Interpretation<ComplexField> theory_interp(double tolerance = 1e-9);

/// The generators of theory_source() as fixed tensors; this is zx.json.
TensorModel theory_model();

/// Parses theory_source() and checks every rule against theory_interp().
/// Throws std::runtime_error naming the first rule that fails.
Theory theory();

}  // namespace diagrw::zx
