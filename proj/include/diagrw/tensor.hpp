#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diagrw/errors.hpp"
#include "diagrw/label.hpp"
#include "diagrw/semiring.hpp"

namespace diagrw {

/// Finite index set {0, ..., size-1} summed over during contraction.
class IndexSet {
 public:
  explicit IndexSet(std::size_t size = 2) : size_(size) {
    if (size == 0) throw std::invalid_argument("index set must be nonempty");
  }
  std::size_t size() const { return size_; }
  bool operator==(const IndexSet&) const = default;

 private:
  std::size_t size_;
};

namespace detail {

// Upper bound on dense table size; desk-scale only.
inline constexpr std::size_t kMaxTensorEntries = std::size_t{1} << 26;

inline std::size_t checked_power(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (r > kMaxTensorEntries / base) throw ShapeError("tensor too large for dense representation");
    r *= base;
  }
  return r;
}

// Writes the base-d digits of `flat` (most significant first) into `out`.
inline void decode_index(std::size_t flat, std::size_t d, std::span<std::size_t> out) {
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = flat % d;
    flat /= d;
  }
}

inline std::size_t encode_index(std::span<const std::size_t> digits, std::size_t d) {
  std::size_t flat = 0;
  for (std::size_t v : digits) {
    if (v >= d) throw std::out_of_range("index value outside index set");
    flat = flat * d + v;
  }
  return flat;
}

}  // namespace detail

/// Dense tensor with `inputs()` lower and `outputs()` upper indices.
///
/// Entries are stored row-major: the input multi-index selects the row,
/// the output multi-index the column, first index most significant.
/// Immutable once built.
template <Semiring S>
class Tensor {
 public:
  using value_type = typename S::value_type;
  using MultiIndex = std::span<const std::size_t>;

  Tensor(std::size_t inputs, std::size_t outputs, IndexSet index, S semiring, std::vector<value_type> entries)
      : inputs_(inputs), outputs_(outputs), index_(index), semiring_(std::move(semiring)) {
    rows_ = detail::checked_power(index_.size(), inputs_);
    cols_ = detail::checked_power(index_.size(), outputs_);
    if (rows_ > detail::kMaxTensorEntries / cols_) throw ShapeError("tensor too large for dense representation");
    if (entries.size() != rows_ * cols_) {
      throw ShapeError("tensor entry count " + std::to_string(entries.size()) + " does not match shape " +
                       std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    entries_ = std::move(entries);
  }

  /// Builds the table by evaluating `entry(in, out)` at every index pair.
  template <class Fn>
    requires std::invocable<Fn&, MultiIndex, MultiIndex>
  Tensor(std::size_t inputs, std::size_t outputs, IndexSet index, S semiring, Fn&& entry)
      : Tensor(inputs, outputs, index, semiring, tabulate(inputs, outputs, index, entry)) {}

  static Tensor zeros(std::size_t inputs, std::size_t outputs, IndexSet index, S semiring) {
    std::size_t n = detail::checked_power(index.size(), inputs + outputs);
    return Tensor(inputs, outputs, index, semiring, std::vector<value_type>(n, semiring.zero()));
  }

  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return outputs_; }
  const IndexSet& index_set() const { return index_; }
  const S& semiring() const { return semiring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const value_type& at(MultiIndex in, MultiIndex out) const {
    if (in.size() != inputs_ || out.size() != outputs_) throw ShapeError("multi-index length does not match tensor arity");
    return entries_[detail::encode_index(in, index_.size()) * cols_ + detail::encode_index(out, index_.size())];
  }
  const value_type& at(std::initializer_list<std::size_t> in, std::initializer_list<std::size_t> out) const {
    return at(MultiIndex(in.begin(), in.size()), MultiIndex(out.begin(), out.size()));
  }
  const value_type& at_flat(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }

  std::span<const value_type> entries() const { return entries_; }

 private:
  template <class Fn>
  static std::vector<value_type> tabulate(std::size_t inputs, std::size_t outputs, const IndexSet& index,
                                          Fn& entry) {
    const std::size_t d = index.size();
    const std::size_t rows = detail::checked_power(d, inputs);
    const std::size_t cols = detail::checked_power(d, outputs);
    std::vector<value_type> table;
    table.reserve(rows * cols);
    std::vector<std::size_t> in(inputs), out(outputs);
    for (std::size_t r = 0; r < rows; ++r) {
      detail::decode_index(r, d, in);
      for (std::size_t c = 0; c < cols; ++c) {
        detail::decode_index(c, d, out);
        table.push_back(static_cast<value_type>(entry(MultiIndex(in), MultiIndex(out))));
      }
    }
    return table;
  }

  std::size_t inputs_;
  std::size_t outputs_;
  IndexSet index_;
  S semiring_;
  std::size_t rows_ = 1;
  std::size_t cols_ = 1;
  std::vector<value_type> entries_;
};

/// A tensor at every size (n, m). Fixed-size tensors lift by returning zero
/// elsewhere; generator formulas compute each size on demand.
template <Semiring S>
using DimensionlessTensor = std::function<Tensor<S>(std::size_t inputs, std::size_t outputs)>;

/// Assigns each generator label a tensor at the requested size.
/// Throws InterpretationError for labels it does not cover.
template <Semiring S>
using Interpretation = std::function<Tensor<S>(const Label& label, std::size_t inputs, std::size_t outputs)>;

template <Semiring S>
Tensor<S> delta(std::size_t n, IndexSet index = IndexSet{}, S semiring = S{}) {
  return Tensor<S>(n, n, index, semiring, [&](auto in, auto out) {
    return std::equal(in.begin(), in.end(), out.begin(), out.end()) ? semiring.one() : semiring.zero();
  });
}

template <Semiring S>
Tensor<S> contract(const Tensor<S>& t, const Tensor<S>& g) {
  if (t.outputs() != g.inputs()) {
    throw ShapeError("cannot contract " + std::to_string(t.inputs()) + "->" + std::to_string(t.outputs()) + " with " +
                     std::to_string(g.inputs()) + "->" + std::to_string(g.outputs()));
  }
  if (!(t.index_set() == g.index_set())) throw ShapeError("contracting tensors over different index sets");
  const S& s = t.semiring();
  const std::size_t rows = t.rows(), inner = t.cols(), cols = g.cols();
  std::vector<typename S::value_type> out(rows * cols, s.zero());
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < inner; ++j) {
      const auto& a = t.at_flat(i, j);
      for (std::size_t k = 0; k < cols; ++k) {
        auto& slot = out[i * cols + k];
        slot = s.add(slot, s.mul(a, g.at_flat(j, k)));
      }
    }
  }
  return Tensor<S>(t.inputs(), g.outputs(), t.index_set(), s, std::move(out));
}

template <Semiring S>
Tensor<S> tensor_product(const Tensor<S>& t, const Tensor<S>& g) {
  if (!(t.index_set() == g.index_set())) throw ShapeError("product of tensors over different index sets");
  const S& s = t.semiring();
  const std::size_t cols = t.cols() * g.cols();
  std::vector<typename S::value_type> out(t.rows() * g.rows() * cols);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t k = 0; k < g.rows(); ++k) {
      const std::size_t row = i * g.rows() + k;
      for (std::size_t j = 0; j < t.cols(); ++j) {
        for (std::size_t l = 0; l < g.cols(); ++l) {
          out[row * cols + j * g.cols() + l] = s.mul(t.at_flat(i, j), g.at_flat(k, l));
        }
      }
    }
  }
  return Tensor<S>(t.inputs() + g.inputs(), t.outputs() + g.outputs(), t.index_set(), s, std::move(out));
}

/// Entrywise equivalence under the semiring's test. Tensors of different
/// shape are simply not equivalent.
template <Semiring S>
bool tensor_equiv(const Tensor<S>& t, const Tensor<S>& g) {
  if (t.inputs() != g.inputs() || t.outputs() != g.outputs() || !(t.index_set() == g.index_set())) return false;
  auto a = t.entries();
  auto b = g.entries();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!t.semiring().equiv(a[i], b[i])) return false;
  }
  return true;
}

template <Semiring S>
Tensor<S> scale(const Tensor<S>& t, const typename S::value_type& c) {
  std::vector<typename S::value_type> out(t.entries().begin(), t.entries().end());
  for (auto& v : out) v = t.semiring().mul(c, v);
  return Tensor<S>(t.inputs(), t.outputs(), t.index_set(), t.semiring(), std::move(out));
}

/// Braid on n then m wires: entry(i++j, j'++i') = 1 iff i = i' and j = j'.
template <Semiring S>
Tensor<S> swap_tensor(std::size_t n, std::size_t m, IndexSet index = IndexSet{}, S semiring = S{}) {
  return Tensor<S>(n + m, n + m, index, semiring, [&](auto in, auto out) {
    bool ok = std::equal(in.begin(), in.begin() + n, out.begin() + m, out.end()) &&
              std::equal(in.begin() + n, in.end(), out.begin(), out.begin() + m);
    return ok ? semiring.one() : semiring.zero();
  });
}

/// 0 -> 2n tensor forcing the first n outputs to equal the last n.
template <Semiring S>
Tensor<S> cup_tensor(std::size_t n, IndexSet index = IndexSet{}, S semiring = S{}) {
  return Tensor<S>(0, 2 * n, index, semiring, [&](auto, auto out) {
    return std::equal(out.begin(), out.begin() + n, out.begin() + n, out.end()) ? semiring.one() : semiring.zero();
  });
}

/// 2n -> 0 dual of cup_tensor.
template <Semiring S>
Tensor<S> cap_tensor(std::size_t n, IndexSet index = IndexSet{}, S semiring = S{}) {
  return Tensor<S>(2 * n, 0, index, semiring, [&](auto in, auto) {
    return std::equal(in.begin(), in.begin() + n, in.begin() + n, in.end()) ? semiring.one() : semiring.zero();
  });
}

/// Lifts a fixed-size tensor to every size by returning zero elsewhere.
template <Semiring S>
DimensionlessTensor<S> lift(Tensor<S> t) {
  return [t = std::move(t)](std::size_t n, std::size_t m) {
    if (n == t.inputs() && m == t.outputs()) return t;
    return Tensor<S>::zeros(n, m, t.index_set(), t.semiring());
  };
}

/// Largest entrywise modulus of the difference; complex tensors only.
double max_abs_difference(const Tensor<ComplexField>& a, const Tensor<ComplexField>& b);

/// Seeded pseudo-random scalar for (label, size, entry). Deterministic and
/// platform independent; used to sample interpretations over Z_p.
std::uint64_t random_entry(std::uint64_t seed, const Label& label, std::span<const std::size_t> in,
                           std::span<const std::size_t> out);

/// Interpretation of every label by seeded random tensors over Z_p, for
/// randomized identity testing. Labels are keyed by exact name and parameters.
Interpretation<ModPrimeField> random_interpretation(std::uint64_t seed, IndexSet index = IndexSet{},
                                                    ModPrimeField field = ModPrimeField{});

}  // namespace diagrw
