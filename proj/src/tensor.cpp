#include "diagrw/tensor.hpp"

#include <bit>
#include <cstring>

namespace diagrw {

double max_abs_difference(const Tensor<ComplexField>& a, const Tensor<ComplexField>& b) {
  if (a.inputs() != b.inputs() || a.outputs() != b.outputs() || !(a.index_set() == b.index_set())) {
    throw ShapeError("max_abs_difference on tensors of different shape");
  }
  double worst = 0.0;
  auto x = a.entries();
  auto y = b.entries();
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  return worst;
}

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t v) { return splitmix64(h ^ splitmix64(v)); }

}  // namespace

std::uint64_t random_entry(std::uint64_t seed, const Label& label, std::span<const std::size_t> in,
                           std::span<const std::size_t> out) {
  std::uint64_t h = mix(splitmix64(seed), fnv1a(label.name));
  for (double p : label.params) h = mix(h, std::bit_cast<std::uint64_t>(p));
  h = mix(h, in.size());
  h = mix(h, out.size());
  for (std::size_t v : in) h = mix(h, v);
  h = mix(h, 0xffffULL);
  for (std::size_t v : out) h = mix(h, v);
  return h;
}

Interpretation<ModPrimeField> random_interpretation(std::uint64_t seed, IndexSet index, ModPrimeField field) {
  return [seed, index, field](const Label& label, std::size_t n, std::size_t m) {
    return Tensor<ModPrimeField>(n, m, index, field, [&](auto in, auto out) {
      return random_entry(seed, label, in, out) % field.modulus;
    });
  };
}

}  // namespace diagrw
