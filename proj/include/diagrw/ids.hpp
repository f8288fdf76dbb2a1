#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>

namespace diagrw {

/// Positive integer identifier, tagged so vertex and edge ids do not mix.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}

  constexpr auto operator<=>(const Id&) const = default;

  constexpr Id next() const { return Id(value + 1); }
};

template <class Tag>
std::ostream& operator<<(std::ostream& os, Id<Tag> id) {
  return os << id.value;
}

struct VertexTag;
struct EdgeTag;

using VertexId = Id<VertexTag>;
using EdgeId = Id<EdgeTag>;

}  // namespace diagrw

template <class Tag>
struct std::hash<diagrw::Id<Tag>> {
  std::size_t operator()(diagrw::Id<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
