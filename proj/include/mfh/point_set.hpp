#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mfh {

/// Subset of the points of a finite space, as a bitset over point indices.
using PointSet = boost::dynamic_bitset<std::uint64_t>;

inline PointSet make_point_set(std::size_t universe, const std::vector<std::size_t>& members) {
  PointSet s(universe);
  for (auto m : members) s.set(m);
  return s;
}

inline std::vector<std::size_t> to_indices(const PointSet& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

}  // namespace mfh
