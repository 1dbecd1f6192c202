#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qseries/ring.hpp"

namespace qseries {

/// Exact values p_k(0..max_n). k = 0 denotes the ordinary partition function.
///
/// Built by dynamic programming over part sizes only; nothing here goes
/// through the series engine, so the tables can serve as an oracle for it.
struct PartitionTable {
  std::uint64_t k = 0;
  std::size_t max_n = 0;
  std::vector<BigInt> values;

  const BigInt& operator[](std::size_t n) const { return values.at(n); }
};

/// p(0..max_n): for each part size l, values[n] += values[n - l] in increasing n.
PartitionTable partition_table(std::size_t max_n);

/// p_k(0..max_n): parts of the first color are any positive integer, parts of
/// the second color are multiples of k.
PartitionTable two_color_table(std::uint64_t k, std::size_t max_n);

/// Same as above, reusing an ordinary table (k = 0) for the first color.
/// Only entries up to max_n are computed, so `base.max_n` must cover it.
PartitionTable two_color_table(const PartitionTable& base, std::uint64_t k, std::size_t max_n);

}  // namespace qseries
