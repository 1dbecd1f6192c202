#include "qseries/partitions.hpp"

#include <stdexcept>
#include <string>

namespace qseries {

namespace {

// Allows every multiple of `part` as a part size: the unbounded-knapsack pass.
void add_part(std::vector<BigInt>& values, std::size_t part) {
  for (std::size_t n = part; n < values.size(); ++n) {
    mpz_add(values[n].get_mpz_t(), values[n].get_mpz_t(), values[n - part].get_mpz_t());
  }
}

}  // namespace

PartitionTable partition_table(std::size_t max_n) {
  PartitionTable table{0, max_n, std::vector<BigInt>(max_n + 1)};
  table.values[0] = 1;
  for (std::size_t part = 1; part <= max_n; ++part) add_part(table.values, part);
  return table;
}

PartitionTable two_color_table(const PartitionTable& base, std::uint64_t k, std::size_t max_n) {
  if (k == 0) throw std::invalid_argument("two_color_table: k must be positive");
  if (base.k != 0) {
    throw std::invalid_argument("two_color_table: base table must hold ordinary partitions");
  }
  if (base.max_n < max_n) {
    throw std::invalid_argument("two_color_table: base table stops at " +
                                std::to_string(base.max_n) + ", need " + std::to_string(max_n));
  }
  PartitionTable table{k, max_n,
                       std::vector<BigInt>(base.values.begin(),
                                           base.values.begin() +
                                               static_cast<std::ptrdiff_t>(max_n + 1))};
  for (std::uint64_t part = k; part <= max_n; part += k) add_part(table.values, part);
  return table;
}

PartitionTable two_color_table(std::uint64_t k, std::size_t max_n) {
  if (k == 0) throw std::invalid_argument("two_color_table: k must be positive");
  return two_color_table(partition_table(max_n), k, max_n);
}

}  // namespace qseries
