#pragma once

// System descriptors for the block-Hermitian model. A system is an ordered
// list of superselection-block dimensions (n_1, ..., n_k); states and effects
// live in the direct sum of the k complex Hermitian matrix spaces.

#include <string>
#include <vector>

namespace jordanopt {

struct SystemSpec {
  std::vector<int> blocks;

  SystemSpec() = default;
  explicit SystemSpec(std::vector<int> dims);

  // Number of superselection blocks.
  int block_count() const { return static_cast<int>(blocks.size()); }

  // Rank: total number of perfectly distinguishable pure states, sum of the
  // block dimensions.
  int rank() const;

  // Linear dimension of the state space, sum of squared block dimensions.
  long long dim() const;

  int block_dim(int l) const { return blocks.at(static_cast<size_t>(l)); }

  bool operator==(const SystemSpec& o) const { return blocks == o.blocks; }
  bool operator!=(const SystemSpec& o) const { return !(*this == o); }

  std::string to_string() const;

  // Parses a comma-separated dimension list such as "1,2" or "3". Throws
  // std::invalid_argument on malformed input or non-positive dimensions.
  static SystemSpec parse(const std::string& text);
};

}  // namespace jordanopt
