#pragma once

#include <functional>
#include <string>

namespace labshift {

// Splits the positive integers into infinitely many infinite blocks, one per
// coordinate: support_map(n) names the block holding n, block(l, i) walks
// block l in increasing order (i >= 1).
struct PartitionScheme {
  std::string name;
  std::function<int(long long)> support_map;
  std::function<long long(int, long long)> block;
};

// Dyadic scheme: n lives in block (2-adic valuation + 1), so block l holds
// 2^(l-1) * odd.  block(l, i) = 2^(l-1) * (2i - 1).
PartitionScheme default_partition();

PartitionScheme partition_by_name(const std::string& name);

struct PartitionCheck {
  bool ok = true;
  std::string detail;
};

// Replays the scheme on [1..n_max]: every n is reached by its own block at
// exactly one index, blocks are strictly increasing, and the leading members
// block(l, 1) increase with l.
PartitionCheck verify_prefix(const PartitionScheme& p, long long n_max);

}  // namespace labshift
