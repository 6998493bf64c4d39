#include "labshift/partition.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace labshift {

PartitionScheme default_partition() {
  PartitionScheme p;
  p.name = "dyadic";
  p.support_map = [](long long n) {
    if (n <= 0) throw std::invalid_argument("support_map needs n >= 1");
    int l = 1;
    while (n % 2 == 0) {
      n /= 2;
      ++l;
    }
    return l;
  };
  p.block = [](int l, long long i) {
    if (l < 1 || i < 1) throw std::invalid_argument("block needs l, i >= 1");
    return (1LL << (l - 1)) * (2 * i - 1);
  };
  return p;
}

PartitionScheme partition_by_name(const std::string& name) {
  if (name == "dyadic" || name == "default") return default_partition();
  throw std::invalid_argument("unknown partition scheme: " + name);
}

PartitionCheck verify_prefix(const PartitionScheme& p, long long n_max) {
  PartitionCheck out;
  std::ostringstream oss;
  // cursor per block: next unvisited index and its value
  std::map<int, std::pair<long long, long long>> cursor;
  int max_l = 0;
  for (long long n = 1; n <= n_max; ++n) {
    int l = p.support_map(n);
    if (l < 1) {
      oss << "support_map(" << n << ") = " << l << " < 1";
      return {false, oss.str()};
    }
    max_l = std::max(max_l, l);
    auto it = cursor.find(l);
    if (it == cursor.end())
      it = cursor.emplace(l, std::make_pair(1LL, p.block(l, 1))).first;
    auto& [idx, val] = it->second;
    while (val < n) {
      long long next = p.block(l, idx + 1);
      if (next <= val) {
        oss << "block " << l << " not increasing at index " << idx + 1;
        return {false, oss.str()};
      }
      ++idx;
      val = next;
    }
    if (val != n) {
      oss << n << " claims block " << l << " but that block skips it";
      return {false, oss.str()};
    }
    if (p.support_map(val) != l) {
      oss << "block(" << l << ", " << idx << ") = " << val
          << " maps back to block " << p.support_map(val);
      return {false, oss.str()};
    }
    ++idx;
    val = p.block(l, idx);
  }
  for (int l = 1; l < max_l; ++l) {
    if (p.block(l, 1) >= p.block(l + 1, 1)) {
      oss << "leading members out of order at blocks " << l << ", " << l + 1;
      return {false, oss.str()};
    }
  }
  oss << "partition verified on [1.." << n_max << "], " << max_l
      << " blocks touched";
  out.detail = oss.str();
  return out;
}

}  // namespace labshift
