#pragma once

#include "labshift/label.hpp"

#include <map>
#include <string>
#include <vector>

namespace labshift {

struct ZooEntry {
  std::string name;
  Label label;
  std::string summary;
  std::map<std::string, std::string> params;
};

std::vector<std::string> zoo_names();
ZooEntry zoo_get(const std::string& name,
                 const std::map<std::string, std::string>& params = {});

// at most one unit across the listed coordinates
Label unit_label(const std::vector<int>& l_set);
Label unit_label_all();
// all 0/1 vectors on the listed coordinates: a sublattice, flat
Label indicator_label(const std::vector<int>& l_set);
Label indicator_label_all();

// The transitive patchwork: every finite label, pushed onto its own block of
// coordinates, one block after another in a fixed enumeration.
struct PermexBlock {
  long long start = 0;  // first coordinate of the block
  int len = 0;
  Label block_label;    // the finite label before pushing
};
// enumerated prefix covering coordinates [1..cover]
std::vector<PermexBlock> permex_blocks(long long cover);

struct ZooCheckRow {
  std::string entry;
  std::string tag;
  Verdict expected = Verdict::inconclusive;
  PropertyReport got;
  bool ok = false;  // matches, or stayed inconclusive (semi-decidable tag)
};

struct ZooVerifyReport {
  std::vector<ZooCheckRow> rows;
  bool all_ok = true;
  long long checked = 0;
  long long inconclusive = 0;
};

// Runs every declared expectation through the property checker at the given
// window; a tag may come back inconclusive but never contradicted.
ZooVerifyReport zoo_verify(int n, int horizon);

}  // namespace labshift
