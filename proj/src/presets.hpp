#pragma once

#include <string>
#include <vector>

#include "io.hpp"

namespace fm {

// Embedded data for the three worked examples.
PolyMatrix example1_transition();  // 5x5 over t
GroupPoly example1_theta();        // Theta(u, t), typed from its printed form
PennerSpec penner62_spec();        // corrected word; see the ledger
GroupPoly magic72_theta();         // over x, y, z

std::vector<std::string> preset_names();

struct ReproduceReport {
  json report;
  bool passed = false;
};

// Runs the full pipeline for a preset and compares against the published
// values with the acceptance tolerances.  Throws on pipeline failure with the
// stage named in the message.
ReproduceReport reproduce(const std::string& preset, int prec);

}  // namespace fm
