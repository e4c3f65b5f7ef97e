#pragma once

#include <iosfwd>

#include "apsp/core.hpp"

namespace apsp {

// Tab-separated matrix with "inf"/"-inf" for the non-finite sentinels.
void write_tsv(std::ostream& out, const WeightMatrix& m);
WeightMatrix read_tsv(std::istream& in);

// Compact dump: magic "APSP", one version byte, n as 8-byte little-endian,
// then row-major 8-byte little-endian entries (the +-inf sentinel values are
// reserved and stored as-is).
void write_dump(std::ostream& out, const WeightMatrix& m);
WeightMatrix read_dump(std::istream& in);

}  // namespace apsp
