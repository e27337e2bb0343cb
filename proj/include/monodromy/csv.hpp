#pragma once

// Deterministic CSV serialization of a sweep.  Numbers carry 12 significant
// digits; identical configurations produce byte-identical files.

#include <ostream>
#include <string>

#include "monodromy/spectrum.hpp"

namespace monodromy {

// %.12g rendering used for every numeric CSV field.
std::string format_sig12(double v);

extern const char* const kSweepCsvHeader;

void write_sweep_csv(const Spectrum& spectrum, std::ostream& out);
std::string sweep_csv_string(const Spectrum& spectrum);

} // namespace monodromy
