#pragma once

#include "modeseek/density.hpp"

#include <filesystem>

namespace modeseek {

// Reads one sample per line. Blank lines and lines whose first non-blank
// character is '#' are skipped. Parse failures name the 1-based line number;
// an input with no samples is an error.
SampleSet load_samples(const std::filesystem::path& path);

// Writes one sample per line with 17 significant digits, so a load_samples
// round trip reproduces the set value-for-value.
void write_samples(const std::filesystem::path& path, const SampleSet& samples);

} // namespace modeseek
