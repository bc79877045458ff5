#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "sphtopo/harmonics.hpp"

namespace sphtopo::io {

/// Library version string embedded in sidecar files.
std::string library_version();

/// JSON object {"degree": ell, "seed": s, "coefficients": [...]}.
/// The seed is written as an unsigned 64-bit integer.
std::string field_to_json(const RandomEigenfunction& field);
/// Throws IoError on malformed input or wrong coefficient count.
RandomEigenfunction field_from_json(const std::string& text);

void save_field(const std::filesystem::path& path, const RandomEigenfunction& field);
RandomEigenfunction load_field(const std::filesystem::path& path);

/// Whole-file helpers; throw IoError.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace sphtopo::io
