#pragma once

#include <string>
#include <string_view>

namespace innercore {

// Writes content to a temp file in the target directory, then renames it over
// the destination, so readers never observe a partial file.
void atomic_write_file(const std::string& path, std::string_view content);

std::string format_fixed(double v, int digits);

// Quotes a CSV field only when it needs it.
std::string csv_field(std::string_view s);

std::string utc_now_iso8601();

}  // namespace innercore
