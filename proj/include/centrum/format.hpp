#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace centrum {

// Fixed 4-decimal rendering for every floating-point report cell. Negative
// zero is folded into "0.0000" so reruns stay byte-identical.
std::string format_f4(double v);

// Percentage (0..100) of num over den, 4 decimals; empty string when the
// denominator is zero.
std::string format_pct(std::int64_t num, std::int64_t den);

// num / den with 4 decimals; empty string when den is zero.
std::string format_ratio(std::int64_t num, std::int64_t den);

// RFC-4180 quoting for a single CSV field. Only quotes when the field
// contains a comma, quote, or newline (author names routinely contain
// commas).
std::string csv_field(std::string_view s);

// Double-quoted DOT string with escaped quotes and backslashes.
std::string dot_quote(std::string_view s);

// FNV-1a over a byte string, used for run-manifest config hashes.
std::uint64_t fnv1a64(std::string_view s);

}  // namespace centrum
