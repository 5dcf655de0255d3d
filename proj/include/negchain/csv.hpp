#ifndef NEGCHAIN_CSV_HPP
#define NEGCHAIN_CSV_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace negchain {

// One CSV cell; doubles are printed with 12 significant digits.
using CsvCell = std::variant<long long, double, std::string>;
using CsvRow = std::vector<CsvCell>;

struct CsvSchema {
    std::string name;
    std::vector<std::string> columns;
    int version = 1;
};

std::string format_significant(double value);  // %.12g

// Renders the file content: schema/version comment, units comment, header
// row, then data rows. LF line endings, deterministic order.
std::string render_csv(const CsvSchema& schema, const std::vector<CsvRow>& rows);

// Writes render_csv output to disk; throws IoError on failure.
void emit_csv(const std::string& path, const CsvSchema& schema, const std::vector<CsvRow>& rows);

// FNV-1a hash of a string, for config fingerprints in sidecar metadata.
std::uint64_t fnv1a_hash(const std::string& text);

} // namespace negchain

#endif
