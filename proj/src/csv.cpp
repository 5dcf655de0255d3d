#include "negchain/csv.hpp"

#include <cstdio>
#include <fstream>

#include "negchain/errors.hpp"

namespace negchain {

std::string format_significant(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::string render_csv(const CsvSchema& schema, const std::vector<CsvRow>& rows) {
    std::string out;
    out += "# negchain " + schema.name + " schema_version=" + std::to_string(schema.version) +
           "\n";
    out += "# natural units hbar=kB=1\n";
    for (std::size_t i = 0; i < schema.columns.size(); ++i) {
        if (i) out += ',';
        out += schema.columns[i];
    }
    out += '\n';
    for (const CsvRow& row : rows) {
        if (row.size() != schema.columns.size())
            throw IoError("csv row width does not match schema '" + schema.name + "'");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            if (const auto* v = std::get_if<long long>(&row[i]))
                out += std::to_string(*v);
            else if (const auto* d = std::get_if<double>(&row[i]))
                out += format_significant(*d);
            else
                out += std::get<std::string>(row[i]);
        }
        out += '\n';
    }
    return out;
}

void emit_csv(const std::string& path, const CsvSchema& schema, const std::vector<CsvRow>& rows) {
    const std::string content = render_csv(schema, rows);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << content;
    if (!file) throw IoError("write failed for '" + path + "'");
}

std::uint64_t fnv1a_hash(const std::string& text) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

} // namespace negchain
