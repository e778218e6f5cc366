#include "cli_io.h"

#include "unifrechet/datasets.h"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <sstream>
#include <vector>

namespace uf::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\"");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\"");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::optional<double> parse_number(std::string_view s) {
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    if (!std::isfinite(v)) return std::nullopt;
    return v;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(kUnreadable, fmt::format("cannot read '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw CliError(kUnreadable, fmt::format("error while reading '{}'", path));
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError(kUnreadable, fmt::format("cannot write '{}'", path));
    out << content;
    if (!out) throw CliError(kUnreadable, fmt::format("error while writing '{}'", path));
}

DataSeries ingest_csv(const std::string& path, const std::optional<std::string>& column) {
    const std::string text = read_file(path);
    std::vector<double> values;
    std::optional<std::size_t> col_index;
    if (column) {
        if (auto v = parse_number(*column); v && *v >= 0.0 && std::floor(*v) == *v) {
            col_index = static_cast<std::size_t>(*v);
        }
    }

    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    bool seen_content = false;
    while (std::getline(lines, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split(line);
        const bool first = !seen_content;
        seen_content = true;

        if (first && column && !col_index) {
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (fields[i] == *column) col_index = i;
            }
            if (!col_index) throw CliError(kUsage, fmt::format("{}: no column named '{}'", path, *column));
            continue;
        }
        const std::size_t c = col_index.value_or(0);
        if (c >= fields.size()) {
            throw CliError(kNonNumeric, fmt::format("{}:{}: missing column {}", path, lineno, c));
        }
        const auto v = parse_number(fields[c]);
        if (!v) {
            if (first) continue;  // header
            throw CliError(kNonNumeric, fmt::format("{}:{}: '{}' is not numeric", path, lineno, fields[c]));
        }
        if (!(*v > 0.0 && *v < 1.0)) {
            throw CliError(kOutOfRange, fmt::format("{}:{}: value {} is outside (0,1)", path, lineno, fields[c]));
        }
        values.push_back(*v);
    }
    if (values.empty()) throw CliError(kNoData, fmt::format("{}: no data rows", path));
    return DataSeries(std::move(values), path, path);
}

DataSeries load_input(const std::string& input, const std::optional<std::string>& column) {
    if (input.rfind("bundled:", 0) == 0) {
        if (auto d = bundled_dataset(input)) return *d;
        throw CliError(kUsage, fmt::format("unknown bundled dataset '{}'", input));
    }
    return ingest_csv(input, column);
}

std::string input_bytes(const std::string& input) {
    if (input.rfind("bundled:", 0) == 0) {
        const DataSeries d = load_input(input);
        std::string out;
        for (double v : d.values()) out += fmt_double(v) + "\n";
        return out;
    }
    return read_file(input);
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex_digest(std::string_view bytes) { return fmt::format("{:016x}", fnv1a64(bytes)); }

std::string fmt_double(double x) { return fmt::format("{}", x); }

}  // namespace uf::cli
