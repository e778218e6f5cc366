#pragma once

// File handling shared by the ufrechet command-line tool and its tests.

#include "unifrechet/inference.h"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uf::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kUnreadable = 3,
    kNumerical = 4,
    kNonNumeric = 5,
    kOutOfRange = 6,
    kNoData = 7,
    kReplayMismatch = 8,
};

class CliError : public std::runtime_error {
public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const noexcept { return code_; }

private:
    int code_;
};

/// Reads one numeric column from a headerless or single-header CSV.
///
/// `column` is a 0-based index or a header name (default: first column).
/// Blank lines are skipped. Errors carry the 1-based line number and the
/// matching exit code: unreadable file, non-numeric row, value outside
/// (0,1), or no data.
DataSeries ingest_csv(const std::string& path, const std::optional<std::string>& column = std::nullopt);

/// "bundled:<name>" or a CSV path.
DataSeries load_input(const std::string& input, const std::optional<std::string>& column = std::nullopt);

/// Bytes of the input as ingested: the file contents, or for bundled data
/// the values serialized one per line.
std::string input_bytes(const std::string& input);

std::uint64_t fnv1a64(std::string_view bytes) noexcept;
std::string hex_digest(std::string_view bytes);

/// Shortest decimal that parses back to exactly the same double.
std::string fmt_double(double x);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace uf::cli
