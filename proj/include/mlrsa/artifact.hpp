#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace mlrsa {

// Columnar numeric result, the common shape of everything the CLI emits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // each row has columns.size() cells
};

// Shortest decimal string that round-trips to the same double.  All artifact
// numbers go through this, so a rerun with the same config is byte-identical.
std::string format_double(double v);

// CSV artifact: "# mlrsa-artifact v1", "# config = <json>", header, rows.
// `config_json` must be a serialized JSON object on a single line.
void write_artifact_csv(const std::filesystem::path& path,
                        const std::string& config_json, const Table& table);

// JSON artifact mirroring the CSV content.
void write_artifact_json(const std::filesystem::path& path,
                         const std::string& config_json, const Table& table);

// Recovers the serialized config object embedded in an artifact (either
// format), e.g. to rerun it.  Throws std::runtime_error if the file is not
// an artifact.
std::string read_artifact_config(const std::filesystem::path& path);

}  // namespace mlrsa
