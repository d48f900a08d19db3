#include "mlrsa/artifact.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace mlrsa {

namespace {

constexpr const char* kMagic = "# mlrsa-artifact v1";
constexpr const char* kConfigPrefix = "# config = ";

void check_table(const Table& table) {
    for (const auto& row : table.rows)
        if (row.size() != table.columns.size())
            throw std::invalid_argument(
                "artifact: row width does not match the column count");
}

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);  // binary: no CRLF surprises
    if (!out)
        throw std::runtime_error("artifact: cannot open " + path.string() +
                                 " for writing");
    return out;
}

std::string canonical_config(const std::string& config_json) {
    nlohmann::json cfg = nlohmann::json::parse(config_json);
    if (!cfg.is_object())
        throw std::invalid_argument("artifact: config must be a JSON object");
    return cfg.dump();
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc())
        throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

void write_artifact_csv(const std::filesystem::path& path,
                        const std::string& config_json, const Table& table) {
    check_table(table);
    const std::string cfg = canonical_config(config_json);
    std::ofstream out = open_out(path);
    out << kMagic << '\n' << kConfigPrefix << cfg << '\n';
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << format_double(row[c]);
        out << '\n';
    }
    if (!out)
        throw std::runtime_error("artifact: write failed for " + path.string());
}

void write_artifact_json(const std::filesystem::path& path,
                         const std::string& config_json, const Table& table) {
    check_table(table);
    nlohmann::json doc;
    doc["format"] = "mlrsa-artifact";
    doc["version"] = 1;
    doc["config"] = nlohmann::json::parse(canonical_config(config_json));
    doc["columns"] = table.columns;
    auto rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        auto jrow = nlohmann::json::array();
        for (double v : row) jrow.push_back(v);
        rows.push_back(std::move(jrow));
    }
    doc["rows"] = std::move(rows);
    std::ofstream out = open_out(path);
    out << doc.dump(2) << '\n';
    if (!out)
        throw std::runtime_error("artifact: write failed for " + path.string());
}

std::string read_artifact_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("artifact: cannot open " + path.string());
    std::string first;
    std::getline(in, first);
    if (first == kMagic) {
        std::string second;
        std::getline(in, second);
        if (second.rfind(kConfigPrefix, 0) != 0)
            throw std::runtime_error(
                "artifact: missing config line in " + path.string());
        return canonical_config(second.substr(std::string(kConfigPrefix).size()));
    }
    // Otherwise try the JSON mirror format.
    in.clear();
    in.seekg(0);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        throw std::runtime_error(path.string() +
                                 " is not an mlrsa artifact (bad header and "
                                 "not parseable as JSON)");
    }
    if (!doc.is_object() || doc.value("format", "") != "mlrsa-artifact" ||
        !doc.contains("config"))
        throw std::runtime_error(path.string() + " is not an mlrsa artifact");
    return doc["config"].dump();
}

}  // namespace mlrsa
