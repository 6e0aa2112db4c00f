#include "hyperrough/cli/csv.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <system_error>

#include "hyperrough/errors.hpp"

namespace hyperrough::cli {

std::string format_real(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc()) throw std::runtime_error("format_real: conversion failed");
    return std::string(buf, ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::string& config_hash,
                     std::uint64_t seed, const std::vector<std::string>& columns)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), columns_(columns.size()) {
    if (!out_) throw IoError("cannot open " + path.string() + " for writing");
    out_ << "# schema_version=" << kSchemaVersion << ",config_hash=" << config_hash
         << ",seed=" << seed << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
    out_ << '\n';
    check();
}

void CsvWriter::row(std::initializer_list<double> values) {
    row(std::vector<double>(values));
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_) throw std::invalid_argument("CsvWriter: wrong number of cells");
    for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_real(values[i]);
    out_ << '\n';
    check();
}

void CsvWriter::row(const std::string& label, const std::vector<double>& values) {
    if (values.size() + 1 != columns_) throw std::invalid_argument("CsvWriter: wrong number of cells");
    out_ << label;
    for (double v : values) out_ << ',' << format_real(v);
    out_ << '\n';
    check();
}

void CsvWriter::close() {
    out_.close();
    check();
}

void CsvWriter::check() {
    if (out_.fail()) throw IoError("write failed on " + path_.string());
}

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string() +
                      (ec ? ": " + ec.message() : std::string()));
    }
}

std::string process_tag(double hurst) {
    if (hurst <= -0.5) return "limit";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", hurst);
    return std::string("H") + buf;
}

}  // namespace hyperrough::cli
