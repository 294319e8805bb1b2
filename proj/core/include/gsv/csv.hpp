#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

#include "gsv/errors.hpp"

namespace gsv {

/// Formats a double with 17 significant digits, enough to reproduce the
/// value bit-for-bit on read-back.
inline std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Minimal CSV writer: UTF-8, LF line endings, '.' decimal separator,
/// one header line, numbers at full precision.
class CsvWriter {
  public:
    explicit CsvWriter(const std::filesystem::path& path) : out_(path, std::ios::binary) {
        if (!out_) {
            throw InvalidInput("cannot open output file " + path.string());
        }
    }

    CsvWriter& field(std::string_view text) {
        if (!first_) out_ << ',';
        out_ << text;
        first_ = false;
        return *this;
    }

    CsvWriter& field(double v) { return field(std::string_view(format_full(v))); }

    CsvWriter& field(std::size_t v) { return field(std::string_view(std::to_string(v))); }

    void end_row() {
        out_ << '\n';
        first_ = true;
    }

  private:
    std::ofstream out_;
    bool first_ = true;
};

}  // namespace gsv
