#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gridfe/errors.hpp"

namespace gridfe {

/// Shortest decimal representation that round-trips the double exactly.
inline std::string format_double(double v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

inline double parse_double(std::string_view s, const char* context) {
    double v = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw ParseError(std::string(context) + ": bad number '" + std::string(s) + "'");
    return v;
}

inline long parse_long(std::string_view s, const char* context) {
    long v = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size())
        throw ParseError(std::string(context) + ": bad integer '" + std::string(s) + "'");
    return v;
}

/// Minimal CSV reader for the toolkit's unquoted schemas. Empty field = missing.
class CsvReader {
public:
    CsvReader(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {
        if (!read_raw_line(header_line_))
            throw ParseError(name_ + ": empty file, expected a header row");
        split(header_line_, fields_);
        for (std::size_t i = 0; i < fields_.size(); ++i)
            header_[std::string(fields_[i])] = i;
    }

    /// Column index for `col`, or throws naming the file.
    std::size_t column(const std::string& col) const {
        auto it = header_.find(col);
        if (it == header_.end())
            throw ParseError(name_ + ": missing required column '" + col + "'");
        return it->second;
    }

    bool has_column(const std::string& col) const { return header_.count(col) > 0; }
    std::size_t column_count() const { return header_.size(); }

    /// Advance to the next data row. Returns false at EOF. Blank lines are skipped.
    bool next() {
        while (read_raw_line(line_)) {
            ++line_no_;
            if (line_.empty())
                continue;
            split(line_, fields_);
            if (fields_.size() != header_.size())
                throw ParseError(name_ + ":" + std::to_string(line_no_) + ": expected " +
                                 std::to_string(header_.size()) + " fields, got " +
                                 std::to_string(fields_.size()));
            return true;
        }
        return false;
    }

    std::string_view field(std::size_t i) const { return fields_[i]; }
    bool is_missing(std::size_t i) const { return fields_[i].empty(); }

    std::string get_string(std::size_t i) const { return std::string(fields_[i]); }

    double get_double(std::size_t i) const {
        return parse_double(fields_[i], cell_context(i).c_str());
    }

    std::optional<double> get_optional_double(std::size_t i) const {
        if (is_missing(i))
            return std::nullopt;
        return get_double(i);
    }

    long get_long(std::size_t i) const { return parse_long(fields_[i], cell_context(i).c_str()); }

    long line_number() const { return line_no_; }
    const std::string& name() const { return name_; }

    std::string cell_context(std::size_t i) const {
        return name_ + ":" + std::to_string(line_no_) + ":col" + std::to_string(i + 1);
    }

private:
    bool read_raw_line(std::string& out) {
        if (!std::getline(in_, out))
            return false;
        if (!out.empty() && out.back() == '\r')
            out.pop_back();
        return true;
    }

    static void split(const std::string& line, std::vector<std::string_view>& out) {
        out.clear();
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                out.emplace_back(line.data() + start, i - start);
                start = i + 1;
            }
        }
    }

    std::istream& in_;
    std::string name_;
    std::string header_line_;
    std::string line_;
    std::vector<std::string_view> fields_;
    std::unordered_map<std::string, std::size_t> header_;
    long line_no_ = 1; // header is line 1
};

/// Row-oriented CSV writer; doubles are written round-trip exact.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    CsvWriter& cell(const std::string& s) {
        sep();
        out_ << s;
        return *this;
    }
    CsvWriter& cell(double v) { return cell(format_double(v)); }
    CsvWriter& cell(long v) { return cell(std::to_string(v)); }
    CsvWriter& cell(int v) { return cell(std::to_string(v)); }
    CsvWriter& cell(std::optional<double> v) { return v ? cell(*v) : cell(std::string()); }

    void endrow() {
        out_ << '\n';
        first_ = true;
    }

private:
    void sep() {
        if (!first_)
            out_ << ',';
        first_ = false;
    }
    std::ostream& out_;
    bool first_ = true;
};

} // namespace gridfe
