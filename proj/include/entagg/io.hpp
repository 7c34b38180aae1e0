#pragma once

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "entagg/dist.hpp"

namespace entagg {

/// %.{sig}g formatting; 17 significant digits round-trips a double exactly.
inline std::string fmt_double(double x, int sig = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", sig, x);
    return buf;
}

namespace detail {

inline std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failure on " + path);
    return ss.str();
}

} // namespace detail

/// Reads a distribution file: either a JSON array of numbers or
/// whitespace/newline-separated decimals. Returns the raw values.
inline std::vector<double> read_values_file(const std::string& path) {
    const std::string text = detail::slurp_file(path);
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::vector<double> values;
    if (pos < text.size() && text[pos] == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(std::string("bad JSON in ") + path + ": " + e.what());
        }
        if (!j.is_array()) throw ValidationError(path + ": expected a JSON array");
        for (const auto& item : j) {
            if (!item.is_number()) throw ValidationError(path + ": non-numeric array entry");
            values.push_back(item.get<double>());
        }
    } else {
        std::istringstream ss(text);
        double v;
        while (ss >> v) values.push_back(v);
        if (!ss.eof()) throw ValidationError(path + ": unparsable token in value list");
    }
    return values;
}

inline ProbDist load_dist_file(const std::string& path, bool normalize = false) {
    return ProbDist::make(read_values_file(path), normalize);
}

/// Reads whitespace-separated nonnegative integers (3-partition instances).
inline std::vector<std::uint64_t> read_integers_file(const std::string& path) {
    const std::string text = detail::slurp_file(path);
    std::istringstream ss(text);
    std::vector<std::uint64_t> values;
    std::uint64_t v;
    while (ss >> v) values.push_back(v);
    if (!ss.eof()) throw ValidationError(path + ": unparsable token in integer list");
    return values;
}

/// Streaming JSON emitter with explicit numeric precision, so identical inputs
/// produce byte-identical output.
class JsonWriter {
public:
    explicit JsonWriter(int sig_digits = 17) : sig_(sig_digits) {}

    JsonWriter& begin_object() { open('{'); return *this; }
    JsonWriter& end_object() { close('}'); return *this; }
    JsonWriter& begin_array() { open('['); return *this; }
    JsonWriter& end_array() { close(']'); return *this; }

    JsonWriter& key(std::string_view k) {
        comma();
        quote(k);
        out_ += ':';
        pending_value_ = true;
        return *this;
    }

    JsonWriter& value(double x) { comma(); out_ += fmt_double(x, sig_); return *this; }
    JsonWriter& value(std::int64_t x) { comma(); out_ += std::to_string(x); return *this; }
    JsonWriter& value(std::size_t x) { comma(); out_ += std::to_string(x); return *this; }
    JsonWriter& value(bool b) { comma(); out_ += b ? "true" : "false"; return *this; }
    JsonWriter& value(std::string_view s) { comma(); quote(s); return *this; }
    JsonWriter& value(const char* s) { return value(std::string_view(s)); }
    JsonWriter& null() { comma(); out_ += "null"; return *this; }

    template <class T>
    JsonWriter& kv(std::string_view k, T v) { key(k); return value(v); }

    template <class Range>
    JsonWriter& number_array(const Range& xs) {
        begin_array();
        for (const auto& x : xs) value(x);
        return end_array();
    }

    const std::string& str() const { return out_; }

private:
    void open(char c) {
        comma();
        out_ += c;
        need_comma_.push_back(false);
    }
    void close(char c) {
        out_ += c;
        need_comma_.pop_back();
        mark_written();
    }
    void comma() {
        if (pending_value_) {
            pending_value_ = false;
            return;  // value directly after a key
        }
        if (!need_comma_.empty()) {
            if (need_comma_.back()) out_ += ',';
            need_comma_.back() = true;
        }
    }
    void mark_written() {
        if (!need_comma_.empty()) need_comma_.back() = true;
    }
    void quote(std::string_view s) {
        out_ += '"';
        for (char ch : s) {
            switch (ch) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\t': out_ += "\\t"; break;
                default: out_ += ch;
            }
        }
        out_ += '"';
    }

    std::string out_;
    std::vector<bool> need_comma_;
    bool pending_value_ = false;
    int sig_;
};

} // namespace entagg
