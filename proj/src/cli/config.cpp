#include "hyperrough/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hyperrough/cli/csv.hpp"
#include "hyperrough/errors.hpp"

namespace hyperrough::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_real(std::string_view field, std::string_view text) {
    text = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw ConfigError(std::string(field), "expected a real number, got '" + std::string(text) + "'");
    }
    return value;
}

std::uint64_t parse_unsigned(std::string_view field, std::string_view text) {
    text = trim(text);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError(std::string(field),
                          "expected a nonnegative integer, got '" + std::string(text) + "'");
    }
    return value;
}

void append_list(std::ostringstream& os, const char* key, const std::vector<double>& values) {
    os << key << '=';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << format_real(values[i]);
    }
    os << '\n';
}

}  // namespace

std::vector<double> parse_real_list(std::string_view field, std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        out.push_back(parse_real(field, piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

void RunConfig::validate() const {
    model.validate();
    if (hursts.empty()) throw ConfigError("H", "the Hurst list is empty");
    for (double h : hursts) {
        if (!(h > -0.5 && h <= 0.5)) throw ConfigError("H", "every H must lie in (-1/2, 1/2]");
    }
    if (steps < 2) throw ConfigError("N", "need N >= 2");
    if (paths < 1) throw ConfigError("paths", "need at least one path");
    if (u_grid.empty()) throw ConfigError("u_grid", "empty grid");
    if (v_grid.empty()) throw ConfigError("v_grid", "empty grid");
    if (bins < 10) throw ConfigError("bins", "need at least 10 bins");
}

void apply_setting(RunConfig& c, std::string_view key, std::string_view value) {
    const std::string k(trim(key));
    if (k == "v0") c.model.v0 = parse_real(k, value);
    else if (k == "lambda") c.model.lambda = parse_real(k, value);
    else if (k == "theta") c.model.theta = parse_real(k, value);
    else if (k == "nu") c.model.nu = parse_real(k, value);
    else if (k == "T") c.model.horizon = parse_real(k, value);
    else if (k == "H") c.hursts = parse_real_list(k, value);
    else if (k == "N") c.steps = parse_unsigned(k, value);
    else if (k == "paths") c.paths = parse_unsigned(k, value);
    else if (k == "seed") c.seed = parse_unsigned(k, value);
    else if (k == "out") c.out_dir = std::string(trim(value));
    else if (k == "u_grid") c.u_grid = parse_real_list(k, value);
    else if (k == "v_grid") c.v_grid = parse_real_list(k, value);
    else if (k == "threads") c.threads = static_cast<unsigned>(parse_unsigned(k, value));
    else if (k == "bins") c.bins = parse_unsigned(k, value);
    else if (k == "riccati_f") c.riccati_f = parse_real(k, value);
    else if (k == "riccati_h") c.riccati_h = parse_real(k, value);
    else throw ConfigError(k, "unknown configuration key");
}

RunConfig parse_config(std::string_view text, RunConfig base) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(std::string(line), "line " + std::to_string(line_no) + " has no '='");
        }
        apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    }
    return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), std::move(base));
}

std::string canonical_text(const RunConfig& c) {
    std::ostringstream os;
    os << "v0=" << format_real(c.model.v0) << '\n'
       << "lambda=" << format_real(c.model.lambda) << '\n'
       << "theta=" << format_real(c.model.theta) << '\n'
       << "nu=" << format_real(c.model.nu) << '\n'
       << "T=" << format_real(c.model.horizon) << '\n';
    append_list(os, "H", c.hursts);
    os << "N=" << c.steps << '\n' << "paths=" << c.paths << '\n' << "seed=" << c.seed << '\n';
    append_list(os, "u_grid", c.u_grid);
    append_list(os, "v_grid", c.v_grid);
    os << "bins=" << c.bins << '\n'
       << "riccati_f=" << format_real(c.riccati_f) << '\n'
       << "riccati_h=" << format_real(c.riccati_h) << '\n';
    return os.str();
}

std::string config_hash(const RunConfig& c) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical_text(c)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace hyperrough::cli
