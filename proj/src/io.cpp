#include "wignerab/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "wignerab/errors.hpp"

namespace wignerab::io {

namespace {

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty()) {
            lines.push_back(line);
        }
        start = end + 1;
    }
    return lines;
}

double parse_number(std::string_view token, std::size_t line)
{
    while (!token.empty() && token.front() == ' ') {
        token.remove_prefix(1);
    }
    while (!token.empty() && token.back() == ' ') {
        token.remove_suffix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw InvalidInput("line " + std::to_string(line) + ": not a finite number: '" + std::string(token) + "'");
    }
    return value;
}

// Reads a two-column CSV with the given header.
std::pair<std::vector<double>, std::vector<double>> parse_two_columns(std::string_view text, std::string_view header)
{
    const auto lines = split_lines(text);
    if (lines.empty() || lines.front() != header) {
        throw InvalidInput("expected CSV header '" + std::string(header) + "'");
    }
    std::vector<double> first;
    std::vector<double> second;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto comma = lines[i].find(',');
        if (comma == std::string_view::npos || lines[i].find(',', comma + 1) != std::string_view::npos) {
            throw InvalidInput("line " + std::to_string(i + 1) + ": expected two comma-separated fields");
        }
        first.push_back(parse_number(lines[i].substr(0, comma), i + 1));
        second.push_back(parse_number(lines[i].substr(comma + 1), i + 1));
    }
    return {std::move(first), std::move(second)};
}

} // namespace

std::string format_double(double value)
{
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) {
        throw Error("cannot format number");
    }
    return std::string(buf.data(), ptr);
}

std::string wigner_csv(const WignerField& field)
{
    std::string out = "x,p,w\n";
    out.reserve(field.nx() * field.np() * 40);
    const auto& grid = field.grid();
    std::vector<std::string> p_text(field.np());
    for (std::size_t j = 0; j < field.np(); ++j) {
        p_text[j] = format_double(grid.p_axis.point(j));
    }
    for (std::size_t i = 0; i < field.nx(); ++i) {
        const std::string x_text = format_double(grid.x_axis.point(i));
        for (std::size_t j = 0; j < field.np(); ++j) {
            out += x_text;
            out += ',';
            out += p_text[j];
            out += ',';
            out += format_double(field.at(i, j));
            out += '\n';
        }
    }
    return out;
}

std::string marginal_csv(const MarginalCurve& curve)
{
    std::string out = "coord,value\n";
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
        out += format_double(curve.grid.point(i));
        out += ',';
        out += format_double(curve.values[i]);
        out += '\n';
    }
    return out;
}

MarginalCurve parse_marginal_csv(std::string_view text, Axis axis)
{
    auto [coords, values] = parse_two_columns(text, "coord,value");
    if (coords.size() < 2) {
        throw InvalidInput("marginal CSV needs at least 2 rows");
    }
    const Grid1D grid(coords.front(), coords.back(), coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (std::abs(coords[i] - grid.point(i)) > 1e-6 * grid.spacing()) {
            throw InvalidInput("marginal CSV coordinates are not uniformly spaced (row " + std::to_string(i + 2) + ")");
        }
    }
    return MarginalCurve(axis, grid, std::move(values));
}

analytic::PulseSeries parse_pulse_csv(std::string_view text)
{
    auto [times, values] = parse_two_columns(text, "t,value");
    return analytic::PulseSeries(std::move(times), std::move(values));
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write " + tmp.string());
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) {
            throw Error("short write to " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string fnv1a_hex(std::string_view data)
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    std::array<char, 17> buf{};
    std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf.data(), 16);
}

} // namespace wignerab::io
