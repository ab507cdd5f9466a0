#include "curvarc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>

#include <json.hpp>

#include "curvarc/errors.hpp"

namespace curvarc {

namespace {

using nlohmann::json;

std::string format_index(std::size_t i) { return std::to_string(i); }

std::string location(const std::filesystem::path& path, std::size_t line) {
    return path.string() + ":" + format_index(line);
}

std::string_view trim(std::string_view text) {
    const auto space = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
    };
    while (!text.empty() && space(text.front())) text.remove_prefix(1);
    while (!text.empty() && space(text.back())) text.remove_suffix(1);
    return text;
}

bool parse_double(std::string_view field, double& value) {
    field = trim(field);
    if (field.empty()) return false;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    return ec == std::errc{} && ptr == end;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

// Numeric CSV rows; a leading non-numeric line must be one of the accepted
// headers. Every row gets the same column count as its own field count.
std::vector<std::vector<double>> read_csv_rows(const std::filesystem::path& path,
                                               const std::vector<std::string>& headers) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());

    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string_view content = trim(line);
        if (content.empty()) continue;

        std::vector<std::string_view> fields = split_fields(content);
        std::vector<double> row(fields.size());
        bool numeric = true;
        for (std::size_t i = 0; i < fields.size(); ++i)
            if (!parse_double(fields[i], row[i])) {
                numeric = false;
                break;
            }

        if (!numeric) {
            const bool header_allowed =
                first_content &&
                std::find(headers.begin(), headers.end(), std::string(content)) != headers.end();
            if (!header_allowed)
                throw ParseError(location(path, lineno) + ": expected numeric fields");
            first_content = false;
            continue;
        }
        first_content = false;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string lower_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext;
}

json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

Vec2 point_from_json(const json& value, const std::filesystem::path& path) {
    if (!value.is_array() || value.size() != 2 || !value[0].is_number() ||
        !value[1].is_number())
        throw ParseError(path.string() + ": points must be [x, y] number pairs");
    return {value[0].get<double>(), value[1].get<double>()};
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    (void)ec;
    return std::string(buffer, ptr);
}

PlanarContour read_contour(const std::filesystem::path& path, std::optional<bool> csv_closed) {
    const std::string ext = lower_extension(path);
    if (ext == ".json") {
        const json j = parse_json_file(path);
        if (!j.is_object() || !j.contains("closed") || !j["closed"].is_boolean() ||
            !j.contains("points") || !j["points"].is_array())
            throw ParseError(path.string() +
                             ": contour JSON needs {\"closed\": bool, \"points\": [...]}");
        std::vector<Vec2> points;
        points.reserve(j["points"].size());
        for (const json& p : j["points"]) points.push_back(point_from_json(p, path));
        return PlanarContour(std::move(points), j["closed"].get<bool>());
    }
    if (ext == ".csv") {
        const auto rows = read_csv_rows(path, {"x,y"});
        std::vector<Vec2> points;
        points.reserve(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != 2)
                throw ParseError(path.string() + ": contour CSV rows must be x,y pairs");
            points.push_back({rows[r][0], rows[r][1]});
        }
        return PlanarContour(std::move(points), csv_closed.value_or(false));
    }
    throw ParseError(path.string() + ": unsupported contour format (use .json or .csv)");
}

void write_contour(const std::filesystem::path& path, const PlanarContour& contour) {
    std::ofstream out = open_output(path);
    const std::string ext = lower_extension(path);
    if (ext == ".csv") {
        for (const Vec2& p : contour.points())
            out << format_double(p.x) << ',' << format_double(p.y) << '\n';
        return;
    }
    out << "{\n  \"closed\": " << (contour.closed() ? "true" : "false")
        << ",\n  \"points\": [\n";
    for (std::size_t i = 0; i < contour.size(); ++i)
        out << "    [" << format_double(contour[i].x) << ", " << format_double(contour[i].y)
            << (i + 1 < contour.size() ? "],\n" : "]\n");
    out << "  ]\n}\n";
}

LandmarkSet read_landmarks(const std::filesystem::path& path) {
    const json j = parse_json_file(path);
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned() ||
        !j.contains("landmarks") || !j["landmarks"].is_array())
        throw ParseError(path.string() +
                         ": landmark JSON needs {\"n\": count, \"landmarks\": [...]}");
    const std::size_t n = j["n"].get<std::size_t>();
    if (j["landmarks"].size() != n)
        throw ParseError(path.string() + ": landmark count does not match n");

    LandmarkSet set;
    set.points.resize(n);
    set.source_s.resize(n);
    std::vector<bool> seen(n, false);
    for (const json& entry : j["landmarks"]) {
        if (!entry.is_object() || !entry.contains("index") ||
            !entry["index"].is_number_unsigned() || !entry.contains("point") ||
            !entry.contains("s") || !entry["s"].is_number())
            throw ParseError(path.string() +
                             ": each landmark needs {\"index\", \"point\", \"s\"}");
        const std::size_t k = entry["index"].get<std::size_t>();
        if (k >= n || seen[k])
            throw ParseError(path.string() + ": landmark indices must cover 0.." +
                             format_index(n - 1) + " exactly once");
        seen[k] = true;
        set.points[k] = point_from_json(entry["point"], path);
        set.source_s[k] = entry["s"].get<double>();
    }
    return set;
}

void write_landmarks(const std::filesystem::path& path, const LandmarkSet& landmarks) {
    std::ofstream out = open_output(path);
    const std::size_t n = landmarks.size();
    out << "{\n  \"n\": " << n << ",\n  \"landmarks\": [\n";
    for (std::size_t k = 0; k < n; ++k)
        out << "    { \"index\": " << k << ", \"point\": ["
            << format_double(landmarks.points[k].x) << ", "
            << format_double(landmarks.points[k].y)
            << "], \"s\": " << format_double(landmarks.source_s[k])
            << (k + 1 < n ? " },\n" : " }\n");
    out << "  ]\n}\n";
}

void write_profile_csv(const std::filesystem::path& path, const std::vector<double>& s,
                       const std::vector<double>& kappa) {
    if (s.size() != kappa.size())
        throw InconsistentCounts("profile columns differ in length");
    std::ofstream out = open_output(path);
    out << "s,kappa\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        out << format_double(s[i]) << ',' << format_double(kappa[i]) << '\n';
}

void write_angles_csv(const std::filesystem::path& path, const TurningAngleSequence& data,
                      bool closed) {
    const std::size_t edges = data.edge_lengths.size();
    const std::size_t expected = closed ? edges : (edges == 0 ? 1 : edges - 1);
    if (data.angles.size() != expected)
        throw InconsistentCounts("angle and edge counts do not match");

    std::ofstream out = open_output(path);
    out << "edge_length,turning_angle\n";
    for (std::size_t k = 0; k < edges; ++k) {
        const double angle = closed ? data.angles[k] : (k == 0 ? 0.0 : data.angles[k - 1]);
        out << format_double(data.edge_lengths[k]) << ',' << format_double(angle) << '\n';
    }
}

TurningAngleSequence read_angles_csv(const std::filesystem::path& path, bool closed) {
    const auto rows = read_csv_rows(path, {"edge_length,turning_angle"});
    TurningAngleSequence data;
    data.edge_lengths.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != 2)
            throw ParseError(path.string() + ": turning data rows must be length,angle pairs");
        data.edge_lengths.push_back(rows[r][0]);
        if (closed || r > 0) data.angles.push_back(rows[r][1]);
    }
    return data;
}

TurningAngleSequence read_angles_csv_uniform(const std::filesystem::path& path, bool closed,
                                             double edge_length) {
    const auto rows =
        read_csv_rows(path, {"turning_angle", "edge_length,turning_angle"});
    TurningAngleSequence data;
    data.angles.reserve(rows.size());
    for (const auto& row : rows) data.angles.push_back(row.back());
    data.edge_lengths.assign(closed ? rows.size() : rows.size() + 1, edge_length);
    return data;
}

}  // namespace curvarc
