#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "curvarc/contour.hpp"
#include "curvarc/correspondence.hpp"
#include "curvarc/invariants.hpp"

namespace curvarc {

/// Shortest decimal string that parses back to exactly this double.
std::string format_double(double value);

/// Contour files carry either JSON {"closed": bool, "points": [[x,y],...]}
/// or two-column CSV (x,y per row, no header); the format follows the file
/// extension. CSV has no closedness of its own, so csv_closed supplies it
/// (default open). Parse failures throw ParseError naming the line.
PlanarContour read_contour(const std::filesystem::path& path,
                           std::optional<bool> csv_closed = std::nullopt);
void write_contour(const std::filesystem::path& path, const PlanarContour& contour);

/// Landmark files are JSON {"n": count, "landmarks": [{"index": k,
/// "point": [x, y], "s": s_k}, ...]} with indices 0..n-1 each exactly once.
LandmarkSet read_landmarks(const std::filesystem::path& path);
void write_landmarks(const std::filesystem::path& path, const LandmarkSet& landmarks);

/// Profile CSV with header "s,kappa".
void write_profile_csv(const std::filesystem::path& path, const std::vector<double>& s,
                       const std::vector<double>& kappa);

/// Turning-data CSV with header "edge_length,turning_angle", one row per
/// edge. Row k carries the angle at the vertex where edge k starts; the
/// first row of an open sequence has no such interior vertex and carries 0.
void write_angles_csv(const std::filesystem::path& path, const TurningAngleSequence& data,
                      bool closed);
TurningAngleSequence read_angles_csv(const std::filesystem::path& path, bool closed);

/// Same format, with every edge length replaced by a constant. The file
/// may then omit the edge_length column (header "turning_angle").
TurningAngleSequence read_angles_csv_uniform(const std::filesystem::path& path, bool closed,
                                             double edge_length);

}  // namespace curvarc
