#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvarc/curvarc.hpp"

namespace {

using namespace curvarc;

InterpolationMode parse_mode(const std::string& mode) {
    return mode == "spline" ? InterpolationMode::CubicSpline : InterpolationMode::Polyline;
}

Vec2 parse_point(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw Error("expected a point as X,Y, got '" + text + "'");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw Error("expected a point as X,Y, got '" + text + "'");
    }
}

// Profile of the contour used for map construction, optionally on the
// unit-length rescale so the (c, lambda) weights become scale-invariant.
CurvatureProfile map_profile(const PlanarContour& contour, bool normalize_length) {
    if (!normalize_length) return discrete_curvature(contour);
    const double length = arc_length_table(contour).total_length;
    return discrete_curvature(scaled(contour, 1.0 / length));
}

struct ResampleArgs {
    std::string input, output, svg, mode = "polyline";
    std::size_t n = 0;
    double weight_c = 0.0, weight_lambda = 1.0;
    bool has_weight = false, normalize = false, csv_closed = false;
};

int run_resample(const ResampleArgs& args) {
    const PlanarContour contour = read_contour(args.input, args.csv_closed);
    const InterpolationMode mode = parse_mode(args.mode);

    PlanarContour out = [&] {
        if (!args.has_weight) return resample_uniform(contour, mode, args.n);
        const WeightSpec spec{args.weight_c, args.weight_lambda};
        const ReparamMap map = build_map(map_profile(contour, args.normalize), spec);
        return resample_by_map(contour, mode, map, args.n);
    }();

    write_contour(args.output, out);
    if (!args.svg.empty()) write_contour_svg(args.svg, contour, mode, out.points());
    return 0;
}

struct CurvatureArgs {
    std::string input, output, svg, angles_out, param = "arc";
    double weight_c = 1.0, weight_lambda = 1.0;
    bool csv_closed = false;
};

int run_curvature(const CurvatureArgs& args) {
    const PlanarContour contour = read_contour(args.input, args.csv_closed);
    const CurvatureProfile profile = discrete_curvature(contour);

    std::vector<double> s_axis = profile.s;
    if (args.param != "arc") {
        WeightSpec spec{args.weight_c, args.weight_lambda};
        if (args.param == "curvature") spec = {0.0, 1.0};
        if (args.param == "curvarc") spec = {1.0, 1.0};
        const ReparamMap map = build_map(profile, spec);
        for (double& s : s_axis) s = map.forward(s);
    }
    write_profile_csv(args.output, s_axis, profile.kappa);

    if (!args.angles_out.empty())
        write_angles_csv(args.angles_out, turning_angles(contour), contour.closed());
    if (!args.svg.empty()) write_plot_svg(args.svg, s_axis, profile.kappa);
    return 0;
}

struct ReconstructArgs {
    std::string angles, output, svg, start = "0,0";
    double heading = 0.0, uniform_length = 0.0;
    bool has_uniform = false, closed = false;
};

int run_reconstruct(const ReconstructArgs& args) {
    const TurningAngleSequence data =
        args.has_uniform ? read_angles_csv_uniform(args.angles, args.closed, args.uniform_length)
                         : read_angles_csv(args.angles, args.closed);
    const PlanarContour contour =
        reconstruct_from_curvature(data, parse_point(args.start), args.heading, args.closed);
    write_contour(args.output, contour);
    if (!args.svg.empty())
        write_contour_svg(args.svg, contour, InterpolationMode::Polyline, {});
    return 0;
}

struct LandmarksArgs {
    std::string input, input2, output, output2, reference, svg, svg2, mode = "polyline";
    std::size_t n = 0;
    double weight_c = 1.0, weight_lambda = 7.0;
    double anchor_s = 0.0, anchor2_s = 0.0;
    bool has_anchor = false, has_anchor2 = false, anchor_auto = false;
    bool normalize = false, csv_closed = false;
};

void print_report(const LandmarkSet& candidate, const CorrespondenceReport& report) {
    for (std::size_t k = 0; k < report.distances.size(); ++k)
        std::cout << "landmark " << k << ": distance " << format_double(report.distances[k])
                  << '\n';
    std::cout << "mean " << format_double(report.mean) << " max " << format_double(report.max)
              << " over " << candidate.size() << " landmarks\n";
}

int run_landmarks(const LandmarksArgs& args) {
    const PlanarContour contour = read_contour(args.input, args.csv_closed);
    const InterpolationMode mode = parse_mode(args.mode);
    const WeightSpec spec{args.weight_c, args.weight_lambda};

    if (!args.anchor_auto && !args.has_anchor)
        throw Error("need --anchor-s or --anchor-auto");
    const double anchor =
        args.anchor_auto ? curvature_peak_anchor(contour) : args.anchor_s;

    LandmarkSet set;
    if (args.input2.empty()) {
        set = place_landmarks(contour, mode, spec, args.n, anchor, args.normalize);
        write_landmarks(args.output, set);
    } else {
        if (args.output2.empty()) throw Error("--input2 needs --output2");
        const PlanarContour second = read_contour(args.input2, args.csv_closed);
        if (!args.anchor_auto && !args.has_anchor2)
            throw Error("second contour needs --anchor2-s or --anchor-auto");
        const double anchor2 =
            args.anchor_auto ? curvature_peak_anchor(second) : args.anchor2_s;
        auto [first_set, second_set] = transfer_landmarks(contour, second, mode, spec, args.n,
                                                          anchor, anchor2, args.normalize);
        set = first_set;
        write_landmarks(args.output, first_set);
        write_landmarks(args.output2, second_set);
        if (!args.svg2.empty())
            write_contour_svg(args.svg2, second, mode, second_set.points, true);
    }

    if (!args.reference.empty())
        print_report(set, correspondence_error(set, read_landmarks(args.reference)));
    if (!args.svg.empty()) write_contour_svg(args.svg, contour, mode, set.points, true);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical parameterizations of planar contours"};
    app.require_subcommand(1);

    ResampleArgs rs;
    CLI::App* resample = app.add_subcommand(
        "resample", "Resample a contour uniformly or by a (c, lambda) weight map");
    resample->add_option("--input", rs.input, "Contour file (.json or .csv)")->required();
    resample->add_option("--n", rs.n, "Output point count")->required();
    resample->add_option("--mode", rs.mode, "Interpolation: polyline or spline")
        ->check(CLI::IsMember({"polyline", "spline"}));
    CLI::Option* rs_c = resample->add_option(
        "--weight-c", rs.weight_c, "Weight coefficient c (enables weighted resampling)");
    resample->add_option("--weight-lambda", rs.weight_lambda, "Curvature exponent lambda");
    resample->add_flag("--normalize-length", rs.normalize,
                       "Build the map on the unit-length rescale of the contour");
    resample->add_option("--output", rs.output, "Output contour file")->required();
    resample->add_option("--svg", rs.svg, "Optional SVG drawing");
    resample->add_flag("--closed", rs.csv_closed, "Treat CSV input as closed");

    CurvatureArgs cv;
    CLI::App* curvature = app.add_subcommand(
        "curvature", "Write the discrete curvature profile of a contour");
    curvature->add_option("--input", cv.input, "Contour file (.json or .csv)")->required();
    curvature->add_option("--output", cv.output, "Profile CSV (s,kappa)")->required();
    curvature->add_option("--param", cv.param,
                          "Parameter for the s column: arc, curvature, curvarc, custom")
        ->check(CLI::IsMember({"arc", "curvature", "curvarc", "custom"}));
    curvature->add_option("--weight-c", cv.weight_c, "Weight c for --param custom");
    curvature->add_option("--weight-lambda", cv.weight_lambda,
                          "Exponent lambda for --param custom");
    curvature->add_option("--angles-out", cv.angles_out,
                          "Also write the turning-angle CSV (edge_length,turning_angle)");
    curvature->add_option("--svg", cv.svg, "Optional SVG plot of kappa against the parameter");
    curvature->add_flag("--closed", cv.csv_closed, "Treat CSV input as closed");

    ReconstructArgs rc;
    CLI::App* reconstruct = app.add_subcommand(
        "reconstruct", "Integrate a turning-angle CSV back into a contour");
    reconstruct->add_option("--angles", rc.angles, "Turning-angle CSV")->required();
    reconstruct->add_option("--output", rc.output, "Output contour file")->required();
    reconstruct->add_option("--start", rc.start, "First vertex as X,Y (default 0,0)");
    reconstruct->add_option("--heading", rc.heading, "First edge heading in radians");
    CLI::Option* rc_u = reconstruct->add_option(
        "--uniform-edge-length", rc.uniform_length,
        "Ignore stored edge lengths; every row is one angle, edges have this length");
    reconstruct->add_flag("--closed", rc.closed, "Angle data describes a closed polygon");
    reconstruct->add_option("--svg", rc.svg, "Optional SVG drawing");

    LandmarksArgs lm;
    CLI::App* landmarks = app.add_subcommand(
        "landmarks", "Place canonically indexed landmarks on one or two contours");
    landmarks->add_option("--input", lm.input, "Contour file")->required();
    landmarks->add_option("--input2", lm.input2, "Second contour for transfer");
    landmarks->add_option("--n", lm.n, "Landmark count")->required();
    landmarks->add_option("--mode", lm.mode, "Interpolation: polyline or spline")
        ->check(CLI::IsMember({"polyline", "spline"}));
    landmarks->add_option("--weight-c", lm.weight_c, "Weight coefficient c (default 1)");
    landmarks->add_option("--weight-lambda", lm.weight_lambda,
                          "Curvature exponent lambda (default 7)");
    CLI::Option* lm_a = landmarks->add_option("--anchor-s", lm.anchor_s,
                                              "Landmark-0 parameter on the input traversal");
    CLI::Option* lm_a2 = landmarks->add_option("--anchor2-s", lm.anchor2_s,
                                               "Landmark-0 parameter on the second contour");
    landmarks->add_flag("--anchor-auto", lm.anchor_auto,
                        "Anchor at the vertex of largest |kappa| instead");
    landmarks->add_flag("--normalize-length", lm.normalize,
                        "Build maps on unit-length rescales (scale-invariant)");
    landmarks->add_option("--reference", lm.reference,
                          "Reference landmark file; prints a distance report");
    landmarks->add_option("--output", lm.output, "Output landmark file")->required();
    landmarks->add_option("--output2", lm.output2, "Landmark file for --input2");
    landmarks->add_option("--svg", lm.svg, "Optional SVG overlay");
    landmarks->add_option("--svg2", lm.svg2, "Optional SVG overlay for --input2");
    landmarks->add_flag("--closed", lm.csv_closed, "Treat CSV input as closed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    rs.has_weight = rs_c->count() > 0;
    rc.has_uniform = rc_u->count() > 0;
    lm.has_anchor = lm_a->count() > 0;
    lm.has_anchor2 = lm_a2->count() > 0;

    try {
        if (resample->parsed()) return run_resample(rs);
        if (curvature->parsed()) return run_curvature(cv);
        if (reconstruct->parsed()) return run_reconstruct(rc);
        return run_landmarks(lm);
    } catch (const ZeroTotalWeight& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CountMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
