#pragma once

#include <cstddef>
#include <vector>

namespace curvarc {

/// Cubic spline through (knot_i, value_i) over non-uniform knots.
///
/// Natural boundaries set the second derivative to zero at both ends.
/// Periodic boundaries treat the data as one period of a cyclic sequence:
/// the caller supplies the period, the wrap interval [knots.back(),
/// knots.front() + period] closes back to values.front() with matching
/// first and second derivatives.
class CubicSpline1D {
public:
    enum class Boundary { Natural, Periodic };

    CubicSpline1D(std::vector<double> knots, std::vector<double> values,
                  Boundary boundary, double period = 0.0);

    double value(double t) const;
    double derivative(double t) const;

    std::size_t segment_count() const { return segment_count_; }
    double knot(std::size_t i) const;

private:
    void build_natural();
    void build_periodic(double period);
    std::size_t locate(double t) const;

    std::vector<double> knots_;   // with appended wrap knot when periodic
    std::vector<double> values_;  // with appended wrap value when periodic
    std::vector<double> second_;  // second derivative at each knot
    std::size_t segment_count_ = 0;
};

}  // namespace curvarc
