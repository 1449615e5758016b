#ifndef FRONTLAB_INTERP_HPP
#define FRONTLAB_INTERP_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace frontlab {

// Monotone (Fritsch-Carlson) cubic Hermite interpolant. Preserves the
// monotonicity and sign pattern of the data, which linear interpolation
// and ordinary splines do not.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::span<const double> x, std::span<const double> y);

    double operator()(double xq) const;
    double derivative(double xq) const;

    double x_front() const { return x_.front(); }
    double x_back() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

private:
    std::size_t segment(double xq) const;
    std::vector<double> x_, y_, m_;   // nodes, values, node slopes
};

// Least-squares line fit; returns {slope, intercept, r2}.
struct LineFit {
    double slope = 0.0, intercept = 0.0, r2 = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

} // namespace frontlab

#endif
