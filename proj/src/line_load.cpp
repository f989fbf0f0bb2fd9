#include "fsdb/line_load.hpp"

#include <stdexcept>

namespace {
double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}
}  // namespace

namespace fsdb {

double UniformLoad::primitive(int k, double x) const {
    if (k < 1) throw std::invalid_argument("primitive order must be >= 1");
    double xk = x;
    for (int i = 1; i < k; ++i) xk *= x;
    return q_ * xk / factorial(k);
}

double PointLoad::primitive(int k, double x) const {
    if (k < 1) throw std::invalid_argument("primitive order must be >= 1");
    if (x < x_c_) return 0.0;
    if (k == 1) return p_;
    const double dx = x - x_c_;
    double dxk = dx;
    for (int i = 2; i < k; ++i) dxk *= dx;
    return p_ * dxk / factorial(k - 1);
}

double PointLoadSet::primitive(int k, double x) const {
    double sum = 0.0;
    for (const auto& load : loads_) sum += load.primitive(k, x);
    return sum;
}

}  // namespace fsdb
