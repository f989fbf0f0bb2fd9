#pragma once

#include <memory>
#include <vector>

namespace fsdb {

/// Distributed line load described through its repeated primitives.
///
/// primitive(k, x) returns the k-th antiderivative of the load intensity,
/// fixed so that every primitive vanishes at x = 0.  Concentrated loads are
/// admissible: their primitives are Heaviside-stepped polynomials.  value()
/// returns the smooth (integrable) intensity at x and excludes any
/// concentrated part.
class LineLoad {
public:
    virtual ~LineLoad() = default;
    virtual double primitive(int k, double x) const = 0;
    virtual double value(double x) const = 0;
};

class ZeroLoad final : public LineLoad {
public:
    double primitive(int, double) const override { return 0.0; }
    double value(double) const override { return 0.0; }
};

/// Constant intensity q along the whole member.
class UniformLoad final : public LineLoad {
public:
    explicit UniformLoad(double q) : q_(q) {}
    double primitive(int k, double x) const override;
    double value(double) const override { return q_; }

private:
    double q_;
};

/// Concentrated load P at abscissa x_c (Dirac intensity).
class PointLoad final : public LineLoad {
public:
    PointLoad(double p, double x_c) : p_(p), x_c_(x_c) {}
    double primitive(int k, double x) const override;
    double value(double) const override { return 0.0; }
    double magnitude() const { return p_; }
    double position() const { return x_c_; }

private:
    double p_, x_c_;
};

/// Sum of concentrated loads, e.g. the fictitious axial distribution used by
/// the axial equilibration loop.
class PointLoadSet final : public LineLoad {
public:
    PointLoadSet() = default;
    void add(double p, double x_c) { loads_.emplace_back(p, x_c); }
    bool empty() const { return loads_.empty(); }
    double primitive(int k, double x) const override;
    double value(double) const override { return 0.0; }

private:
    std::vector<PointLoad> loads_;
};

}  // namespace fsdb
