#include "revival/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace revival {

namespace {

// 5-point Gauss-Legendre on [-1,1].
constexpr double kGaussNode[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                  0.5384693101056831, 0.9061798459386640};
constexpr double kGaussWeight[5] = {0.2369268850561891, 0.4786286704993665,
                                    0.5688888888888889, 0.4786286704993665,
                                    0.2369268850561891};

void check_domain(double x) {
    if (x < -1e-12 || x > kPi + 1e-12)
        throw std::domain_error("potential evaluated outside [0,pi]");
}

// Cumulative composite Simpson over pairs of cells; the mid-cell prefix
// uses the quadratic through the panel's three nodes.
std::vector<Complex> cumulative_simpson(const std::vector<Complex>& v, double h) {
    std::vector<Complex> cum(v.size(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i + 2 < v.size(); i += 2) {
        cum[i + 1] = cum[i] + (h / 12.0) * (5.0 * v[i] + 8.0 * v[i + 1] - v[i + 2]);
        cum[i + 2] = cum[i] + (h / 3.0) * (v[i] + 4.0 * v[i + 1] + v[i + 2]);
    }
    return cum;
}

std::vector<Complex> cumulative_trapezoid(const std::vector<Complex>& v, double h) {
    std::vector<Complex> cum(v.size(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        cum[i + 1] = cum[i] + 0.5 * h * (v[i] + v[i + 1]);
    return cum;
}

}  // namespace

Potential Potential::mathieu(Complex qcoef, std::size_t quadrature_intervals) {
    Potential p;
    p.kind_ = Kind::Mathieu;
    p.qcoef_ = qcoef;
    p.table_intervals_ = quadrature_intervals;
    p.build_tables();
    p.mean_ = Complex{0.0, 0.0};  // int_0^pi cos(2x) dx = 0
    return p;
}

Potential Potential::fourier(std::vector<Complex> cos_coeffs,
                             std::vector<Complex> sin_coeffs,
                             std::size_t quadrature_intervals) {
    Potential p;
    p.kind_ = Kind::Fourier;
    p.cos_coeffs_ = std::move(cos_coeffs);
    p.sin_coeffs_ = std::move(sin_coeffs);
    p.table_intervals_ = quadrature_intervals;
    p.build_tables();
    return p;
}

Potential Potential::samples(GridFunction values) {
    Potential p;
    p.kind_ = Kind::Samples;
    p.table_intervals_ = values.intervals();
    p.sample_values_ = std::move(values);
    p.build_tables();
    return p;
}

Complex Potential::evaluate_raw(double x) const {
    switch (kind_) {
        case Kind::Mathieu:
            return 2.0 * qcoef_ * std::cos(2.0 * x);
        case Kind::Fourier: {
            Complex v{0.0, 0.0};
            for (std::size_t k = 0; k < cos_coeffs_.size(); ++k)
                v += cos_coeffs_[k] * std::cos(static_cast<double>(k) * x);
            for (std::size_t k = 0; k < sin_coeffs_.size(); ++k)
                v += sin_coeffs_[k] * std::sin(static_cast<double>(k + 1) * x);
            return v;
        }
        case Kind::Samples:
            return sample_values_.value_at(x);
    }
    return {};
}

Complex Potential::evaluate(double x) const {
    check_domain(x);
    return evaluate_raw(x);
}

void Potential::build_tables() {
    const std::size_t m = table_intervals_;
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("quadrature interval count must be even and >= 2");
    const double h = kPi / static_cast<double>(m);

    node_values_.resize(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        node_values_[i] = evaluate_raw(static_cast<double>(i) * h);

    sup_norm_ = 0.0;
    for (const auto& v : node_values_) sup_norm_ = std::max(sup_norm_, std::abs(v));

    const bool smooth = kind_ != Kind::Samples;
    cum_v_ = smooth ? cumulative_simpson(node_values_, h)
                    : cumulative_trapezoid(node_values_, h);

    std::vector<Complex> vv1(m + 1);
    for (std::size_t i = 0; i <= m; ++i) vv1[i] = node_values_[i] * cum_v_[i];
    cum_vv1_ = smooth ? cumulative_simpson(vv1, h) : cumulative_trapezoid(vv1, h);

    mean_ = cum_v_.back() / kPi;
}

Complex Potential::antiderivative(double x) const {
    check_domain(x);
    const double h = kPi / static_cast<double>(table_intervals_);
    double u = std::clamp(x / h, 0.0, static_cast<double>(table_intervals_));
    auto i = static_cast<std::size_t>(u);
    if (i == table_intervals_) return cum_v_.back();
    const double x0 = static_cast<double>(i) * h;
    const double dx = x - x0;
    if (dx < 1e-15) return cum_v_[i];
    if (kind_ == Kind::Samples) {
        // exact for the linear interpolant
        return cum_v_[i] + 0.5 * dx * (node_values_[i] + evaluate_raw(x));
    }
    Complex tail{0.0, 0.0};
    for (int g = 0; g < 5; ++g)
        tail += kGaussWeight[g] * evaluate_raw(x0 + 0.5 * dx * (1.0 + kGaussNode[g]));
    return cum_v_[i] + 0.5 * dx * tail;
}

Complex Potential::second_order_term(double x) const {
    check_domain(x);
    const double h = kPi / static_cast<double>(table_intervals_);
    double u = std::clamp(x / h, 0.0, static_cast<double>(table_intervals_));
    auto i = static_cast<std::size_t>(u);
    Complex integral;
    if (i == table_intervals_) {
        integral = cum_vv1_.back();
    } else {
        const double x0 = static_cast<double>(i) * h;
        const double dx = x - x0;
        if (dx < 1e-15) {
            integral = cum_vv1_[i];
        } else if (kind_ == Kind::Samples) {
            const Complex w0 = node_values_[i] * cum_v_[i];
            const Complex w1 = evaluate_raw(x) * antiderivative(x);
            integral = cum_vv1_[i] + 0.5 * dx * (w0 + w1);
        } else {
            Complex tail{0.0, 0.0};
            for (int g = 0; g < 5; ++g) {
                const double s = x0 + 0.5 * dx * (1.0 + kGaussNode[g]);
                tail += kGaussWeight[g] * evaluate_raw(s) * antiderivative(s);
            }
            integral = cum_vv1_[i] + 0.5 * dx * tail;
        }
    }
    return integral - evaluate_raw(x) + node_values_.front();
}

Potential Potential::mean_centered() const {
    if (std::abs(mean_) == 0.0) return *this;
    return shifted(-mean_);
}

Potential Potential::conjugated() const {
    switch (kind_) {
        case Kind::Mathieu:
            return mathieu(std::conj(qcoef_), table_intervals_);
        case Kind::Fourier: {
            auto cc = cos_coeffs_;
            auto sc = sin_coeffs_;
            for (auto& c : cc) c = std::conj(c);
            for (auto& c : sc) c = std::conj(c);
            return fourier(std::move(cc), std::move(sc), table_intervals_);
        }
        case Kind::Samples: {
            GridFunction g = sample_values_;
            for (auto& v : g.values()) v = std::conj(v);
            return samples(std::move(g));
        }
    }
    return *this;
}

Potential Potential::shifted(Complex c) const {
    switch (kind_) {
        case Kind::Mathieu: {
            // becomes a plain cosine series: c + 2q cos(2x)
            return fourier({c, Complex{0.0, 0.0}, 2.0 * qcoef_}, {}, table_intervals_);
        }
        case Kind::Fourier: {
            auto cc = cos_coeffs_;
            if (cc.empty()) cc.resize(1, Complex{0.0, 0.0});
            cc[0] += c;
            return fourier(std::move(cc), sin_coeffs_, table_intervals_);
        }
        case Kind::Samples: {
            GridFunction g = sample_values_;
            for (auto& v : g.values()) v += c;
            return samples(std::move(g));
        }
    }
    return *this;
}

}  // namespace revival
