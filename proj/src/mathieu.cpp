#include "revival/mathieu.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace revival {

namespace {

int pick_truncation(int count, int truncation) {
    if (truncation == 0) truncation = std::max(2 * count, 64);
    if (truncation < std::max(2 * count, 32))
        throw std::invalid_argument("matrix truncation must be at least max(2N, 32)");
    return truncation;
}

Eigen::MatrixXcd sine_basis_matrix(Complex q, int dim) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 1; j <= dim; ++j) {
        a(j - 1, j - 1) = Complex(static_cast<double>(j) * static_cast<double>(j), 0.0);
        // 2 cos(2x) sin(jx) = sin((j+2)x) + sin((j-2)x)
        if (j + 2 <= dim) a(j + 1, j - 1) += q;
        if (j - 2 >= 1) a(j - 3, j - 1) += q;
        if (j == 1) a(0, 0) -= q;  // sin((1-2)x) = -sin(x)
    }
    return a;
}

struct Decomposition {
    std::vector<int> assignment;  // eigenvalue column for index j = 1..count
    Eigen::VectorXcd values;
    Eigen::MatrixXcd vectors;
};

Decomposition decompose(Complex q, int count, int dim) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(sine_basis_matrix(q, dim), true);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Mathieu matrix eigendecomposition failed");

    Decomposition d;
    d.values = solver.eigenvalues();
    d.vectors = solver.eigenvectors();
    d.assignment.resize(static_cast<std::size_t>(count), -1);

    std::vector<int> owner(static_cast<std::size_t>(dim), 0);
    for (int j = 1; j <= count; ++j) {
        const double target = static_cast<double>(j) * static_cast<double>(j);
        int best = -1;
        double best_dist = std::numeric_limits<double>::infinity();
        double second = std::numeric_limits<double>::infinity();
        for (int c = 0; c < dim; ++c) {
            const double dist = std::abs(d.values(c) - Complex(target, 0.0));
            if (dist < best_dist) {
                second = best_dist;
                best_dist = dist;
                best = c;
            } else if (dist < second) {
                second = dist;
            }
        }
        if (second - best_dist < 1e-9 * std::max(1.0, best_dist))
            throw IndexCollisionError(
                "two eigenvalues are equidistant from j^2 at j = " + std::to_string(j));
        if (owner[static_cast<std::size_t>(best)]++)
            throw IndexCollisionError("eigenvalue claimed by two indices near j = " +
                                      std::to_string(j));
        d.assignment[static_cast<std::size_t>(j - 1)] = best;
    }
    return d;
}

std::vector<Complex> se_coefficients(const Decomposition& d, int index) {
    const int col = d.assignment[static_cast<std::size_t>(index - 1)];
    const Eigen::VectorXcd v = d.vectors.col(col);
    std::vector<Complex> coef(static_cast<std::size_t>(v.size()));
    double norm_sq = 0.0;
    double max_abs = 0.0;
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        norm_sq += std::norm(v(k));
        max_abs = std::max(max_abs, std::abs(v(k)));
    }
    // the sines carry L2 norm sqrt(pi/2) each
    const double scale = 1.0 / std::sqrt(norm_sq * kPi / 2.0);
    Complex rotation{1.0, 0.0};
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (std::abs(v(k)) > 1e-8 * max_abs) {
            rotation = std::conj(v(k)) / std::abs(v(k));
            break;
        }
    }
    for (Eigen::Index k = 0; k < v.size(); ++k)
        coef[static_cast<std::size_t>(k)] = v(k) * rotation * scale;
    return coef;
}

}  // namespace

MathieuSpectrum characteristic_values(Complex qcoef, int count, int truncation) {
    if (count < 1) throw std::invalid_argument("mode count must be >= 1");
    const int dim = pick_truncation(count, truncation);
    const auto d = decompose(qcoef, count, dim);
    MathieuSpectrum spec;
    spec.qcoef = qcoef;
    spec.truncation = dim;
    spec.values.reserve(static_cast<std::size_t>(count));
    for (int j = 1; j <= count; ++j)
        spec.values.push_back(d.values(d.assignment[static_cast<std::size_t>(j - 1)]));
    return spec;
}

Complex se_function(Complex qcoef, int index, double x, int truncation) {
    if (index < 1) throw std::invalid_argument("mode index must be >= 1");
    if (x < -1e-12 || x > kPi + 1e-12)
        throw std::domain_error("se function evaluated outside [0,pi]");
    const int dim = pick_truncation(index, truncation);
    const auto d = decompose(qcoef, index, dim);
    const auto coef = se_coefficients(d, index);
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < coef.size(); ++k)
        acc += coef[k] * std::sin(static_cast<double>(k + 1) * x);
    return acc;
}

GridFunction se_function_grid(Complex qcoef, int index, std::size_t intervals,
                              int truncation) {
    if (index < 1) throw std::invalid_argument("mode index must be >= 1");
    const int dim = pick_truncation(index, truncation);
    const auto d = decompose(qcoef, index, dim);
    const auto coef = se_coefficients(d, index);
    GridFunction g(intervals);
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double x = g.node(i);
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < coef.size(); ++k)
            acc += coef[k] * std::sin(static_cast<double>(k + 1) * x);
        g[i] = acc;
    }
    return g;
}

}  // namespace revival
