#pragma once

#include <Eigen/Dense>
#include <complex>

namespace eprsim {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline double unitarity_deviation(const Mat& m) {
    return (m * m.adjoint() - Mat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

inline bool is_unitary(const Mat& m, double tol = 1e-10) {
    return m.rows() == m.cols() && unitarity_deviation(m) <= tol;
}

inline bool is_unit_norm(const Vec& v, double tol = 1e-12) {
    return std::abs(v.norm() - 1.0) <= tol;
}

// Largest |entry| of A - B; matrices must be same shape.
inline double max_abs_diff(const Mat& a, const Mat& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

// Distance up to a global +-1 factor.
inline double max_abs_diff_up_to_sign(const Mat& a, const Mat& b) {
    return std::min(max_abs_diff(a, b), max_abs_diff(a, Mat(-b)));
}

} // namespace eprsim
