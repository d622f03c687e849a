#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>

#include "eprsim/errors.hpp"

namespace eprsim {

/// Real Hadamard matrix in raw +-1 integer form.  The 1/sqrt(order)
/// normalization is applied lazily where a formula needs it, so validation
/// stays exact integer arithmetic.
class HadamardMatrix {
  public:
    explicit HadamardMatrix(Eigen::MatrixXi entries);

    int order() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXi& entries() const { return entries_; }

    /// h_{i,j} with 1-based indices, values in {-1,+1}.
    int at(int i, int j) const { return entries_(i - 1, j - 1); }

    /// Normalized form H/sqrt(order); squares to the identity when the raw
    /// matrix is symmetric.
    Eigen::MatrixXd normalized() const;

    bool operator==(const HadamardMatrix& other) const {
        return entries_ == other.entries_;
    }

  private:
    Eigen::MatrixXi entries_;
};

struct HadamardValidation {
    bool is_hadamard = false;   // H * H^T == order * I
    bool is_symmetric = false;  // H == H^T
    bool is_normalized = false; // first row and column all +1
    bool accepted() const { return is_hadamard && is_symmetric && is_normalized; }
};

/// Sylvester construction of order 2^exponent.  Symmetric and normalized by
/// construction.  exponent must be <= 12 (order <= 4096).
HadamardMatrix sylvester_hadamard(int exponent);

/// Exact integer checks on a square +-1 candidate.  Throws FormatError when
/// the matrix is not square or has an entry outside {-1,+1}.
HadamardValidation validate_hadamard(const Eigen::MatrixXi& candidate);

/// File format: line 1 = order; then `order` lines of space-separated +1/-1.
/// load runs validate_hadamard and rejects candidates that fail it.
HadamardMatrix load_hadamard(const std::filesystem::path& path);
void save_hadamard(const HadamardMatrix& m, const std::filesystem::path& path);

/// Parse from text (same format as the file); exposed for tests and stdin use.
HadamardMatrix parse_hadamard(const std::string& text);
std::string format_hadamard(const HadamardMatrix& m);

/// Format-level parse only (square, +-1 entries); the caller decides what to
/// do with the validation flags.
Eigen::MatrixXi parse_hadamard_raw(const std::string& text);

} // namespace eprsim
