#include "eprsim/hadamard.hpp"

#include <fstream>
#include <sstream>

namespace eprsim {

HadamardMatrix::HadamardMatrix(Eigen::MatrixXi entries) : entries_(std::move(entries)) {
    auto report = validate_hadamard(entries_);
    if (!report.accepted()) {
        throw FormatError("matrix is not a normalized symmetric Hadamard matrix");
    }
}

Eigen::MatrixXd HadamardMatrix::normalized() const {
    return entries_.cast<double>() / std::sqrt(static_cast<double>(order()));
}

HadamardMatrix sylvester_hadamard(int exponent) {
    if (exponent < 0 || exponent > 12) {
        throw SizeError("Sylvester exponent must be in [0, 12]");
    }
    Eigen::MatrixXi h(1, 1);
    h(0, 0) = 1;
    for (int e = 0; e < exponent; ++e) {
        const int n = static_cast<int>(h.rows());
        Eigen::MatrixXi next(2 * n, 2 * n);
        next.topLeftCorner(n, n) = h;
        next.topRightCorner(n, n) = h;
        next.bottomLeftCorner(n, n) = h;
        next.bottomRightCorner(n, n) = -h;
        h = std::move(next);
    }
    return HadamardMatrix(std::move(h));
}

HadamardValidation validate_hadamard(const Eigen::MatrixXi& candidate) {
    if (candidate.rows() == 0 || candidate.rows() != candidate.cols()) {
        throw FormatError("Hadamard candidate must be square and non-empty");
    }
    for (Eigen::Index i = 0; i < candidate.rows(); ++i) {
        for (Eigen::Index j = 0; j < candidate.cols(); ++j) {
            if (candidate(i, j) != 1 && candidate(i, j) != -1) {
                throw FormatError("Hadamard candidate entries must be +1 or -1");
            }
        }
    }
    const int n = static_cast<int>(candidate.rows());
    HadamardValidation report;
    Eigen::MatrixXi gram = candidate * candidate.transpose();
    report.is_hadamard = (gram == n * Eigen::MatrixXi::Identity(n, n));
    report.is_symmetric = (candidate == candidate.transpose());
    report.is_normalized = true;
    for (int i = 0; i < n; ++i) {
        if (candidate(0, i) != 1 || candidate(i, 0) != 1) {
            report.is_normalized = false;
            break;
        }
    }
    return report;
}

Eigen::MatrixXi parse_hadamard_raw(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty Hadamard file");
    int order = 0;
    try {
        order = std::stoi(line);
    } catch (const std::exception&) {
        throw FormatError("first line must be the matrix order");
    }
    if (order <= 0 || order > 4096) throw FormatError("unsupported Hadamard order");
    Eigen::MatrixXi m(order, order);
    for (int i = 0; i < order; ++i) {
        if (!std::getline(in, line)) throw FormatError("missing matrix row");
        std::istringstream row(line);
        std::string tok;
        int j = 0;
        while (row >> tok) {
            if (j >= order) throw FormatError("row has too many entries");
            if (tok == "+1" || tok == "1") {
                m(i, j) = 1;
            } else if (tok == "-1") {
                m(i, j) = -1;
            } else {
                throw FormatError("entries must be +1 or -1, got '" + tok + "'");
            }
            ++j;
        }
        if (j != order) throw FormatError("row has wrong length");
    }
    return m;
}

HadamardMatrix parse_hadamard(const std::string& text) {
    Eigen::MatrixXi m = parse_hadamard_raw(text);
    auto report = validate_hadamard(m);
    if (!report.accepted()) {
        std::string why;
        if (!report.is_hadamard) why += " not-Hadamard";
        if (!report.is_symmetric) why += " not-symmetric";
        if (!report.is_normalized) why += " not-normalized";
        throw FormatError("validation failed:" + why);
    }
    return HadamardMatrix(std::move(m));
}

std::string format_hadamard(const HadamardMatrix& m) {
    std::ostringstream out;
    out << m.order() << "\n";
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            if (j) out << ' ';
            out << (m.entries()(i, j) > 0 ? "+1" : "-1");
        }
        out << "\n";
    }
    return out.str();
}

HadamardMatrix load_hadamard(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open Hadamard file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hadamard(buf.str());
}

void save_hadamard(const HadamardMatrix& m, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write Hadamard file: " + path.string());
    out << format_hadamard(m);
}

} // namespace eprsim
