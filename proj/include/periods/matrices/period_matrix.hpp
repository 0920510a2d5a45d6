#ifndef PERIODS_MATRICES_PERIOD_MATRIX_HPP
#define PERIODS_MATRICES_PERIOD_MATRIX_HPP

#include "periods/numkernel/complex.hpp"

#include <string>
#include <vector>

namespace periods::matrices {

// A named numeric quantity attached to a matrix, usually the gap between
// two independent routes to the same entry.
struct Diagnostic {
    std::string name;
    BigFloat value;
};

// Rows are cycles, columns are forms.
struct PeriodMatrix {
    std::string name;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::vector<std::vector<ApproxComplex>> entries;
    int prec = 0;
    std::vector<Diagnostic> diagnostics;

    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
    bool is_square() const { return rows() == cols(); }
    const ApproxComplex& at(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }
    // Throws std::out_of_range for an unknown name.
    const BigFloat& diagnostic(const std::string& name) const;
};

// Determinant by Gaussian elimination with partial pivoting; DomainError if
// the matrix is not square.
ApproxComplex determinant(const PeriodMatrix& m);
ApproxComplex determinant(std::vector<std::vector<ApproxComplex>> a, int prec);

enum class Status { pass, fail, skipped };

const char* to_string(Status s);

struct CheckResult {
    std::string name;
    Status status = Status::skipped;
    BigFloat defect;
    BigFloat tolerance;
    double elapsed = 0; // seconds
    int prec = 0;       // effective precision
    std::string detail;
};

} // namespace periods::matrices

#endif
