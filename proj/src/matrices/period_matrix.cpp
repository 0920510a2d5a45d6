#include "periods/matrices/period_matrix.hpp"

#include "periods/numkernel/errors.hpp"

#include <stdexcept>

namespace periods::matrices {

const BigFloat& PeriodMatrix::diagnostic(const std::string& key) const
{
    for (const Diagnostic& d : diagnostics)
        if (d.name == key) return d.value;
    throw std::out_of_range("no diagnostic named " + key);
}

ApproxComplex determinant(std::vector<std::vector<ApproxComplex>> a, int prec)
{
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    ApproxComplex det(1, prec);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (a[i][k].abs() > a[pivot][k].abs()) pivot = i;
        if (a[pivot][k].is_zero()) return ApproxComplex(prec);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            ApproxComplex f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

ApproxComplex determinant(const PeriodMatrix& m)
{
    if (!m.is_square()) throw DomainError("determinant of a non-square period matrix");
    return determinant(m.entries, m.prec);
}

const char* to_string(Status s)
{
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skipped:
    default:
        return "skipped";
    }
}

} // namespace periods::matrices
