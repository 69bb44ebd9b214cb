#include "polymaass/linalg.hpp"

namespace pm {

RowEchelon row_reduce(RMatrix m) {
    RowEchelon out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index piv = row;
        while (piv < rows && m(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != row) m.row(piv).swap(m.row(row));
        const Rational inv = Rational(1) / m(row, col);
        for (Eigen::Index j = col; j < cols; ++j) m(row, j) *= inv;
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (Eigen::Index j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

Eigen::Index rank(const RMatrix& m) { return static_cast<Eigen::Index>(row_reduce(m).pivots.size()); }

std::vector<RVector> kernel(const RMatrix& m) {
    const RowEchelon e = row_reduce(m);
    const Eigen::Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (auto p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<RVector> basis;
    for (Eigen::Index free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        RVector v = RVector::Zero(cols);
        v(free) = Rational(1);
        for (size_t i = 0; i < e.pivots.size(); ++i)
            v(e.pivots[i]) = -e.reduced(static_cast<Eigen::Index>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RVector> solve(const RMatrix& a, const RVector& b) {
    RMatrix aug(a.rows(), a.cols() + 1);
    aug << a, b;
    const RowEchelon e = row_reduce(aug);
    RVector x = RVector::Zero(a.cols());
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == a.cols()) return std::nullopt;
        x(e.pivots[i]) = e.reduced(static_cast<Eigen::Index>(i), a.cols());
    }
    return x;
}

std::optional<RMatrix> inverse(const RMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const Eigen::Index n = m.rows();
    RMatrix aug(n, 2 * n);
    aug << m, RMatrix::Identity(n, n);
    const RowEchelon e = row_reduce(aug);
    if (static_cast<Eigen::Index>(e.pivots.size()) < n || (n > 0 && e.pivots[static_cast<size_t>(n - 1)] >= n))
        return std::nullopt;
    return RMatrix(e.reduced.rightCols(n));
}

bool is_zero(const RMatrix& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

nlohmann::json matrix_to_json(const RMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RMatrix matrix_from_json(const nlohmann::json& j, Eigen::Index rows, Eigen::Index cols) {
    RMatrix m = RMatrix::Zero(rows, cols);
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
        throw std::invalid_argument("matrix has wrong row count");
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw std::invalid_argument("matrix has wrong column count");
        for (Eigen::Index c = 0; c < cols; ++c) {
            const auto& e = row[static_cast<size_t>(c)];
            m(i, c) = e.is_string() ? Rational::parse(e.get<std::string>()) : Rational(e.get<long>());
        }
    }
    return m;
}

}  // namespace pm
