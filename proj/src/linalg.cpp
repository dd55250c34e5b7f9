#include "twinrep/linalg.hpp"

#include <algorithm>

namespace twinrep {

std::vector<std::size_t> rref(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m.at(pivot, j), m.at(row, j));
            }
        }
        Rational lead = m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) {
            m.at(row, j) /= lead;
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) {
                continue;
            }
            Rational factor = m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                m.at(r, j) -= factor * m.at(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

namespace {

QVector normalize_integer(QVector v) {
    Int lcm(1);
    for (const auto& q : v) {
        Int den = rational_den(q);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    Int content(0);
    for (auto& q : v) {
        q *= Rational(lcm);
        content = boost::multiprecision::gcd(content, rational_num(q));
    }
    if (content == 0) {
        return v;
    }
    const Rational scale(content);
    for (auto& q : v) {
        q /= scale;
    }
    for (const auto& q : v) {
        if (q != 0) {
            if (q < 0) {
                for (auto& x : v) {
                    x = -x;
                }
            }
            break;
        }
    }
    return v;
}

} // namespace

std::vector<QVector> nullspace(const QMatrix& m) {
    QMatrix r = m;
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) {
        is_pivot[c] = true;
    }
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        QVector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t row = 0; row < pivots.size(); ++row) {
            v[pivots[row]] = -r.at(row, free);
        }
        basis.push_back(normalize_integer(std::move(v)));
    }
    return basis;
}

QMatrix vstack(const std::vector<QMatrix>& blocks) {
    if (blocks.empty()) {
        return QMatrix(0, 0);
    }
    std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) {
            throw Error(ErrorKind::DegreeMismatch, "stacked blocks must share the column count");
        }
        rows += b.rows();
    }
    QMatrix out(rows, cols);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                out.at(offset + r, c) = b.at(r, c);
            }
        }
        offset += b.rows();
    }
    return out;
}

} // namespace twinrep
