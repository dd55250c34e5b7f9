#pragma once

#include <vector>

#include "twinrep/matrix.hpp"

namespace twinrep {

using QVector = std::vector<Rational>;

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> rref(QMatrix& m);

/// Basis of the right nullspace { v : m v = 0 }, one vector per free column
/// in ascending column order. Each vector is scaled to integer coordinates
/// with content 1 and positive first nonzero entry.
std::vector<QVector> nullspace(const QMatrix& m);

/// Stacks matrices vertically; all must share the column count.
QMatrix vstack(const std::vector<QMatrix>& blocks);

} // namespace twinrep
