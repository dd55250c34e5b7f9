#include "twinrep/matrix.hpp"

namespace twinrep {

QMatrix specialize(const RfMatrix& m, const Rational& t0) {
    QMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out.at(i, j) = m.at(i, j).eval(t0);
        }
    }
    return out;
}

} // namespace twinrep
