#include "xent/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xent {

DenseOperator DenseOperator::identity(std::size_t dim) {
    DenseOperator m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = cx{1.0, 0.0};
    return m;
}

DenseOperator DenseOperator::from_rows(std::initializer_list<std::initializer_list<cx>> rows) {
    const std::size_t dim = rows.size();
    DenseOperator m(dim);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != dim) throw std::invalid_argument("from_rows: ragged row");
        std::size_t c = 0;
        for (const auto& v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

DenseOperator DenseOperator::operator+(const DenseOperator& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("operator+: dimension mismatch");
    DenseOperator m(dim_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

DenseOperator DenseOperator::operator-(const DenseOperator& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("operator-: dimension mismatch");
    DenseOperator m(dim_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

DenseOperator DenseOperator::operator*(const DenseOperator& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("operator*: dimension mismatch");
    DenseOperator m(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const cx aik = a_[i * dim_ + k];
            if (aik == cx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                m.a_[i * dim_ + j] += aik * o.a_[k * dim_ + j];
            }
        }
    }
    return m;
}

DenseOperator& DenseOperator::operator*=(cx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

DenseOperator DenseOperator::transpose() const {
    DenseOperator m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

DenseOperator DenseOperator::conjugate() const {
    DenseOperator m(dim_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = std::conj(a_[i]);
    return m;
}

cx DenseOperator::trace() const {
    cx t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double DenseOperator::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double DenseOperator::max_abs_diff(const DenseOperator& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
    return m;
}

double DenseOperator::hermiticity_defect() const {
    double m = 0.0;
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
    const std::size_t da = a.dim(), db = b.dim();
    DenseOperator m(da * db);
    for (std::size_t ra = 0; ra < da; ++ra)
        for (std::size_t ca = 0; ca < da; ++ca) {
            const cx v = a(ra, ca);
            if (v == cx{0.0, 0.0}) continue;
            for (std::size_t rb = 0; rb < db; ++rb)
                for (std::size_t cb = 0; cb < db; ++cb)
                    m(ra * db + rb, ca * db + cb) = v * b(rb, cb);
        }
    return m;
}

}  // namespace xent
