#include "xent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace xent::oracle {

namespace {

double off_diagonal_norm(const DenseOperator& a) {
    const std::size_t n = a.dim();
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// One unitary plane rotation zeroing a(p,q). The 2x2 block is reduced to a
// real symmetric one by splitting off the phase of a(p,q), then rotated with
// the numerically stable tangent choice.
void rotate(DenseOperator& a, DenseOperator& v, std::size_t p, std::size_t q) {
    const cx apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const cx phase = apq / mag;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.dim();
    const cx pc = std::conj(phase);
    for (std::size_t k = 0; k < n; ++k) {
        const cx akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp - s * pc * akq;
        a(k, q) = s * akp + c * pc * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cx apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    a(p, q) = cx{0.0, 0.0};
    a(q, p) = cx{0.0, 0.0};
    a(p, p) = cx{a(p, p).real(), 0.0};
    a(q, q) = cx{a(q, q).real(), 0.0};

    if (v.dim() == n) {
        for (std::size_t k = 0; k < n; ++k) {
            const cx vkp = v(k, p), vkq = v(k, q);
            v(k, p) = c * vkp - s * pc * vkq;
            v(k, q) = s * vkp + c * pc * vkq;
        }
    }
}

Eigensystem jacobi(DenseOperator a, bool want_vectors) {
    const std::size_t n = a.dim();
    if (n == 0) throw std::invalid_argument("jacobi: empty matrix");
    const double scale = std::max(1.0, a.max_abs());
    if (a.hermiticity_defect() > 1e-12 * scale)
        throw std::invalid_argument("jacobi: matrix is not Hermitian");
    // Work on the exactly Hermitian average so rounding in the caller
    // cannot leak into the rotations.
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) {
            const cx m = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = m;
            a(c, r) = std::conj(m);
        }

    DenseOperator v = want_vectors ? DenseOperator::identity(n) : DenseOperator{};
    const double tol = 1e-13 * scale;
    bool converged = false;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_norm(a) <= tol) { converged = true; break; }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > tol / double(n)) rotate(a, v, p, q);
    }
    if (!converged && off_diagonal_norm(a) > tol)
        throw std::runtime_error("jacobi: no convergence in 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    Eigensystem es;
    es.values.resize(n);
    for (std::size_t k = 0; k < n; ++k) es.values[k] = a(order[k], order[k]).real();
    if (want_vectors) {
        es.vectors = DenseOperator(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
    }
    return es;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const DenseOperator& m) {
    return jacobi(m, false).values;
}

Eigensystem hermitian_eigensystem(const DenseOperator& m) {
    return jacobi(m, true);
}

DenseOperator sqrt_psd(const DenseOperator& m) {
    Eigensystem es = hermitian_eigensystem(m);
    const std::size_t n = m.dim();
    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = es.values[k];
        if (lam < -1e-10) throw std::domain_error("sqrt_psd: negative eigenvalue");
        roots[k] = std::sqrt(std::max(lam, 0.0));
    }
    DenseOperator out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            cx acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k)
                acc += es.vectors(r, k) * roots[k] * std::conj(es.vectors(c, k));
            out(r, c) = acc;
        }
    return out;
}

namespace {

int qubit_count(std::size_t dim) {
    int n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if ((std::size_t{1} << n) != dim) throw std::invalid_argument("dimension is not a power of two");
    return n;
}

}  // namespace

DenseOperator partial_transpose(const DenseOperator& m, int qubit) {
    const int n = qubit_count(m.dim());
    if (qubit < 1 || qubit > n) throw std::invalid_argument("partial_transpose: qubit out of range");
    const std::size_t mask = std::size_t{1} << (n - qubit);  // qubit 1 = most significant bit
    DenseOperator out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c) {
            const std::size_t flip = (r ^ c) & mask;
            out(r, c) = m(r ^ flip, c ^ flip);
        }
    return out;
}

DenseOperator partial_trace(const DenseOperator& m, int qubit) {
    const int n = qubit_count(m.dim());
    if (qubit < 1 || qubit > n) throw std::invalid_argument("partial_trace: qubit out of range");
    const std::size_t mask = std::size_t{1} << (n - qubit);
    const std::size_t low = mask - 1;
    const std::size_t half = m.dim() / 2;
    auto embed = [&](std::size_t x, std::size_t b) {
        return ((x & ~low) << 1) | (b ? mask : 0) | (x & low);
    };
    DenseOperator out(half);
    for (std::size_t r = 0; r < half; ++r)
        for (std::size_t c = 0; c < half; ++c)
            out(r, c) = m(embed(r, 0), embed(c, 0)) + m(embed(r, 1), embed(c, 1));
    return out;
}

std::vector<double> psd_product_eigenvalues(const DenseOperator& rho, const DenseOperator& s) {
    const DenseOperator root = sqrt_psd(rho);
    DenseOperator prod = root * s * rho.conjugate() * s.adjoint() * root;
    // Congruence of a PSD operator: Hermitian up to rounding. Average away
    // the noise before the eigensolve.
    for (std::size_t r = 0; r < prod.dim(); ++r)
        for (std::size_t c = r; c < prod.dim(); ++c) {
            const cx m = 0.5 * (prod(r, c) + std::conj(prod(c, r)));
            prod(r, c) = m;
            prod(c, r) = std::conj(m);
        }
    std::vector<double> vals = hermitian_eigenvalues(prod);
    std::sort(vals.begin(), vals.end(), std::greater<double>{});
    for (double& v : vals)
        if (v < 0.0 && v >= -1e-12) v = 0.0;
    return vals;
}

cx trace_product(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("trace_product: dimension mismatch");
    cx t{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) t += a(i, k) * b(k, i);
    return t;
}

}  // namespace xent::oracle
