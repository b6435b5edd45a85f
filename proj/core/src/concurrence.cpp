#include "xent/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xent/oracle.hpp"

namespace xent {

namespace {

struct PairQubits {
    int hi;    // more significant qubit of the SO(4) pair
    int lo;
    int solo;  // qubit carrying sigma_y
};

PairQubits pair_qubits(Partition p) {
    switch (p) {
        case Partition::q12_3: return {1, 2, 3};
        case Partition::q13_2: return {1, 3, 2};
        default: return {2, 3, 1};
    }
}

// The six antisymmetric 4x4 generators as L = E_{row,col} - E_{col,row}.
// 1 and 2 are the anti-diagonal pair fixed as (-1,0,0,1) and (0,-1,1,0)
// read from the top right; the rest are the rotations on the remaining
// index pairs.
void generator_pair(int ell, int& row, int& col) {
    switch (ell) {
        case 1: row = 3; col = 0; break;
        case 2: row = 2; col = 1; break;
        case 3: row = 0; col = 1; break;
        case 4: row = 0; col = 2; break;
        case 5: row = 1; col = 3; break;
        default: row = 2; col = 3; break;
    }
}

// Block pairs coupled by the two anti-diagonal generators, 0-based. Derived
// from the embedded matrices (the product of an L entry at (x,3-x) and a
// sigma_y entry lands on basis pairs (m, 7-m)); the dense-oracle term
// comparison pins this table down.
constexpr int kBlockPair[3][2][2] = {
    {{0, 1}, {2, 3}},  // 12|3
    {{0, 2}, {1, 3}},  // 13|2
    {{0, 3}, {1, 2}},  // 23|1
};

double term_from_sqrts(const std::array<double, 4>& s) {
    const double top = *std::max_element(s.begin(), s.end());
    const double sum = s[0] + s[1] + s[2] + s[3];
    return std::max(0.0, 2.0 * top - sum);
}

double closed_form_term(const XState& s, int part, int ell) {
    std::array<double, 4> roots{};
    for (int i = 0; i < 2; ++i) {
        const std::size_t m = std::size_t(kBlockPair[part][ell - 1][i]);
        const double g = std::sqrt(s.block_a(m) * s.block_b(m));
        const double c = std::abs(s.block_c(m));
        roots[2 * i] = g + c;
        roots[2 * i + 1] = std::abs(g - c);
    }
    return term_from_sqrts(roots);
}

double tau3_from_terms(const std::array<std::array<double, 6>, 3>& terms) {
    double sq = 0.0;
    for (const auto& row : terms)
        for (double t : row) sq += t * t;
    return std::sqrt(sq / 3.0);
}

int count_nonzero(const std::array<std::array<double, 6>, 3>& terms) {
    int n = 0;
    for (const auto& row : terms)
        for (double t : row) n += t > 0.0 ? 1 : 0;
    return n;
}

void require_three_qubits(const XState& s) {
    if (s.qubits() != 3)
        throw std::invalid_argument("concurrence: three qubits required");
}

}  // namespace

const char* partition_name(Partition p) {
    switch (p) {
        case Partition::q12_3: return "12|3";
        case Partition::q13_2: return "13|2";
        default: return "23|1";
    }
}

std::vector<GeneratorSpec> build_generators() {
    std::vector<GeneratorSpec> out;
    out.reserve(18);
    const Partition parts[3] = {Partition::q12_3, Partition::q13_2, Partition::q23_1};
    for (Partition part : parts) {
        const PairQubits pq = pair_qubits(part);
        const int shift_hi = 3 - pq.hi;
        const int shift_lo = 3 - pq.lo;
        const int shift_solo = 3 - pq.solo;
        for (int ell = 1; ell <= 6; ++ell) {
            int lr, lc;
            generator_pair(ell, lr, lc);
            DenseOperator m(8);
            for (unsigned r = 0; r < 8; ++r)
                for (unsigned c = 0; c < 8; ++c) {
                    const int pr = 2 * ((r >> shift_hi) & 1) + ((r >> shift_lo) & 1);
                    const int pc = 2 * ((c >> shift_hi) & 1) + ((c >> shift_lo) & 1);
                    double lv = 0.0;
                    if (pr == lr && pc == lc) lv = 1.0;
                    if (pr == lc && pc == lr) lv = -1.0;
                    if (lv == 0.0) continue;
                    const int sr = (r >> shift_solo) & 1;
                    const int sc = (c >> shift_solo) & 1;
                    if (sr == sc) continue;
                    const cx sy = sr == 0 ? cx{0.0, -1.0} : cx{0.0, 1.0};
                    m(r, c) = lv * sy;
                }
            out.push_back({part, ell, std::move(m)});
        }
    }
    return out;
}

ConcurrenceReport concurrence_terms_x(const XState& s) {
    require_three_qubits(s);
    ConcurrenceReport rep{};
    for (int part = 0; part < 3; ++part) {
        for (int ell = 1; ell <= 2; ++ell)
            rep.terms[part][ell - 1] = closed_form_term(s, part, ell);
        for (int ell = 3; ell <= 6; ++ell) rep.terms[part][ell - 1] = 0.0;
    }
    rep.tau3 = tau3_from_terms(rep.terms);
    rep.nonzero_term_count = count_nonzero(rep.terms);
    return rep;
}

ConcurrenceReport concurrence_terms_oracle(const XState& s) {
    require_three_qubits(s);
    const DenseOperator rho = to_dense(s);
    ConcurrenceReport rep{};
    for (const GeneratorSpec& g : build_generators()) {
        const std::vector<double> vals = oracle::psd_product_eigenvalues(rho, g.matrix);
        std::array<double, 4> roots{};
        for (int i = 0; i < 4; ++i) roots[i] = std::sqrt(std::max(0.0, vals[i]));
        const int part = int(g.partition);
        rep.terms[part][g.ell - 1] = term_from_sqrts(roots);
    }
    rep.tau3 = tau3_from_terms(rep.terms);
    rep.nonzero_term_count = count_nonzero(rep.terms);
    return rep;
}

double tau3_dephasing_single_ghz(double a, double c, double p) {
    const double b = 1.0 - a;
    if (a < 0.0 || b < 0.0 || c * c > a * b + 1e-12)
        throw std::invalid_argument("tau3_dephasing_single_ghz: invalid block");
    const double g = std::sqrt(a * b);
    const double ct = std::abs(c) * std::pow(1.0 - p, 1.5);
    return std::max(0.0, (g + ct) - std::abs(g - ct));
}

double tau3_depolarizing_single_ghz(double a, double c, double p) {
    const double b = 1.0 - a;
    if (a < 0.0 || b < 0.0 || c * c > a * b + 1e-12)
        throw std::invalid_argument("tau3_depolarizing_single_ghz: invalid block");
    const double q = 0.5 * p;
    const double keep = 1.0 - q;
    // Diagonal pair of the coherent block and the (equal) products of the
    // three Hamming-distance partner blocks after depolarizing.
    const double big_a = a * keep * keep * keep + b * q * q * q;
    const double big_b = a * q * q * q + b * keep * keep * keep;
    const double side = q * q * keep * keep * (a * keep + b * q) * (a * q + b * keep);
    const double ct = std::abs(c) * (1.0 - p) * (1.0 - p) * (1.0 - p);
    return std::max(0.0, 2.0 * std::min(std::sqrt(big_a * big_b), ct) - 2.0 * std::sqrt(side));
}

Balance classify_balance(const XState& s, const GeneratorSpec& g) {
    // rho_tilde is X-shaped but in general not Hermitian, so it is examined
    // as a dense matrix.
    const DenseOperator rho = to_dense(s);
    const DenseOperator rt = rho * g.matrix * rho.conjugate() * g.matrix;
    const double tol = 1e-12 * std::max(1.0, rt.max_abs());
    const std::size_t dim = rt.dim();
    for (std::size_t m = 0; m < dim; ++m) {
        if (std::abs(rt(m, m)) > tol && std::abs(rt(m, dim - 1 - m)) <= tol)
            return Balance::unbalanced;
    }
    return Balance::balanced;
}

std::vector<TermClassCount> enumerate_nqubit_terms(int n) {
    std::vector<TermClassCount> out;
    if (n == 3) {
        for (const char* p : {"12|3", "13|2", "23|1"})
            out.push_back({p, "SO(4)xSO(2) anti-diagonal", 2});
    } else if (n == 4) {
        for (const char* p : {"12|34", "13|24", "14|23"})
            out.push_back({p, "SO(4)xSO(4) anti-diagonal", 4});
        for (const char* p : {"123|4", "124|3", "134|2", "234|1"})
            out.push_back({p, "SO(8)xSO(2) anti-diagonal", 4});
    } else {
        throw std::invalid_argument("enumerate_nqubit_terms: n must be 3 or 4");
    }
    return out;
}

int total_term_count(int n) {
    int total = 0;
    for (const auto& t : enumerate_nqubit_terms(n)) total += t.count;
    return total;
}

}  // namespace xent
