#include "xent/membership.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xent {

namespace {

constexpr double kZeroTol = 1e-12;
constexpr double kCertTol = 1e-8;

struct BlockData {
    double sigma;  // a + b
    double delta;  // a - b
    double u;      // Re c
    double v;      // Im c
};

std::vector<BlockData> block_data(const XState& s) {
    std::vector<BlockData> out(s.blocks());
    for (std::size_t l = 0; l < s.blocks(); ++l) {
        out[l] = {s.block_a(l) + s.block_b(l), s.block_a(l) - s.block_b(l),
                  s.block_c(l).real(), s.block_c(l).imag()};
    }
    return out;
}

// Split weights of one block for a given mixing parameter m = |alpha|^2 -
// |beta|^2. s_k + s_kbar = sigma is forced; the difference is delta / m.
bool split_weights(const BlockData& b, double m, double& sk, double& skb) {
    if (std::abs(m) < 1e-14) {
        if (std::abs(b.delta) > kZeroTol) return false;
        sk = skb = 0.5 * b.sigma;
        return true;
    }
    sk = 0.5 * (b.sigma + b.delta / m);
    skb = 0.5 * (b.sigma - b.delta / m);
    return true;
}

// Constraint violation of the pinned-phase equations at (m, theta): the
// coherence of every block must decompose as r e^{i theta} t_k +
// r e^{-i theta} t_kbar with |t| bounded by the corresponding weight sum.
double pinned_violation(const std::vector<BlockData>& blocks, double m, double theta) {
    const double r = 0.5 * std::sqrt(std::max(0.0, 1.0 - m * m));
    const double ct = std::cos(theta), st = std::sin(theta);
    if (r < 1e-9 || std::abs(ct) < 1e-12 || std::abs(st) < 1e-12)
        return 1e100;
    double worst = 0.0;
    for (const BlockData& b : blocks) {
        double sk, skb;
        if (!split_weights(b, m, sk, skb)) return 1e100;
        const double tk = (b.u / ct + b.v / st) / (2.0 * r);
        const double tkb = (b.u / ct - b.v / st) / (2.0 * r);
        worst = std::max({worst, -sk, -skb, std::abs(tk) - sk, std::abs(tkb) - skb});
    }
    return worst;
}

struct Assignment {
    double m;
    double theta;
    std::vector<double> lp, lm;  // indexed by basis state k
};

void store_block(Assignment& a, std::size_t l, std::size_t dim, double sk, double tk,
                 double skb, double tkb) {
    a.lp[l] = std::max(0.0, 0.5 * (sk + tk));
    a.lm[l] = std::max(0.0, 0.5 * (sk - tk));
    a.lp[dim - 1 - l] = std::max(0.0, 0.5 * (skb + tkb));
    a.lm[dim - 1 - l] = std::max(0.0, 0.5 * (skb - tkb));
}

// Weights at a pinned generic phase; both t components are determined.
Assignment assignment_pinned(const std::vector<BlockData>& blocks, std::size_t dim,
                             double m, double theta) {
    Assignment a{m, theta, std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
    const double r = 0.5 * std::sqrt(std::max(0.0, 1.0 - m * m));
    const double ct = std::cos(theta), st = std::sin(theta);
    for (std::size_t l = 0; l < blocks.size(); ++l) {
        double sk = 0.0, skb = 0.0;
        split_weights(blocks[l], m, sk, skb);
        sk = std::max(sk, 0.0);
        skb = std::max(skb, 0.0);
        double tk = (blocks[l].u / ct + blocks[l].v / st) / (2.0 * r);
        double tkb = (blocks[l].u / ct - blocks[l].v / st) / (2.0 * r);
        tk = std::clamp(tk, -sk, sk);
        tkb = std::clamp(tkb, -skb, skb);
        store_block(a, l, dim, sk, tk, skb, tkb);
    }
    return a;
}

// Weights on a coordinate axis (theta = 0 keeps coherences real, pi/2
// imaginary). Only the combination t_k + t_kbar (real) or t_k - t_kbar
// (imaginary) is constrained, so each block picks the middle of its
// feasible interval.
Assignment assignment_axis(const std::vector<BlockData>& blocks, std::size_t dim,
                           double m, bool imaginary) {
    Assignment a{m, imaginary ? std::numbers::pi / 2.0 : 0.0,
                 std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
    const double r = 0.5 * std::sqrt(std::max(0.0, 1.0 - m * m));
    for (std::size_t l = 0; l < blocks.size(); ++l) {
        double sk = 0.0, skb = 0.0;
        split_weights(blocks[l], m, sk, skb);
        sk = std::max(sk, 0.0);
        skb = std::max(skb, 0.0);
        const double target = imaginary ? blocks[l].v : blocks[l].u;
        const double total = r > 1e-300 ? target / r : 0.0;
        // t_k interval: |t_k| <= sk and |t_kbar| <= skb with
        // t_kbar = total - t_k (real) or t_k - total (imaginary); both give
        // the same interval [total - skb, total + skb] intersect [-sk, sk].
        double t_lo = std::max(-sk, total - skb);
        double t_hi = std::min(sk, total + skb);
        double tk = std::clamp(0.5 * (t_lo + t_hi), -sk, sk);
        double tkb = std::clamp(imaginary ? tk - total : total - tk, -skb, skb);
        store_block(a, l, dim, sk, tk, skb, tkb);
    }
    return a;
}

GeneralizedGhzDiagonalSpec to_spec(int n, const Assignment& a) {
    GeneralizedGhzDiagonalSpec spec;
    spec.n = n;
    const double amp_a = std::sqrt(0.5 * (1.0 + a.m));
    const double amp_b = std::sqrt(0.5 * (1.0 - a.m));
    spec.alpha = cx{amp_a, 0.0};
    spec.beta = amp_b * cx{std::cos(-a.theta), std::sin(-a.theta)};
    spec.lambda_plus = a.lp;
    spec.lambda_minus = a.lm;
    double sum = 0.0;
    for (std::size_t k = 0; k < a.lp.size(); ++k) sum += a.lp[k] + a.lm[k];
    if (sum > 0.0) {
        for (double& x : spec.lambda_plus) x /= sum;
        for (double& x : spec.lambda_minus) x /= sum;
    }
    return spec;
}

double reconstruction_error(const XState& target, const GeneralizedGhzDiagonalSpec& spec) {
    const XState rebuilt = from_generalized_ghz_diagonal(spec);
    double err = 0.0;
    for (std::size_t i = 0; i < target.dim(); ++i)
        err = std::max(err, std::abs(rebuilt.d(i) - target.d(i)));
    for (std::size_t l = 0; l < target.blocks(); ++l)
        err = std::max(err, std::abs(rebuilt.block_c(l) - target.block_c(l)));
    return err;
}

std::optional<MembershipReport> certify(const XState& s, const Assignment& a,
                                        const std::string& how) {
    GeneralizedGhzDiagonalSpec spec = to_spec(s.qubits(), a);
    if (reconstruction_error(s, spec) > kCertTol) return std::nullopt;
    MembershipReport rep;
    rep.status = MembershipStatus::member_by_construction;
    rep.witness = std::move(spec);
    rep.note = how;
    return rep;
}

// Exact decision when every coherence is real (or every one imaginary):
// feasibility reduces to finding m with |m| >= max |delta|/sigma and
// sqrt(1-m^2) >= max 2|w|/sigma, which exists iff the two maxima lie in
// the unit disk.
MembershipReport axis_route(const XState& s, const std::vector<BlockData>& blocks,
                            bool imaginary) {
    double mu = 0.0, nu = 0.0;
    for (const BlockData& b : blocks) {
        if (b.sigma <= kZeroTol) continue;
        mu = std::max(mu, std::abs(b.delta) / b.sigma);
        const double w = imaginary ? b.v : b.u;
        nu = std::max(nu, 2.0 * std::abs(w) / b.sigma);
    }
    if (mu * mu + nu * nu > 1.0 + 1e-10) {
        MembershipReport rep;
        rep.status = MembershipStatus::excluded;
        rep.note = std::string("no nonnegative weight assignment exists for any (alpha, beta); ") +
                   (imaginary ? "all-imaginary" : "all-real") +
                   " coherences make the search exhaustive";
        return rep;
    }
    const double m = std::sqrt(std::max(0.0, 0.5 * (mu * mu + 1.0 - nu * nu)));
    const Assignment a = assignment_axis(blocks, s.dim(), m, imaginary);
    if (auto rep = certify(s, a, imaginary ? "constructed with purely imaginary alpha beta*"
                                           : "constructed with real alpha beta*"))
        return *rep;
    MembershipReport rep;
    rep.status = MembershipStatus::undecided;
    rep.note = "feasibility test passed but the reconstruction certificate failed";
    return rep;
}

MembershipReport generic_route(const XState& s, const std::vector<BlockData>& blocks) {
    const std::size_t dim = s.dim();

    // Coarse grid over theta and the magnitude of m; the half-step offset
    // keeps theta away from multiples of pi/2, which belong to the exact
    // axis routes.
    std::vector<double> mags;
    for (int i = 0; i < 96; ++i)
        mags.push_back(1e-5 * std::pow(0.3 / 1e-5, i / 95.0));
    for (int i = 0; i < 160; ++i)
        mags.push_back(0.3 + (0.99985 - 0.3) * i / 159.0);

    double best_f = 1e100, best_m = 0.1, best_t = 0.7;
    for (int it = 0; it < 384; ++it) {
        const double theta = -std::numbers::pi + (it + 0.5) * (2.0 * std::numbers::pi / 384.0);
        for (double mag : mags)
            for (double sign : {1.0, -1.0}) {
                const double f = pinned_violation(blocks, sign * mag, theta);
                if (f < best_f) {
                    best_f = f;
                    best_m = sign * mag;
                    best_t = theta;
                }
            }
    }

    double span_m = 0.01, span_t = 2.0 * std::numbers::pi / 384.0;
    for (int round = 0; round < 40; ++round) {
        double rb_f = best_f, rb_m = best_m, rb_t = best_t;
        for (int i = -2; i <= 2; ++i)
            for (int j = -2; j <= 2; ++j) {
                double m = std::clamp(best_m + i * span_m * 0.5, -0.99999999, 0.99999999);
                if (std::abs(m) < 1e-12) m = m < 0.0 ? -1e-12 : 1e-12;
                const double theta = best_t + j * span_t * 0.5;
                const double f = pinned_violation(blocks, m, theta);
                if (f < rb_f) {
                    rb_f = f;
                    rb_m = m;
                    rb_t = theta;
                }
            }
        best_f = rb_f;
        best_m = rb_m;
        best_t = rb_t;
        span_m *= 0.45;
        span_t *= 0.45;
    }

    if (best_f <= 1e-9) {
        const Assignment a = assignment_pinned(blocks, dim, best_m, best_t);
        if (auto rep = certify(s, a, "constructed at a generic alpha beta* phase"))
            return *rep;
    }
    MembershipReport rep;
    rep.status = MembershipStatus::undecided;
    rep.note = "no weight assignment found; generic-phase search is not exhaustive";
    return rep;
}

}  // namespace

MembershipReport is_generalized_ghz_diagonal(const XState& s) {
    if (s.qubits() != 2 && s.qubits() != 3)
        throw std::invalid_argument("is_generalized_ghz_diagonal: supported for 2 or 3 qubits");
    if (!validate(s).ok())
        throw std::invalid_argument("is_generalized_ghz_diagonal: state fails validation");

    const std::vector<BlockData> blocks = block_data(s);

    bool any_c = false;
    bool all_real = true, all_imag = true;
    for (const BlockData& b : blocks) {
        if (std::hypot(b.u, b.v) <= kZeroTol) continue;
        any_c = true;
        if (std::abs(b.v) > kZeroTol) all_real = false;
        if (std::abs(b.u) > kZeroTol) all_imag = false;
    }

    if (!any_c) {
        // Diagonal state: beta = 0 and one pure weight per basis state.
        Assignment a{1.0, 0.0, std::vector<double>(s.dim(), 0.0),
                     std::vector<double>(s.dim(), 0.0)};
        for (std::size_t k = 0; k < s.dim(); ++k) a.lp[k] = std::max(0.0, s.d(k));
        if (auto rep = certify(s, a, "diagonal state, beta = 0")) return *rep;
        MembershipReport rep;
        rep.status = MembershipStatus::undecided;
        rep.note = "diagonal reconstruction failed";
        return rep;
    }

    // A block whose coherence vanishes while exactly one of its populations
    // does not cannot be assembled: alpha, beta != 0 (some c is non-zero)
    // forces both populations of such a block to vanish together.
    bool xor_block = false;
    for (const BlockData& b : blocks) {
        if (std::hypot(b.u, b.v) > kZeroTol) continue;
        const double a = 0.5 * (b.sigma + b.delta);
        const double bb = 0.5 * (b.sigma - b.delta);
        if ((a <= kZeroTol) != (bb <= kZeroTol)) xor_block = true;
    }
    if (xor_block) {
        MembershipReport rep;
        rep.status = MembershipStatus::excluded;
        rep.violated_conditions = {1, 2};
        if (!all_real && !all_imag) rep.violated_conditions.push_back(3);
        rep.note = "a block has c = 0 with exactly one of a, b non-zero";
        return rep;
    }

    if (all_real) return axis_route(s, blocks, false);
    if (all_imag) return axis_route(s, blocks, true);
    return generic_route(s, blocks);
}

XState counterexample_state(double a1, double a2, double b2, double r, double phi) {
    if (a1 < 0.0 || a2 < 0.0 || b2 < 0.0 || r < 0.0)
        throw std::invalid_argument("counterexample_state: negative parameter");
    if (std::abs(a1 + a2 + b2 - 1.0) > kZeroTol)
        throw std::invalid_argument("counterexample_state: trace must be one");
    if (!(r * r < a2 * b2))
        throw std::invalid_argument("counterexample_state: need r^2 < a2 b2 strictly");
    const double purity = a1 * a1 + a2 * a2 + b2 * b2 + 2.0 * r * r;
    if (purity > 1.0 + kZeroTol)
        throw std::invalid_argument("counterexample_state: purity above one");

    std::vector<double> d{a1, a2, b2, 0.0};
    std::vector<cx> e{cx{0.0, 0.0}, r * cx{std::cos(phi), std::sin(phi)}};
    return XState(2, std::move(d), std::move(e));
}

}  // namespace xent
