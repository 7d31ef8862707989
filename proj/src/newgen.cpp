#include "sylv/newgen.hpp"

#include <algorithm>

namespace sylv {

namespace {

int chain_bound(const Matrix& m) { return m.rows() < m.cols() ? m.rows() : m.cols(); }

// (s-1)^e as an exact integer, with 0^0 = 1.
Int stage_exponent(int s, int e) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(s - 1), static_cast<unsigned long>(e));
    return out;
}

// base^exponent guarded by the power bit cap.
Rat checked_power(const Rat& base, const Int& exponent) {
    if (sgn(exponent) == 0) return Rat(1);
    const unsigned long width = std::max<std::size_t>(std::size_t{1}, bit_length(base));
    Int budget = exponent * static_cast<unsigned long>(width);
    if (budget > kPowerBitCap)
        throw CapacityError("power of " + base.str() + " with exponent " + exponent.get_str() +
                            " would exceed the " + std::to_string(kPowerBitCap) + "-bit cap");
    return pow(base, exponent.get_ui());
}

}  // namespace

NewGenConfig::NewGenConfig(const Matrix& m, int t_, int s_) : t(t_), s(s_) {
    const int r = chain_bound(m);
    if (t < 1 || t > r) throw ConfigError("leading order t=" + std::to_string(t) + " outside 1.." + std::to_string(r));
    const int s_max = std::min(m.rows() - t, m.cols() - t);
    if (s < 1 || s > s_max)
        throw ConfigError("step s=" + std::to_string(s) + " outside 1.." + std::to_string(s_max));
    if ((r - t) % s != 0)
        throw ConfigError("no integer stage count: min(n,m)-t = " + std::to_string(r - t) +
                          " is not a multiple of s = " + std::to_string(s));
    q = (r - t) / s;
}

std::vector<Matrix> newgen_chain(const Matrix& m, int t, int s) {
    const NewGenConfig cfg(m, t, s);
    std::vector<Matrix> chain;
    chain.reserve(static_cast<std::size_t>(cfg.q) + 1);
    for (int k = 0; k <= cfg.q; ++k) {
        const IndexList head = IndexList::range(1, t + k * s);
        chain.push_back(submatrix(m, head, head));
    }
    return chain;
}

Matrix newgen_B(const Matrix& m, int t, int s, int k) {
    const NewGenConfig cfg(m, t, s);
    if (k < 0 || k > cfg.q - 1)
        throw DomainError("stage k=" + std::to_string(k) + " outside 0.." + std::to_string(cfg.q - 1));
    const int mk = t + k * s;
    std::vector<Rat> cells;
    cells.reserve(static_cast<std::size_t>(s) * s);
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) cells.push_back(extended_minor(m, mk, mk + i, mk + j));
    return Matrix(s, s, std::move(cells));
}

IdentityReport newgen_check(const Matrix& m, int t, int s, int k) {
    const NewGenConfig cfg(m, t, s);
    if (k < 0 || k > cfg.q)
        throw DomainError("stage k=" + std::to_string(k) + " outside 0.." + std::to_string(cfg.q));

    const IndexList lead = IndexList::range(1, t);
    const Rat det_m0 = minor_det(m, lead, lead);
    const IndexList stage = IndexList::range(1, t + k * s);
    const Rat det_mk = minor_det(m, stage, stage);

    std::vector<Rat> stage_dets;
    for (int i = 0; i < k; ++i) stage_dets.push_back(det_reference(newgen_B(m, t, s, i)));

    // (s-1)^(k-1-i) weights; the numerator/denominator split alternates
    // with the parity of k.
    const bool even = (k % 2 == 0);
    Rat lhs = det_mk;
    Rat rhs(1);
    const Rat m0_power = checked_power(det_m0, stage_exponent(s, k));
    if (even)
        rhs *= m0_power;
    else
        lhs *= m0_power;
    for (int i = 0; i < k; ++i) {
        const Rat factor = checked_power(stage_dets[static_cast<std::size_t>(i)], stage_exponent(s, k - 1 - i));
        const bool i_even = (i % 2 == 0);
        if (even == i_even)
            lhs *= factor;  // denominator side of the stated ratio
        else
            rhs *= factor;
    }

    return make_report("newgen",
                       {{"n", std::to_string(m.rows())},
                        {"m", std::to_string(m.cols())},
                        {"t", std::to_string(t)},
                        {"s", std::to_string(s)},
                        {"q", std::to_string(cfg.q)},
                        {"k", std::to_string(k)}},
                       lhs, rhs, even ? "even stage" : "odd stage");
}

IdentityReport newgen_s2_check(const Matrix& m, int t) {
    if (!m.is_square())
        throw ShapeError("s=2 endpoint needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    const int n = m.rows();
    if (t < 1 || t >= n) throw ConfigError("leading order t=" + std::to_string(t) + " outside 1.." + std::to_string(n - 1));
    if ((n - t) % 2 != 0) throw ConfigError("n-t = " + std::to_string(n - t) + " must be even for s = 2");
    const int q = (n - t) / 2;

    IdentityReport inner = newgen_check(m, t, 2, q);
    inner.identity = "newgen-s2";
    inner.notes = (q % 2 == 0) ? "q even: det(M)/det(leading t-block) as a ratio of stage blocks"
                               : "q odd: det(M)*det(leading t-block) as a ratio of stage blocks";
    return inner;
}

IdentityReport newgen_block_check(const Matrix& m_prime, int t) {
    if (!m_prime.is_square())
        throw ShapeError("centre-block form needs a square matrix, got " + std::to_string(m_prime.rows()) + "x" +
                         std::to_string(m_prime.cols()));
    const int n = m_prime.rows();
    if (t < 1) throw DomainError("centre block order must be positive, got " + std::to_string(t));
    if (n != t + 4)
        throw ShapeError("centre-block form needs order t+4 = " + std::to_string(t + 4) + ", got " + std::to_string(n));

    // Move the centre block (rows/columns 3..t+2) to the front; two rows
    // and two columns each travel past t others, so the determinant is
    // unchanged.
    std::vector<int> order;
    for (int v = 3; v <= t + 2; ++v) order.push_back(v);
    order.push_back(1);
    order.push_back(2);
    order.push_back(t + 3);
    order.push_back(t + 4);
    const IndexList sigma(order);
    const Matrix permuted = submatrix(m_prime, sigma, sigma);

    const Rat det_prime = det_reference(m_prime);
    const Rat det_permuted = det_reference(permuted);
    const std::vector<std::pair<std::string, std::string>> params = {{"n", std::to_string(n)},
                                                                     {"t", std::to_string(t)}};
    if (det_prime != det_permuted)
        return make_report("newgen-block", params, det_prime, det_permuted,
                           "centre-block permutation failed to preserve the determinant");

    IdentityReport inner = newgen_check(permuted, t, 2, 2);
    IdentityReport report = make_report("newgen-block", params, inner.lhs, inner.rhs,
                                        "centre block moved to the front; det M * det B0 = det D * det B1");
    return report;
}

}  // namespace sylv
