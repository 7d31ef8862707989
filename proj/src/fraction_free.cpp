#include "sylv/fraction_free.hpp"

#include <string>

namespace sylv {

namespace {

BareissResult run_or_throw(const Matrix& m) {
    if (!m.is_integer()) throw DomainError("certified elimination needs integer entries");
    BareissResult result = det_bareiss(m);
    if (result.pivot_failure)
        throw PivotError("singular leading principal minor of order " + std::to_string(result.singular_minor_order),
                         result.singular_minor_order);
    return result;
}

// Fractions that are never brought to lowest terms. This is the naive
// rational elimination the fraction-free path is measured against: the
// values match entry for entry, only the representation differs.
struct UnreducedRat {
    Int num;
    Int den;  // never zero; sign unconstrained

    static UnreducedRat of(const Int& n) { return {n, Int(1)}; }

    UnreducedRat operator-(const UnreducedRat& o) const { return {num * o.den - o.num * den, den * o.den}; }
    UnreducedRat operator*(const UnreducedRat& o) const { return {num * o.num, den * o.den}; }
    UnreducedRat operator/(const UnreducedRat& o) const { return {num * o.den, den * o.num}; }

    Rat value() const { return Rat(num, den); }
};

}  // namespace

std::pair<Rat, EliminationTrace> bareiss_certified(const Matrix& m) {
    BareissResult result = run_or_throw(m);
    const int n = m.rows();
    for (const auto& [t, state] : result.trace.steps) {
        for (int i = t + 1; i <= n; ++i) {
            for (int j = t + 1; j <= n; ++j) {
                if (state.at(i, j) != extended_minor(m, t, i, j))
                    throw CertifyError("stage " + std::to_string(t) + " entry (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") differs from its bordered minor");
            }
        }
    }
    for (std::size_t k = 0; k < result.trace.divisions.size(); ++k) {
        if (!result.trace.divisions[k].exact)
            throw CertifyError("division " + std::to_string(k) + " left a remainder: " +
                               result.trace.divisions[k].dividend.get_str() + " / " +
                               result.trace.divisions[k].divisor.get_str());
    }
    return {result.det, std::move(result.trace)};
}

GrowthStats growth_report(const Matrix& m, int reference_cap) {
    BareissResult ff = run_or_throw(m);
    const int n = m.rows();

    GrowthStats stats;
    auto max_num_bits = [n](const Matrix& state) {
        std::size_t best = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const std::size_t bits = bit_length(state.at(i, j).num());
                if (bits > best) best = bits;
            }
        return best;
    };
    stats.ff_bits.push_back(max_num_bits(m));
    for (const auto& [t, state] : ff.trace.steps) {
        (void)t;
        stats.ff_bits.push_back(max_num_bits(state));
    }
    stats.det_ff = ff.det;

    std::vector<UnreducedRat> w;
    w.reserve(m.cells().size());
    for (const Rat& v : m.cells()) w.push_back(UnreducedRat::of(v.num()));
    auto cell = [&](int i, int j) -> UnreducedRat& { return w[static_cast<std::size_t>(i - 1) * n + (j - 1)]; };
    auto naive_stage_bits = [&] {
        std::size_t best = 0;
        for (const UnreducedRat& v : w) {
            const std::size_t bits = bit_length(v.num);
            if (bits > best) best = bits;
        }
        return best;
    };
    stats.naive_bits.push_back(naive_stage_bits());
    for (int t = 1; t <= n - 1; ++t) {
        const UnreducedRat pivot = cell(t, t);  // nonzero: the ff pass vouched for it
        for (int i = t + 1; i <= n; ++i) {
            const UnreducedRat factor = cell(i, t) / pivot;
            for (int j = t + 1; j <= n; ++j) cell(i, j) = cell(i, j) - factor * cell(t, j);
            cell(i, t) = UnreducedRat::of(Int(0));
        }
        stats.naive_bits.push_back(naive_stage_bits());
    }
    UnreducedRat det_acc = UnreducedRat::of(Int(1));
    for (int t = 1; t <= n; ++t) det_acc = det_acc * cell(t, t);
    stats.det_naive = det_acc.value();

    if (stats.det_naive != stats.det_ff)
        throw CertifyError("naive and fraction-free eliminations disagree on the determinant");
    if (n <= reference_cap && stats.det_ff != det_reference(m, reference_cap))
        throw CertifyError("fraction-free determinant disagrees with the reference expansion");
    return stats;
}

}  // namespace sylv
