#include "sylv/bareiss.hpp"

namespace sylv {

BareissResult det_bareiss(const Matrix& m) {
    if (!m.is_square())
        throw ShapeError("fraction-free elimination needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    const int n = m.rows();
    BareissResult result;
    result.trace.integer_input = m.is_integer();

    std::vector<Rat> w = m.cells();
    auto cell = [&](int i, int j) -> Rat& { return w[static_cast<std::size_t>(i - 1) * n + (j - 1)]; };

    Rat prev_pivot(1);
    for (int t = 1; t <= n - 1; ++t) {
        const Rat pivot = cell(t, t);
        if (pivot.is_zero()) {
            result.pivot_failure = true;
            result.singular_minor_order = t;
            return result;
        }
        for (int i = t + 1; i <= n; ++i) {
            for (int j = t + 1; j <= n; ++j) {
                const Rat numerator = pivot * cell(i, j) - cell(i, t) * cell(t, j);
                if (result.trace.integer_input) {
                    const bool exact =
                        mpz_divisible_p(numerator.num().get_mpz_t(), prev_pivot.num().get_mpz_t()) != 0;
                    result.trace.divisions.push_back({numerator.num(), prev_pivot.num(), exact});
                }
                cell(i, j) = numerator / prev_pivot;
            }
        }
        for (int i = t + 1; i <= n; ++i) cell(i, t) = Rat(0);
        result.trace.steps.emplace_back(t, Matrix(n, n, w));
        prev_pivot = pivot;
    }
    result.det = (n == 0) ? Rat(1) : cell(n, n);
    return result;
}

}  // namespace sylv
