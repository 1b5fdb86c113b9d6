#include "qrs/linalg.hpp"

#include "qrs/errors.hpp"

namespace qrs {

namespace {

// Row-reduce [A | b]; returns pivot column of each reduced row (in order).
std::vector<int> rref(ScalarMatrix& a, std::vector<Scalar>* b) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_cols;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        // pick the structurally simplest nonzero pivot to limit growth
        size_t best = rows;
        size_t best_cost = 0;
        for (size_t i = row; i < rows; ++i) {
            if (a[i][col].is_zero())
                continue;
            size_t cost = a[i][col].complexity();
            if (best == rows || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (best == rows)
            continue;
        std::swap(a[best], a[row]);
        if (b)
            std::swap((*b)[best], (*b)[row]);

        Scalar inv = a[row][col].inv();
        for (size_t j = col; j < cols; ++j)
            if (!a[row][j].is_zero())
                a[row][j] *= inv;
        if (b)
            (*b)[row] *= inv;

        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col].is_zero())
                continue;
            Scalar f = a[i][col];
            for (size_t j = col; j < cols; ++j)
                if (!a[row][j].is_zero())
                    a[i][j] -= f * a[row][j];
            if (b)
                (*b)[i] -= f * (*b)[row];
        }
        pivot_cols.push_back(int(col));
        ++row;
    }
    return pivot_cols;
}

}  // namespace

LinearSolution solve_linear(ScalarMatrix a, std::vector<Scalar> b) {
    if (a.size() != b.size())
        throw AlgebraError("solve_linear: row count mismatch");
    size_t cols = a.empty() ? 0 : a[0].size();
    std::vector<int> pivots = rref(a, &b);

    LinearSolution sol;
    sol.rank = pivots.size();

    // consistency: a zero row of A must have zero rhs
    for (size_t i = pivots.size(); i < a.size(); ++i)
        if (!b[i].is_zero())
            return sol;  // inconsistent
    sol.consistent = true;

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots)
        is_pivot[c] = true;

    sol.particular.assign(cols, Scalar(0));
    for (size_t rrow = 0; rrow < pivots.size(); ++rrow)
        sol.particular[pivots[rrow]] = b[rrow];

    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        std::vector<Scalar> vec(cols, Scalar(0));
        vec[free_col] = Scalar(1);
        for (size_t rrow = 0; rrow < pivots.size(); ++rrow)
            vec[pivots[rrow]] = -a[rrow][free_col];
        sol.kernel.push_back(std::move(vec));
    }
    return sol;
}

size_t matrix_rank(ScalarMatrix a) {
    return rref(a, nullptr).size();
}

}  // namespace qrs
