#include "qrs/free_oracle.hpp"

#include <vector>

#include "qrs/errors.hpp"
#include "qrs/linalg.hpp"

namespace qrs {

namespace {

// a word over {E1, E2} encoded as bits (0 = E1, 1 = E2), length d
size_t word_index(const std::vector<int>& w) {
    size_t idx = 0;
    for (int b : w)
        idx = idx * 2 + size_t(b);
    return idx;
}

}  // namespace

long free_algebra_graded_dimension(int degree) {
    if (degree < 0)
        throw MathError("free_algebra_graded_dimension: negative degree");
    if (degree < 3)
        return 1L << degree;  // the Serre relations start in degree 3

    const Scalar r = Scalar::r(), s = Scalar::s();
    // each Serre relation as (coefficient, word) triples
    struct RelTerm {
        Scalar c;
        std::vector<int> w;
    };
    std::vector<std::vector<RelTerm>> relations = {
        {{Scalar(1), {0, 0, 1}}, {-(r + s), {0, 1, 0}}, {r * s, {1, 0, 0}}},
        {{Scalar(1), {0, 1, 1}}, {-(r + s), {1, 0, 1}}, {r * s, {1, 1, 0}}},
    };

    size_t ncols = size_t(1) << degree;
    ScalarMatrix rows;
    int pad = degree - 3;
    for (int left_len = 0; left_len <= pad; ++left_len) {
        int right_len = pad - left_len;
        for (size_t lw = 0; lw < (size_t(1) << left_len); ++lw) {
            for (size_t rw = 0; rw < (size_t(1) << right_len); ++rw) {
                for (const auto& rel : relations) {
                    std::vector<Scalar> row(ncols, Scalar(0));
                    for (const auto& term : rel) {
                        std::vector<int> w;
                        for (int i = left_len - 1; i >= 0; --i)
                            w.push_back(int((lw >> i) & 1));
                        w.insert(w.end(), term.w.begin(), term.w.end());
                        for (int i = right_len - 1; i >= 0; --i)
                            w.push_back(int((rw >> i) & 1));
                        row[word_index(w)] += term.c;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return long(ncols) - long(matrix_rank(std::move(rows)));
}

}  // namespace qrs
