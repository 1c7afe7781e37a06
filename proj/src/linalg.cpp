#include "numwall/linalg.hpp"

namespace nw {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, Matrix& a, std::size_t cols) {
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Fe inv = f.inv(a[row][c]);
        for (std::size_t j = 0; j < cols; ++j) a[row][j] = f.mul(a[row][j], inv);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0) continue;
            Fe k = a[r][c];
            for (std::size_t j = 0; j < cols; ++j) a[r][j] = f.sub(a[r][j], f.mul(k, a[row][j]));
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

} // namespace

std::vector<std::vector<Fe>> nullspace(const Field& f, Matrix a, std::size_t cols) {
    std::vector<std::size_t> piv = rref(f, a, cols);
    std::vector<char> is_piv(cols, 0);
    for (std::size_t c : piv) is_piv[c] = 1;
    std::vector<std::vector<Fe>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_piv[fc]) continue;
        std::vector<Fe> v(cols, 0);
        v[fc] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(a[i][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const Field& f, Matrix a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    return rref(f, a, cols).size();
}

} // namespace nw
