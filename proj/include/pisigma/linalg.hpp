#ifndef PISIGMA_LINALG_HPP
#define PISIGMA_LINALG_HPP

// Dense exact linear algebra: kernels and solving over Q, Hermite normal
// form and lattice kernels over Z.

#include "pisigma/rational.hpp"

#include <vector>

namespace pisigma {

using qvec = std::vector<rat>;
using qmat = std::vector<qvec>; // row major

// reduced row echelon form in place; returns pivot column per row
inline std::vector<int> rref(qmat& m)
{
    std::vector<int> pivots;
    if (m.empty())
        return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && is_zero(m[sel][c]))
            ++sel;
        if (sel == rows)
            continue;
        std::swap(m[r], m[sel]);
        rat inv = rat(1) / m[r][c];
        for (size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][c]))
                continue;
            rat f = m[i][c];
            for (size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

// basis of { x : M x = 0 }
inline std::vector<qvec> kernel(qmat m)
{
    if (m.empty())
        return {};
    size_t cols = m[0].size();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots)
        is_pivot[c] = true;
    std::vector<qvec> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc])
            continue;
        qvec v(cols, rat(0));
        v[fc] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            if ((size_t)pivots[r] < cols)
                v[pivots[r]] = -m[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline size_t rank(qmat m) { return rref(m).size(); }

// Is v in the row span of basis? (basis rows need not be reduced.)
inline bool in_span(const std::vector<qvec>& basis, const qvec& v)
{
    qmat m = basis;
    size_t r0 = rank(m);
    m = basis;
    m.push_back(v);
    return rank(m) == r0;
}

// prune to a maximal linearly independent subset, keeping order
inline std::vector<size_t> independent_rows(const std::vector<qvec>& rows)
{
    std::vector<size_t> keep;
    qmat acc;
    for (size_t i = 0; i < rows.size(); ++i) {
        acc.push_back(rows[i]);
        qmat tmp = acc;
        if (rref(tmp).size() == acc.size())
            keep.push_back(i);
        else
            acc.pop_back();
    }
    return keep;
}

// ---- integer lattices ----

using zvec = std::vector<bigint>;
using zmat = std::vector<zvec>;

// row Hermite normal form (non-negative pivots, rows = lattice basis)
inline zmat hnf(zmat m)
{
    if (m.empty())
        return m;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // gcd-reduce column c below row r
        while (true) {
            size_t nz = rows;
            for (size_t i = r; i < rows; ++i)
                if (m[i][c] != 0 && (nz == rows || abs(m[i][c]) < abs(m[nz][c])))
                    nz = i;
            if (nz == rows)
                break;
            std::swap(m[r], m[nz]);
            bool clean = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (m[i][c] == 0)
                    continue;
                bigint q = m[i][c] / m[r][c]; // truncated ok, we loop
                for (size_t j = 0; j < cols; ++j)
                    m[i][j] -= q * m[r][j];
                if (m[i][c] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (m[r][c] == 0)
            continue;
        if (m[r][c] < 0)
            for (size_t j = 0; j < cols; ++j)
                m[r][j] = -m[r][j];
        for (size_t i = 0; i < r; ++i) {
            bigint q;
            mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
            if (q != 0)
                for (size_t j = 0; j < cols; ++j)
                    m[i][j] -= q * m[r][j];
        }
        ++r;
    }
    m.resize(r);
    return m;
}

// Z-basis of { x in Z^n : M x = 0 }, computed with the [A | I] trick: run
// unimodular row reduction on [m^T | I]; transformation rows matching zero
// rows of the reduced m^T form a basis of the right kernel of m.
inline zmat z_kernel(const zmat& m)
{
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    if (cols == 0)
        return {};
    // build mt = m^T (cols x rows), augmented with identity (cols x cols)
    zmat a(cols, zvec(rows + cols, bigint(0)));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            a[j][i] = m[i][j];
    for (size_t j = 0; j < cols; ++j)
        a[j][rows + j] = 1;
    // eliminate the first `rows` columns by unimodular row operations
    size_t r = 0;
    for (size_t c = 0; c < rows && r < cols; ++c) {
        while (true) {
            size_t nz = cols;
            for (size_t i = r; i < cols; ++i)
                if (a[i][c] != 0 && (nz == cols || abs(a[i][c]) < abs(a[nz][c])))
                    nz = i;
            if (nz == cols)
                break;
            std::swap(a[r], a[nz]);
            bool clean = true;
            for (size_t i = r + 1; i < cols; ++i) {
                if (a[i][c] == 0)
                    continue;
                bigint q = a[i][c] / a[r][c];
                for (size_t j = 0; j < rows + cols; ++j)
                    a[i][j] -= q * a[r][j];
                if (a[i][c] != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (a[r][c] != 0)
            ++r;
    }
    zmat out;
    for (size_t i = r; i < cols; ++i) {
        bool zero = true;
        for (size_t c = 0; c < rows; ++c)
            if (a[i][c] != 0)
                zero = false;
        if (!zero)
            continue;
        zvec v(a[i].begin() + rows, a[i].end());
        out.push_back(std::move(v));
    }
    return hnf(std::move(out));
}

} // namespace pisigma

#endif
