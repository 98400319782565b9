#include "handlebody/zmatrix.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>
#include <unordered_map>

namespace hb {

ZMatrix ZMatrix::identity(std::size_t n) {
    ZMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

ZMatrix ZMatrix::transpose() const {
    ZMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ZMatrix ZMatrix::mul(const ZMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    ZMatrix r(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& v = (*this)(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                if (rhs(k, j) != 0) r(i, j) += v * rhs(k, j);
        }
    return r;
}

void ZMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void ZMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void ZMatrix::add_row(std::size_t i, std::size_t j, const Integer& c) {
    for (std::size_t k = 0; k < cols_; ++k)
        if ((*this)(j, k) != 0) (*this)(i, k) += c * (*this)(j, k);
}

void ZMatrix::add_col(std::size_t i, std::size_t j, const Integer& c) {
    for (std::size_t k = 0; k < rows_; ++k)
        if ((*this)(k, j) != 0) (*this)(k, i) += c * (*this)(k, j);
}

void ZMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void ZMatrix::negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
}

bool ZMatrix::is_zero() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) return false;
    return true;
}

namespace {

Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Smallest nonzero entry in the submatrix starting at (t, t).
bool find_pivot(const ZMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Integer& v = a(i, j);
            if (v == 0) continue;
            Integer av = iabs(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pi = i;
                pj = j;
                if (best == 1) return true;
            }
        }
    return found;
}

} // namespace

SmithForm smith_normal_form(ZMatrix a, bool with_transforms) {
    const std::size_t n = std::min(a.rows(), a.cols());
    SmithForm out;
    out.has_transforms = with_transforms;
    if (with_transforms) {
        out.P = ZMatrix::identity(a.rows());
        out.Q = ZMatrix::identity(a.cols());
    }
    std::size_t t = 0;
    while (t < n) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(a, t, pi, pj)) break;
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if (with_transforms) {
            out.P.swap_rows(t, pi);
            out.Q.swap_cols(t, pj);
        }
        bool clean = true;
        // Clear column t.
        for (std::size_t i = t + 1; i < a.rows(); ++i) {
            if (a(i, t) == 0) continue;
            Integer q = a(i, t) / a(t, t);
            if (q != 0) {
                a.add_row(i, t, -q);
                if (with_transforms) out.P.add_row(i, t, -q);
            }
            if (a(i, t) != 0) clean = false;
        }
        // Clear row t.
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
            if (a(t, j) == 0) continue;
            Integer q = a(t, j) / a(t, t);
            if (q != 0) {
                a.add_col(j, t, -q);
                if (with_transforms) out.Q.add_col(j, t, -q);
            }
            if (a(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // remainder left somewhere; pick a smaller pivot
        // Divisibility: a(t,t) must divide everything below-right.
        bool divides = true;
        for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
            for (std::size_t j = t + 1; j < a.cols(); ++j)
                if (a(i, j) % a(t, t) != 0) {
                    a.add_row(t, i, 1);
                    if (with_transforms) out.P.add_row(t, i, 1);
                    divides = false;
                    break;
                }
        if (!divides) continue;
        if (a(t, t) < 0) {
            a.negate_row(t);
            if (with_transforms) out.P.negate_row(t);
        }
        ++t;
    }
    out.rank = t;
    out.diagonal.reserve(t);
    for (std::size_t k = 0; k < t; ++k) out.diagonal.push_back(a(k, k));
    return out;
}

std::size_t zrank(ZMatrix a) {
    // Fraction-free elimination; only the rank is needed.
    std::size_t rank = 0;
    std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a(i, c) != 0) { piv = i; break; }
        if (piv == rows) continue;
        a.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c) == 0) continue;
            Integer g = boost::multiprecision::gcd(iabs(a(i, c)), iabs(a(r, c)));
            Integer fr = a(r, c) / g, fi = a(i, c) / g;
            for (std::size_t j = c; j < cols; ++j)
                a(i, j) = a(i, j) * fr - a(r, j) * fi;
        }
        ++r;
        ++rank;
    }
    return rank;
}

ZMatrix kernel_basis(const ZMatrix& a) {
    SmithForm s = smith_normal_form(a, true);
    std::size_t k = a.cols() - s.rank;
    ZMatrix basis(a.cols(), k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < a.cols(); ++i)
            basis(i, j) = s.Q(i, s.rank + j);
    return basis;
}

std::optional<std::vector<Integer>> solve(const ZMatrix& a, const std::vector<Integer>& b) {
    assert(b.size() == a.rows());
    SmithForm s = smith_normal_form(a, true);
    // P a Q = D  =>  a x = b  <=>  D (Q^-1 x) = P b.
    std::vector<Integer> pb(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            if (s.P(i, j) != 0 && b[j] != 0) pb[i] += s.P(i, j) * b[j];
    std::vector<Integer> y(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (pb[i] % s.diagonal[i] != 0) return std::nullopt;
            y[i] = pb[i] / s.diagonal[i];
        } else if (pb[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Integer> x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (s.Q(i, j) != 0 && y[j] != 0) x[i] += s.Q(i, j) * y[j];
    return x;
}

AbelianGroup cokernel(const ZMatrix& a) {
    SmithForm s = smith_normal_form(a, false);
    AbelianGroup g;
    g.free_rank = a.rows() - s.rank;
    for (const Integer& d : s.diagonal)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

// ---- GF(2) ----

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_) {}

void GF2Matrix::set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] ^= (std::uint64_t(1) << (j % 64));
}

bool GF2Matrix::get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1;
}

std::size_t GF2Matrix::rank() const {
    std::vector<std::uint64_t> work = bits_;
    std::size_t rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t mask = std::uint64_t(1) << (c % 64);
        std::size_t piv = rows_;
        for (std::size_t i = r; i < rows_; ++i)
            if (work[i * words_ + w] & mask) { piv = i; break; }
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t k = 0; k < words_; ++k)
                std::swap(work[r * words_ + k], work[piv * words_ + k]);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            if (work[i * words_ + w] & mask)
                for (std::size_t k = w; k < words_; ++k)
                    work[i * words_ + k] ^= work[r * words_ + k];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// ---- sparse reduction ----

namespace {

// Doubly-indexed sparse matrix for +-1 pivot elimination.
struct SparseMat {
    std::vector<std::map<std::uint32_t, Integer>> row;  // row -> (col -> val)
    std::vector<std::map<std::uint32_t, Integer>> col;  // col -> (row -> val)

    void set_add(std::uint32_t r, std::uint32_t c, const Integer& v) {
        if (v == 0) return;
        auto it = row[r].find(c);
        if (it == row[r].end()) {
            row[r][c] = v;
            col[c][r] = v;
        } else {
            it->second += v;
            if (it->second == 0) {
                row[r].erase(it);
                col[c].erase(r);
            } else {
                col[c][r] = it->second;
            }
        }
    }

    void erase(std::uint32_t r, std::uint32_t c) {
        row[r].erase(c);
        col[c].erase(r);
    }
};

} // namespace

SparseSmith sparse_smith(std::size_t rows, std::size_t cols, std::vector<SparseEntry> entries) {
    SparseMat m;
    m.row.resize(rows);
    m.col.resize(cols);
    for (const auto& e : entries) m.set_add(e.row, e.col, Integer(e.val));
    entries.clear();
    entries.shrink_to_fit();

    std::size_t rank = 0;

    // Queue of candidate unit pivots; re-validate on pop.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stack;
    for (std::uint32_t r = 0; r < rows; ++r)
        for (auto& [c, v] : m.row[r])
            if (v == 1 || v == -1) stack.emplace_back(r, c);

    std::vector<char> row_done(rows, 0), col_done(cols, 0);

    while (!stack.empty()) {
        auto [r, c] = stack.back();
        stack.pop_back();
        if (row_done[r] || col_done[c]) continue;
        auto it = m.row[r].find(c);
        if (it == m.row[r].end()) continue;
        Integer piv = it->second;
        if (piv != 1 && piv != -1) continue;

        // Eliminate: for each other row r2 with entry in column c,
        // row r2 -= (a[r2,c]/piv) * row r.
        std::vector<std::pair<std::uint32_t, Integer>> col_entries(m.col[c].begin(), m.col[c].end());
        std::vector<std::pair<std::uint32_t, Integer>> row_entries(m.row[r].begin(), m.row[r].end());
        for (auto& [r2, v2] : col_entries) {
            if (r2 == r) continue;
            Integer f = v2 / piv;  // exact since |piv| == 1
            for (auto& [c2, vr] : row_entries) {
                if (c2 == c) {
                    m.erase(r2, c2);
                    continue;
                }
                m.set_add(r2, c2, -f * vr);
                auto jt = m.row[r2].find(c2);
                if (jt != m.row[r2].end() && (jt->second == 1 || jt->second == -1))
                    stack.emplace_back(r2, c2);
            }
        }
        // Remove pivot row and column entirely.
        for (auto& [c2, vr] : row_entries) m.erase(r, c2);
        for (auto& [r2, v2] : m.col[c]) m.row[r2].erase(c);
        m.col[c].clear();
        row_done[r] = 1;
        col_done[c] = 1;
        ++rank;
    }

    // Dense SNF on the remaining core.
    std::vector<std::uint32_t> live_rows, live_cols;
    std::unordered_map<std::uint32_t, std::size_t> cmap;
    for (std::uint32_t r = 0; r < rows; ++r)
        if (!m.row[r].empty()) live_rows.push_back(r);
    for (std::uint32_t c = 0; c < cols; ++c)
        if (!m.col[c].empty()) {
            cmap[c] = live_cols.size();
            live_cols.push_back(c);
        }
    SparseSmith out;
    if (!live_rows.empty()) {
        ZMatrix core(live_rows.size(), live_cols.size());
        for (std::size_t i = 0; i < live_rows.size(); ++i)
            for (auto& [c, v] : m.row[live_rows[i]]) core(i, cmap[c]) = v;
        SmithForm s = smith_normal_form(std::move(core), false);
        rank += s.rank;
        for (const Integer& d : s.diagonal)
            if (d > 1) out.torsion.push_back(d);
    }
    out.rank = rank;
    return out;
}

std::size_t sparse_gf2_rank(std::size_t rows, std::size_t cols, const std::vector<SparseEntry>& entries) {
    // Low-pivot column reduction (the persistent-homology workhorse): keeps
    // memory linear in the fill-in, which stays small for boundary matrices.
    std::vector<std::vector<std::uint32_t>> col(cols);
    for (const auto& e : entries)
        if (e.val & 1) col[e.col].push_back(e.row);
    auto normalize = [](std::vector<std::uint32_t>& v) {
        std::sort(v.begin(), v.end());
        std::vector<std::uint32_t> out;
        for (std::size_t i = 0; i < v.size();) {
            std::size_t j = i;
            while (j < v.size() && v[j] == v[i]) ++j;
            if ((j - i) % 2) out.push_back(v[i]);
            i = j;
        }
        v = std::move(out);
    };
    auto xor_merge = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> out;
        out.reserve(a.size() + b.size());
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(out));
        return out;
    };

    std::vector<std::int64_t> owner(rows, -1);
    std::vector<std::vector<std::uint32_t>> reduced;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        std::vector<std::uint32_t> cur = std::move(col[j]);
        normalize(cur);
        while (!cur.empty()) {
            std::uint32_t low = cur.back();
            if (owner[low] < 0) {
                owner[low] = std::int64_t(reduced.size());
                reduced.push_back(std::move(cur));
                ++rank;
                break;
            }
            cur = xor_merge(cur, reduced[std::size_t(owner[low])]);
        }
    }
    return rank;
}

} // namespace hb
