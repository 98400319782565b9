#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace hb {

using Integer = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major.  Sizes here are "desk scale": chain
// complexes of nerves and quotient nerves, presentation matrices of H_1.
// The oracle's large complexes go through SparseZReducer below instead.
class ZMatrix {
public:
    ZMatrix() = default;
    ZMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ZMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    ZMatrix transpose() const;
    ZMatrix mul(const ZMatrix& rhs) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row_i += c * row_j ; col_i += c * col_j
    void add_row(std::size_t i, std::size_t j, const Integer& c);
    void add_col(std::size_t i, std::size_t j, const Integer& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t i);

    bool is_zero() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

// Smith normal form  P * A * Q = D  with P, Q unimodular.
// diagonal holds the invariant factors d_1 | d_2 | ... (zeros trimmed),
// so rank == diagonal.size().
struct SmithForm {
    std::size_t rank = 0;
    std::vector<Integer> diagonal;   // nonzero invariant factors, each dividing the next
    ZMatrix P, Q;                    // transforms; tracked only if requested
    bool has_transforms = false;
};

SmithForm smith_normal_form(ZMatrix a, bool with_transforms = false);

// Rank over Q (fraction-free Gaussian elimination); cheaper than full SNF.
std::size_t zrank(ZMatrix a);

// Basis of { x : A x = 0 } as columns; the basis spans the full (saturated)
// integer kernel lattice.
ZMatrix kernel_basis(const ZMatrix& a);

// One integer solution of A x = b, or nullopt if none exists.
std::optional<std::vector<Integer>> solve(const ZMatrix& a, const std::vector<Integer>& b);

// Structure of the cokernel Z^rows / im(A): free rank plus the invariant
// factors > 1.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;    // factors > 1, each dividing the next

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup&) const = default;
};

AbelianGroup cokernel(const ZMatrix& a);

// ---- GF(2) ----

// Rank of a matrix over the 2-element field; rows given as bitsets.
class GF2Matrix {
public:
    GF2Matrix(std::size_t rows, std::size_t cols);
    void set(std::size_t i, std::size_t j);
    bool get(std::size_t i, std::size_t j) const;
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const;

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;
};

// ---- sparse integer reduction for the oracle's chain complexes ----
//
// Eliminates +-1 pivots (row+column at once, preserving Z-equivalence),
// then runs dense SNF on whatever core remains.  Returns rank and the
// invariant factors > 1.
struct SparseSmith {
    std::size_t rank = 0;
    std::vector<Integer> torsion;
};

struct SparseEntry {
    std::uint32_t row;
    std::uint32_t col;
    std::int64_t val;
};

SparseSmith sparse_smith(std::size_t rows, std::size_t cols, std::vector<SparseEntry> entries);

// GF(2) rank of the same sparse data.
std::size_t sparse_gf2_rank(std::size_t rows, std::size_t cols, const std::vector<SparseEntry>& entries);

} // namespace hb
