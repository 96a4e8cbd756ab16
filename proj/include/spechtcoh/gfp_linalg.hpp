#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spechtcoh/arith.hpp"
#include "spechtcoh/config.hpp"

namespace spechtcoh {

// Residues mod p, one per byte, always reduced.
using Vec = std::vector<std::uint8_t>;

inline std::uint8_t gfp_neg(std::uint8_t a, unsigned p) {
    return a == 0 ? 0 : static_cast<std::uint8_t>(p - a);
}
inline std::uint8_t gfp_add(std::uint8_t a, std::uint8_t b, unsigned p) {
    const unsigned s = static_cast<unsigned>(a) + b;
    return static_cast<std::uint8_t>(s >= p ? s - p : s);
}
inline std::uint8_t gfp_sub(std::uint8_t a, std::uint8_t b, unsigned p) {
    return gfp_add(a, gfp_neg(b, p), p);
}
inline std::uint8_t gfp_mul(std::uint8_t a, std::uint8_t b, unsigned p) {
    return static_cast<std::uint8_t>(static_cast<unsigned>(a) * b % p);
}
std::uint8_t gfp_inv(std::uint8_t a, unsigned p);

bool is_zero_vec(std::span<const std::uint8_t> v);

// Dense row-major matrix over GF(p). Residues are stored one per byte, so
// the modulus must be below 256 (far above anything this tool needs).
class GFpMatrix {
public:
    GFpMatrix(Prime p, std::size_t rows, std::size_t cols);

    Prime prime() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t* row(std::size_t i) { return data_.data() + i * cols_; }
    const std::uint8_t* row(std::size_t i) const { return data_.data() + i * cols_; }
    std::span<const std::uint8_t> row_span(std::size_t i) const { return {row(i), cols_}; }

    std::uint8_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint8_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j);
    void set_row(std::size_t i, std::span<const std::uint8_t> v);

    bool operator==(const GFpMatrix& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> data_;
};

struct RrefSummary {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

// In-place reduced row echelon form. Pivoting is leftmost column, first
// nonzero row: no heuristics, so identical input gives identical output.
RrefSummary rref_in_place(GFpMatrix& m);

// a * b. Accumulates u8 products in 32-bit lanes, folding mod p only when
// the lane could overflow.
GFpMatrix multiply(const GFpMatrix& a, const GFpMatrix& b);

// a * transpose(b), without materializing the transpose.
GFpMatrix multiply_abt(const GFpMatrix& a, const GFpMatrix& b);

GFpMatrix transpose(const GFpMatrix& m);

// Kernel basis read off an RREF matrix, one vector per free column. Not in
// canonical form; callers wanting the unique echelon basis re-reduce.
GFpMatrix kernel_basis_raw(const GFpMatrix& reduced, const RrefSummary& summary);

// A subspace held as its (unique) reduced row-echelon basis.
class GFpSubspace {
public:
    GFpSubspace(Prime p, std::size_t ambient);  // zero space
    static GFpSubspace from_rows(GFpMatrix rows);
    static GFpSubspace full(Prime p, std::size_t ambient);

    Prime prime() const { return basis_.prime(); }
    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    const GFpMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(std::span<const std::uint8_t> v) const;
    // Coefficients of v in the echelon basis, or nullopt if v is outside.
    std::optional<Vec> coordinates(std::span<const std::uint8_t> v) const;
    // v reduced against the basis (zero iff contained).
    Vec reduce(std::span<const std::uint8_t> v) const;

    bool operator==(const GFpSubspace& o) const { return basis_ == o.basis_; }
    bool operator!=(const GFpSubspace& o) const { return !(*this == o); }

private:
    GFpMatrix basis_;
    std::vector<std::size_t> pivots_;
};

GFpSubspace kernel(const GFpMatrix& m);
GFpSubspace sum(const GFpSubspace& a, const GFpSubspace& b);
GFpSubspace intersect(const GFpSubspace& a, const GFpSubspace& b);
// dim(a + b) - dim(b).
std::size_t quotient_dim(const GFpSubspace& a, const GFpSubspace& b);
GFpSubspace span_of_vector(Prime p, std::span<const std::uint8_t> v);

// Solution space of a homogeneous system fed one constraint block at a
// time. Blocks may be expressed on ambient coordinates or directly on the
// current solution basis; feeding blocks as they are generated keeps peak
// memory near the largest single block instead of the full stack.
class IncrementalKernel {
public:
    IncrementalKernel(Prime p, std::size_t ambient,
                      std::uint64_t memory_budget_bytes = Limits{}.memory_budget_bytes);

    bool is_full() const { return !basis_.has_value(); }
    std::size_t dim() const { return is_full() ? ambient_ : basis_->rows(); }
    std::size_t ambient_dim() const { return ambient_; }
    const GFpMatrix& basis() const;  // requires !is_full()

    void constrain_ambient(const GFpMatrix& block);
    void constrain_on_basis(const GFpMatrix& block);

    // Canonical echelon subspace of everything added so far.
    GFpSubspace finish() const;

private:
    void replace_basis(GFpMatrix next);

    Prime p_;
    std::size_t ambient_;
    std::uint64_t budget_;
    std::optional<GFpMatrix> basis_;
};

// Kernel of the vertical stack of the given blocks (all sharing the column
// count), via IncrementalKernel.
GFpSubspace solve_stacked(Prime p, std::size_t ambient, const std::vector<GFpMatrix>& blocks);

}  // namespace spechtcoh
