#include "spechtcoh/gfp_linalg.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "spechtcoh/errors.hpp"

namespace spechtcoh {

std::uint8_t gfp_inv(std::uint8_t a, unsigned p) {
    if (a == 0)
        throw std::domain_error("gfp_inv: zero has no inverse");
    unsigned result = 1, base = a, e = p - 2;
    while (e) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint8_t>(result);
}

bool is_zero_vec(std::span<const std::uint8_t> v) {
    for (std::uint8_t x : v)
        if (x)
            return false;
    return true;
}

GFpMatrix::GFpMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (p.value() >= 256)
        throw std::invalid_argument("GFpMatrix: p must fit in a byte");
}

void GFpMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    std::swap_ranges(row(i), row(i) + cols_, row(j));
}

void GFpMatrix::set_row(std::size_t i, std::span<const std::uint8_t> v) {
    if (v.size() != cols_)
        throw std::invalid_argument("set_row: length mismatch");
    std::memcpy(row(i), v.data(), cols_);
}

namespace {

// Row operation tables: mul[f*p + x] = f*x mod p and fold[s] = s mod p for
// s < 2p. Both stay in L1, which is what makes byte elimination quick.
struct RowOpTables {
    explicit RowOpTables(unsigned p) : p_(p), mul(p * p), fold(2 * p - 1) {
        for (unsigned f = 0; f < p; ++f)
            for (unsigned x = 0; x < p; ++x)
                mul[f * p + x] = static_cast<std::uint8_t>(f * x % p);
        for (unsigned s = 0; s < 2 * p - 1; ++s)
            fold[s] = static_cast<std::uint8_t>(s >= p ? s - p : s);
    }
    const std::uint8_t* mul_by(std::uint8_t f) const { return mul.data() + f * p_; }
    unsigned p_;
    std::vector<std::uint8_t> mul;
    std::vector<std::uint8_t> fold;
};

inline void axpy_row(std::uint8_t* dst, const std::uint8_t* src, std::size_t from,
                     std::size_t cols, const std::uint8_t* mul_tab, const std::uint8_t* fold) {
    for (std::size_t j = from; j < cols; ++j)
        dst[j] = fold[dst[j] + mul_tab[src[j]]];
}

}  // namespace

RrefSummary rref_in_place(GFpMatrix& m) {
    const unsigned p = m.prime().value();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const RowOpTables tables(p);

    RrefSummary summary;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (m.at(r, col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows)
            continue;
        m.swap_rows(rank, pivot);

        std::uint8_t* prow = m.row(rank);
        if (prow[col] != 1) {
            const std::uint8_t* tab = tables.mul_by(gfp_inv(prow[col], p));
            for (std::size_t j = col; j < cols; ++j)
                prow[j] = tab[prow[j]];
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank)
                continue;
            const std::uint8_t f = m.at(r, col);
            if (!f)
                continue;
            axpy_row(m.row(r), prow, col, cols, tables.mul_by(static_cast<std::uint8_t>(p - f)),
                     tables.fold.data());
        }
        summary.pivots.push_back(col);
        ++rank;
    }
    summary.rank = rank;
    return summary;
}

GFpMatrix multiply(const GFpMatrix& a, const GFpMatrix& b) {
    if (a.prime() != b.prime() || a.cols() != b.rows())
        throw std::invalid_argument("multiply: shape or modulus mismatch");
    const unsigned p = a.prime().value();
    GFpMatrix c(a.prime(), a.rows(), b.cols());
    const std::size_t n = b.cols();

    // Lane capacity before a fold is forced.
    const std::uint64_t step = static_cast<std::uint64_t>(p - 1) * (p - 1);
    const std::uint64_t safe_steps = step ? (0xFFFFFFFFull - p) / step : UINT64_MAX;

    std::vector<std::uint32_t> acc(n);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0u);
        std::uint64_t pending = 0;
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const std::uint32_t f = a.at(i, t);
            if (!f)
                continue;
            const std::uint8_t* brow = b.row(t);
            for (std::size_t j = 0; j < n; ++j)
                acc[j] += f * brow[j];
            if (++pending >= safe_steps) {
                for (std::size_t j = 0; j < n; ++j)
                    acc[j] %= p;
                pending = 0;
            }
        }
        std::uint8_t* crow = c.row(i);
        for (std::size_t j = 0; j < n; ++j)
            crow[j] = static_cast<std::uint8_t>(acc[j] % p);
    }
    return c;
}

GFpMatrix multiply_abt(const GFpMatrix& a, const GFpMatrix& b) {
    if (a.prime() != b.prime() || a.cols() != b.cols())
        throw std::invalid_argument("multiply_abt: shape or modulus mismatch");
    const unsigned p = a.prime().value();
    GFpMatrix c(a.prime(), a.rows(), b.rows());
    const std::size_t n = a.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::uint8_t* arow = a.row(i);
        for (std::size_t r = 0; r < b.rows(); ++r) {
            const std::uint8_t* brow = b.row(r);
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < n; ++j)
                acc += static_cast<std::uint32_t>(arow[j]) * brow[j];
            c.at(i, r) = static_cast<std::uint8_t>(acc % p);
        }
    }
    return c;
}

GFpMatrix transpose(const GFpMatrix& m) {
    GFpMatrix t(m.prime(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

GFpMatrix kernel_basis_raw(const GFpMatrix& reduced, const RrefSummary& summary) {
    const unsigned p = reduced.prime().value();
    const std::size_t cols = reduced.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : summary.pivots)
        is_pivot[c] = true;

    GFpMatrix basis(reduced.prime(), cols - summary.rank, cols);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        basis.at(out, free_col) = 1;
        for (std::size_t i = 0; i < summary.rank; ++i)
            basis.at(out, summary.pivots[i]) = gfp_neg(reduced.at(i, free_col), p);
        ++out;
    }
    return basis;
}

GFpSubspace::GFpSubspace(Prime p, std::size_t ambient) : basis_(p, 0, ambient) {}

GFpSubspace GFpSubspace::from_rows(GFpMatrix rows) {
    const RrefSummary summary = rref_in_place(rows);
    GFpMatrix basis(rows.prime(), summary.rank, rows.cols());
    for (std::size_t i = 0; i < summary.rank; ++i)
        basis.set_row(i, rows.row_span(i));
    GFpSubspace out(rows.prime(), rows.cols());
    out.basis_ = std::move(basis);
    out.pivots_ = summary.pivots;
    return out;
}

GFpSubspace GFpSubspace::full(Prime p, std::size_t ambient) {
    GFpMatrix identity(p, ambient, ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        identity.at(i, i) = 1;
    GFpSubspace out(p, ambient);
    out.basis_ = std::move(identity);
    out.pivots_.resize(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        out.pivots_[i] = i;
    return out;
}

Vec GFpSubspace::reduce(std::span<const std::uint8_t> v) const {
    if (v.size() != ambient_dim())
        throw std::invalid_argument("reduce: length mismatch");
    const unsigned p = prime().value();
    Vec w(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
        const std::uint8_t f = w[pivots_[i]];
        if (!f)
            continue;
        const std::uint8_t nf = gfp_neg(f, p);
        const std::uint8_t* brow = basis_.row(i);
        for (std::size_t j = pivots_[i]; j < w.size(); ++j)
            w[j] = static_cast<std::uint8_t>((w[j] + nf * brow[j]) % p);
    }
    return w;
}

bool GFpSubspace::contains(std::span<const std::uint8_t> v) const {
    return is_zero_vec(reduce(v));
}

std::optional<Vec> GFpSubspace::coordinates(std::span<const std::uint8_t> v) const {
    if (v.size() != ambient_dim())
        throw std::invalid_argument("coordinates: length mismatch");
    const unsigned p = prime().value();
    Vec w(v.begin(), v.end());
    Vec coords(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
        const std::uint8_t f = w[pivots_[i]];
        coords[i] = f;
        if (!f)
            continue;
        const std::uint8_t nf = gfp_neg(f, p);
        const std::uint8_t* brow = basis_.row(i);
        for (std::size_t j = pivots_[i]; j < w.size(); ++j)
            w[j] = static_cast<std::uint8_t>((w[j] + nf * brow[j]) % p);
    }
    if (!is_zero_vec(w))
        return std::nullopt;
    return coords;
}

GFpSubspace kernel(const GFpMatrix& m) {
    GFpMatrix work = m;
    const RrefSummary summary = rref_in_place(work);
    return GFpSubspace::from_rows(kernel_basis_raw(work, summary));
}

GFpSubspace sum(const GFpSubspace& a, const GFpSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.prime() != b.prime())
        throw std::invalid_argument("sum: ambient mismatch");
    GFpMatrix stacked(a.prime(), a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        stacked.set_row(i, a.basis().row_span(i));
    for (std::size_t i = 0; i < b.dim(); ++i)
        stacked.set_row(a.dim() + i, b.basis().row_span(i));
    return GFpSubspace::from_rows(std::move(stacked));
}

GFpSubspace intersect(const GFpSubspace& a, const GFpSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.prime() != b.prime())
        throw std::invalid_argument("intersect: ambient mismatch");
    const unsigned p = a.prime().value();
    const std::size_t n = a.ambient_dim();
    // Columns are [a-coefficients | b-coefficients]; rows demand y*A = z*B.
    GFpMatrix system(a.prime(), n, a.dim() + b.dim());
    for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            system.at(i, j) = a.basis().at(j, i);
    for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            system.at(i, a.dim() + j) = gfp_neg(b.basis().at(j, i), p);

    GFpMatrix work = system;
    const RrefSummary summary = rref_in_place(work);
    const GFpMatrix pairs = kernel_basis_raw(work, summary);

    GFpMatrix rows(a.prime(), pairs.rows(), n);
    for (std::size_t r = 0; r < pairs.rows(); ++r) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const std::uint8_t y = pairs.at(r, j);
            if (!y)
                continue;
            const std::uint8_t* arow = a.basis().row(j);
            std::uint8_t* dst = rows.row(r);
            for (std::size_t i = 0; i < n; ++i)
                dst[i] = static_cast<std::uint8_t>((dst[i] + y * arow[i]) % p);
        }
    }
    return GFpSubspace::from_rows(std::move(rows));
}

std::size_t quotient_dim(const GFpSubspace& a, const GFpSubspace& b) {
    return sum(a, b).dim() - b.dim();
}

GFpSubspace span_of_vector(Prime p, std::span<const std::uint8_t> v) {
    GFpMatrix row(p, 1, v.size());
    row.set_row(0, v);
    return GFpSubspace::from_rows(std::move(row));
}

IncrementalKernel::IncrementalKernel(Prime p, std::size_t ambient, std::uint64_t memory_budget)
    : p_(p), ambient_(ambient), budget_(memory_budget) {}

const GFpMatrix& IncrementalKernel::basis() const {
    if (!basis_)
        throw std::logic_error("IncrementalKernel: basis not yet materialized");
    return *basis_;
}

void IncrementalKernel::replace_basis(GFpMatrix next) {
    const std::uint64_t bytes = static_cast<std::uint64_t>(next.rows()) * next.cols();
    if (bytes > budget_)
        throw CapExceeded("intermediate solution basis (" + std::to_string(next.rows()) + " x " +
                          std::to_string(next.cols()) + ") exceeds the memory budget");
    basis_ = std::move(next);
}

void IncrementalKernel::constrain_ambient(const GFpMatrix& block) {
    if (block.cols() != ambient_)
        throw std::invalid_argument("constrain_ambient: column count mismatch");
    if (block.rows() == 0)
        return;
    if (is_full()) {
        GFpMatrix work = block;
        const RrefSummary summary = rref_in_place(work);
        replace_basis(kernel_basis_raw(work, summary));
        return;
    }
    constrain_on_basis(multiply_abt(block, *basis_));
}

void IncrementalKernel::constrain_on_basis(const GFpMatrix& block) {
    if (is_full())
        throw std::logic_error("constrain_on_basis: no basis yet");
    if (block.cols() != basis_->rows())
        throw std::invalid_argument("constrain_on_basis: column count mismatch");
    if (block.rows() == 0)
        return;
    GFpMatrix work = block;
    const RrefSummary summary = rref_in_place(work);
    if (summary.rank == 0)
        return;
    const GFpMatrix coords = kernel_basis_raw(work, summary);
    replace_basis(multiply(coords, *basis_));
}

GFpSubspace IncrementalKernel::finish() const {
    if (is_full()) {
        const std::uint64_t bytes = static_cast<std::uint64_t>(ambient_) * ambient_;
        if (bytes > budget_)
            throw CapExceeded("full-space basis exceeds the memory budget");
        return GFpSubspace::full(p_, ambient_);
    }
    return GFpSubspace::from_rows(*basis_);
}

GFpSubspace solve_stacked(Prime p, std::size_t ambient, const std::vector<GFpMatrix>& blocks) {
    IncrementalKernel solver(p, ambient);
    for (const GFpMatrix& block : blocks)
        solver.constrain_ambient(block);
    return solver.finish();
}

}  // namespace spechtcoh
