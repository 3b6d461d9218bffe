#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace augres {

// Dense bit matrix over GF(2).  Rows are packed into 64-bit limbs.  The
// matrix is small (tens of rows/columns) in every intended use, so all
// operations are straightforward exact elimination.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), limbs_((cols + 63) / 64),
          bits_(rows * limbs_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return (bits_[r * limbs_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        assert(r < rows_ && c < cols_);
        std::uint64_t& limb = bits_[r * limbs_ + c / 64];
        std::uint64_t mask = std::uint64_t(1) << (c % 64);
        if (v) limb |= mask; else limb &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) { set(r, c, !get(r, c)); }

    bool operator==(const Gf2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

    // y = M x  (column vector given as bit vector of length cols).
    std::vector<bool> apply(const std::vector<bool>& x) const {
        assert(x.size() == cols_);
        std::vector<bool> y(rows_, false);
        for (std::size_t r = 0; r < rows_; ++r) {
            bool acc = false;
            for (std::size_t c = 0; c < cols_; ++c)
                if (x[c] && get(r, c)) acc = !acc;
            y[r] = acc;
        }
        return y;
    }

    Gf2Matrix transposed() const {
        Gf2Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    // this * other.
    Gf2Matrix multiply(const Gf2Matrix& other) const {
        assert(cols_ == other.rows_);
        Gf2Matrix out(rows_, other.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k)
                if (get(r, k))
                    for (std::size_t c = 0; c < other.cols_; ++c)
                        if (other.get(k, c)) out.flip(r, c);
        return out;
    }

    Gf2Matrix plus(const Gf2Matrix& other) const {
        assert(rows_ == other.rows_ && cols_ == other.cols_);
        Gf2Matrix out = *this;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            out.bits_[i] ^= other.bits_[i];
        return out;
    }

    bool is_zero() const {
        for (auto limb : bits_) if (limb) return false;
        return true;
    }

    std::size_t rank() const {
        Gf2Matrix work = *this;
        std::size_t rk = 0;
        for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
            std::size_t pivot = rows_;
            for (std::size_t r = rk; r < rows_; ++r)
                if (work.get(r, c)) { pivot = r; break; }
            if (pivot == rows_) continue;
            work.swap_rows(rk, pivot);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != rk && work.get(r, c)) work.xor_row(r, rk);
            ++rk;
        }
        return rk;
    }

    // Basis of the kernel {x : Mx = 0}, each vector of length cols().
    std::vector<std::vector<bool>> kernel_basis() const {
        Gf2Matrix work = *this;
        std::vector<std::size_t> pivot_col;
        std::size_t rk = 0;
        for (std::size_t c = 0; c < cols_ && rk < rows_; ++c) {
            std::size_t pivot = rows_;
            for (std::size_t r = rk; r < rows_; ++r)
                if (work.get(r, c)) { pivot = r; break; }
            if (pivot == rows_) continue;
            work.swap_rows(rk, pivot);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != rk && work.get(r, c)) work.xor_row(r, rk);
            pivot_col.push_back(c);
            ++rk;
        }
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<bool>> basis;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<bool> v(cols_, false);
            v[c] = true;
            for (std::size_t r = 0; r < rk; ++r)
                if (work.get(r, c)) v[pivot_col[r]] = true;
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // Indices of standard basis vectors of the target space that complete
    // the column span of M to the whole space (coset representatives for
    // the cokernel).
    std::vector<std::size_t> cokernel_representatives() const {
        // Row-reduce the transpose: columns of M span a subspace of
        // GF(2)^rows; find standard vectors outside it.
        Gf2Matrix t = transposed();  // rows of t = columns of M
        std::size_t rk = 0;
        std::vector<bool> covered(rows_, false);
        for (std::size_t c = 0; c < t.cols_ && rk < t.rows_; ++c) {
            std::size_t pivot = t.rows_;
            for (std::size_t r = rk; r < t.rows_; ++r)
                if (t.get(r, c)) { pivot = r; break; }
            if (pivot == t.rows_) continue;
            t.swap_rows(rk, pivot);
            for (std::size_t r = 0; r < t.rows_; ++r)
                if (r != rk && t.get(r, c)) t.xor_row(r, rk);
            covered[c] = true;
            ++rk;
        }
        std::vector<std::size_t> reps;
        for (std::size_t c = 0; c < rows_; ++c)
            if (!covered[c]) reps.push_back(c);
        return reps;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t l = 0; l < limbs_; ++l)
            std::swap(bits_[a * limbs_ + l], bits_[b * limbs_ + l]);
    }
    void xor_row(std::size_t dst, std::size_t src) {
        for (std::size_t l = 0; l < limbs_; ++l)
            bits_[dst * limbs_ + l] ^= bits_[src * limbs_ + l];
    }

    std::size_t rows_ = 0, cols_ = 0, limbs_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace augres
