#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace f2geom {

// Dense vector over F2. Bits past size() are kept at zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec unit(std::size_t n, std::size_t i)
    {
        BitVec v(n);
        v.set(i);
        return v;
    }
    static BitVec ones(std::size_t n);
    static BitVec from_string(std::string_view s);
    static BitVec from_u64(std::size_t n, std::uint64_t bits);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    bool operator[](std::size_t i) const { return get(i); }
    void set(std::size_t i, bool v = true)
    {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v)
            w_[i >> 6] |= m;
        else
            w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;
    // -1 when zero
    long first() const;
    long last() const;
    std::vector<std::size_t> support() const;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t k = 0; k < w_.size(); ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                f(k * 64 + std::size_t(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    BitVec& operator^=(const BitVec& o);
    BitVec& operator&=(const BitVec& o);
    BitVec& operator|=(const BitVec& o);
    BitVec& operator+=(const BitVec& o) { return *this ^= o; }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator+(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
    BitVec operator~() const;

    bool dot(const BitVec& o) const;
    BitVec slice(std::size_t off, std::size_t len) const;
    BitVec concat(const BitVec& o) const;
    std::uint64_t low_word() const { return w_.empty() ? 0 : w_[0]; }

    std::string str() const;

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

    bool operator==(const BitVec& o) const = default;
    // shorter first, then by the first differing coordinate (a 0 there sorts first)
    std::strong_ordering operator<=>(const BitVec& o) const;

private:
    void trim();

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Row-major matrix; rows are equations when used with the solvers.
class BitMat {
public:
    BitMat() = default;
    BitMat(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

    static BitMat identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
    const BitVec& row(std::size_t i) const { return rows_[i]; }
    BitVec& row(std::size_t i) { return rows_[i]; }
    void append_row(BitVec r);

    BitVec apply(const BitVec& x) const;
    BitVec column(std::size_t j) const;
    BitMat transposed() const;
    BitMat operator*(const BitMat& o) const;
    friend BitMat operator+(BitMat a, const BitMat& b);

    bool operator==(const BitMat& o) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

// Linear map stored by the images of the source basis.
class LinMap {
public:
    LinMap() = default;
    LinMap(std::size_t src, std::size_t dst) : dst_(dst), cols_(src, BitVec(dst)) {}

    static LinMap identity(std::size_t n);
    static LinMap from_columns(std::size_t dst, std::vector<BitVec> cols);
    static LinMap from_matrix(const BitMat& m);
    static LinMap unflatten(std::size_t src, std::size_t dst, const BitVec& flat);

    std::size_t src_dim() const { return cols_.size(); }
    std::size_t dst_dim() const { return dst_; }
    const BitVec& col(std::size_t j) const { return cols_[j]; }
    BitVec& col(std::size_t j) { return cols_[j]; }
    const std::vector<BitVec>& columns() const { return cols_; }

    BitVec operator()(const BitVec& x) const;
    LinMap operator*(const LinMap& g) const;
    LinMap& operator+=(const LinMap& o);
    friend LinMap operator+(LinMap a, const LinMap& b) { return a += b; }

    bool is_zero() const;
    bool is_identity() const;
    bool invertible() const;
    BitMat matrix() const;
    // column-major: entry (r, c) sits at c*dst + r
    BitVec flatten() const;

    bool operator==(const LinMap& o) const = default;

private:
    std::size_t dst_ = 0;
    std::vector<BitVec> cols_;
};

} // namespace f2geom
