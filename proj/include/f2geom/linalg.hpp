#pragma once

#include "f2geom/bits.hpp"

#include <cstdint>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace f2geom {

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t(1) << 24;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SearchSpaceTooLarge : public std::runtime_error {
public:
    SearchSpaceTooLarge(std::size_t dim, std::uint64_t cap, const std::string& hint = "");
    std::size_t dimension() const { return dim_; }

private:
    std::size_t dim_;
};

struct AffineSolutionSpace {
    std::size_t ambient_dim = 0;
    std::optional<BitVec> particular;
    std::vector<BitVec> kernel_basis;

    bool empty() const { return !particular.has_value(); }
    std::size_t dimension() const { return kernel_basis.size(); }
    // particular + sum of kernel_basis[i] over the set bits of coeffs
    BitVec point(const BitVec& coeffs) const;
    BitVec point(std::uint64_t coeffs) const;
};

// Incremental row echelon form with leftmost pivots. Rows carry a right-hand side bit.
class Echelon {
public:
    explicit Echelon(std::size_t cols);

    // Returns true when the row was independent of those already stored.
    bool insert(BitVec row, bool rhs = false);
    bool consistent() const { return consistent_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    AffineSolutionSpace solution() const;
    std::vector<BitVec> kernel() const;

private:
    void reduce(BitVec& row, bool& rhs) const;

    std::size_t cols_;
    std::vector<BitVec> rows_;
    std::vector<bool> rhs_;
    std::vector<std::size_t> piv_;
    std::vector<long> where_;
    BitVec pivmask_;
    bool consistent_ = true;
};

std::size_t rank(const BitMat& m);
std::vector<BitVec> kernel_basis(const BitMat& m);
AffineSolutionSpace solve_linear(const BitMat& m, const BitVec& b);

// Solutions in counting order: the k-th vector uses the kernel vectors selected by the bits of k.
class AffineEnumeration {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = BitVec;
        using difference_type = std::ptrdiff_t;
        using pointer = const BitVec*;
        using reference = const BitVec&;

        iterator() = default;
        iterator(const AffineSolutionSpace* s, std::uint64_t k);
        const BitVec& operator*() const { return cur_; }
        const BitVec* operator->() const { return &cur_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        bool operator==(const iterator& o) const { return k_ == o.k_; }

    private:
        const AffineSolutionSpace* s_ = nullptr;
        std::uint64_t k_ = 0;
        BitVec cur_;
    };

    AffineEnumeration(const AffineSolutionSpace& s, std::uint64_t count) : s_(&s), count_(count) {}
    iterator begin() const { return count_ ? iterator(s_, 0) : end(); }
    iterator end() const { return iterator(nullptr, count_); }
    std::uint64_t size() const { return count_; }

private:
    const AffineSolutionSpace* s_;
    std::uint64_t count_;
};

// Throws SearchSpaceTooLarge when 2^dim exceeds cap. The space must outlive the range.
AffineEnumeration enumerate_affine(const AffineSolutionSpace& space, std::uint64_t cap = kDefaultEnumCap);

// F2^n modulo a subspace. Pivots are the highest set coordinates of the relation rows, so the
// kept coordinates are the low-index ones not used as pivots; class representatives are
// the unit vectors at kept coordinates.
class Quotient {
public:
    Quotient() = default;
    explicit Quotient(std::size_t ambient);
    Quotient(std::size_t ambient, const std::vector<BitVec>& relations);

    bool add_relation(BitVec r);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const;
    std::size_t relation_rank() const { return rows_.size(); }
    std::vector<std::size_t> kept() const;
    const std::vector<BitVec>& relation_rows() const { return rows_; }

    BitVec reduce(BitVec v) const;
    BitVec project(const BitVec& v) const;
    BitVec lift(const BitVec& q) const;
    bool contains(const BitVec& v) const { return reduce(v).none(); }

private:
    void rebuild_index() const;

    std::size_t n_ = 0;
    std::vector<BitVec> rows_;
    std::vector<long> where_;
    BitVec pivmask_;
    mutable std::vector<std::size_t> kept_;
    mutable std::vector<long> kept_pos_;
    mutable bool dirty_ = true;
};

// Coordinates with respect to a fixed family of vectors.
class SpanCoordinates {
public:
    SpanCoordinates() = default;
    explicit SpanCoordinates(const std::vector<BitVec>& family);

    std::size_t family_size() const { return m_; }
    std::size_t rank() const { return rows_.size(); }
    bool independent() const { return rows_.size() == m_; }
    std::optional<BitVec> coords(const BitVec& v) const;

private:
    std::size_t n_ = 0, m_ = 0;
    std::vector<BitVec> rows_, tags_;
    std::vector<long> where_;
    BitVec pivmask_;
};

} // namespace f2geom
