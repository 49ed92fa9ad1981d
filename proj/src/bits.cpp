#include "f2geom/bits.hpp"
#include "f2geom/linalg.hpp"

#include <stdexcept>

namespace f2geom {

BitVec BitVec::ones(std::size_t n)
{
    BitVec v(n);
    for (auto& w : v.w_)
        w = ~std::uint64_t(0);
    v.trim();
    return v;
}

BitVec BitVec::from_string(std::string_view s)
{
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            v.set(i);
        else if (s[i] != '0')
            throw std::invalid_argument("bit string may only contain 0 and 1");
    }
    return v;
}

BitVec BitVec::from_u64(std::size_t n, std::uint64_t bits)
{
    BitVec v(n);
    if (!v.w_.empty())
        v.w_[0] = bits;
    v.trim();
    return v;
}

void BitVec::trim()
{
    if (n_ & 63)
        w_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
}

bool BitVec::any() const
{
    for (auto w : w_)
        if (w)
            return true;
    return false;
}

std::size_t BitVec::count() const
{
    std::size_t c = 0;
    for (auto w : w_)
        c += std::size_t(std::popcount(w));
    return c;
}

long BitVec::first() const
{
    for (std::size_t k = 0; k < w_.size(); ++k)
        if (w_[k])
            return long(k * 64 + std::size_t(std::countr_zero(w_[k])));
    return -1;
}

long BitVec::last() const
{
    for (std::size_t k = w_.size(); k-- > 0;)
        if (w_[k])
            return long(k * 64 + 63 - std::size_t(std::countl_zero(w_[k])));
    return -1;
}

std::vector<std::size_t> BitVec::support() const
{
    std::vector<std::size_t> s;
    for_each([&](std::size_t i) { s.push_back(i); });
    return s;
}

static void check_len(std::size_t a, std::size_t b)
{
    if (a != b)
        throw DimensionMismatch("vector lengths differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

BitVec& BitVec::operator^=(const BitVec& o)
{
    check_len(n_, o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
        w_[k] ^= o.w_[k];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& o)
{
    check_len(n_, o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
        w_[k] &= o.w_[k];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& o)
{
    check_len(n_, o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
        w_[k] |= o.w_[k];
    return *this;
}

BitVec BitVec::operator~() const
{
    BitVec v = *this;
    for (auto& w : v.w_)
        w = ~w;
    v.trim();
    return v;
}

bool BitVec::dot(const BitVec& o) const
{
    check_len(n_, o.n_);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k)
        acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
}

BitVec BitVec::slice(std::size_t off, std::size_t len) const
{
    BitVec v(len);
    for (std::size_t i = 0; i < len; ++i)
        if (get(off + i))
            v.set(i);
    return v;
}

BitVec BitVec::concat(const BitVec& o) const
{
    BitVec v(n_ + o.n_);
    for_each([&](std::size_t i) { v.set(i); });
    o.for_each([&](std::size_t i) { v.set(n_ + i); });
    return v;
}

std::string BitVec::str() const
{
    std::string s(n_, '0');
    for_each([&](std::size_t i) { s[i] = '1'; });
    return s;
}

std::strong_ordering BitVec::operator<=>(const BitVec& o) const
{
    if (n_ != o.n_)
        return n_ <=> o.n_;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        std::uint64_t x = w_[k] ^ o.w_[k];
        if (x) {
            int b = std::countr_zero(x);
            return ((w_[k] >> b) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

/* ---- BitMat ---- */

BitMat BitMat::identity(std::size_t n)
{
    BitMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

void BitMat::append_row(BitVec r)
{
    if (rows_.empty() && cols_ == 0)
        cols_ = r.size();
    check_len(r.size(), cols_);
    rows_.push_back(std::move(r));
}

BitVec BitMat::apply(const BitVec& x) const
{
    check_len(x.size(), cols_);
    BitVec y(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        if (rows_[i].dot(x))
            y.set(i);
    return y;
}

BitVec BitMat::column(std::size_t j) const
{
    BitVec c(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        if (get(i, j))
            c.set(i);
    return c;
}

BitMat BitMat::transposed() const
{
    BitMat t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        rows_[i].for_each([&](std::size_t j) { t.set(j, i); });
    return t;
}

BitMat BitMat::operator*(const BitMat& o) const
{
    check_len(cols_, o.rows());
    BitMat p(rows(), o.cols());
    for (std::size_t i = 0; i < rows(); ++i)
        rows_[i].for_each([&](std::size_t k) { p.rows_[i] ^= o.rows_[k]; });
    return p;
}

BitMat operator+(BitMat a, const BitMat& b)
{
    check_len(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        a.rows_[i] ^= b.rows_[i];
    return a;
}

/* ---- LinMap ---- */

LinMap LinMap::identity(std::size_t n)
{
    LinMap f(n, n);
    for (std::size_t i = 0; i < n; ++i)
        f.cols_[i].set(i);
    return f;
}

LinMap LinMap::from_columns(std::size_t dst, std::vector<BitVec> cols)
{
    for (auto& c : cols)
        check_len(c.size(), dst);
    LinMap f;
    f.dst_ = dst;
    f.cols_ = std::move(cols);
    return f;
}

LinMap LinMap::from_matrix(const BitMat& m)
{
    LinMap f(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        m.row(i).for_each([&](std::size_t j) { f.cols_[j].set(i); });
    return f;
}

LinMap LinMap::unflatten(std::size_t src, std::size_t dst, const BitVec& flat)
{
    check_len(flat.size(), src * dst);
    LinMap f(src, dst);
    flat.for_each([&](std::size_t k) { f.cols_[k / dst].set(k % dst); });
    return f;
}

BitVec LinMap::operator()(const BitVec& x) const
{
    check_len(x.size(), cols_.size());
    BitVec y(dst_);
    x.for_each([&](std::size_t j) { y ^= cols_[j]; });
    return y;
}

LinMap LinMap::operator*(const LinMap& g) const
{
    check_len(g.dst_, src_dim());
    LinMap h(g.src_dim(), dst_);
    for (std::size_t j = 0; j < g.src_dim(); ++j)
        h.cols_[j] = (*this)(g.cols_[j]);
    return h;
}

LinMap& LinMap::operator+=(const LinMap& o)
{
    check_len(src_dim(), o.src_dim());
    check_len(dst_, o.dst_);
    for (std::size_t j = 0; j < cols_.size(); ++j)
        cols_[j] ^= o.cols_[j];
    return *this;
}

bool LinMap::is_zero() const
{
    for (auto& c : cols_)
        if (c.any())
            return false;
    return true;
}

bool LinMap::is_identity() const
{
    return src_dim() == dst_ && *this == identity(dst_);
}

bool LinMap::invertible() const
{
    return src_dim() == dst_ && rank(matrix()) == dst_;
}

BitMat LinMap::matrix() const
{
    BitMat m(dst_, src_dim());
    for (std::size_t j = 0; j < cols_.size(); ++j)
        cols_[j].for_each([&](std::size_t i) { m.set(i, j); });
    return m;
}

BitVec LinMap::flatten() const
{
    BitVec v(src_dim() * dst_);
    for (std::size_t j = 0; j < cols_.size(); ++j)
        cols_[j].for_each([&](std::size_t i) { v.set(j * dst_ + i); });
    return v;
}

} // namespace f2geom
