#include "f2geom/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace f2geom {

SearchSpaceTooLarge::SearchSpaceTooLarge(std::size_t dim, std::uint64_t cap, const std::string& hint)
    : std::runtime_error("search space too large: dimension " + std::to_string(dim) + " exceeds cap " +
                         std::to_string(cap) + (hint.empty() ? "" : "; " + hint)),
      dim_(dim)
{
}

BitVec AffineSolutionSpace::point(const BitVec& coeffs) const
{
    if (coeffs.size() != kernel_basis.size())
        throw DimensionMismatch("coefficient vector does not match kernel dimension");
    BitVec x = particular.value();
    coeffs.for_each([&](std::size_t i) { x ^= kernel_basis[i]; });
    return x;
}

BitVec AffineSolutionSpace::point(std::uint64_t coeffs) const
{
    BitVec x = particular.value();
    for (std::size_t i = 0; coeffs; ++i, coeffs >>= 1)
        if (coeffs & 1)
            x ^= kernel_basis.at(i);
    return x;
}

/* ---- Echelon ---- */

Echelon::Echelon(std::size_t cols) : cols_(cols), where_(cols, -1), pivmask_(cols) {}

void Echelon::reduce(BitVec& row, bool& rhs) const
{
    auto& w = row.words();
    const auto& pm = pivmask_.words();
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::uint64_t x;
        while ((x = w[k] & pm[k]) != 0) {
            std::size_t b = k * 64 + std::size_t(std::countr_zero(x));
            std::size_t r = std::size_t(where_[b]);
            row ^= rows_[r];
            rhs = rhs != rhs_[r];
        }
    }
}

bool Echelon::insert(BitVec row, bool rhs)
{
    if (row.size() != cols_)
        throw DimensionMismatch("row length " + std::to_string(row.size()) + " != " + std::to_string(cols_));
    reduce(row, rhs);
    long p = row.first();
    if (p < 0) {
        if (rhs)
            consistent_ = false;
        return false;
    }
    where_[std::size_t(p)] = long(rows_.size());
    pivmask_.set(std::size_t(p));
    piv_.push_back(std::size_t(p));
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs);
    return true;
}

AffineSolutionSpace Echelon::solution() const
{
    AffineSolutionSpace s;
    s.ambient_dim = cols_;
    // back substitution to reduced form
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return piv_[a] > piv_[b]; });
    std::vector<BitVec> rows = rows_;
    std::vector<bool> rhs = rhs_;
    for (std::size_t a : order) {
        std::size_t p = piv_[a];
        for (std::size_t b = 0; b < rows.size(); ++b)
            if (b != a && rows[b].get(p)) {
                rows[b] ^= rows[a];
                rhs[b] = rhs[b] != rhs[a];
            }
    }
    if (consistent_) {
        BitVec x(cols_);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rhs[r])
                x.set(piv_[r]);
        s.particular = std::move(x);
    }
    for (std::size_t f = 0; f < cols_; ++f) {
        if (pivmask_.get(f))
            continue;
        BitVec v = BitVec::unit(cols_, f);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].get(f))
                v.set(piv_[r]);
        s.kernel_basis.push_back(std::move(v));
    }
    return s;
}

std::vector<BitVec> Echelon::kernel() const
{
    return solution().kernel_basis;
}

std::size_t rank(const BitMat& m)
{
    Echelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        e.insert(m.row(i));
    return e.rank();
}

std::vector<BitVec> kernel_basis(const BitMat& m)
{
    Echelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        e.insert(m.row(i));
    return e.kernel();
}

AffineSolutionSpace solve_linear(const BitMat& m, const BitVec& b)
{
    if (m.rows() != b.size())
        throw DimensionMismatch("solve_linear: matrix has " + std::to_string(m.rows()) + " rows but rhs has " +
                                std::to_string(b.size()) + " entries");
    Echelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        e.insert(m.row(i), b.get(i));
    return e.solution();
}

/* ---- enumeration ---- */

AffineEnumeration::iterator::iterator(const AffineSolutionSpace* s, std::uint64_t k) : s_(s), k_(k)
{
    if (s_)
        cur_ = *s_->particular;
}

AffineEnumeration::iterator& AffineEnumeration::iterator::operator++()
{
    std::uint64_t next = k_ + 1;
    std::uint64_t changed = k_ ^ next;
    for (std::size_t i = 0; changed; ++i, changed >>= 1)
        if ((changed & 1) && i < s_->kernel_basis.size())
            cur_ ^= s_->kernel_basis[i];
    k_ = next;
    return *this;
}

AffineEnumeration enumerate_affine(const AffineSolutionSpace& space, std::uint64_t cap)
{
    if (space.empty())
        return AffineEnumeration(space, 0);
    std::size_t d = space.dimension();
    if (d >= 63 || (std::uint64_t(1) << d) > cap)
        throw SearchSpaceTooLarge(d, cap);
    return AffineEnumeration(space, std::uint64_t(1) << d);
}

/* ---- Quotient ---- */

Quotient::Quotient(std::size_t ambient) : n_(ambient), where_(ambient, -1), pivmask_(ambient) {}

Quotient::Quotient(std::size_t ambient, const std::vector<BitVec>& relations) : Quotient(ambient)
{
    for (const auto& r : relations)
        add_relation(r);
}

BitVec Quotient::reduce(BitVec v) const
{
    if (v.size() != n_)
        throw DimensionMismatch("quotient: vector length " + std::to_string(v.size()) + " != " + std::to_string(n_));
    auto& w = v.words();
    const auto& pm = pivmask_.words();
    for (std::size_t k = w.size(); k-- > 0;) {
        std::uint64_t x;
        while ((x = w[k] & pm[k]) != 0) {
            std::size_t b = k * 64 + 63 - std::size_t(std::countl_zero(x));
            v ^= rows_[std::size_t(where_[b])];
        }
    }
    return v;
}

bool Quotient::add_relation(BitVec r)
{
    r = reduce(std::move(r));
    long p = r.last();
    if (p < 0)
        return false;
    where_[std::size_t(p)] = long(rows_.size());
    pivmask_.set(std::size_t(p));
    rows_.push_back(std::move(r));
    dirty_ = true;
    return true;
}

void Quotient::rebuild_index() const
{
    if (!dirty_)
        return;
    kept_.clear();
    kept_pos_.assign(n_, -1);
    for (std::size_t i = 0; i < n_; ++i)
        if (!pivmask_.get(i)) {
            kept_pos_[i] = long(kept_.size());
            kept_.push_back(i);
        }
    dirty_ = false;
}

std::size_t Quotient::dim() const
{
    return n_ - rows_.size();
}

std::vector<std::size_t> Quotient::kept() const
{
    rebuild_index();
    return kept_;
}

BitVec Quotient::project(const BitVec& v) const
{
    rebuild_index();
    BitVec r = reduce(v);
    BitVec q(kept_.size());
    r.for_each([&](std::size_t i) { q.set(std::size_t(kept_pos_[i])); });
    return q;
}

BitVec Quotient::lift(const BitVec& q) const
{
    rebuild_index();
    if (q.size() != kept_.size())
        throw DimensionMismatch("quotient lift: wrong dimension");
    BitVec v(n_);
    q.for_each([&](std::size_t i) { v.set(kept_[i]); });
    return v;
}

/* ---- SpanCoordinates ---- */

SpanCoordinates::SpanCoordinates(const std::vector<BitVec>& family) : m_(family.size())
{
    if (family.empty())
        return;
    n_ = family[0].size();
    where_.assign(n_, -1);
    pivmask_ = BitVec(n_);
    for (std::size_t i = 0; i < family.size(); ++i) {
        BitVec v = family[i];
        BitVec t = BitVec::unit(m_, i);
        auto& w = v.words();
        const auto& pm = pivmask_.words();
        for (std::size_t k = 0; k < w.size(); ++k) {
            std::uint64_t x;
            while ((x = w[k] & pm[k]) != 0) {
                std::size_t b = k * 64 + std::size_t(std::countr_zero(x));
                std::size_t r = std::size_t(where_[b]);
                v ^= rows_[r];
                t ^= tags_[r];
            }
        }
        long p = v.first();
        if (p < 0)
            continue;
        where_[std::size_t(p)] = long(rows_.size());
        pivmask_.set(std::size_t(p));
        rows_.push_back(std::move(v));
        tags_.push_back(std::move(t));
    }
}

std::optional<BitVec> SpanCoordinates::coords(const BitVec& v0) const
{
    if (m_ == 0)
        return v0.any() ? std::nullopt : std::optional<BitVec>(BitVec(0));
    if (v0.size() != n_)
        throw DimensionMismatch("span coordinates: wrong vector length");
    BitVec v = v0;
    BitVec t(m_);
    auto& w = v.words();
    const auto& pm = pivmask_.words();
    for (std::size_t k = 0; k < w.size(); ++k) {
        std::uint64_t x;
        while ((x = w[k] & pm[k]) != 0) {
            std::size_t b = k * 64 + std::size_t(std::countr_zero(x));
            std::size_t r = std::size_t(where_[b]);
            v ^= rows_[r];
            t ^= tags_[r];
        }
    }
    if (v.any())
        return std::nullopt;
    return t;
}

} // namespace f2geom
