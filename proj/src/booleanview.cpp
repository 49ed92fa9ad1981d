#include "f2geom/booleanview.hpp"

#include <algorithm>

namespace f2geom {

BooleanView::BooleanView(GraphCalculus gc) : gc_(std::move(gc))
{
    const auto& G = gc_.graph;
    paths_.resize(4);
    for (std::size_t x = 0; x < G.size(); ++x)
        paths_[0].push_back({x});
    for (auto [x, y] : G.arrows)
        paths_[1].push_back({x, y});
    for (auto [x, y, z] : gc_.paths2)
        paths_[2].push_back({x, y, z});
    for (auto& p : paths_[2])
        for (auto [s, t] : G.arrows)
            if (s == p[2])
                paths_[3].push_back({p[0], p[1], p[2], t});
    for (auto& level : paths_)
        for (std::size_t k = 0; k < level.size(); ++k)
            index_[level[k]] = k;
}

const std::vector<std::vector<std::size_t>>& BooleanView::paths(std::size_t degree) const
{
    if (degree == 0 || degree > 3)
        throw InvalidInput("subset forms have degree 1, 2 or 3");
    return paths_[degree];
}

long BooleanView::path_index(const std::vector<std::size_t>& p) const
{
    auto it = index_.find(p);
    return it == index_.end() ? -1 : long(it->second);
}

BitVec BooleanView::complement(const BitVec& a) const { return ~a; }

SubsetForm BooleanView::complement(const SubsetForm& w) const
{
    return {w.degree, w.carrier == Carrier::plain ? Carrier::dual : Carrier::plain, ~w.members};
}

SubsetForm BooleanView::empty(std::size_t degree, Carrier c) const { return {degree, c, BitVec(path_count(degree))}; }

SubsetForm BooleanView::full(std::size_t degree, Carrier c) const
{
    return {degree, c, BitVec::ones(path_count(degree))};
}

SubsetForm BooleanView::zero(std::size_t degree, Carrier c) const
{
    return c == Carrier::plain ? empty(degree, c) : full(degree, c);
}

SubsetForm BooleanView::theta(Carrier c) const { return c == Carrier::plain ? full(1, c) : empty(1, c); }

void BooleanView::require_same(const SubsetForm& a, const SubsetForm& b) const
{
    if (a.carrier != b.carrier)
        throw InvalidInput("cannot mix plain and dual subset forms");
    if (a.degree != b.degree)
        throw InvalidInput("subset forms of different degree");
}

SubsetForm BooleanView::add(const SubsetForm& a, const SubsetForm& b) const
{
    require_same(a, b);
    BitVec s = a.members ^ b.members;
    return {a.degree, a.carrier, a.carrier == Carrier::plain ? s : ~s};
}

SubsetForm BooleanView::d(const BitVec& a) const
{
    SubsetForm r = empty(1, Carrier::plain);
    const auto& P = paths_[1];
    for (std::size_t k = 0; k < P.size(); ++k)
        if (a[P[k][0]] != a[P[k][1]])
            r.members.set(k);
    return r;
}

SubsetForm BooleanView::bar_d(const BitVec& a) const
{
    SubsetForm r = empty(1, Carrier::dual);
    const auto& P = paths_[1];
    for (std::size_t k = 0; k < P.size(); ++k)
        if (a[P[k][0]] == a[P[k][1]])
            r.members.set(k);
    return r;
}

SubsetForm BooleanView::left(const BitVec& a, const SubsetForm& w) const
{
    SubsetForm r = w;
    const auto& P = paths(w.degree);
    for (std::size_t k = 0; k < P.size(); ++k) {
        bool in = a[P[k].front()];
        if (w.carrier == Carrier::plain)
            r.members.set(k, w.members[k] && in);
        else
            r.members.set(k, w.members[k] || in);
    }
    return r;
}

SubsetForm BooleanView::right(const SubsetForm& w, const BitVec& a) const
{
    SubsetForm r = w;
    const auto& P = paths(w.degree);
    for (std::size_t k = 0; k < P.size(); ++k) {
        bool in = a[P[k].back()];
        if (w.carrier == Carrier::plain)
            r.members.set(k, w.members[k] && in);
        else
            r.members.set(k, w.members[k] || in);
    }
    return r;
}

SubsetForm BooleanView::tensor(const SubsetForm& w, const SubsetForm& e) const
{
    if (w.carrier != e.carrier)
        throw InvalidInput("cannot mix plain and dual subset forms");
    const std::size_t deg = w.degree + e.degree;
    SubsetForm r = empty(deg, w.carrier);
    const auto& P = paths(deg);
    for (std::size_t k = 0; k < P.size(); ++k) {
        std::vector<std::size_t> head(P[k].begin(), P[k].begin() + long(w.degree) + 1);
        std::vector<std::size_t> tail(P[k].begin() + long(w.degree), P[k].end());
        bool a = w.members[std::size_t(path_index(head))];
        bool b = e.members[std::size_t(path_index(tail))];
        r.members.set(k, w.carrier == Carrier::plain ? (a && b) : (a || b));
    }
    return r;
}

SubsetForm BooleanView::d_form(const SubsetForm& w) const
{
    if (w.degree != 1)
        throw InvalidInput("d on subsets of arrows only");
    SubsetForm r = empty(2, w.carrier);
    const auto& P = paths_[2];
    for (std::size_t k = 0; k < P.size(); ++k) {
        bool a = w.members[std::size_t(path_index({P[k][0], P[k][1]}))];
        bool b = w.members[std::size_t(path_index({P[k][1], P[k][2]}))];
        r.members.set(k, w.carrier == Carrier::plain ? a != b : a == b);
    }
    return r;
}

std::vector<BitVec> BooleanView::relation_blocks(Level level) const { return relation_generators(gc_, level); }

bool BooleanView::equivalent(const SubsetForm& a, const SubsetForm& b, Level level) const
{
    require_same(a, b);
    if (a.degree != 2 && a.degree != 3)
        throw InvalidInput("equivalence is defined on 2- and 3-step sets");
    auto blocks = relation_blocks(level);
    std::vector<BitVec> rel;
    if (a.degree == 2)
        rel = blocks;
    else
        for (auto& blk : blocks) {
            // block ⊗ {q→r}
            auto q = paths_[2][std::size_t(blk.first())][2];
            for (auto [s, t] : graph().arrows) {
                if (s != q)
                    continue;
                BitVec v(path_count(3));
                blk.for_each([&](std::size_t k) {
                    const auto& p = paths_[2][k];
                    v.set(std::size_t(path_index({p[0], p[1], p[2], t})));
                });
                rel.push_back(v);
            }
        }
    Quotient Q(path_count(a.degree), rel);
    return Q.contains(a.members ^ b.members);
}

BitVec BooleanView::to_f2(const SubsetForm& w) const
{
    return w.carrier == Carrier::plain ? w.members : ~w.members;
}

SubsetForm BooleanView::from_f2(const BitVec& v, std::size_t degree, Carrier c) const
{
    if (v.size() != path_count(degree))
        throw DimensionMismatch("from_f2: expected " + std::to_string(path_count(degree)) + " bits");
    return {degree, c, c == Carrier::plain ? v : ~v};
}

std::string BooleanView::format(const SubsetForm& w) const
{
    std::vector<std::string> labels;
    w.members.for_each([&](std::size_t k) { labels.push_back(graph().path_label(paths(w.degree)[k])); });
    std::sort(labels.begin(), labels.end());
    std::string s = "{";
    for (std::size_t i = 0; i < labels.size(); ++i)
        s += (i ? "," : "") + labels[i];
    return s + "}";
}

SubsetForm BooleanView::parse(const std::vector<std::string>& labels, std::size_t degree, Carrier c) const
{
    SubsetForm r = empty(degree, c);
    const auto& P = paths(degree);
    for (auto& l : labels) {
        bool found = false;
        for (std::size_t k = 0; k < P.size() && !found; ++k)
            if (graph().path_label(P[k]) == l) {
                r.members.set(k);
                found = true;
            }
        if (!found)
            throw InvalidInput("no path " + l + " of length " + std::to_string(degree));
    }
    return r;
}

SubsetForm BooleanView::nabla(const Connection& conn, const SubsetForm& w) const
{
    if (w.degree != 1 || w.carrier != Carrier::plain)
        throw InvalidInput("∇ acts on plain subsets of arrows");
    return from_f2(conn.nabla(w.members), 2, Carrier::plain);
}

SubsetForm BooleanView::dual_nabla(const Connection& conn, const SubsetForm& w) const
{
    if (w.degree != 1 || w.carrier != Carrier::dual)
        throw InvalidInput("∇̄ acts on dual subsets of arrows");
    return complement(nabla(conn, complement(w)));
}

SubsetForm BooleanView::curvature(const Connection& conn, const SubsetForm& w) const
{
    const Carrier c = w.carrier;
    // plain: {xy};  dual: the complement of {xy}, its image under the de Morgan map
    auto single = [&](std::size_t x, std::size_t y) {
        SubsetForm s = empty(1, c);
        s.members.set(std::size_t(path_index({x, y})));
        if (c == Carrier::dual)
            s.members = ~s.members;
        return s;
    };
    auto conn_of = [&](const SubsetForm& s) { return c == Carrier::plain ? nabla(conn, s) : dual_nabla(conn, s); };

    SubsetForm nw = conn_of(w);
    // write ∇ω as a sum of single 2-steps: plain ⊕ over members, dual ⊕̄ over non-members
    BitVec terms = c == Carrier::plain ? nw.members : ~nw.members;
    SubsetForm r = zero(3, c);
    terms.for_each([&](std::size_t k) {
        const auto& p = paths_[2][k];
        SubsetForm a = single(p[0], p[1]), b = single(p[1], p[2]);
        r = add(r, tensor(d_form(a), b));
        r = add(r, tensor(a, conn_of(b)));
    });
    return r;
}

/* ---- polygon ---- */

std::size_t polygon_order(const Graph& g)
{
    const std::size_t n = g.size();
    if (n < 3 || g.arrows.size() != 2 * n)
        return 0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.vertices[i] != std::to_string(i) || !g.has_arrow(i, (i + 1) % n) || !g.has_arrow((i + 1) % n, i))
            return 0;
    return n;
}

static std::size_t require_polygon(const BooleanView& v)
{
    auto n = polygon_order(v.graph());
    if (!n)
        throw InvalidInput("polygon subset formulas need the n-gon graph");
    return n;
}

std::pair<BitVec, BitVec> polygon_tails(const BooleanView& v, const SubsetForm& w)
{
    const std::size_t n = require_polygon(v);
    if (w.degree != 1 || w.carrier != Carrier::plain)
        throw InvalidInput("polygon_tails needs a plain subset of arrows");
    BitVec ap(n), am(n);
    for (std::size_t i = 0; i < n; ++i) {
        ap.set(i, w.members[std::size_t(v.path_index({i, (i + 1) % n}))]);
        am.set(i, w.members[std::size_t(v.path_index({i, (i + n - 1) % n}))]);
    }
    return {ap, am};
}

std::pair<BitVec, BitVec> polygon_boundary(const BooleanView& v, const SubsetForm& w)
{
    const std::size_t n = require_polygon(v);
    auto [tp, tm] = polygon_tails(v, w);
    BitVec hp(n), hm(n);
    for (std::size_t i = 0; i < n; ++i) {
        hp.set(i, tp[(i + n - 1) % n]);
        hm.set(i, tm[(i + 1) % n]);
    }
    BitVec bp(n), bm(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t up = (i + 1) % n, dn = (i + n - 1) % n;
        bp.set(i, (tp[i] && !tp[dn]) || (hp[i] && !hp[up]));
        bm.set(i, (tm[i] && !tm[up]) || (hm[i] && !hm[dn]));
    }
    return {bp, bm};
}

SubsetForm polygon_half_step(const BooleanView& v, std::size_t i, bool plus)
{
    const std::size_t n = require_polygon(v);
    const std::size_t back = plus ? (i + n - 1) % n : (i + 1) % n;
    const std::size_t fwd = plus ? (i + 1) % n : (i + n - 1) % n;
    SubsetForm r = v.empty(2, Carrier::plain);
    r.members.set(std::size_t(v.path_index({i, back, i})));
    r.members.set(std::size_t(v.path_index({back, i, fwd})));
    return r;
}

SubsetForm trivial_connection_subset(const BooleanView& v, const SubsetForm& w)
{
    const std::size_t n = require_polygon(v);
    auto [bp, bm] = polygon_boundary(v, w);
    SubsetForm r = v.empty(2, Carrier::plain);
    for (std::size_t i = 0; i < n; ++i) {
        if (bp[i])
            r.members |= polygon_half_step(v, i, true).members;
        if (bm[i])
            r.members |= polygon_half_step(v, i, false).members;
    }
    return r;
}

SubsetForm curved_triangle_subset(const BooleanView& v, const SubsetForm& w)
{
    if (require_polygon(v) != 3)
        throw InvalidInput("the curved connection formula is for the triangle");
    SubsetForm r = trivial_connection_subset(v, w);
    auto [ap, am] = polygon_tails(v, w);
    for (std::size_t i = 0; i < 3; ++i) {
        if (ap[i])
            r.members.flip(std::size_t(v.path_index({i, (i + 2) % 3, (i + 1) % 3})));
        if (am[i])
            r.members.flip(std::size_t(v.path_index({i, (i + 1) % 3, (i + 2) % 3})));
    }
    return r;
}

} // namespace f2geom
