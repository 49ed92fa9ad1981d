#include "f2geom/dga.hpp"

#include <bit>

namespace f2geom {

/* ---- algebras ---- */

BitVec Algebra::mul(const BitVec& a, const BitVec& b) const
{
    BitVec r(dim);
    a.for_each([&](std::size_t i) { b.for_each([&](std::size_t j) { r ^= prod(i, j); }); });
    return r;
}

LinMap Algebra::left_mul(const BitVec& a) const
{
    LinMap f(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
        f.col(j) = mul(a, basis(j));
    return f;
}

bool Algebra::commutative() const
{
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (prod(i, j) != prod(j, i))
                return false;
    return true;
}

static std::string sum_of_labels(const std::vector<std::string>& labels, const BitVec& v)
{
    if (v.none())
        return "0";
    std::string s;
    v.for_each([&](std::size_t i) {
        if (!s.empty())
            s += "+";
        s += labels[i];
    });
    return s;
}

std::string Algebra::format(const BitVec& a) const
{
    if (a.any() && a == unit)
        return "1";
    return sum_of_labels(labels, a);
}

Algebra function_algebra(const std::vector<std::string>& points)
{
    if (points.empty())
        throw InvalidInput("function algebra needs a nonempty set");
    Algebra A;
    A.dim = points.size();
    for (auto& p : points)
        A.labels.push_back("δ" + p);
    A.table.assign(A.dim * A.dim, BitVec(A.dim));
    for (std::size_t i = 0; i < A.dim; ++i)
        A.table[i * A.dim + i].set(i);
    A.unit = BitVec::ones(A.dim);
    return A;
}

Algebra polynomial_algebra(std::uint64_t f)
{
    int deg = int(std::bit_width(f)) - 1;
    if (deg < 1 || deg > 31)
        throw InvalidInput("polynomial modulus must have degree between 1 and 31");
    std::size_t n = std::size_t(deg);
    auto reduce = [&](std::uint64_t p) {
        for (int k = 63; k >= deg; --k)
            if ((p >> k) & 1)
                p ^= f << (k - deg);
        return p;
    };
    Algebra A;
    A.dim = n;
    for (std::size_t k = 0; k < n; ++k)
        A.labels.push_back(k == 0 ? "1" : k == 1 ? "x" : "x" + std::to_string(k));
    A.table.assign(n * n, BitVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A.table[i * n + j] = BitVec::from_u64(n, reduce(std::uint64_t(1) << (i + j)));
    A.unit = BitVec::unit(n, 0);
    return A;
}

Algebra algebra_from_triples(std::vector<std::string> labels, const std::vector<std::array<std::size_t, 3>>& triples,
                             const BitVec& unit)
{
    Algebra A;
    A.dim = labels.size();
    if (A.dim == 0)
        throw InvalidInput("algebra basis is empty");
    if (unit.size() != A.dim)
        throw InvalidInput("unit has " + std::to_string(unit.size()) + " coefficients, expected " +
                           std::to_string(A.dim));
    A.labels = std::move(labels);
    A.table.assign(A.dim * A.dim, BitVec(A.dim));
    for (auto [i, j, k] : triples) {
        if (i >= A.dim || j >= A.dim || k >= A.dim)
            throw InvalidInput("product triple index out of range");
        A.table[i * A.dim + j].flip(k);
    }
    A.unit = unit;
    return A;
}

/* ---- bimodules ---- */

BitVec Bimodule::act_left(const BitVec& a, const BitVec& m) const
{
    BitVec r(dim);
    a.for_each([&](std::size_t i) { m.for_each([&](std::size_t k) { r ^= left[i][k]; }); });
    return r;
}

BitVec Bimodule::act_right(const BitVec& m, const BitVec& a) const
{
    BitVec r(dim);
    a.for_each([&](std::size_t i) { m.for_each([&](std::size_t k) { r ^= right[i][k]; }); });
    return r;
}

std::string Bimodule::format(const BitVec& v) const
{
    return sum_of_labels(labels, v);
}

Bimodule regular_bimodule(const Algebra& A)
{
    Bimodule M;
    M.dim = A.dim;
    M.labels = A.labels;
    M.left.assign(A.dim, std::vector<BitVec>(A.dim));
    M.right = M.left;
    for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t m = 0; m < A.dim; ++m) {
            M.left[a][m] = A.prod(a, m);
            M.right[a][m] = A.prod(m, a);
        }
    return M;
}

/* ---- tensor products over A ---- */

std::string join_plain(const std::string& a, const std::string& b)
{
    return a + "|" + b;
}

BitVec TensorProduct::tensor(const BitVec& x, const BitVec& y) const
{
    BitVec r(space.dim);
    x.for_each([&](std::size_t i) { y.for_each([&](std::size_t j) { r ^= pure(i, j); }); });
    return r;
}

TensorProduct tensor_over(const Algebra& A, const Bimodule& M, const Bimodule& N, const LabelJoin& join)
{
    TensorProduct T;
    T.left_dim = M.dim;
    T.right_dim = N.dim;
    const std::size_t nd = N.dim, n = M.dim * N.dim;
    T.quotient = Quotient(n);
    for (std::size_t i = 0; i < M.dim; ++i)
        for (std::size_t a = 0; a < A.dim; ++a)
            for (std::size_t j = 0; j < nd; ++j) {
                BitVec r(n);
                M.right[a][i].for_each([&](std::size_t s) { r.flip(s * nd + j); });
                N.left[a][j].for_each([&](std::size_t t) { r.flip(i * nd + t); });
                if (r.any())
                    T.quotient.add_relation(std::move(r));
            }
    for (std::size_t k : T.quotient.kept())
        T.rep.emplace_back(k / nd, k % nd);
    T.pure_table.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        T.pure_table.push_back(T.quotient.project(BitVec::unit(n, k)));

    Bimodule& S = T.space;
    S.dim = T.rep.size();
    for (auto [i, j] : T.rep)
        S.labels.push_back(join(M.labels[i], N.labels[j]));
    S.left.assign(A.dim, std::vector<BitVec>(S.dim));
    S.right = S.left;
    for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t q = 0; q < S.dim; ++q) {
            auto [i, j] = T.rep[q];
            BitVec l(S.dim), r(S.dim);
            M.left[a][i].for_each([&](std::size_t s) { l ^= T.pure(s, j); });
            N.right[a][j].for_each([&](std::size_t t) { r ^= T.pure(i, t); });
            S.left[a][q] = std::move(l);
            S.right[a][q] = std::move(r);
        }
    return T;
}

TensorProduct tensor_square_over_A(const Calculus& calc, const LabelJoin& join)
{
    return tensor_over(calc.A, calc.omega1, calc.omega1, join);
}

/* ---- second order ---- */

std::vector<BitVec> bimodule_closure(const Algebra& A, const Bimodule& M, const std::vector<BitVec>& gens)
{
    Echelon e(M.dim);
    std::vector<BitVec> basis;
    auto push = [&](const BitVec& v) {
        if (e.insert(v))
            basis.push_back(v);
    };
    for (auto& g : gens) {
        if (g.size() != M.dim)
            throw InvalidInput("relation generator has wrong length");
        push(g);
    }
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t a = 0; a < A.dim; ++a) {
            BitVec ea = A.basis(a);
            push(M.act_left(ea, basis[k]));
            push(M.act_right(basis[k], ea));
        }
    return basis;
}

Bimodule quotient_bimodule(const Bimodule& M, const Quotient& q)
{
    Bimodule Q;
    auto kept = q.kept();
    Q.dim = kept.size();
    for (auto k : kept)
        Q.labels.push_back("[" + M.labels[k] + "]");
    std::size_t na = M.left.size();
    Q.left.assign(na, std::vector<BitVec>(Q.dim));
    Q.right = Q.left;
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t k = 0; k < Q.dim; ++k) {
            Q.left[a][k] = q.project(M.left[a][kept[k]]);
            Q.right[a][k] = q.project(M.right[a][kept[k]]);
        }
    return Q;
}

static std::string second_order_violation(const Calculus& calc, const SecondOrder& so)
{
    const auto& A = calc.A;
    for (std::size_t a = 0; a < A.dim; ++a)
        if (so.d1(calc.d.col(a)).any())
            return "d1∘d ≠ 0 at " + A.labels[a];
    for (std::size_t a = 0; a < A.dim; ++a) {
        BitVec ea = A.basis(a);
        const BitVec& da = calc.d.col(a);
        for (std::size_t m = 0; m < calc.omega1.dim; ++m) {
            BitVec w = BitVec::unit(calc.omega1.dim, m);
            BitVec lhs = so.d1(calc.omega1.act_left(ea, w));
            BitVec rhs = so.wedge_of(da, w) + so.omega2.act_left(ea, so.d1(w));
            if (lhs != rhs)
                return "graded Leibniz fails for " + A.labels[a] + "·" + calc.omega1.labels[m];
            lhs = so.d1(calc.omega1.act_right(w, ea));
            rhs = so.omega2.act_right(so.d1(w), ea) + so.wedge_of(w, da);
            if (lhs != rhs)
                return "graded Leibniz fails for " + calc.omega1.labels[m] + "·" + A.labels[a];
        }
    }
    return {};
}

SecondOrder build_second_order(const Calculus& calc, TensorProduct t2, std::vector<BitVec> generators,
                               const D1Rule& rule)
{
    SecondOrder so;
    so.t2 = std::move(t2);
    so.generators = std::move(generators);
    so.relations = bimodule_closure(calc.A, so.t2.space, so.generators);
    so.rel = Quotient(so.t2.dim(), so.relations);
    so.omega2 = quotient_bimodule(so.t2.space, so.rel);
    so.wedge = LinMap(so.t2.dim(), so.omega2.dim);
    for (std::size_t k = 0; k < so.t2.dim(); ++k)
        so.wedge.col(k) = so.rel.project(BitVec::unit(so.t2.dim(), k));
    const std::size_t m = calc.omega1.dim;
    if (rule.theta) {
        so.theta = rule.theta;
        so.d1 = LinMap(m, so.omega2.dim);
        for (std::size_t i = 0; i < m; ++i) {
            BitVec w = BitVec::unit(m, i);
            so.d1.col(i) = so.wedge_of(*rule.theta, w) + so.wedge_of(w, *rule.theta);
        }
    } else if (rule.map) {
        if (rule.map->src_dim() != m || rule.map->dst_dim() != so.omega2.dim)
            throw InvalidInput("explicit d1 has the wrong shape");
        so.d1 = *rule.map;
    } else {
        throw InvalidInput("second-order data needs an inner element or an explicit d1");
    }
    if (auto why = second_order_violation(calc, so); !why.empty())
        throw InconsistentSecondOrder("inconsistent second-order data: " + why);
    return so;
}

std::optional<BitVec> find_inner_element(const Calculus& calc)
{
    const auto& A = calc.A;
    const auto& M = calc.omega1;
    BitMat sys(A.dim * M.dim, M.dim);
    BitVec rhs(A.dim * M.dim);
    for (std::size_t a = 0; a < A.dim; ++a) {
        for (std::size_t k = 0; k < M.dim; ++k) {
            BitVec c = M.left[a][k] + M.right[a][k];
            c.for_each([&](std::size_t r) { sys.set(a * M.dim + r, k); });
        }
        calc.d.col(a).for_each([&](std::size_t r) { rhs.set(a * M.dim + r); });
    }
    auto sol = solve_linear(sys, rhs);
    return sol.particular;
}

/* ---- diagnostics ---- */

Diagnostic check_algebra(const Algebra& A)
{
    Diagnostic d;
    for (std::size_t i = 0; i < A.dim && d.ok(); ++i)
        for (std::size_t j = 0; j < A.dim && d.ok(); ++j)
            for (std::size_t k = 0; k < A.dim; ++k) {
                BitVec l = A.mul(A.prod(i, j), A.basis(k));
                BitVec r = A.mul(A.basis(i), A.prod(j, k));
                if (l != r) {
                    d.failures.push_back("associativity fails on (" + A.labels[i] + "," + A.labels[j] + "," +
                                         A.labels[k] + ")");
                    break;
                }
            }
    for (std::size_t i = 0; i < A.dim; ++i) {
        BitVec e = A.basis(i);
        if (A.mul(A.unit, e) != e || A.mul(e, A.unit) != e) {
            d.failures.push_back("unit does not act as identity on " + A.labels[i]);
            break;
        }
    }
    return d;
}

Diagnostic check_bimodule(const Algebra& A, const Bimodule& M)
{
    Diagnostic d;
    auto fail = [&](const std::string& s) { d.failures.push_back(s); };
    for (std::size_t m = 0; m < M.dim; ++m) {
        BitVec w = BitVec::unit(M.dim, m);
        if (M.act_left(A.unit, w) != w || M.act_right(w, A.unit) != w) {
            fail("unit does not act as identity on " + M.labels[m]);
            break;
        }
    }
    for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t b = 0; b < A.dim; ++b)
            for (std::size_t m = 0; m < M.dim; ++m) {
                BitVec ea = A.basis(a), eb = A.basis(b), w = BitVec::unit(M.dim, m);
                std::string at = "(" + A.labels[a] + "," + A.labels[b] + "," + M.labels[m] + ")";
                if (M.act_left(A.prod(a, b), w) != M.act_left(ea, M.act_left(eb, w)))
                    return fail("left module axiom fails on " + at), d;
                if (M.act_right(w, A.prod(a, b)) != M.act_right(M.act_right(w, ea), eb))
                    return fail("right module axiom fails on " + at), d;
                if (M.act_right(M.act_left(ea, w), eb) != M.act_left(ea, M.act_right(w, eb)))
                    return fail("left and right actions do not commute on " + at), d;
            }
    return d;
}

Diagnostic check_calculus(const Calculus& calc)
{
    Diagnostic d = check_algebra(calc.A);
    auto m = check_bimodule(calc.A, calc.omega1);
    d.failures.insert(d.failures.end(), m.failures.begin(), m.failures.end());
    const auto& A = calc.A;
    const auto& M = calc.omega1;
    if (calc.d.src_dim() != A.dim || calc.d.dst_dim() != M.dim) {
        d.failures.push_back("d has the wrong shape");
        return d;
    }
    bool leib = true;
    for (std::size_t a = 0; a < A.dim && leib; ++a)
        for (std::size_t b = 0; b < A.dim; ++b) {
            BitVec lhs = calc.d(A.prod(a, b));
            BitVec rhs = M.act_right(calc.d.col(a), A.basis(b)) + M.act_left(A.basis(a), calc.d.col(b));
            if (lhs != rhs) {
                d.failures.push_back("Leibniz rule fails on (" + A.labels[a] + "," + A.labels[b] + ")");
                leib = false;
                break;
            }
        }
    Echelon span(M.dim);
    for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t b = 0; b < A.dim; ++b)
            span.insert(M.act_left(A.basis(a), calc.d.col(b)));
    if (span.rank() != M.dim)
        d.failures.push_back("A·dA spans only " + std::to_string(span.rank()) + " of " + std::to_string(M.dim) +
                             " dimensions of Ω¹");
    return d;
}

Diagnostic check_second_order(const Calculus& calc, const SecondOrder& so)
{
    Diagnostic d;
    auto closure = bimodule_closure(calc.A, so.t2.space, so.relations);
    if (closure.size() != so.rel.relation_rank())
        d.failures.push_back("relation space is not a sub-bimodule");
    for (auto& r : so.relations)
        if (so.wedge(r).any()) {
            d.failures.push_back("wedge does not vanish on the relation space");
            break;
        }
    if (auto why = second_order_violation(calc, so); !why.empty())
        d.failures.push_back(why);
    return d;
}

/* ---- universal calculus ---- */

Calculus universal_calculus(const Algebra& A)
{
    const std::size_t n = A.dim, nn = n * n;
    BitMat mult(n, nn);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
            A.prod(b, c).for_each([&](std::size_t r) { mult.set(r, b * n + c); });
    auto K = kernel_basis(mult);
    SpanCoordinates sc(K);

    Calculus calc;
    calc.A = A;
    Bimodule& M = calc.omega1;
    M.dim = K.size();
    for (auto& k : K) {
        std::string s;
        k.for_each([&](std::size_t p) {
            if (!s.empty())
                s += "+";
            s += A.labels[p / n] + "⊗" + A.labels[p % n];
        });
        M.labels.push_back(s);
    }
    M.left.assign(n, std::vector<BitVec>(M.dim));
    M.right = M.left;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < M.dim; ++k) {
            BitVec l(nn), r(nn);
            K[k].for_each([&](std::size_t p) {
                std::size_t b = p / n, c = p % n;
                A.prod(a, b).for_each([&](std::size_t s) { l.flip(s * n + c); });
                A.prod(c, a).for_each([&](std::size_t s) { r.flip(b * n + s); });
            });
            M.left[a][k] = *sc.coords(l);
            M.right[a][k] = *sc.coords(r);
        }
    calc.d = LinMap(n, M.dim);
    for (std::size_t a = 0; a < n; ++a) {
        BitVec v(nn);
        A.unit.for_each([&](std::size_t u) {
            v.flip(u * n + a);
            v.flip(a * n + u);
        });
        calc.d.col(a) = *sc.coords(v);
    }
    return calc;
}

std::pair<Bimodule, LinMap> rebase(const Bimodule& M, const std::vector<BitVec>& basis, std::vector<std::string> labels)
{
    SpanCoordinates sc(basis);
    if (basis.size() != M.dim || !sc.independent())
        throw InvalidInput("rebase: the given vectors are not a basis");
    Bimodule R;
    R.dim = M.dim;
    R.labels = std::move(labels);
    std::size_t na = M.left.size();
    R.left.assign(na, std::vector<BitVec>(R.dim));
    R.right = R.left;
    for (std::size_t a = 0; a < na; ++a)
        for (std::size_t k = 0; k < R.dim; ++k) {
            BitVec ea = BitVec::unit(na, a);
            R.left[a][k] = *sc.coords(M.act_left(ea, basis[k]));
            R.right[a][k] = *sc.coords(M.act_right(basis[k], ea));
        }
    LinMap change(M.dim, M.dim);
    for (std::size_t i = 0; i < M.dim; ++i)
        change.col(i) = *sc.coords(BitVec::unit(M.dim, i));
    return {std::move(R), std::move(change)};
}

/* ---- bimodule maps ---- */

std::vector<LinMap> bimodule_hom_basis(const Algebra& A, const Bimodule& M, const Bimodule& N)
{
    const std::size_t md = M.dim, nd = N.dim, n = md * nd;
    Echelon e(n);
    for (std::size_t a = 0; a < A.dim; ++a)
        for (int side = 0; side < 2; ++side) {
            const auto& actM = side == 0 ? M.left[a] : M.right[a];
            const auto& actN = side == 0 ? N.left[a] : N.right[a];
            // transpose of the action on N: tr[r] = { s : (a.e_s)[r] = 1 }
            std::vector<BitVec> tr(nd, BitVec(nd));
            for (std::size_t s = 0; s < nd; ++s)
                actN[s].for_each([&](std::size_t r) { tr[r].set(s); });
            for (std::size_t m = 0; m < md; ++m)
                for (std::size_t r = 0; r < nd; ++r) {
                    BitVec row(n);
                    actM[m].for_each([&](std::size_t j) { row.flip(j * nd + r); });
                    tr[r].for_each([&](std::size_t s) { row.flip(m * nd + s); });
                    if (row.any())
                        e.insert(std::move(row));
                }
        }
    std::vector<LinMap> out;
    for (auto& v : e.kernel())
        out.push_back(LinMap::unflatten(md, nd, v));
    return out;
}

std::string bimodule_map_violation(const Algebra& A, const Bimodule& M, const Bimodule& N, const LinMap& f)
{
    if (f.src_dim() != M.dim || f.dst_dim() != N.dim)
        return "map has the wrong shape";
    for (std::size_t a = 0; a < A.dim; ++a)
        for (std::size_t m = 0; m < M.dim; ++m) {
            if (f(M.left[a][m]) != N.act_left(A.basis(a), f.col(m)))
                return "fails to commute with " + A.labels[a] + "· on " + M.labels[m];
            if (f(M.right[a][m]) != N.act_right(f.col(m), A.basis(a)))
                return "fails to commute with ·" + A.labels[a] + " on " + M.labels[m];
        }
    return {};
}

} // namespace f2geom
