#include "f2geom/demorgan.hpp"

#include <random>
#include <algorithm>

namespace f2geom {

BitVec BarAlgebra::add(const BitVec& a, const BitVec& b) const { return a + b + A_->one(); }

BitVec BarAlgebra::mul(const BitVec& a, const BitVec& b) const { return A_->mul(a, b) + a + b; }

BitVec BarAlgebra::power(const BitVec& a, std::size_t k) const
{
    BitVec r = one();
    for (std::size_t i = 0; i < k; ++i)
        r = mul(r, a);
    return r;
}

static std::vector<BitVec> vector_samples(std::size_t dim, std::size_t max_bits, std::size_t extra,
                                          std::uint64_t seed, const std::vector<BitVec>& must)
{
    std::vector<BitVec> s;
    if (dim <= max_bits) {
        for (std::uint64_t k = 0; k < (std::uint64_t(1) << dim); ++k)
            s.push_back(BitVec::from_u64(dim, k));
        return s;
    }
    s.push_back(BitVec(dim));
    s.push_back(BitVec::ones(dim));
    for (std::size_t i = 0; i < dim; ++i)
        s.push_back(BitVec::unit(dim, i));
    for (auto& m : must)
        s.push_back(m);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = 0; k < extra; ++k) {
        BitVec v(dim);
        for (std::size_t i = 0; i < dim; ++i)
            v.set(i, coin(rng));
        s.push_back(v);
    }
    return s;
}

std::vector<BitVec> algebra_samples(const Algebra& A, std::size_t max_bits, std::size_t extra, std::uint64_t seed)
{
    return vector_samples(A.dim, max_bits, extra, seed, {A.one()});
}

namespace {

struct Failures {
    Diagnostic& diag;
    std::size_t cap = 8;
    void expect(bool ok, const std::string& what)
    {
        if (!ok && diag.failures.size() < cap)
            diag.failures.push_back(what);
    }
};

} // namespace

Diagnostic check_bar_algebra(const Algebra& A, std::size_t max_bits)
{
    Diagnostic diag;
    Failures f{diag};
    auto sp = std::make_shared<const Algebra>(A);
    BarAlgebra B(sp);
    auto S = algebra_samples(A, max_bits);
    auto fmt = [&](const BitVec& x) { return A.format(x); };
    bool bar_boolean = true;
    for (auto& a : S) {
        f.expect(B.add(B.zero(), a) == a, "0̄ +̄ a = a fails at " + fmt(a));
        f.expect(B.add(a, a) == B.zero(), "a +̄ a = 0̄ fails at " + fmt(a));
        f.expect(B.mul(B.one(), a) == a && B.mul(a, B.one()) == a, "1̄ is not a unit at " + fmt(a));
        f.expect(B.mul(B.zero(), a) == B.zero(), "0̄ ·̄ a = 0̄ fails at " + fmt(a));
        f.expect(B.mul(a, a) == A.mul(a, a), "a ·̄ a = a² fails at " + fmt(a));
        f.expect(B.complement(B.complement(a)) == a, "complement is not an involution at " + fmt(a));
        bar_boolean = bar_boolean && B.mul(a, a) == a;
        for (auto& b : S) {
            f.expect(B.add(a, b) == B.add(b, a), "+̄ not commutative at " + fmt(a) + ", " + fmt(b));
            f.expect(B.complement(A.mul(a, b)) == B.mul(B.complement(a), B.complement(b)),
                     "complement not multiplicative at " + fmt(a) + ", " + fmt(b));
            f.expect(B.complement(a + b) == B.add(B.complement(a), B.complement(b)),
                     "complement not additive at " + fmt(a) + ", " + fmt(b));
            for (auto& c : S) {
                const std::string at = " at " + fmt(a) + ", " + fmt(b) + ", " + fmt(c);
                f.expect(B.add(B.add(a, b), c) == B.add(a, B.add(b, c)), "+̄ not associative" + at);
                f.expect(B.mul(B.mul(a, b), c) == B.mul(a, B.mul(b, c)), "·̄ not associative" + at);
                f.expect(B.mul(a, B.add(b, c)) == B.add(B.mul(a, b), B.mul(a, c)), "left distributivity" + at);
                f.expect(B.mul(B.add(a, b), c) == B.add(B.mul(a, c), B.mul(b, c)), "right distributivity" + at);
            }
        }
    }
    if (A.dim <= max_bits)
        f.expect(bar_boolean == is_boolean(A), "Ā Boolean iff A Boolean fails");
    return diag;
}

BitVec frobenius(const Algebra& A, const BitVec& a) { return A.mul(a, a); }

BitVec frobenius_part(const Algebra& A, const BitVec& a) { return a + A.mul(a, a); }

bool is_boolean(const Algebra& A)
{
    // a ↦ a + a² is additive on a commutative algebra, so the basis decides
    if (!A.commutative())
        return false;
    for (std::size_t i = 0; i < A.dim; ++i)
        if (frobenius_part(A, A.basis(i)).any())
            return false;
    return true;
}

FrobeniusReport check_frobenius_part(const Algebra& A)
{
    FrobeniusReport r;
    auto D = [&](const BitVec& a) { return frobenius_part(A, a); };
    for (std::size_t i = 0; i < A.dim; ++i)
        for (std::size_t j = 0; j < A.dim; ++j) {
            BitVec a = A.basis(i), b = A.basis(j), ab = A.mul(a, b);
            const std::string at = A.labels[i] + ", " + A.labels[j];
            if (D(a + b) != D(a) + D(b))
                r.additive_failures.push_back(at);
            if (D(ab) != D(a) + D(b) + A.mul(D(a), D(b)))
                r.bar_product_failures.push_back(at);
            if (D(ab) != A.mul(a, D(b)) + A.mul(D(a), b) + A.mul(D(a), D(b)))
                r.twisted_failures.push_back(at);
        }
    return r;
}

std::uint64_t poly_shift(std::uint64_t f)
{
    std::uint64_t g = 0, p = 1; // p = (1+y)^k
    for (std::size_t k = 0; k < 64 && (f >> k); ++k) {
        if ((f >> k) & 1)
            g ^= p;
        p ^= p << 1;
    }
    return g;
}

std::string poly_format(std::uint64_t f, char var)
{
    if (!f)
        return "0";
    std::string s;
    for (int k = 63; k >= 0; --k) {
        if (!((f >> k) & 1))
            continue;
        if (!s.empty())
            s += "+";
        if (k == 0)
            s += "1";
        else if (k == 1)
            s += var;
        else
            s += std::string(1, var) + "^" + std::to_string(k);
    }
    return s;
}

ChangeOfVariables change_of_variables_check(std::uint64_t f)
{
    if (f < 2)
        throw InvalidInput("change of variables needs a relation of degree at least 1");
    ChangeOfVariables r;
    r.f = f;
    r.g = poly_shift(f);
    auto A = std::make_shared<const Algebra>(polynomial_algebra(f));
    BarAlgebra B(A);
    auto eval = [&](std::uint64_t p, const BitVec& a) {
        BitVec acc = A->zero(), pw = A->one();
        for (std::size_t k = 0; k < 64 && (p >> k); ++k) {
            if ((p >> k) & 1)
                acc += pw;
            pw = A->mul(pw, a);
        }
        return acc;
    };
    auto bar_eval = [&](std::uint64_t p, const BitVec& a) {
        BitVec acc = B.zero();
        for (std::size_t k = 0; k < 64 && (p >> k); ++k)
            acc = B.add(acc, B.scale((p >> k) & 1, B.power(a, k)));
        return acc;
    };
    r.identity_holds = true;
    for (auto& a : algebra_samples(*A, 10, 64))
        if (bar_eval(r.g, a) != A->one() + eval(f, a))
            r.identity_holds = false;
    // x in F2[x]/(f); for a linear relation x + c it is the constant c
    BitVec x = A->dim >= 2 ? A->basis(1) : ((f & 1) ? A->one() : A->zero());
    r.relation_holds = bar_eval(r.g, x) == B.zero();
    return r;
}

/* ---- Ω̄¹ ---- */

BarCalculus::BarCalculus(std::shared_ptr<const Calculus> calc, BitVec theta)
    : calc_(std::move(calc)), theta_(std::move(theta)), bar_(std::make_shared<const Algebra>(calc_->A))
{
    if (theta_.size() != calc_->omega1.dim)
        throw InvalidInput("θ must be a 1-form");
}

BitVec BarCalculus::left(const BitVec& a, const BitVec& w) const
{
    const auto& M = calc_->omega1;
    return M.act_left(a, theta_) + M.act_left(a + calc_->A.one(), w);
}

BitVec BarCalculus::right(const BitVec& w, const BitVec& a) const
{
    const auto& M = calc_->omega1;
    return M.act_right(theta_, a) + M.act_right(w, a + calc_->A.one());
}

BitVec BarCalculus::d(const BitVec& a) const { return theta_ + calc_->d(a); }

bool is_inner_by(const Calculus& calc, const BitVec& theta)
{
    for (std::size_t i = 0; i < calc.A.dim; ++i) {
        BitVec a = calc.A.basis(i);
        if (calc.d(a) != calc.omega1.act_left(a, theta) + calc.omega1.act_right(theta, a))
            return false;
    }
    return true;
}

bool bar_inner_by_zero(const BarCalculus& bc)
{
    const BitVec z(bc.theta().size());
    for (auto& a : algebra_samples(bc.base().A, 6, 32))
        if (bc.d(a) != bc.add(bc.left(a, z), bc.right(z, a)))
            return false;
    return true;
}

Diagnostic check_bar_calculus(const BarCalculus& bc, std::size_t max_bits)
{
    Diagnostic diag;
    Failures f{diag};
    const auto& calc = bc.base();
    const auto& A = calc.A;
    const auto& M = calc.omega1;
    const auto& B = bc.algebra();
    auto SA = algebra_samples(A, max_bits);
    auto SW = vector_samples(M.dim, max_bits, 16, 7, {bc.theta()});
    auto fa = [&](const BitVec& a) { return A.format(a); };
    auto fw = [&](const BitVec& w) { return M.format(w); };

    for (auto& w : SW) {
        f.expect(bc.add(bc.zero(), w) == w, "θ is not the zero of Ω̄¹ at " + fw(w));
        f.expect(bc.left(B.one(), w) == w && bc.right(w, B.one()) == w, "1̄ does not act trivially on " + fw(w));
        for (auto& e : SW)
            f.expect(bc.complement(w + e) == bc.add(bc.complement(w), bc.complement(e)),
                     "complement not additive at " + fw(w) + ", " + fw(e));
    }
    for (auto& a : SA) {
        f.expect(bc.complement(calc.d(a)) == bc.d(B.complement(a)), "complement does not commute with d at " + fa(a));
        for (auto& b : SA) {
            const std::string at = " at " + fa(a) + ", " + fa(b);
            f.expect(bc.d(B.mul(a, b)) == bc.add(bc.right(bc.d(a), b), bc.left(a, bc.d(b))), "Leibniz for d̄" + at);
            f.expect(bc.d(B.add(a, b)) == bc.add(bc.d(a), bc.d(b)), "d̄ not additive" + at);
            for (auto& w : SW) {
                const std::string at3 = at + ", " + fw(w);
                f.expect(bc.left(a, bc.left(b, w)) == bc.left(B.mul(a, b), w), "left action" + at3);
                f.expect(bc.right(bc.right(w, a), b) == bc.right(w, B.mul(a, b)), "right action" + at3);
                f.expect(bc.left(a, bc.right(w, b)) == bc.right(bc.left(a, w), b), "bimodule" + at3);
                f.expect(bc.left(B.add(a, b), w) == bc.add(bc.left(a, w), bc.left(b, w)), "left distributivity" + at3);
                f.expect(bc.right(w, B.add(a, b)) == bc.add(bc.right(w, a), bc.right(w, b)), "right distributivity" + at3);
            }
        }
        for (auto& w : SW) {
            const std::string at = " at " + fa(a) + ", " + fw(w);
            f.expect(bc.complement(M.act_left(a, w)) == bc.left(B.complement(a), bc.complement(w)),
                     "complement not a left module map" + at);
            f.expect(bc.complement(M.act_right(w, a)) == bc.right(bc.complement(w), B.complement(a)),
                     "complement not a right module map" + at);
            for (auto& e : SW) {
                f.expect(bc.left(a, bc.add(w, e)) == bc.add(bc.left(a, w), bc.left(a, e)), "left linearity" + at);
                f.expect(bc.right(bc.add(w, e), a) == bc.add(bc.right(w, a), bc.right(e, a)), "right linearity" + at);
            }
        }
    }
    f.expect(is_inner_by(calc, bc.theta()) == bar_inner_by_zero(bc), "θ inner iff 0 bar-inner fails");
    return diag;
}

/* ---- Ω̄¹⊗Ω̄¹ ---- */

BarTensor::BarTensor(const BarCalculus& bc, const TensorProduct& t2)
    : bc_(&bc), t2_(&t2), tt_(t2.tensor(bc.theta(), bc.theta()))
{
}

BitVec BarTensor::left(const BitVec& a, const BitVec& x) const
{
    const auto& S = t2_->space;
    return S.act_left(a, tt_) + S.act_left(a + bc_->base().A.one(), x);
}

BitVec BarTensor::right(const BitVec& x, const BitVec& a) const
{
    const auto& S = t2_->space;
    return S.act_right(tt_, a) + S.act_right(x, a + bc_->base().A.one());
}

BitVec BarTensor::tensor(const BitVec& w, const BitVec& e) const
{
    const auto& th = bc_->theta();
    return t2_->tensor(w, e) + t2_->tensor(th, e) + t2_->tensor(w, th);
}

Diagnostic check_bar_tensor(const BarCalculus& bc, const TensorProduct& t2, std::size_t max_bits)
{
    Diagnostic diag;
    Failures f{diag};
    BarTensor T(bc, t2);
    const auto& A = bc.base().A;
    const auto& B = bc.algebra();
    auto SA = algebra_samples(A, max_bits);
    auto SW = vector_samples(bc.base().omega1.dim, std::min<std::size_t>(max_bits, 3), 10, 11, {bc.theta()});
    auto SX = vector_samples(t2.dim(), max_bits, 12, 13, {T.theta2()});
    for (auto& w : SW)
        for (auto& e : SW) {
            f.expect(T.complement(t2.tensor(w, e)) == T.tensor(bc.complement(w), bc.complement(e)),
                     "complement does not intertwine ⊗ and ⊗̄");
            for (auto& a : SA) {
                f.expect(T.tensor(bc.right(w, a), e) == T.tensor(w, bc.left(a, e)), "⊗̄ not balanced");
                f.expect(T.left(a, T.tensor(w, e)) == T.tensor(bc.left(a, w), e), "⊗̄ not left linear over Ā");
                f.expect(T.right(T.tensor(w, e), a) == T.tensor(w, bc.right(e, a)), "⊗̄ not right linear over Ā");
            }
            for (auto& u : SW) {
                f.expect(T.tensor(bc.add(w, u), e) == T.add(T.tensor(w, e), T.tensor(u, e)), "⊗̄ not additive on the left");
                f.expect(T.tensor(e, bc.add(w, u)) == T.add(T.tensor(e, w), T.tensor(e, u)), "⊗̄ not additive on the right");
            }
        }
    for (auto& x : SX)
        for (auto& a : SA) {
            f.expect(T.complement(t2.space.act_left(a, x)) == T.left(B.complement(a), T.complement(x)),
                     "complement not a left module map on Ω¹⊗Ω¹");
            f.expect(T.complement(t2.space.act_right(x, a)) == T.right(T.complement(x), B.complement(a)),
                     "complement not a right module map on Ω¹⊗Ω¹");
            for (auto& b : SA)
                f.expect(T.left(a, T.left(b, x)) == T.left(B.mul(a, b), x) &&
                             T.left(a, T.right(x, b)) == T.right(T.left(a, x), b),
                         "Ω̄¹⊗Ω̄¹ bimodule axioms");
        }
    return diag;
}

/* ---- Ω̄² ---- */

BarOmega2::BarOmega2(const BarCalculus& bc, const SecondOrder& so) : bc_(&bc), so_(&so)
{
    if (so.d1(bc.theta()).any())
        throw InvalidInput("bar Ω² requires dθ=0");
    tt_ = so.wedge_of(bc.theta(), bc.theta());
}

BitVec BarOmega2::left(const BitVec& a, const BitVec& x) const
{
    const auto& S = so_->omega2;
    return S.act_left(a, tt_) + S.act_left(a + bc_->base().A.one(), x);
}

BitVec BarOmega2::right(const BitVec& x, const BitVec& a) const
{
    const auto& S = so_->omega2;
    return S.act_right(tt_, a) + S.act_right(x, a + bc_->base().A.one());
}

BitVec BarOmega2::d(const BitVec& w) const { return tt_ + so_->d1(w); }

BitVec BarOmega2::wedge(const BitVec& w, const BitVec& e) const
{
    const auto& th = bc_->theta();
    return so_->wedge_of(w, e) + so_->wedge_of(th, e) + so_->wedge_of(w, th);
}

Diagnostic check_bar_omega2(const BarCalculus& bc, const SecondOrder& so, std::size_t max_bits)
{
    BarOmega2 W(bc, so);
    Diagnostic diag;
    Failures f{diag};
    const auto& A = bc.base().A;
    const auto& B = bc.algebra();
    auto SA = algebra_samples(A, max_bits);
    auto SW = vector_samples(bc.base().omega1.dim, std::min<std::size_t>(max_bits, 3), 10, 17, {bc.theta()});
    for (auto& a : SA) {
        f.expect(W.d(bc.d(a)) == W.zero(), "d̄d̄a is not the zero of Ω̄² at " + A.format(a));
        for (auto& w : SW) {
            f.expect(W.d(bc.left(a, w)) == W.add(W.wedge(bc.d(a), w), W.left(a, W.d(w))), "left Leibniz for d̄ on Ω̄¹");
            f.expect(W.d(bc.right(w, a)) == W.add(W.right(W.d(w), a), W.wedge(w, bc.d(a))), "right Leibniz for d̄ on Ω̄¹");
            f.expect(W.complement(so.omega2.act_left(a, so.d1(w))) == W.left(B.complement(a), W.complement(so.d1(w))),
                     "complement not a module map on Ω²");
        }
    }
    for (auto& w : SW) {
        f.expect(W.complement(so.d1(w)) == W.d(bc.complement(w)), "complement does not commute with d on Ω¹");
        for (auto& e : SW)
            f.expect(W.complement(so.wedge_of(w, e)) == W.wedge(bc.complement(w), bc.complement(e)),
                     "complement does not intertwine the products");
    }
    return diag;
}

} // namespace f2geom
