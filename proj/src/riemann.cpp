#include "f2geom/riemann.hpp"

#include "f2geom/graphcalc.hpp"

namespace f2geom {

/* ---- frames ---- */

static std::optional<std::vector<BitVec>> split_coords(const std::optional<BitVec>& c, std::size_t parts,
                                                       std::size_t n)
{
    if (!c)
        return std::nullopt;
    std::vector<BitVec> out;
    for (std::size_t a = 0; a < parts; ++a)
        out.push_back(c->slice(a * n, n));
    return out;
}

std::optional<std::vector<BitVec>> Frame::coords1(const BitVec& x) const
{
    return split_coords(span1->coords(x), rank(), algebra_dim);
}

std::optional<std::vector<BitVec>> Frame::coords2(const BitVec& x) const
{
    return split_coords(span2->coords(x), rank() * rank(), algebra_dim);
}

Frame make_frame(const Calculus& calc, const TensorProduct& t2, std::vector<std::string> names,
                 std::vector<BitVec> forms)
{
    Frame f;
    f.names = std::move(names);
    f.forms = std::move(forms);
    const auto& A = calc.A;
    const std::size_t r = f.forms.size();
    f.algebra_dim = A.dim;
    f.omega1_dim = calc.omega1.dim;
    f.t2_dim = t2.dim();
    std::vector<BitVec> fam1, fam2;
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t u = 0; u < A.dim; ++u)
            fam1.push_back(calc.omega1.act_left(A.basis(u), f.forms[a]));
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            f.pairs.push_back(t2.tensor(f.forms[a], f.forms[b]));
            for (std::size_t u = 0; u < A.dim; ++u)
                fam2.push_back(t2.space.act_left(A.basis(u), f.pairs.back()));
        }
    auto s1 = std::make_shared<SpanCoordinates>(fam1);
    auto s2 = std::make_shared<SpanCoordinates>(fam2);
    if (s1->rank() != fam1.size() || s1->rank() != calc.omega1.dim)
        throw InvalidInput("frame forms are not a free left basis of Ω¹");
    if (s2->rank() != fam2.size() || s2->rank() != t2.dim())
        throw InvalidInput("frame products are not a free left basis of Ω¹⊗Ω¹");
    f.span1 = std::move(s1);
    f.span2 = std::move(s2);
    return f;
}

/* ---- geometry ---- */

const Metric& Geometry::require_metric() const
{
    if (!metric)
        throw InvalidInput("no quantum metric on this calculus");
    return *metric;
}

BitVec Geometry::left_mul3(std::size_t a, const BitVec& x) const
{
    const std::size_t t = t2().dim();
    BitVec r(t3.dim());
    x.for_each([&](std::size_t k) { r ^= left3[a * t + k]; });
    return r;
}

Geometry make_geometry(std::shared_ptr<const Calculus> calc, std::shared_ptr<const SecondOrder> so,
                       std::optional<Metric> metric, std::optional<Frame> frame, const LabelJoin& join3)
{
    Geometry geo;
    geo.calc = std::move(calc);
    geo.so = std::move(so);
    geo.metric = std::move(metric);
    geo.frame = std::move(frame);
    if (geo.so->theta)
        geo.theta = *geo.so->theta;
    else if (auto th = find_inner_element(*geo.calc))
        geo.theta = *th;
    else
        throw InvalidInput("calculus is not inner");

    const auto& A = geo.calc->A;
    const auto& M = geo.calc->omega1;
    const auto& T = geo.so->t2;
    const std::size_t m = M.dim, t = T.dim();
    geo.t3 = tensor_over(A, T.space, M, join3);
    geo.w = tensor_over(A, geo.so->omega2, M, [](const std::string& a, const std::string& b) { return a + "⊗" + b; });
    for (auto [k, j] : geo.t3.rep)
        geo.triples.push_back({T.rep[k].first, T.rep[k].second, j});
    geo.left3.reserve(m * t);
    geo.left_wedge.reserve(m * t);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t k = 0; k < t; ++k) {
            auto [p, q] = T.rep[k];
            geo.left3.push_back(geo.t3.tensor(T.pure(a, p), BitVec::unit(m, q)));
            geo.left_wedge.push_back(geo.w.tensor(geo.so->wedge(T.pure(a, p)), BitVec::unit(m, q)));
        }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            geo.d1_tensor.push_back(geo.w.tensor(geo.so->d1.col(a), BitVec::unit(m, b)));
    if (geo.metric) {
        auto why = snake_violation(*geo.calc, T, geo.metric->g, geo.metric->inverse);
        if (!why.empty())
            throw InvalidInput("metric inverse fails: " + why);
    }
    return geo;
}

/* ---- connections ---- */

Connection inner_connection_unchecked(const Geometry& geo, const LinMap& sigma, const LinMap& alpha)
{
    const auto& T = geo.t2();
    const std::size_t m = geo.m();
    Connection c;
    c.nabla = LinMap(m, T.dim());
    for (std::size_t i = 0; i < m; ++i) {
        BitVec e = BitVec::unit(m, i);
        c.nabla.col(i) = T.tensor(geo.theta, e) + sigma(T.tensor(e, geo.theta)) + alpha.col(i);
    }
    c.sigma = sigma;
    c.alpha = alpha;
    return c;
}

Connection connection_from_inner(const Geometry& geo, const LinMap& sigma, const LinMap& alpha)
{
    const auto& A = geo.calc->A;
    const auto& T = geo.t2();
    if (sigma.src_dim() != T.dim() || sigma.dst_dim() != T.dim() || alpha.src_dim() != geo.m() ||
        alpha.dst_dim() != T.dim())
        throw DimensionMismatch("connection data has the wrong shape");
    auto why = bimodule_map_violation(A, T.space, T.space, sigma);
    if (!why.empty())
        throw InvalidInput("σ is not a bimodule map: " + why);
    why = bimodule_map_violation(A, geo.calc->omega1, T.space, alpha);
    if (!why.empty())
        throw InvalidInput("α is not a bimodule map: " + why);
    Connection c = inner_connection_unchecked(geo, sigma, alpha);
    why = leibniz_violation(geo, c);
    if (!why.empty())
        throw std::logic_error("inner connection fails Leibniz: " + why);
    return c;
}

std::string leibniz_violation(const Geometry& geo, const Connection& c)
{
    const auto& A = geo.calc->A;
    const auto& M = geo.calc->omega1;
    const auto& T = geo.t2();
    for (std::size_t a = 0; a < A.dim; ++a) {
        BitVec ea = A.basis(a), da = geo.calc->d(ea);
        for (std::size_t i = 0; i < M.dim; ++i) {
            BitVec w = BitVec::unit(M.dim, i);
            BitVec lhs = c.nabla(M.act_left(ea, w));
            BitVec rhs = T.tensor(da, w) + T.space.act_left(ea, c.nabla(w));
            if (lhs != rhs)
                return "left Leibniz fails for " + A.labels[a] + "·" + M.labels[i];
            lhs = c.nabla(M.act_right(w, ea));
            rhs = T.space.act_right(c.nabla(w), ea) + c.sigma(T.tensor(w, da));
            if (lhs != rhs)
                return "right Leibniz fails for " + M.labels[i] + "·" + A.labels[a];
        }
    }
    return {};
}

LinMap torsion(const Geometry& geo, const Connection& c)
{
    return geo.so->wedge * c.nabla + geo.so->d1;
}

bool torsion_free(const Geometry& geo, const Connection& c)
{
    return torsion(geo, c).is_zero();
}

bool torsion_free_inner(const Geometry& geo, const LinMap& sigma, const LinMap& alpha)
{
    const auto& W = geo.so->wedge;
    return (W + W * sigma).is_zero() && (W * alpha).is_zero();
}

BitVec d_wedge(const Geometry& geo, const Connection& c, const BitVec& x)
{
    const auto& T = geo.t2();
    const std::size_t m = geo.m(), t = T.dim();
    BitVec r(geo.w.dim());
    x.for_each([&](std::size_t k) {
        auto [p, q] = T.rep[k];
        r ^= geo.d1_tensor[p * m + q];
        c.nabla.col(q).for_each([&](std::size_t l) { r ^= geo.left_wedge[p * t + l]; });
    });
    return r;
}

BitVec cotorsion(const Geometry& geo, const Connection& c)
{
    return d_wedge(geo, c, geo.require_metric().g);
}

// σ⊗id on (Ω¹⊗Ω¹)⊗Ω¹
static LinMap sigma12(const Geometry& geo, const LinMap& sigma)
{
    const std::size_t m = geo.m();
    LinMap s(geo.t3.dim(), geo.t3.dim());
    for (std::size_t k3 = 0; k3 < geo.t3.dim(); ++k3) {
        auto [k, j] = geo.t3.rep[k3];
        s.col(k3) = geo.t3.tensor(sigma.col(k), BitVec::unit(m, j));
    }
    return s;
}

// id⊗σ
static LinMap sigma23(const Geometry& geo, const LinMap& sigma)
{
    const auto& T = geo.t2();
    LinMap s(geo.t3.dim(), geo.t3.dim());
    for (std::size_t k3 = 0; k3 < geo.t3.dim(); ++k3) {
        auto [a, b, c] = geo.triples[k3];
        s.col(k3) = geo.left_mul3(a, sigma(T.pure(b, c)));
    }
    return s;
}

BitVec tensor_nabla(const Geometry& geo, const Connection& c, const BitVec& x)
{
    const auto& T = geo.t2();
    const std::size_t m = geo.m();
    BitVec first(geo.t3.dim()), second(geo.t3.dim());
    x.for_each([&](std::size_t k) {
        auto [p, q] = T.rep[k];
        first ^= geo.t3.tensor(c.nabla.col(p), BitVec::unit(m, q));
        second ^= geo.left_mul3(p, c.nabla.col(q));
    });
    return first + sigma12(geo, c.sigma)(second);
}

BitVec metric_defect(const Geometry& geo, const Connection& c)
{
    return tensor_nabla(geo, c, geo.require_metric().g);
}

BitVec metric_defect_inner(const Geometry& geo, const LinMap& sigma, const LinMap& alpha)
{
    const auto& T = geo.t2();
    const BitVec& g = geo.require_metric().g;
    const std::size_t m = geo.m();
    BitVec theta_g(geo.t3.dim());
    geo.theta.for_each([&](std::size_t i) { theta_g ^= geo.left_mul3(i, g); });
    BitVec g_theta = geo.t3.tensor(g, geo.theta);
    BitVec alpha_id(geo.t3.dim()), id_alpha(geo.t3.dim());
    g.for_each([&](std::size_t k) {
        auto [p, q] = T.rep[k];
        alpha_id ^= geo.t3.tensor(alpha.col(p), BitVec::unit(m, q));
        id_alpha ^= geo.left_mul3(p, alpha.col(q));
    });
    LinMap s12 = sigma12(geo, sigma);
    return theta_g + s12(sigma23(geo, sigma)(g_theta)) + alpha_id + s12(id_alpha);
}

LinMap curvature(const Geometry& geo, const Connection& c)
{
    LinMap R(geo.m(), geo.w.dim());
    for (std::size_t i = 0; i < geo.m(); ++i)
        R.col(i) = d_wedge(geo, c, c.nabla.col(i));
    return R;
}

/* ---- lifts, Ricci, Einstein ---- */

bool is_lift(const Geometry& geo, const LinMap& i)
{
    return (geo.so->wedge * i).is_identity() &&
           bimodule_map_violation(geo.calc->A, geo.so->omega2, geo.t2().space, i).empty();
}

std::vector<LinMap> enumerate_lifts(const Geometry& geo, std::uint64_t cap)
{
    const auto& omega2 = geo.so->omega2;
    auto H = bimodule_hom_basis(geo.calc->A, omega2, geo.t2().space);
    const std::size_t s = omega2.dim;
    BitMat sys(s * s, H.size());
    for (std::size_t h = 0; h < H.size(); ++h)
        (geo.so->wedge * H[h]).flatten().for_each([&](std::size_t r) { sys.set(r, h); });
    auto sol = solve_linear(sys, LinMap::identity(s).flatten());
    std::vector<LinMap> out;
    for (const BitVec& c : enumerate_affine(sol, cap)) {
        LinMap i(s, geo.t2().dim());
        c.for_each([&](std::size_t h) { i += H[h]; });
        out.push_back(std::move(i));
    }
    return out;
}

// ((,)⊗id)(ω_a ⊗ y) for y in (Ω¹⊗Ω¹)⊗Ω¹, valued in Ω¹⊗Ω¹
static BitVec contract_left(const Geometry& geo, std::size_t a, const BitVec& y)
{
    const auto& T = geo.t2();
    const auto& inv = geo.require_metric().inverse;
    BitVec r(T.dim());
    y.for_each([&](std::size_t k3) {
        auto [p, q, s] = geo.triples[k3];
        r ^= T.space.act_left(inv(T.pure(a, p)), T.pure(q, s));
    });
    return r;
}

RicciData ricci(const Geometry& geo, const Connection& c, const LinMap& lift)
{
    const auto& T = geo.t2();
    const auto& met = geo.require_metric();
    const std::size_t m = geo.m();
    LinMap R = curvature(geo, c);
    LinMap lift_id(geo.w.dim(), geo.t3.dim());
    for (std::size_t kw = 0; kw < geo.w.dim(); ++kw) {
        auto [s, j] = geo.w.rep[kw];
        lift_id.col(kw) = geo.t3.tensor(lift.col(s), BitVec::unit(m, j));
    }
    RicciData out{BitVec(T.dim()), BitVec()};
    met.g.for_each([&](std::size_t k) {
        auto [a, b] = T.rep[k];
        out.ricci ^= contract_left(geo, a, lift_id(R.col(b)));
    });
    out.scalar = met.inverse(out.ricci);
    return out;
}

RicciData two_ricci(const Geometry& geo, const Connection& c, const LinMap& ip, const LinMap& im)
{
    return ricci(geo, c, ip + im);
}

EinsteinData einstein(const Geometry& geo, const Connection& c, const LinMap& lift, EinsteinForm form)
{
    const auto& T = geo.t2();
    const auto& met = geo.require_metric();
    const auto& M = geo.calc->omega1;
    RicciData rd = ricci(geo, c, lift);
    EinsteinData e;
    e.eins = rd.ricci + (form == EinsteinForm::scalar_metric ? T.space.act_left(rd.scalar, met.g) : met.g);
    e.divergence = BitVec(M.dim);
    tensor_nabla(geo, c, e.eins).for_each([&](std::size_t k3) {
        auto [p, q, s] = geo.triples[k3];
        e.divergence ^= M.act_left(met.inverse(T.pure(p, q)), BitVec::unit(M.dim, s));
    });
    return e;
}

} // namespace f2geom
