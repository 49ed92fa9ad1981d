#include "f2geom/moduli.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

namespace f2geom {

/* ---- configuration ---- */

Constraints Constraints::parse(const std::string& list)
{
    Constraints c;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            continue;
        if (tok == "torsion-free")
            c.torsion_free = true;
        else if (tok == "cotorsion-free")
            c.cotorsion_free = true;
        else if (tok == "metric-compatible")
            c.metric_compatible = true;
        else if (tok == "qlc")
            c.torsion_free = c.metric_compatible = true;
        else if (tok == "wqlc")
            c.torsion_free = c.cotorsion_free = true;
        else
            throw InvalidInput("unknown constraint " + tok);
    }
    return c;
}

std::vector<std::string> Constraints::names() const
{
    std::vector<std::string> n;
    if (torsion_free)
        n.push_back("torsion-free");
    if (cotorsion_free)
        n.push_back("cotorsion-free");
    if (metric_compatible)
        n.push_back("metric-compatible");
    return n;
}

Strategy parse_strategy(const std::string& s)
{
    if (s == "brute")
        return Strategy::brute;
    if (s == "reduced")
        return Strategy::reduced;
    if (s == "invariant")
        return Strategy::invariant;
    throw InvalidInput("unknown strategy " + s + " (expected brute, reduced or invariant)");
}

const char* strategy_name(Strategy s)
{
    switch (s) {
    case Strategy::brute: return "brute";
    case Strategy::reduced: return "reduced";
    default: return "invariant";
    }
}

/* ---- parameter spaces ---- */

LinMap ParameterSpace::sigma_at(const BitVec& c) const
{
    LinMap s = sigma.empty() ? LinMap() : LinMap(sigma[0].src_dim(), sigma[0].dst_dim());
    c.for_each([&](std::size_t k) { s += sigma[k]; });
    return s;
}

LinMap ParameterSpace::alpha_at(const BitVec& c) const
{
    LinMap a = alpha.empty() ? LinMap() : LinMap(alpha[0].src_dim(), alpha[0].dst_dim());
    c.for_each([&](std::size_t k) { a += alpha[k]; });
    return a;
}

Connection ParameterSpace::connection(const Geometry& geo, const BitVec& c) const
{
    return inner_connection_unchecked(geo, sigma_at(c), alpha_at(c));
}

static std::string entry_name(const LinMap& f, const std::vector<std::string>& src, const std::vector<std::string>& dst)
{
    long col = -1, row = -1;
    for (std::size_t c = 0; c < f.src_dim(); ++c)
        if (f.col(c).any()) {
            if (col >= 0 || f.col(c).count() != 1)
                return {};
            col = long(c);
            row = f.col(c).first();
        }
    if (col < 0)
        return {};
    return "(" + src[std::size_t(col)] + ")[" + dst[std::size_t(row)] + "]";
}

ParameterSpace parameter_space(const Geometry& geo)
{
    const auto& A = geo.calc->A;
    const auto& M = geo.calc->omega1;
    const auto& T = geo.t2().space;
    auto Hs = bimodule_hom_basis(A, T, T);
    auto Ha = bimodule_hom_basis(A, M, T);
    ParameterSpace ps;
    ps.sigma_count = Hs.size();
    ps.alpha_count = Ha.size();
    LinMap zs(T.dim, T.dim), za(M.dim, T.dim);
    for (std::size_t k = 0; k < Hs.size(); ++k) {
        auto n = entry_name(Hs[k], T.labels, T.labels);
        ps.names.push_back(n.empty() ? "σ#" + std::to_string(k) : "σ" + n);
        ps.sigma.push_back(Hs[k]);
        ps.alpha.push_back(za);
    }
    for (std::size_t k = 0; k < Ha.size(); ++k) {
        auto n = entry_name(Ha[k], M.labels, T.labels);
        ps.names.push_back(n.empty() ? "α#" + std::to_string(k) : "α" + n);
        ps.sigma.push_back(zs);
        ps.alpha.push_back(Ha[k]);
    }
    return ps;
}

namespace {

// left-linear map determined by its values on frame generators
struct RawCoord {
    std::string name;
    LinMap map;
};

} // namespace

static std::vector<BitVec> right_defects(const Algebra& A, const Bimodule& S, const Bimodule& D, const LinMap& f)
{
    BitVec v;
    std::vector<BitVec> parts;
    for (std::size_t x = 0; x < S.dim; ++x)
        for (std::size_t u = 0; u < A.dim; ++u) {
            BitVec ex = BitVec::unit(S.dim, x);
            parts.push_back(f(S.act_right(ex, A.basis(u))) + D.act_right(f(ex), A.basis(u)));
        }
    return parts;
}

static BitVec concat_all(const std::vector<BitVec>& parts)
{
    std::size_t n = 0;
    for (auto& p : parts)
        n += p.size();
    BitVec v(n);
    std::size_t off = 0;
    for (auto& p : parts) {
        p.for_each([&](std::size_t i) { v.set(off + i); });
        off += p.size();
    }
    return v;
}

ParameterSpace invariant_parameter_space(const Geometry& geo, bool constant_only)
{
    if (!geo.frame)
        throw InvalidInput("invariant strategy needs a left-invariant frame");
    const Frame& F = *geo.frame;
    const auto& A = geo.calc->A;
    const auto& M = geo.calc->omega1;
    const auto& T = geo.t2().space;
    const std::size_t r = F.rank(), n = A.dim;
    const std::size_t nu = constant_only ? 1 : n;
    auto coeff = [&](std::size_t u) { return constant_only ? A.one() : A.basis(u); };
    auto ulabel = [&](std::size_t u) { return constant_only ? std::string("1") : A.labels[u]; };

    std::vector<std::vector<BitVec>> c2(T.dim), c1(M.dim);
    for (std::size_t k = 0; k < T.dim; ++k)
        c2[k] = F.coords2(BitVec::unit(T.dim, k)).value();
    for (std::size_t k = 0; k < M.dim; ++k)
        c1[k] = F.coords1(BitVec::unit(M.dim, k)).value();
    auto pname = [&](std::size_t ab) { return F.names[ab / r] + F.names[ab % r]; };

    // raw coordinates: σ(e^a e^b) ∋ coeff(u) e^c e^d ; α(e^a) ∋ coeff(u) e^c e^d
    std::vector<RawCoord> sraw, araw;
    for (std::size_t ab = 0; ab < r * r; ++ab)
        for (std::size_t cd = 0; cd < r * r; ++cd)
            for (std::size_t u = 0; u < nu; ++u) {
                LinMap f(T.dim, T.dim);
                for (std::size_t k = 0; k < T.dim; ++k)
                    f.col(k) = T.act_left(A.mul(c2[k][ab], coeff(u)), F.pairs[cd]);
                sraw.push_back({"σ(" + pname(ab) + ")[" + ulabel(u) + "·" + pname(cd) + "]", std::move(f)});
            }
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t cd = 0; cd < r * r; ++cd)
            for (std::size_t u = 0; u < nu; ++u) {
                LinMap f(M.dim, T.dim);
                for (std::size_t k = 0; k < M.dim; ++k)
                    f.col(k) = T.act_left(A.mul(c1[k][a], coeff(u)), F.pairs[cd]);
                araw.push_back({"α(" + F.names[a] + ")[" + ulabel(u) + "·" + pname(cd) + "]", std::move(f)});
            }

    ParameterSpace ps;
    ps.invariant = true;
    const std::size_t total = sraw.size() + araw.size();
    auto add_block = [&](const std::vector<RawCoord>& raw, const Bimodule& S, std::size_t offset, bool is_sigma) {
        if (raw.empty())
            return std::size_t(0);
        std::vector<BitVec> cols;
        for (auto& rc : raw)
            cols.push_back(concat_all(right_defects(A, S, T, rc.map)));
        BitMat sys(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            cols[j].for_each([&](std::size_t i) { sys.set(i, j); });
        auto K = kernel_basis(sys);
        for (auto& v : K) {
            LinMap f(S.dim, T.dim);
            std::string name;
            v.for_each([&](std::size_t j) {
                f += raw[j].map;
                name += (name.empty() ? "" : "+") + raw[j].name;
            });
            if (v.count() > 1)
                name = "{" + name + "}";
            BitVec full(total);
            v.for_each([&](std::size_t j) { full.set(offset + j); });
            ps.names.push_back(name);
            ps.raw.push_back(full);
            if (is_sigma) {
                ps.sigma.push_back(std::move(f));
                ps.alpha.push_back(LinMap(M.dim, T.dim));
            } else {
                ps.sigma.push_back(LinMap(T.dim, T.dim));
                ps.alpha.push_back(std::move(f));
            }
        }
        return K.size();
    };
    ps.sigma_count = add_block(sraw, T, 0, true);
    ps.alpha_count = add_block(araw, M, sraw.size(), false);
    return ps;
}

/* ---- quadratic systems ---- */

BitVec QuadraticSystem::eval(const BitVec& x) const
{
    BitVec r = d0;
    auto s = x.support();
    for (std::size_t a = 0; a < s.size(); ++a) {
        r ^= lin[s[a]];
        for (std::size_t b = 0; b < a; ++b)
            r ^= q(s[a], s[b]);
    }
    return r;
}

bool QuadraticSystem::linear() const
{
    return std::all_of(quad.begin(), quad.end(), [](const BitVec& v) { return v.none(); });
}

QuadraticSystem polarize(std::size_t nvars, const std::function<BitVec(const BitVec&)>& F, std::size_t checks)
{
    QuadraticSystem s;
    s.nvars = nvars;
    s.d0 = F(BitVec(nvars));
    s.nres = s.d0.size();
    std::vector<BitVec> single(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        single[i] = F(BitVec::unit(nvars, i));
        s.lin.push_back(single[i] + s.d0);
    }
    s.quad.reserve(nvars * (nvars ? nvars - 1 : 0) / 2);
    for (std::size_t i = 0; i < nvars; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            BitVec x(nvars);
            x.set(i);
            x.set(j);
            s.quad.push_back(F(x) + single[i] + single[j] + s.d0);
        }
    auto check = [&](const BitVec& x) {
        if (F(x) != s.eval(x))
            throw std::logic_error("residual map has degree above 2");
    };
    if (nvars > 2 && (std::uint64_t(1) << std::min<std::size_t>(nvars, 63)) <= 4 * checks) {
        for (std::uint64_t v = 0; v < (std::uint64_t(1) << nvars); ++v)
            check(BitVec::from_u64(nvars, v));
        return s;
    }
    std::mt19937_64 rng(0x5eed + nvars);
    for (std::size_t t = 0; t < checks && nvars > 2; ++t) {
        BitVec x(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            if (rng() & 1)
                x.set(i);
        check(x);
    }
    return s;
}

static bool all_zero(const BitVec& v)
{
    for (auto w : v.words())
        if (w)
            return false;
    return true;
}

std::vector<BitVec> gray_solve(const QuadraticSystem& sys, std::uint64_t cap, unsigned workers, SolveStats* stats)
{
    const std::size_t D = sys.nvars;
    if (D >= 63 || (std::uint64_t(1) << D) > cap)
        throw SearchSpaceTooLarge(D, cap, "use --strategy invariant or raise --enum-cap");
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    std::size_t P = 0;
    while ((std::size_t(1) << (P + 1)) <= workers && P + 1 <= D && D - P > 8)
        ++P;
    const std::size_t L = D - P;
    std::vector<std::vector<std::size_t>> nbr(L);
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < L; ++j)
            if (i != j && sys.q(i, j).any())
                nbr[i].push_back(j);

    std::vector<std::vector<BitVec>> found(std::size_t(1) << P);
    auto run = [&](std::size_t prefix) {
        BitVec y(D);
        for (std::size_t b = 0; b < P; ++b)
            if ((prefix >> b) & 1)
                y.set(L + b);
        BitVec val = sys.eval(y);
        std::vector<BitVec> der(L);
        for (std::size_t i = 0; i < L; ++i) {
            der[i] = sys.lin[i];
            y.for_each([&](std::size_t j) { der[i] ^= sys.q(i, j); });
        }
        auto& out = found[prefix];
        if (all_zero(val))
            out.push_back(y);
        const std::uint64_t steps = std::uint64_t(1) << L;
        for (std::uint64_t s = 1; s < steps; ++s) {
            std::size_t i = std::size_t(std::countr_zero(s));
            val ^= der[i];
            y.flip(i);
            for (std::size_t j : nbr[i])
                der[j] ^= sys.q(i, j);
            if (all_zero(val))
                out.push_back(y);
        }
    };
    const std::size_t parts = std::size_t(1) << P;
    if (parts == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t p = 0; p < parts; ++p)
            pool.emplace_back(run, p);
        for (auto& t : pool)
            t.join();
    }
    std::vector<BitVec> all;
    for (auto& f : found)
        all.insert(all.end(), f.begin(), f.end());
    if (stats)
        stats->candidates += std::uint64_t(1) << D;
    return all;
}

namespace {

struct Affine {
    BitVec p;
    std::vector<BitVec> K;
    BitVec at(const BitVec& z) const
    {
        BitVec y = p;
        z.for_each([&](std::size_t i) { y ^= K[i]; });
        return y;
    }
};

} // namespace

static QuadraticSystem compose(const QuadraticSystem& sys, const Affine& aff)
{
    return polarize(aff.K.size(), [&](const BitVec& z) { return sys.eval(aff.at(z)); }, 4);
}

std::vector<BitVec> guess_and_determine(const QuadraticSystem& sys0, std::uint64_t cap, SolveStats* stats)
{
    Affine aff{BitVec(sys0.nvars), {}};
    for (std::size_t i = 0; i < sys0.nvars; ++i)
        aff.K.push_back(BitVec::unit(sys0.nvars, i));
    QuadraticSystem sys = sys0;

    // peel off rows without quadratic terms until none are left
    for (;;) {
        BitVec quadrows(sys.nres);
        for (auto& qv : sys.quad)
            quadrows |= qv;
        BitMat eqs(0, sys.nvars);
        std::vector<bool> rhs;
        for (std::size_t r = 0; r < sys.nres; ++r) {
            if (quadrows.get(r))
                continue;
            BitVec row(sys.nvars);
            for (std::size_t i = 0; i < sys.nvars; ++i)
                if (sys.lin[i].get(r))
                    row.set(i);
            if (row.none() && !sys.d0.get(r))
                continue;
            eqs.append_row(row);
            rhs.push_back(sys.d0.get(r));
        }
        if (eqs.rows() == 0)
            break;
        BitVec b(rhs.size());
        for (std::size_t r = 0; r < rhs.size(); ++r)
            if (rhs[r])
                b.set(r);
        auto sol = solve_linear(eqs, b);
        if (sol.empty())
            return {};
        Affine next{aff.at(*sol.particular), {}};
        for (auto& k : sol.kernel_basis) {
            BitVec v(aff.p.size());
            k.for_each([&](std::size_t i) { v ^= aff.K[i]; });
            next.K.push_back(v);
        }
        sys = compose(sys0, next);
        aff = std::move(next);
    }

    const std::size_t D = sys.nvars;
    // greedy vertex cover of the monomial graph
    std::vector<std::vector<bool>> edge(D, std::vector<bool>(D));
    std::vector<std::size_t> deg(D);
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (sys.q(i, j).any()) {
                edge[i][j] = edge[j][i] = true;
                ++deg[i];
                ++deg[j];
            }
    std::vector<bool> inS(D);
    std::vector<std::size_t> S;
    for (;;) {
        std::size_t best = D;
        for (std::size_t i = 0; i < D; ++i)
            if (!inS[i] && deg[i] > 0 && (best == D || deg[i] > deg[best]))
                best = i;
        if (best == D)
            break;
        inS[best] = true;
        S.push_back(best);
        for (std::size_t j = 0; j < D; ++j)
            if (edge[best][j] && !inS[j]) {
                --deg[j];
                deg[best]--;
            }
    }
    std::sort(S.begin(), S.end());
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < D; ++i)
        if (!inS[i])
            rest.push_back(i);
    if (S.size() >= 63 || (std::uint64_t(1) << S.size()) > cap)
        throw SearchSpaceTooLarge(S.size(), cap, "guessed variables exceed the cap");
    if (stats)
        stats->guessed = S.size();

    std::vector<BitVec> out;
    const std::uint64_t guesses = std::uint64_t(1) << S.size();
    for (std::uint64_t gmask = 0; gmask < guesses; ++gmask) {
        BitVec y(D);
        for (std::size_t b = 0; b < S.size(); ++b)
            if ((gmask >> b) & 1)
                y.set(S[b]);
        BitVec c = sys.eval(y); // constant part for this guess
        BitMat M(sys.nres, rest.size());
        for (std::size_t jj = 0; jj < rest.size(); ++jj) {
            std::size_t j = rest[jj];
            BitVec col = sys.lin[j];
            for (std::size_t b = 0; b < S.size(); ++b)
                if ((gmask >> b) & 1)
                    col ^= sys.q(j, S[b]);
            col.for_each([&](std::size_t r) { M.set(r, jj); });
        }
        auto sol = solve_linear(M, c);
        if (stats)
            ++stats->candidates;
        if (sol.empty())
            continue;
        for (const BitVec& z : enumerate_affine(sol, cap)) {
            BitVec full = y;
            z.for_each([&](std::size_t jj) { full.set(rest[jj]); });
            out.push_back(aff.at(full));
        }
        if (out.size() > cap)
            throw SearchSpaceTooLarge(out.size(), cap, "too many solutions");
    }
    return out;
}

/* ---- classification ---- */

static BitVec residual(const Geometry& geo, const Connection& c, const Constraints& k)
{
    std::vector<BitVec> parts;
    if (k.torsion_free)
        parts.push_back(torsion(geo, c).flatten());
    if (k.cotorsion_free)
        parts.push_back(cotorsion(geo, c));
    if (k.metric_compatible)
        parts.push_back(metric_defect(geo, c));
    return concat_all(parts);
}

std::optional<bool> constant_coefficients(const Geometry& geo, const Connection& c)
{
    if (!geo.frame)
        return std::nullopt;
    const Frame& F = *geo.frame;
    const auto& A = geo.calc->A;
    auto constant = [&](const BitVec& x) {
        auto co = F.coords2(x);
        if (!co)
            return false;
        return std::all_of(co->begin(), co->end(), [&](const BitVec& f) { return f.none() || f == A.one(); });
    };
    const auto& T = geo.t2();
    for (const auto& p : F.pairs)
        if (!constant(c.sigma(p)))
            return false;
    for (const auto& e : F.forms) {
        BitVec a = c.alpha ? (*c.alpha)(e) : c.nabla(e) + T.tensor(geo.theta, e) + c.sigma(T.tensor(e, geo.theta));
        if (!constant(a))
            return false;
    }
    return true;
}

static ClassifiedConnection verify(const Geometry& geo, const ParameterSpace& ps, const BitVec& params,
                                   const SearchConfig& cfg)
{
    ClassifiedConnection cc;
    cc.params = params;
    LinMap s = ps.sigma_at(params), a = ps.alpha_at(params);
    cc.conn = connection_from_inner(geo, s, a);
    cc.torsion_free = torsion_free(geo, cc.conn);
    if (cc.torsion_free != torsion_free_inner(geo, s, a))
        throw std::logic_error("inner torsion criterion disagrees with ∧∇+d");
    if (geo.metric) {
        cc.cotorsion_free = cotorsion(geo, cc.conn).none();
        BitVec general = metric_defect(geo, cc.conn);
        if (general != metric_defect_inner(geo, s, a))
            throw std::logic_error("inner metric-compatibility formula disagrees with ∇g");
        cc.metric_compatible = general.none();
        if (cc.torsion_free && cc.metric_compatible && !cc.cotorsion_free)
            throw std::logic_error("torsion-free metric-compatible connection with nonzero cotorsion");
    }
    const auto& k = cfg.constraints;
    if ((k.torsion_free && !cc.torsion_free) || (k.cotorsion_free && !cc.cotorsion_free) ||
        (k.metric_compatible && !cc.metric_compatible))
        throw std::logic_error("search returned a connection violating a requested constraint");
    cc.flat = curvature(geo, cc.conn).is_zero();
    cc.constant_coefficients = constant_coefficients(geo, cc.conn);
    return cc;
}

ConnectionModuli classify(const Geometry& geo, const SearchConfig& cfg)
{
    auto t0 = std::chrono::steady_clock::now();
    const auto& k = cfg.constraints;
    if (!k.any())
        throw InvalidInput("empty constraint set");
    if ((k.cotorsion_free || k.metric_compatible) && !geo.metric)
        throw InvalidInput("constraint " + std::string(k.metric_compatible ? "metric-compatible" : "cotorsion-free") +
                           " needs a quantum metric, and this calculus has none");
    ConnectionModuli out;
    out.space = cfg.strategy == Strategy::invariant ? invariant_parameter_space(geo, cfg.constant_only)
                                                    : parameter_space(geo);
    const ParameterSpace& ps = out.space;
    const std::size_t n = ps.size();
    out.stats.strategy = strategy_name(cfg.strategy);
    out.stats.parameter_dim = n;
    auto F = [&](const Constraints& which) {
        return [&, which](const BitVec& c) { return residual(geo, ps.connection(geo, c), which); };
    };

    std::vector<BitVec> sols;
    if (cfg.strategy == Strategy::brute) {
        SolveStats st;
        sols = gray_solve(polarize(n, F(k)), cfg.enum_cap, cfg.workers, &st);
        out.stats.linear_dim = n;
        out.stats.candidates = st.candidates;
    } else {
        Constraints lin;
        lin.torsion_free = k.torsion_free;
        lin.cotorsion_free = k.cotorsion_free || (k.torsion_free && k.metric_compatible);
        AffineSolutionSpace space;
        if (lin.any()) {
            auto L = polarize(n, F(lin));
            if (!L.linear())
                throw std::logic_error("torsion/cotorsion residual is not affine");
            BitMat M(L.nres, n);
            for (std::size_t i = 0; i < n; ++i)
                L.lin[i].for_each([&](std::size_t r) { M.set(r, i); });
            space = solve_linear(M, L.d0);
        } else {
            space.ambient_dim = n;
            space.particular = BitVec(n);
            for (std::size_t i = 0; i < n; ++i)
                space.kernel_basis.push_back(BitVec::unit(n, i));
        }
        out.stats.linear_dim = space.dimension();
        if (!space.empty()) {
            if (!k.metric_compatible) {
                for (const BitVec& c : enumerate_affine(space, cfg.enum_cap))
                    sols.push_back(c);
                out.stats.candidates = sols.size();
            } else {
                Constraints met;
                met.metric_compatible = true;
                auto Fm = F(met);
                auto G = polarize(space.dimension(), [&](const BitVec& y) { return Fm(space.point(y)); });
                SolveStats st;
                auto ys = cfg.strategy == Strategy::reduced ? gray_solve(G, cfg.enum_cap, cfg.workers, &st)
                                                            : guess_and_determine(G, cfg.enum_cap, &st);
                for (auto& y : ys)
                    sols.push_back(space.point(y));
                out.stats.candidates = st.candidates;
                out.stats.guessed = st.guessed;
            }
        }
    }
    out.stats.before_filter = sols.size();
    for (auto& c : sols) {
        if (cfg.sigma_invertible && !ps.sigma_at(c).invertible())
            continue;
        out.connections.push_back(verify(geo, ps, c, cfg));
    }
    std::sort(out.connections.begin(), out.connections.end(),
              [](const auto& a, const auto& b) { return a.params < b.params; });
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

/* ---- WQLC family ---- */

Connection WqlcFamily::member(const Geometry& geo, const BitVec& kernel_coeffs) const
{
    return space.connection(geo, solutions.point(kernel_coeffs));
}

WqlcFamily wqlc_family(const Geometry& geo)
{
    geo.require_metric();
    WqlcFamily fam;
    fam.space = invariant_parameter_space(geo, false);
    const auto& ps = fam.space;
    const std::size_t n = ps.size();
    auto L = polarize(n, [&](const BitVec& c) { return residual(geo, ps.connection(geo, c), Constraints::wqlc()); });
    if (!L.linear())
        throw std::logic_error("torsion/cotorsion residual is not affine");
    BitMat M(L.nres, n);
    for (std::size_t i = 0; i < n; ++i)
        L.lin[i].for_each([&](std::size_t r) { M.set(r, i); });
    fam.solutions = solve_linear(M, L.d0);

    // closure of the kernel under multiplying every coefficient function by an element of A
    const auto& A = geo.calc->A;
    const std::size_t blk = A.dim;
    std::vector<BitVec> rawK;
    for (auto& v : fam.solutions.kernel_basis) {
        BitVec r(ps.raw.empty() ? 0 : ps.raw[0].size());
        v.for_each([&](std::size_t i) { r ^= ps.raw[i]; });
        rawK.push_back(r);
    }
    SpanCoordinates span(rawK);
    fam.module_stable = true;
    for (const auto& r : rawK)
        for (std::size_t w = 0; w < blk && fam.module_stable; ++w) {
            LinMap lw = A.left_mul(A.basis(w));
            BitVec moved(r.size());
            for (std::size_t b = 0; b * blk < r.size(); ++b)
                lw(r.slice(b * blk, blk)).for_each([&](std::size_t i) { moved.set(b * blk + i); });
            if (!span.coords(moved))
                fam.module_stable = false;
        }
    // the kernel is usually only stable under a shift-twisted action, so count functions by dimension
    if (!fam.solutions.empty() && fam.solutions.dimension() % blk == 0)
        fam.function_params = fam.solutions.dimension() / blk;
    return fam;
}

} // namespace f2geom
