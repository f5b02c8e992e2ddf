#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "cremona/claims.hpp"
#include "cremona/dejonquieres.hpp"
#include "cremona/field.hpp"
#include "cremona/linear.hpp"
#include "cremona/picard.hpp"
#include "cremona/polynomial.hpp"
#include "cremona/surfaces.hpp"
#include "cremona/weighted_map.hpp"
#include "cremona/weyl.hpp"

namespace cremona {

namespace registry_detail {

inline Json profile_json(const std::map<unsigned, OrderStat>& profile) {
    Json out = Json::object();
    for (const auto& [o, st] : profile) {
        Json traces = Json::array();
        for (const auto& [t, c] : st.traces) traces.push_back(Json::array({t, c}));
        Json ranks = Json::array();
        for (const auto& [r, c] : st.fixed_ranks) ranks.push_back(Json::array({r, c}));
        out[std::to_string(o)] =
            Json{{"count", st.count}, {"traces", traces}, {"fixed_ranks", ranks}};
    }
    return out;
}

inline Json matrix_json(const IntMat& m, unsigned n) {
    Json rows = Json::array();
    for (unsigned i = 0; i < n; ++i) {
        Json row = Json::array();
        for (unsigned j = 0; j < n; ++j) row.push_back(m[i * n + j]);
        rows.push_back(row);
    }
    return rows;
}

inline Json point_json(const std::vector<FieldElement>& pt) {
    Json a = Json::array();
    for (const auto& x : pt) a.push_back(x.str());
    return a;
}

inline Json vec_json(const std::vector<long long>& v) {
    Json a = Json::array();
    for (long long x : v) a.push_back(x);
    return a;
}

// all squarefree monic P over GF(2) with 1 <= deg <= max_deg
inline std::vector<Polynomial> squarefree_gf2(unsigned max_deg) {
    Field f2 = field_make(2, 1);
    auto vs = parse_vars({"x"});
    std::vector<Polynomial> out;
    for (unsigned d = 1; d <= max_deg; ++d)
        for (std::uint64_t enc = 0; enc < (1ull << d); ++enc) {
            std::vector<code_t> coeffs(d + 1, 0);
            for (unsigned i = 0; i < d; ++i) coeffs[i] = (enc >> i) & 1;
            coeffs[d] = 1;
            Polynomial P = from_dense(f2, vs, 0, coeffs);
            if (univariate_squarefree(P)) out.push_back(P);
        }
    return out;
}

// the construction of the order-4 family degenerates exactly when x P(x) is
// invariant under x -> x+1
inline bool example_degenerates(const Polynomial& P) {
    const Field& f = P.field();
    const VarSetPtr& vs = P.vars();
    Polynomial x = Polynomial::variable(f, vs, 0);
    Polynomial xP = x * P;
    return xP.subst_var(0, x + Polynomial::constant(f, vs, 1)) == xP;
}

inline Polynomial random_uv_form(const Field& f, const VarSetPtr& vs, unsigned deg, Rng& rng) {
    Polynomial acc = Polynomial::zero(f, vs);
    for (unsigned i = 0; i <= deg; ++i) {
        code_t c = static_cast<code_t>(rng.below(f.q()));
        if (c) acc = acc + Polynomial::monomial(f, vs, Expo{i, deg - i, 0, 0}, c);
    }
    return acc;
}

} // namespace registry_detail

inline const std::vector<Claim>& claim_registry() {
    using namespace registry_detail;
    static const std::vector<Claim> registry = [] {
        std::vector<Claim> cs;

        // ------------------------------------------------------------------
        // projective linear bounds

        cs.push_back(Claim{
            "lemma1.bound", "projective-p-power-bound",
            "p-power element orders in PGL_{r+1} over characteristic p stay below p * (r+1); "
            "exhaustive over GL3(F2), GL3(F3) and GL2(F4)",
            "",
            {{"budget", "10000000"}},
            [](Context&, const Params& p) {
                std::uint64_t budget = static_cast<std::uint64_t>(p.get_int("budget", 10000000));
                bool g32 = exhaustive_bound_check(2, field_make(2, 1), budget);
                bool g33 = exhaustive_bound_check(2, field_make(3, 1), budget);
                bool g24 = exhaustive_bound_check(1, field_make(2, 2), budget);
                Json data{{"gl3_f2", g32},
                          {"gl3_f3", g33},
                          {"gl2_f4", g24},
                          {"bound_r2_p3", jordan_bound(2, 3)},
                          {"bound_r2_p2", jordan_bound(2, 2)},
                          {"bound_r1_p2", jordan_bound(1, 2)}};
                bool table_ok = jordan_bound(2, 3) == 3 && jordan_bound(2, 2) == 4 &&
                                jordan_bound(1, 2) == 2 && jordan_bound(1, 5) == 5;
                if (g32 && g33 && g24 && table_ok)
                    return Verdict::verified("all p-power projective orders respect the bound",
                                             data);
                return Verdict::refuted("a p-power order beyond the bound exists", data);
            }});

        cs.push_back(Claim{
            "lemma1.unipotent_identity", "unipotent-power-identity",
            "A^{p^{s-1}} = I + (A - I)^{p^{s-1}} for unipotent A in characteristic p, on seeded "
            "random unipotent matrices of size up to 5",
            "",
            {{"count", "1000"}},
            [](Context& ctx, const Params& p) {
                long long count = p.get_int("count", 1000);
                Rng rng = ctx.rng_for("lemma1.unipotent_identity");
                const std::array<code_t, 3> primes = {2, 3, 5};
                long long done = 0;
                while (done < count) {
                    Field f = field_make(primes[rng.below(3)], 1);
                    std::size_t n = 2 + rng.below(4); // r <= 4
                    unsigned s = 1 + static_cast<unsigned>(rng.below(3));
                    FieldMatrix a = random_unipotent(f, n, rng);
                    if (!unipotent_identity_check(a, s)) {
                        return Verdict::refuted(
                            "identity failed",
                            Json{{"p", f.p()}, {"size", n}, {"s", s}, {"matrix", a.str()}});
                    }
                    ++done;
                }
                return Verdict::verified("identity held on " + std::to_string(done) +
                                         " seeded unipotent matrices");
            }});

        // ------------------------------------------------------------------
        // the shift sum behind the P(1,1,n) order argument

        cs.push_back(Claim{
            "thm3.norm_sum", "shift-sum-vanishing",
            "the sum of f(t0 + j t1, t1) over j = 0..p-1 vanishes for every binary form f of "
            "degree n (checked against an independent binomial-expansion oracle)",
            "source text asserts the sum is identically zero",
            {{"p", "0"}, {"n", "0"}, {"f", ""}},
            [](Context&, const Params& prm) {
                std::vector<code_t> ps;
                long long pp = prm.get_int("p", 0);
                if (pp == 0)
                    ps = {2, 3, 5};
                else
                    ps = {static_cast<code_t>(pp)};
                std::string fstr = prm.get_str("f", "");
                long long n = prm.get_int("n", 0);
                if (!fstr.empty() && pp == 0)
                    throw BadParameterError("an explicit form needs an explicit p");
                Json witnesses = Json::array();
                std::uint64_t checked = 0;
                for (code_t p : ps) {
                    Field f = field_make(p, 1);
                    auto vs = parse_vars({"t0", "t1"});
                    std::vector<Polynomial> forms;
                    if (!fstr.empty()) {
                        forms.push_back(parse_polynomial(f, vs, fstr));
                    } else {
                        for (std::uint32_t d = 1; d <= (n ? static_cast<std::uint32_t>(n) : 6);
                             ++d) {
                            if (n && d != static_cast<std::uint32_t>(n)) continue;
                            for (std::uint32_t i = 0; i <= d; ++i)
                                forms.push_back(
                                    Polynomial::monomial(f, vs, Expo{i, d - i}, 1));
                        }
                    }
                    for (const Polynomial& form : forms) {
                        Polynomial s = norm_sum(form, p);
                        if (s != norm_sum_oracle(form, p) ||
                            s != norm_sum_difference_route(form, p))
                            throw Error("shift-sum routes disagree on " + form.str());
                        ++checked;
                        if (!s.is_zero())
                            witnesses.push_back(
                                Json{{"p", p}, {"f", form.str()}, {"sum", s.str()}});
                    }
                }
                if (witnesses.empty())
                    return Verdict::verified("all " + std::to_string(checked) +
                                             " sums vanished (oracle agreed throughout)");
                return Verdict::refuted(
                    "nonzero shift sums exist; the vanishing assertion fails (oracle agreed on "
                    "every value)",
                    Json{{"nonzero", witnesses}, {"forms_checked", checked}});
            }});

        cs.push_back(Claim{
            "thm3.p112.orders", "p111n-order-bound",
            "order-p^2 automorphisms of the P(1,1,2) model exist only for p = 2; the computed "
            "char-3 map (t0+t1, t1, t2+t0^2) has order 9",
            "source text concludes p = 2 is the only possibility",
            {},
            [](Context&, const Params&) {
                Field f2 = field_make(2, 1);
                auto vs2 = parse_vars({"t0:1", "t1:1", "t2:2"});
                WeightedSelfMap g2({parse_polynomial(f2, vs2, "t0+t1"),
                                    parse_polynomial(f2, vs2, "t1"),
                                    parse_polynomial(f2, vs2, "t2+t0*t1")});
                Field f3 = field_make(3, 1);
                auto vs3 = parse_vars({"t0:1", "t1:1", "t2:2"});
                WeightedSelfMap g3({parse_polynomial(f3, vs3, "t0+t1"),
                                    parse_polynomial(f3, vs3, "t1"),
                                    parse_polynomial(f3, vs3, "t2+t0^2")});
                auto o2 = g2.order();
                auto o3 = g3.order();
                Json data{{"char2_map", g2.str()},
                          {"char2_order", o2 ? Json(*o2) : Json()},
                          {"char3_map", g3.str()},
                          {"char3_order", o3 ? Json(*o3) : Json()}};
                if (o3 && *o3 == 9)
                    return Verdict::refuted(
                        "an order-9 automorphism exists in characteristic 3", data);
                return Verdict::verified("no order-p^2 example beyond p = 2 was found", data);
            }});

        // ------------------------------------------------------------------
        // the order-4 de Jonquieres family

        cs.push_back(Claim{
            "ex.dejonquieres.identities", "dejonquieres-example-identities",
            "a(x)a(x+1) + b(x)c(x+1) = a(x)a(x+1) + b(x+1)c(x) = 0 for the family built from "
            "every squarefree P up to the configured degree",
            "",
            {{"max_deg", "6"}},
            [](Context&, const Params& prm) {
                unsigned max_deg = static_cast<unsigned>(prm.get_int("max_deg", 6));
                unsigned checked = 0;
                for (const Polynomial& P : squarefree_gf2(max_deg)) {
                    const Field& f = P.field();
                    const VarSetPtr& vs = P.vars();
                    Polynomial x = Polynomial::variable(f, vs, 0);
                    Polynomial one = Polynomial::constant(f, vs, 1);
                    Polynomial Ps = P.subst_var(0, x + one);
                    Polynomial a = x * P, b = P * Ps, c = x * (x + one);
                    Polynomial a1 = a.subst_var(0, x + one);
                    Polynomial b1 = b.subst_var(0, x + one);
                    Polynomial c1 = c.subst_var(0, x + one);
                    if (!(a * a1 + b * c1).is_zero() || !(a * a1 + b1 * c).is_zero())
                        return Verdict::refuted("identity failed", Json{{"P", P.str()}});
                    ++checked;
                }
                return Verdict::verified("both identities held for all " +
                                         std::to_string(checked) + " squarefree P");
            }});

        cs.push_back(Claim{
            "ex.dejonquieres.order4", "dejonquieres-example-order",
            "the family map has order 4 whenever it is birational; the fiber matrix degenerates "
            "exactly when x P(x) is invariant under x -> x+1",
            "",
            {{"max_deg", "6"}},
            [](Context&, const Params& prm) {
                unsigned max_deg = static_cast<unsigned>(prm.get_int("max_deg", 6));
                Json degenerate = Json::array();
                unsigned order4 = 0;
                for (const Polynomial& P : squarefree_gf2(max_deg)) {
                    bool expect_degenerate = example_degenerates(P);
                    try {
                        auto ex = dj_example_build(P);
                        if (expect_degenerate)
                            return Verdict::refuted("expected degeneration did not happen",
                                                    Json{{"P", P.str()}});
                        if (ex.sigma.order() != 4u)
                            return Verdict::refuted("order is not 4", Json{{"P", P.str()}});
                        if (ex.singular_fibres != 2 * P.degree())
                            return Verdict::refuted("wrong fibre count", Json{{"P", P.str()}});
                        ++order4;
                    } catch (const DegenerateFiberError&) {
                        if (!expect_degenerate)
                            return Verdict::refuted("unexpected degeneration",
                                                    Json{{"P", P.str()}});
                        degenerate.push_back(P.str());
                    }
                }
                if (max_deg == 6 &&
                    degenerate != Json::array({"x + 1", "x^3 + 1", "x^5 + x^4 + x^2 + 1"}))
                    return Verdict::refuted("degenerate set drifted", Json{{"got", degenerate}});
                return Verdict::verified(
                    std::to_string(order4) + " maps of order 4; " +
                        std::to_string(degenerate.size()) + " degenerate inputs signaled",
                    Json{{"degenerate_P", degenerate}});
            }});

        cs.push_back(Claim{
            "ex.dejonquieres.sigma2", "dejonquieres-example-square",
            "sigma^2 = (x, R(x)/y) with R = P(x)P(x+1) / (x(x+1)) in lowest terms, for every "
            "non-degenerate squarefree P up to the configured degree",
            "",
            {{"max_deg", "6"}},
            [](Context&, const Params& prm) {
                unsigned max_deg = static_cast<unsigned>(prm.get_int("max_deg", 6));
                unsigned checked = 0;
                for (const Polynomial& P : squarefree_gf2(max_deg)) {
                    if (example_degenerates(P)) continue;
                    auto ex = dj_example_build(P);
                    const Field& f = P.field();
                    const VarSetPtr& vs = P.vars();
                    DeJonquieresMap sq = compose(ex.sigma, ex.sigma);
                    RationalFunction R(ex.P * ex.P_shift,
                                       parse_polynomial(f, vs, "x^2+x"));
                    DeJonquieresMap expected(
                        Mobius::identity(f),
                        std::array<Polynomial, 4>{Polynomial::zero(f, vs), R.num(), R.den(),
                                                  Polynomial::zero(f, vs)});
                    if (!(sq == expected))
                        return Verdict::refuted("square has unexpected shape",
                                                Json{{"P", P.str()}, {"got", sq.str()}});
                    ++checked;
                }
                return Verdict::verified("sigma^2 matched (x, R/y) for " +
                                         std::to_string(checked) + " polynomials");
            }});

        cs.push_back(Claim{
            "ex.dejonquieres.involution", "dejonquieres-rescaling",
            "rescaling the output y by x(x+1) turns sigma^2 into (x, P(x)P(x+1)/y); literal "
            "conjugation by the same rescaling instead yields (x, x(x+1)P(x)P(x+1)/y)",
            "",
            {{"max_deg", "6"}},
            [](Context&, const Params& prm) {
                unsigned max_deg = static_cast<unsigned>(prm.get_int("max_deg", 6));
                unsigned checked = 0;
                Json sample;
                for (const Polynomial& P : squarefree_gf2(max_deg)) {
                    if (example_degenerates(P)) continue;
                    auto ex = dj_example_build(P);
                    const Field& f = P.field();
                    const VarSetPtr& vs = P.vars();
                    Polynomial lambda = parse_polynomial(f, vs, "x^2+x");
                    Polynomial PP = ex.P * ex.P_shift;
                    DeJonquieresMap sq = compose(ex.sigma, ex.sigma);
                    DeJonquieresMap h = dj_y_scaling(lambda);
                    bool compose_ok = compose(h, sq) == dj_involution(PP);
                    DeJonquieresMap conj = compose(compose(h, sq), h.inverse());
                    bool conj_is_scaled = conj == dj_involution(lambda * PP);
                    if (!compose_ok || !conj_is_scaled)
                        return Verdict::refuted("rescaling computation drifted",
                                                Json{{"P", P.str()},
                                                     {"compose_ok", compose_ok},
                                                     {"conjugate", conj.str()}});
                    if (sample.is_null())
                        sample = Json{{"P", P.str()},
                                      {"rescaled_square", compose(h, sq).str()},
                                      {"conjugate", conj.str()}};
                    ++checked;
                }
                return Verdict::verified(
                    "output rescaling gives the stated involution for " +
                        std::to_string(checked) + " polynomials; conjugation carries the extra "
                        "x(x+1) factor",
                    sample);
            }});

        // ------------------------------------------------------------------
        // degree >= 4 Del Pezzo group facts

        cs.push_back(Claim{
            "dp8.order4", "quadric-order4",
            "(x, y) -> (y+1, x) on the product of two lines has order 4 with square "
            "(x+1, y+1)",
            "",
            {},
            [](Context&, const Params&) {
                Field f2 = field_make(2, 1);
                ProductMap g(Mobius::shift(f2, 1), Mobius::identity(f2), true);
                auto o = g.order();
                ProductMap sq = compose(g, g);
                bool square_ok = !sq.swaps() && sq.phi() == Mobius::shift(f2, 1) &&
                                 sq.psi() == Mobius::shift(f2, 1);
                if (o == 4u && square_ok)
                    return Verdict::verified("order 4, square is the double shift");
                return Verdict::refuted("unexpected order or square",
                                        Json{{"order", o ? Json(*o) : Json()}});
            }});

        cs.push_back(Claim{
            "dp6.torus_no_p_torsion", "hexagonal-torus",
            "the torus factor has no p-torsion: x^p = 1 forces x = 1 in GF(p^k), exhaustively "
            "for q <= 256",
            "",
            {},
            [](Context&, const Params&) {
                for (auto [p, kmax] :
                     {std::pair<code_t, unsigned>{2, 8}, {3, 5}, {5, 3}, {7, 2}}) {
                    for (unsigned k = 1; k <= kmax; ++k) {
                        std::uint64_t q = 1;
                        for (unsigned i = 0; i < k; ++i) q *= p;
                        if (q > 256) continue;
                        Field f = field_make(p, k);
                        for (code_t x = 0; x < f.q(); ++x)
                            if (f.pow(x, p) == 1 && x != 1)
                                return Verdict::refuted(
                                    "p-torsion element found",
                                    Json{{"p", p}, {"k", k}, {"x", f.element_str(x)}});
                    }
                }
                return Verdict::verified("no nontrivial p-torsion in any sampled GF(p^k)");
            }});

        cs.push_back(Claim{
            "dp6.dihedral_orders", "hexagonal-dihedral",
            "element orders of the dihedral group Z/2 x S3 are {1, 2, 3, 6}; no order p^2 "
            "occurs for p = 2, 3",
            "",
            {},
            [](Context&, const Params&) {
                // permutations of {0,1,2} paired with a sign
                std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                std::set<unsigned> orders;
                for (int eps = 0; eps < 2; ++eps)
                    for (const auto& perm : perms) {
                        std::array<int, 3> acc = {0, 1, 2};
                        int sign = 0;
                        unsigned o = 0;
                        do {
                            std::array<int, 3> nxt{};
                            for (int i = 0; i < 3; ++i) nxt[i] = perm[acc[i]];
                            acc = nxt;
                            sign ^= eps;
                            ++o;
                        } while (!(acc == std::array<int, 3>{0, 1, 2} && sign == 0));
                        orders.insert(o);
                    }
                if (orders == std::set<unsigned>{1, 2, 3, 6})
                    return Verdict::verified("orders are exactly {1, 2, 3, 6}");
                Json got = Json::array();
                for (unsigned o : orders) got.push_back(o);
                return Verdict::refuted("unexpected order set", Json{{"orders", got}});
            }});

        cs.push_back(Claim{
            "dp5.a4.fixed_vector", "quintic-fixed-vector",
            "every order-4 isometry in W(A4) fixes a nonzero vector; the standard 4-cycle fixes "
            "the (1,1,1,1,-4) line in the sum-zero model",
            "",
            {},
            [](Context& ctx, const Params&) {
                const GroupScan& scan = ctx.scan(RootSystemType::A4);
                auto it = scan.profile.find(4);
                if (it == scan.profile.end() || it->second.count == 0)
                    return Verdict::refuted("no order-4 elements found", Json());
                for (const auto& [rank, count] : it->second.fixed_ranks)
                    if (rank < 1)
                        return Verdict::refuted("order-4 element with no fixed vector",
                                                profile_json({{4, it->second}}));
                RootSystemPtr rs = root_system(RootSystemType::A4);
                WeylElement w = WeylElement::simple_reflection(rs, 0) *
                                WeylElement::simple_reflection(rs, 1) *
                                WeylElement::simple_reflection(rs, 2);
                auto v = fixed_vector_witness(w);
                if (!v || w.order() != 4u)
                    return Verdict::refuted("witness construction failed", Json());
                std::vector<long long> amb = rs->ambient_vector(*v);
                std::vector<long long> line = {1, 1, 1, 1, -4};
                for (std::size_t i = 0; i < amb.size(); ++i)
                    for (std::size_t j = 0; j < amb.size(); ++j)
                        if (amb[i] * line[j] != amb[j] * line[i])
                            return Verdict::refuted("witness off the expected line",
                                                    Json{{"ambient", vec_json(amb)}});
                return Verdict::verified(
                    std::to_string(it->second.count) +
                        " order-4 elements, all with an invariant vector",
                    Json{{"witness_coords", vec_json(*v)},
                         {"witness_ambient", vec_json(amb)},
                         {"profile", profile_json({{4, it->second}})}});
            }});

        cs.push_back(Claim{
            "dp4.d5.trace8", "quartic-order8-trace",
            "order-8 elements exist in W(D5) and every one has trace -1 on the root lattice, so "
            "the surface automorphism has Lefschetz number 2",
            "",
            {},
            [](Context& ctx, const Params&) {
                const GroupScan& scan = ctx.scan(RootSystemType::D5);
                auto it = scan.profile.find(8);
                if (it == scan.profile.end() || it->second.count == 0)
                    return Verdict::refuted("no order-8 elements in W(D5)", Json());
                const OrderStat& st = it->second;
                if (st.traces.size() != 1 || st.traces.begin()->first != -1)
                    return Verdict::refuted("an order-8 trace differs from -1",
                                            profile_json({{8, st}}));
                if (lefschetz(-1) != 2)
                    return Verdict::refuted("Lefschetz number is not 2", Json());
                return Verdict::verified(
                    std::to_string(st.count) + " order-8 elements, every trace -1, Lefschetz 2",
                    profile_json({{8, st}}));
            }});

        cs.push_back(Claim{
            "dp3.e6.cor611", "cubic-invariant-vector",
            "every element of order 4 or 8 in W(E6) fixes a nonzero vector of the lattice",
            "",
            {},
            [](Context& ctx, const Params&) {
                const GroupScan& scan = ctx.scan(RootSystemType::E6);
                for (unsigned o : {4u, 8u}) {
                    auto it = scan.profile.find(o);
                    if (it == scan.profile.end() || it->second.count == 0)
                        return Verdict::refuted("missing order " + std::to_string(o), Json());
                    if (it->second.fixed_ranks.begin()->first < 1)
                        return Verdict::refuted(
                            "order-" + std::to_string(o) + " element with fixed rank 0",
                            profile_json({{o, it->second}}));
                }
                return Verdict::verified("orders 4 and 8 always fix a vector",
                                         profile_json(order_profile(scan, {4, 8})));
            }});

        cs.push_back(Claim{
            "dp3.e6.order9_trace", "cubic-order9",
            "order-9 elements of W(E6) exist; each has trace 0 and fixed rank 0, so the "
            "automorphism has Lefschetz number 3 and a fixed point",
            "",
            {},
            [](Context& ctx, const Params&) {
                const GroupScan& scan = ctx.scan(RootSystemType::E6);
                auto it = scan.profile.find(9);
                if (it == scan.profile.end() || it->second.count == 0)
                    return Verdict::refuted("no order-9 elements in W(E6)", Json());
                const OrderStat& st = it->second;
                bool traces_ok = st.traces.size() == 1 && st.traces.begin()->first == 0;
                bool ranks_ok = st.fixed_ranks.size() == 1 && st.fixed_ranks.begin()->first == 0;
                if (!traces_ok || !ranks_ok)
                    return Verdict::refuted("unexpected order-9 statistics",
                                            profile_json({{9, st}}));
                return Verdict::verified(std::to_string(st.count) +
                                             " order-9 elements, trace 0, fixed rank 0, "
                                             "Lefschetz 3",
                                         profile_json({{9, st}}));
            }});

        cs.push_back(Claim{
            "dp3.e6.realized_orders", "cubic-order-inventory",
            "the prime-power element orders realized in W(E6) are exactly {1, 2, 3, 4, 8, 9}",
            "",
            {},
            [](Context& ctx, const Params&) {
                const GroupScan& scan = ctx.scan(RootSystemType::E6);
                std::set<unsigned> realized;
                for (const auto& [o, st] : scan.profile) {
                    for (unsigned p : {2u, 3u, 5u, 7u}) {
                        unsigned r = o;
                        while (r % p == 0) r /= p;
                        if (r == 1) realized.insert(o);
                    }
                }
                Json data = profile_json(scan.profile);
                if (realized == std::set<unsigned>{1, 2, 3, 4, 5, 8, 9})
                    return Verdict::verified("prime-power orders {1,2,3,4,5,8,9} realized",
                                             data);
                Json got = Json::array();
                for (unsigned o : realized) got.push_back(o);
                return Verdict::refuted("unexpected prime-power order set",
                                        Json{{"orders", got}, {"profile", data}});
            }});

        // ------------------------------------------------------------------
        // Weyl group enumeration and the E7 / E8 central involutions

        cs.push_back(Claim{
            "weyl.enumerate", "weyl-group-orders",
            "breadth-first closure over simple reflections enumerates the Weyl group exactly "
            "once per element; the count matches the group order",
            "",
            {{"type", "A4"}},
            [](Context& ctx, const Params& prm) {
                RootSystemType t = type_from_name(prm.get_str("type", "A4"));
                const GroupScan& scan = ctx.scan(t);
                RootSystemPtr rs = root_system(t);
                Json data{{"type", type_name(t)},
                          {"count", scan.count},
                          {"expected", rs->group_order()},
                          {"gram_preserved", scan.gram_preserved_all},
                          {"max_abs_entry", scan.max_abs_entry}};
                if (scan.count == rs->group_order() && scan.gram_preserved_all)
                    return Verdict::verified("enumerated " + std::to_string(scan.count) +
                                                 " elements of W(" + type_name(t) + ")",
                                             data);
                return Verdict::refuted("enumeration count drifted", data);
            }});

        cs.push_back(Claim{
            "weyl.e8.center", "bertini-central-involution",
            "the longest element of W(E8) is -identity (the lattice image of the degree-1 deck "
            "transformation); full E8 enumeration stays refused by budget policy",
            "",
            {},
            [](Context& ctx, const Params&) {
                RootSystemPtr rs = root_system(RootSystemType::E8);
                WeylElement w0 = longest_element(rs);
                bool refused = false;
                try {
                    enumerate_group(*rs, ctx.budget, [](const auto&) {});
                } catch (const BudgetExceededError&) {
                    refused = true;
                }
                Json data{{"longest_is_minus_identity",
                           w0 == WeylElement::minus_identity(rs)},
                          {"enumeration_refused", refused}};
                if (w0 == WeylElement::minus_identity(rs) && refused)
                    return Verdict::verified("w0 = -I on E8; enumeration refused at budget " +
                                                 std::to_string(ctx.budget),
                                             data);
                return Verdict::refuted("unexpected E8 behaviour", data);
            }});

        cs.push_back(Claim{
            "e7.longest_center", "geiser-central-involution",
            "the longest element of W(E7) is -identity (the lattice image of the degree-2 deck "
            "transformation)",
            "",
            {},
            [](Context&, const Params&) {
                RootSystemPtr rs = root_system(RootSystemType::E7);
                WeylElement w0 = longest_element(rs);
                if (w0 == WeylElement::minus_identity(rs))
                    return Verdict::verified("w0 = -I on E7");
                return Verdict::refuted("w0 is not -I",
                                        Json{{"matrix", matrix_json(w0.matrix(), 7)}});
            }});

        cs.push_back(Claim{
            "e7.no_sqrt_geiser", "no-square-root-in-e7",
            "no element of W(E7) squares to -identity (also forced by determinants in odd "
            "rank); verified by full scan",
            "",
            {},
            [](Context& ctx, const Params&) {
                const GroupScan& scan = ctx.scan(RootSystemType::E7);
                Json data{{"scanned", scan.count},
                          {"minus_identity_present", scan.saw_minus_identity},
                          {"determinant_argument",
                           "det(w^2) = 1 while det(-I) = (-1)^7 = -1"}};
                if (scan.square_root_of_minus_identity)
                    return Verdict::refuted(
                        "found a square root of -I",
                        Json{{"witness",
                              matrix_json(*scan.square_root_of_minus_identity, 7)}});
                if (!scan.saw_minus_identity)
                    return Verdict::refuted("-I missing from W(E7)", data);
                return Verdict::verified("no square root of -I among 2903040 elements", data);
            }});

        cs.push_back(Claim{
            "e7.plus_decomposition", "e7-direct-product",
            "W(E7) is the direct product of its rotation subgroup with the central {+-1}: -I is "
            "central of determinant -1 and the determinant splits the group in half",
            "",
            {},
            [](Context& ctx, const Params&) {
                const GroupScan& scan = ctx.scan(RootSystemType::E7);
                RootSystemPtr rs = root_system(RootSystemType::E7);
                PlusDecomposition d = plus_part_decomposition(rs, scan);
                Json data{{"minus_identity_in_group", d.minus_identity_in_group},
                          {"central", d.minus_identity_central},
                          {"det_minus_identity", d.det_minus_identity},
                          {"det_plus", scan.det_plus},
                          {"det_minus", scan.det_minus},
                          {"unique_factorization_samples", d.unique_factorization_samples}};
                if (d.holds()) return Verdict::verified("decomposition checks out", data);
                return Verdict::refuted("decomposition failed", data);
            }});

        cs.push_back(Claim{
            "e7.order_profile", "e7-p-power-profile",
            "raw order/trace/fixed-rank statistics of W(E7) for orders 4, 8, 9; isometries of "
            "order 4 and 8 without invariant vectors exist, so the Picard-rank statement does "
            "not reduce to the lattice alone",
            "",
            {},
            [](Context& ctx, const Params&) {
                const GroupScan& scan = ctx.scan(RootSystemType::E7);
                auto prof = order_profile(scan, {4, 8, 9});
                for (unsigned o : {4u, 8u, 9u})
                    if (!prof.count(o) || prof.at(o).count == 0)
                        return Verdict::refuted("missing expected order " + std::to_string(o),
                                                profile_json(prof));
                std::uint64_t rank0_order4 = 0, rank0_order8 = 0;
                if (prof.at(4).fixed_ranks.count(0)) rank0_order4 = prof.at(4).fixed_ranks.at(0);
                if (prof.at(8).fixed_ranks.count(0)) rank0_order8 = prof.at(8).fixed_ranks.at(0);
                bool order9_fixed = prof.at(9).fixed_ranks.begin()->first >= 1;
                Json data{{"profile", profile_json(prof)},
                          {"order4_rank0", rank0_order4},
                          {"order8_rank0", rank0_order8},
                          {"order9_all_fixed", order9_fixed}};
                return Verdict::verified(
                    "profile computed; fixed-rank-0 counts: order 4 -> " +
                        std::to_string(rank0_order4) + ", order 8 -> " +
                        std::to_string(rank0_order8),
                    data);
            }});

        // ------------------------------------------------------------------
        // Picard lattice involutions

        cs.push_back(Claim{
            "pic.geiser.kperp", "geiser-action",
            "the Geiser involution D -> -D + (D.K)K on N = 7 preserves the form, fixes K, "
            "negates a basis of K-perp, and meets every exceptional class in 2 points",
            "",
            {},
            [](Context& ctx, const Params&) {
                PicLattice L(7);
                if (geiser(L, L.K()) != L.K())
                    return Verdict::refuted("K not fixed", Json());
                for (const auto& v : L.kperp_basis())
                    if (geiser(L, v) != pic_neg(v))
                        return Verdict::refuted("K-perp basis vector not negated",
                                                Json{{"v", vec_json(v)}});
                Rng rng = ctx.rng_for("pic.geiser.kperp");
                for (int i = 0; i < 200; ++i) {
                    PicVec a(8), b(8);
                    for (auto& c : a) c = static_cast<long long>(rng.below(11)) - 5;
                    for (auto& c : b) c = static_cast<long long>(rng.below(11)) - 5;
                    if (geiser(L, geiser(L, a)) != a)
                        return Verdict::refuted("not an involution", Json{{"a", vec_json(a)}});
                    if (L.dot(geiser(L, a), geiser(L, b)) != L.dot(a, b))
                        return Verdict::refuted("form not preserved", Json{{"a", vec_json(a)}});
                }
                for (const auto& E : exceptional_classes(L))
                    if (L.dot(E, geiser(L, E)) != 2)
                        return Verdict::refuted("E . geiser(E) != 2", Json{{"E", vec_json(E)}});
                return Verdict::verified(
                    "involution, form-preserving, -1 on K-perp; E.geiser(E) = 2 on all 56");
            }});

        cs.push_back(Claim{
            "pic.bertini.kperp", "bertini-action",
            "the Bertini involution D -> -D + 2(D.K)K on N = 8 preserves the form, fixes K and "
            "negates a basis of K-perp",
            "",
            {},
            [](Context& ctx, const Params&) {
                PicLattice L(8);
                if (bertini(L, L.K()) != L.K()) return Verdict::refuted("K not fixed", Json());
                for (const auto& v : L.kperp_basis())
                    if (bertini(L, v) != pic_neg(v))
                        return Verdict::refuted("K-perp basis vector not negated",
                                                Json{{"v", vec_json(v)}});
                Rng rng = ctx.rng_for("pic.bertini.kperp");
                for (int i = 0; i < 200; ++i) {
                    PicVec a(9), b(9);
                    for (auto& c : a) c = static_cast<long long>(rng.below(11)) - 5;
                    for (auto& c : b) c = static_cast<long long>(rng.below(11)) - 5;
                    if (bertini(L, bertini(L, a)) != a)
                        return Verdict::refuted("not an involution", Json{{"a", vec_json(a)}});
                    if (L.dot(bertini(L, a), bertini(L, b)) != L.dot(a, b))
                        return Verdict::refuted("form not preserved", Json{{"a", vec_json(a)}});
                }
                return Verdict::verified("involution, form-preserving, -1 on K-perp");
            }});

        cs.push_back(Claim{
            "pic.bertini.s_beta_s", "section-meets-image",
            "every exceptional class E on the degree-1 lattice satisfies E . bertini(E) = 3",
            "",
            {},
            [](Context&, const Params&) {
                PicLattice L(8);
                auto classes = exceptional_classes(L);
                for (const auto& E : classes)
                    if (L.dot(E, bertini(L, E)) != 3)
                        return Verdict::refuted("wrong intersection", Json{{"E", vec_json(E)}});
                return Verdict::verified("E.bertini(E) = 3 for all " +
                                         std::to_string(classes.size()) + " classes");
            }});

        cs.push_back(Claim{
            "pic.exceptional_counts", "exceptional-class-counts",
            "bounded search finds exactly 27 / 56 / 240 exceptional classes for N = 6 / 7 / 8",
            "",
            {},
            [](Context&, const Params&) {
                std::size_t c6 = exceptional_classes(PicLattice(6)).size();
                std::size_t c7 = exceptional_classes(PicLattice(7)).size();
                std::size_t c8 = exceptional_classes(PicLattice(8)).size();
                Json data{{"N6", c6}, {"N7", c7}, {"N8", c8}};
                if (c6 == 27 && c7 == 56 && c8 == 240)
                    return Verdict::verified("counts 27 / 56 / 240", data);
                return Verdict::refuted("counts drifted", data);
            }});

        cs.push_back(Claim{
            "pic.di_cross", "orbit-pair-intersections",
            "four square-4 classes summing to -8K have pairwise intersections summing to 48; in "
            "the class configuration E_i + bertini(E_i) every pairwise value is 4",
            "",
            {},
            [](Context&, const Params&) {
                PicLattice L(8);
                auto es = exceptional_classes(L);
                std::array<PicVec, 4> D;
                for (int i = 0; i < 4; ++i) D[i] = pic_add(es[i], bertini(L, es[i]));
                CrossValues cv = di_cross_values(L, D);
                Json table = Json::array();
                for (const auto& row : cv.table) {
                    Json r = Json::array();
                    for (long long v : row) r.push_back(v);
                    table.push_back(r);
                }
                Json data{{"pair_sum", cv.pair_sum},
                          {"common", cv.common ? Json(*cv.common) : Json()},
                          {"table", table}};
                if (cv.pair_sum == 48 && cv.common == 4)
                    return Verdict::verified("pair sum 48, all pairwise values 4", data);
                return Verdict::refuted("cross values drifted", data);
            }});

        // ------------------------------------------------------------------
        // degree-2 double planes

        cs.push_back(Claim{
            "dp2.constraints", "double-plane-invariance",
            "invariance of the quartic under z -> z + w forces l1 w = 0 (the stated constraint) "
            "and the constant-layer relation l0 w^4 + l2 w^2 + l3 w = 0 (unstated)",
            "",
            {},
            [](Context& ctx, const Params&) {
                Field f2 = field_make(2, 1);
                auto vs = dp2_vars();
                Polynomial x = Polynomial::variable(f2, vs, 0);
                auto c1 = dp2_invariance_constraints(parse_polynomial(f2, vs, "z^3*x"), x);
                if (c1.invariant || !(c1.layer_z2 == parse_polynomial(f2, vs, "x^2")))
                    return Verdict::refuted("z^2-layer obstruction mis-detected", Json());
                auto c2 = dp2_invariance_constraints(parse_polynomial(f2, vs, "z^2*x^2"), x);
                if (c2.invariant || !c2.stated_constraint_l1w ||
                    !(c2.layer_z0 == parse_polynomial(f2, vs, "x^4")))
                    return Verdict::refuted("constant-layer obstruction mis-detected", Json());
                Rng rng = ctx.rng_for("dp2.constraints");
                for (int i = 0; i < 20; ++i) {
                    Field f = (i % 2 == 0) ? field_make(2, 1) : field_make(2, 2);
                    Dp2Sample s = dp2_xy_sample(f, rng);
                    auto c = dp2_invariance_constraints(s.a4, s.w);
                    if (!c.invariant || !c.stated_constraint_l1w || !c.extra_constraint)
                        return Verdict::refuted("constructed invariant sample failed",
                                                Json{{"a4", s.a4.str()}, {"w", s.w.str()}});
                }
                return Verdict::verified(
                    "constraint layers verified; the constant layer is an extra condition "
                    "beyond l1 = 0",
                    Json{{"obstruction_z2", "l1 * w"},
                         {"obstruction_z0", "l0 w^4 + l1 w^3 + l2 w^2 + l3 w"}});
            }});

        cs.push_back(Claim{
            "dp2.singular_axis", "double-plane-singular-point",
            "invariant double planes are singular on the axis x = y = 0: the xy branch at "
            "(0,0,1,sqrt(l0)), the double-line branch at (0,0,1,sqrt(c))",
            "",
            {{"seeds", "20"}},
            [](Context& ctx, const Params& prm) {
                long long seeds = prm.get_int("seeds", 20);
                Rng rng = ctx.rng_for("dp2.singular_axis");
                Json samples = Json::array();
                for (long long i = 0; i < seeds; ++i) {
                    Field f = (i % 2 == 0) ? field_make(2, 1) : field_make(2, 2);
                    Dp2Sample s = dp2_xy_sample(f, rng);
                    auto pt = dp2_singular_on_axis(s.a2, s.a4, s.w);
                    if (!is_singular_at(dp2_surface(s.a2, s.a4), pt))
                        return Verdict::refuted("axis point not singular",
                                                Json{{"a4", s.a4.str()}});
                    if (i < 2) samples.push_back(Json{{"a4", s.a4.str()},
                                                      {"point", point_json(pt)}});
                }
                // the double-line branch, including the literal (0,0,1,sqrt(c))
                Field f4 = field_make(2, 2);
                for (long long i = 0; i < seeds / 2; ++i) {
                    Dp2DoubleLineSample s = dp2_double_line_sample(f4, rng);
                    std::vector<FieldElement> pt = {f4.zero(), f4.zero(), f4.one(),
                                                    sqrt_char2(s.c)};
                    if (!is_singular_at(dp2_surface(s.a2, s.a4), pt))
                        return Verdict::refuted("(0,0,1,sqrt(c)) not singular",
                                                Json{{"a4", s.a4.str()},
                                                     {"c", s.c.str()}});
                }
                // l0 = 0 reproduces the literal point (0,0,1,0)
                auto vs = dp2_vars();
                Polynomial a2 = parse_polynomial(f4, vs, "x*y");
                Polynomial a4 = parse_polynomial(f4, vs, "z^2*x^2 + z*x^3 + y^4");
                Polynomial w = parse_polynomial(f4, vs, "x");
                auto pt0 = dp2_singular_on_axis(a2, a4, w);
                if (!(pt0[3].is_zero()))
                    return Verdict::refuted("l0 = 0 did not reproduce (0,0,1,0)",
                                            Json{{"point", point_json(pt0)}});
                return Verdict::verified("axis singular points confirmed on both branches",
                                         Json{{"samples", samples}});
            }});

        cs.push_back(Claim{
            "dp2.invariant_ring", "shift-invariant-ring",
            "the polynomials in x, z invariant under z -> z + x are generated by x and z(z+x): "
            "kernel dimensions match the monomial count degree by degree",
            "",
            {{"max_degree", "8"}},
            [](Context&, const Params& prm) {
                unsigned d = static_cast<unsigned>(prm.get_int("max_degree", 8));
                bool ok2 = invariant_ring_dimension_check(field_make(2, 1), d);
                bool ok4 = invariant_ring_dimension_check(field_make(2, 2), d);
                if (ok2 && ok4)
                    return Verdict::verified("dimensions match up to degree " +
                                             std::to_string(d));
                return Verdict::refuted("dimension mismatch",
                                        Json{{"gf2", ok2}, {"gf4", ok4}});
            }});

        // ------------------------------------------------------------------
        // degree-1 Weierstrass models

        cs.push_back(Claim{
            "dp1.constraints", "order4-constraint-system",
            "with s = u the system a3 = s^3, t^2 + a3 t + s^6 + a4 s^2 = 0 is solved by "
            "t = u b + alpha u^3, a4 = b^2 + u^2 b, identically in b",
            "",
            {{"seeds", "25"}},
            [](Context& ctx, const Params& prm) {
                long long seeds = prm.get_int("seeds", 25);
                Rng rng = ctx.rng_for("dp1.constraints");
                for (long long i = 0; i < seeds; ++i) {
                    Field f = (i % 2 == 0) ? field_make(2, 2) : field_make(2, 4);
                    auto vs = dp1_vars();
                    DP1Surface S = dp1_make(random_uv_form(f, vs, 2, rng),
                                            random_uv_form(f, vs, 6, rng));
                    if (!dp1_derived_constraints_ok(S))
                        return Verdict::refuted("derived data failed the system",
                                                Json{{"b", S.b.str()}});
                }
                // degenerate and failing shapes
                Field f4 = field_make(2, 2);
                auto vs = dp1_vars();
                Polynomial zero = Polynomial::zero(f4, vs);
                Polynomial u = Polynomial::variable(f4, vs, 0);
                bool degenerate_ok = dp1_constraints_check(zero, zero, zero, zero);
                bool failing_detected = !dp1_constraints_check(u, zero, u.pow(3), zero);
                if (!degenerate_ok || !failing_detected)
                    return Verdict::refuted("edge shapes misjudged", Json());
                return Verdict::verified("system holds identically on " +
                                         std::to_string(seeds) + " seeded surfaces");
            }});

        cs.push_back(Claim{
            "dp1.tau_order4", "order4-automorphism",
            "tau: (u,v,x,y) -> (u,v,x+u^2,y+ux+ub+alpha u^3) preserves the equation, has order "
            "4, and tau^2 is the deck transformation y -> y + u^3",
            "",
            {{"seeds", "50"}},
            [](Context& ctx, const Params& prm) {
                long long seeds = prm.get_int("seeds", 50);
                Rng rng = ctx.rng_for("dp1.tau_order4");
                Field f4 = field_make(2, 2);
                auto vs = dp1_vars();
                for (long long i = 0; i < seeds; ++i) {
                    DP1Surface S = dp1_make(random_uv_form(f4, vs, 2, rng),
                                            random_uv_form(f4, vs, 6, rng));
                    WeightedSelfMap tau = dp1_tau(S);
                    if (map_pullback(S.F, tau) != S.F)
                        return Verdict::refuted("equation not preserved",
                                                Json{{"b", S.b.str()}, {"a6", S.a6.str()}});
                    if (tau.order() != 4u)
                        return Verdict::refuted("order is not 4",
                                                Json{{"b", S.b.str()}, {"a6", S.a6.str()}});
                    WeightedSelfMap sq = compose(tau, tau);
                    WeightedSelfMap deck = dp1_bertini_map(S);
                    if (!(sq.components() == deck.components()) ||
                        map_pullback(S.F, deck) != S.F)
                        return Verdict::refuted("square is not the deck transformation",
                                                Json{{"b", S.b.str()}, {"a6", S.a6.str()}});
                }
                return Verdict::verified("tau behaved on " + std::to_string(seeds) +
                                         " seeded surfaces");
            }});

        cs.push_back(Claim{
            "dp1.smooth_uv5", "smoothness-criterion",
            "the surface is smooth iff the coefficient of u v^5 in a6 is nonzero; the symbolic "
            "decision agrees with brute-force point scans over GF(4), GF(16), GF(64)",
            "",
            {{"seeds", "50"}, {"kmax", "6"}},
            [](Context& ctx, const Params& prm) {
                long long seeds = prm.get_int("seeds", 50);
                unsigned kmax = static_cast<unsigned>(prm.get_int("kmax", 6));
                Rng rng = ctx.rng_for("dp1.smooth_uv5");
                Field f4 = field_make(2, 2);
                auto vs = dp1_vars();
                unsigned smooth_count = 0, singular_count = 0;
                for (long long i = 0; i < seeds; ++i) {
                    DP1Surface S = dp1_make(random_uv_form(f4, vs, 2, rng),
                                            random_uv_form(f4, vs, 6, rng));
                    auto w = dp1_singular_witness(S);
                    for (unsigned k = 2; k <= kmax; k += 2) {
                        Field ext = field_make(2, k);
                        auto found = dp1_brute_force_singular(S, ext);
                        if (w.smooth) {
                            if (!found.empty())
                                return Verdict::refuted(
                                    "symbolically smooth surface has a singular point",
                                    Json{{"b", S.b.str()},
                                         {"a6", S.a6.str()},
                                         {"k", k}});
                        } else {
                            FieldEmbedding emb(f4, ext);
                            std::vector<code_t> target = {
                                emb(w.point[0]).code(), emb(w.point[1]).code(),
                                emb(w.point[2]).code(), emb(w.point[3]).code()};
                            bool seen = false;
                            for (const auto& p : found) seen |= (p == target);
                            if (!seen)
                                return Verdict::refuted(
                                    "witness missing from the brute-force list",
                                    Json{{"b", S.b.str()}, {"a6", S.a6.str()}, {"k", k}});
                            if (!is_singular_at(WeightedHypersurface(S.F), w.point))
                                return Verdict::refuted("witness not singular",
                                                        Json{{"b", S.b.str()}});
                        }
                    }
                    w.smooth ? ++smooth_count : ++singular_count;
                }
                return Verdict::verified(
                    "symbolic and brute-force verdicts agreed on " + std::to_string(seeds) +
                        " surfaces (" + std::to_string(smooth_count) + " smooth, " +
                        std::to_string(singular_count) + " singular)");
            }});

        cs.push_back(Claim{
            "dp1.discriminant", "single-singular-fibre",
            "the fibration discriminant is u^12, so the only singular fibre sits over "
            "(u, v) = (0, 1)",
            "",
            {{"seeds", "10"}},
            [](Context& ctx, const Params& prm) {
                long long seeds = prm.get_int("seeds", 10);
                Rng rng = ctx.rng_for("dp1.discriminant");
                Field f4 = field_make(2, 2);
                auto vs = dp1_vars();
                auto fvs = fibration_vars();
                Polynomial u12 = parse_polynomial(f4, fvs, "u^12");
                for (long long i = 0; i < seeds; ++i) {
                    DP1Surface S = dp1_make(random_uv_form(f4, vs, 2, rng),
                                            random_uv_form(f4, vs, 6, rng));
                    WeierstrassFibration W = dp1_to_fibration(S);
                    if (discriminant(W) != u12)
                        return Verdict::refuted("discriminant is not u^12",
                                                Json{{"b", S.b.str()},
                                                     {"delta", discriminant(W).str()}});
                    // the fibre at (0,1) is singular; all (1, t) fibres are smooth
                    if (fiber_analysis(W, f4.zero(), f4.one()).smooth)
                        return Verdict::refuted("fibre at (0,1) is not singular", Json());
                    for (code_t t = 0; t < f4.q(); ++t)
                        if (!fiber_analysis(W, f4.one(), f4.element(t)).smooth)
                            return Verdict::refuted("unexpected singular fibre",
                                                    Json{{"at", f4.element_str(t)}});
                }
                // moving the cube moves the singular fibre
                WeierstrassFibration Wv(parse_polynomial(f4, fvs, "v^3"),
                                        Polynomial::zero(f4, fvs),
                                        parse_polynomial(f4, fvs, "u*v^5"));
                bool moved = discriminant(Wv) == parse_polynomial(f4, fvs, "v^12");
                if (!moved) return Verdict::refuted("v^3 control failed", Json());
                return Verdict::verified("discriminant u^12 with a single singular fibre at "
                                         "(0,1), on " +
                                         std::to_string(seeds) + " seeded surfaces");
            }});

        cs.push_back(Claim{
            "dp1.cuspidal_fiber", "cuspidal-fibre",
            "the singular fibre over (0,1) reduces to the cusp normal form y^2 = x^3 after "
            "translating the singular point to the origin",
            "",
            {{"seeds", "10"}},
            [](Context& ctx, const Params& prm) {
                long long seeds = prm.get_int("seeds", 10);
                Rng rng = ctx.rng_for("dp1.cuspidal_fiber");
                Field f4 = field_make(2, 2);
                auto vs = dp1_vars();
                for (long long i = 0; i < seeds; ++i) {
                    DP1Surface S = dp1_make(random_uv_form(f4, vs, 2, rng),
                                            random_uv_form(f4, vs, 6, rng));
                    FiberReport r = fiber_analysis(dp1_to_fibration(S), f4.zero(), f4.one());
                    if (r.smooth || !r.cuspidal_normal_form)
                        return Verdict::refuted("fibre at (0,1) is not a cuspidal cubic",
                                                Json{{"b", S.b.str()}, {"a6", S.a6.str()}});
                }
                return Verdict::verified("cusp normal form reached on " +
                                         std::to_string(seeds) + " seeded fibrations");
            }});

        cs.push_back(Claim{
            "dp1.supersingular", "supersingular-fibres",
            "smooth fibres have j = 0 and exactly one 2-torsion point (the origin) over GF(16)",
            "",
            {{"seeds", "20"}},
            [](Context& ctx, const Params& prm) {
                long long seeds = prm.get_int("seeds", 20);
                Rng rng = ctx.rng_for("dp1.supersingular");
                Field f4 = field_make(2, 2);
                Field f16 = field_make(2, 4);
                auto vs = dp1_vars();
                for (long long i = 0; i < seeds; ++i) {
                    Polynomial a6 = random_uv_form(f4, vs, 6, rng);
                    DP1Surface S = dp1_make(random_uv_form(f4, vs, 2, rng), a6);
                    WeierstrassFibration W = dp1_to_fibration(S);
                    code_t u0 = 1 + static_cast<code_t>(rng.below(f16.q() - 1));
                    code_t v0 = static_cast<code_t>(rng.below(f16.q()));
                    FiberReport r = fiber_analysis(W, f16.element(u0), f16.element(v0));
                    if (!r.smooth || !r.j_zero || r.inconsistent)
                        return Verdict::refuted("expected a smooth j = 0 fibre",
                                                Json{{"u0", f16.element_str(u0)},
                                                     {"v0", f16.element_str(v0)}});
                    if (r.two_torsion_count != 1)
                        return Verdict::refuted(
                            "extra 2-torsion found",
                            Json{{"count", r.two_torsion_count},
                                 {"u0", f16.element_str(u0)},
                                 {"v0", f16.element_str(v0)}});
                }
                return Verdict::verified("every sampled smooth fibre is supersingular (" +
                                         std::to_string(seeds) + " fibres over GF(16))");
            }});

        cs.push_back(Claim{
            "dp1.fiber_aut24", "fibre-automorphisms",
            "the curve y^2 + y = x^3 has 24 automorphisms over GF(16), with center of size 2 "
            "generated by the negation and all order-4 elements sharing one square",
            "",
            {},
            [](Context&, const Params&) {
                Field f16 = field_make(2, 4);
                auto rep = fiber_automorphism_report(f16, f16.one(), f16.zero(), f16.zero());
                Field f2 = field_make(2, 1);
                auto rep2 = fiber_automorphism_report(f2, f2.one(), f2.zero(), f2.zero());
                Json data{{"count", rep.count},
                          {"center", rep.center_size},
                          {"q8_signature", rep.q8_signature},
                          {"gf2_partial_count", rep2.count},
                          {"gf2_field_too_small", rep2.field_too_small}};
                if (rep.count == 24 && rep.center_size == 2 && rep.q8_signature &&
                    rep2.field_too_small)
                    return Verdict::verified("24 automorphisms, center 2, quaternion signature",
                                             data);
                return Verdict::refuted("automorphism group drifted", data);
            }});

        std::sort(cs.begin(), cs.end(),
                  [](const Claim& a, const Claim& b) { return a.id < b.id; });
        return cs;
    }();
    return registry;
}

} // namespace cremona
