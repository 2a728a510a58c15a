#include "doctest.h"
#include "supermac/eval.hpp"
#include "supermac/macdonald.hpp"

using namespace supermac;

namespace {

SuperPartition sp(const char* s) { return parse_superpartition(s); }
RatFun rf(const char* s) { return parse_ratfun(s); }
UPoly up(const char* s) { return parse_upoly(s); }

SymFun unit(Basis b, const SuperPartition& L) {
    SymFun f{b, L.m(), {}};
    f.add(L, RatFun(1));
    return f;
}

UPoly cell_product(const SuperPartition& L, bool tilde) {
    UPoly out(RatFun(1));
    const int m = L.m();
    for (const Cell& c : cells_S(L, tilde)) out *= UPoly::one_minus(RatFun::qt_power(c.col - 1, m - c.row + (tilde ? 0 : 1)));
    return out;
}

/// v_Λ (resp. ṽ_Λ): the evaluation divided by its linear factors; must be u-free.
RatFun v_coefficient(const SuperPartition& L, bool tilde) {
    const UPoly phi_L = tilde ? phi_tilde(L) : phi(L);
    const auto quotient = phi_L.divide(cell_product(L, tilde));
    REQUIRE(quotient.has_value());
    REQUIRE(quotient->degree() == 0);
    return quotient->coeff(0);
}

template <class Body>
void sweep(int max_n, int max_m, Body body) {
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= max_m; ++m)
            for (const auto& L : enumerate(n, m)) {
                CAPTURE(L.str());
                body(L);
            }
}

}  // namespace

TEST_SUITE("eval") {
    TEST_CASE("specialization points and Schur factor") {
        const auto v = eval_points(3, 4);
        CHECK(v[0] == rf("1/q^2"));
        CHECK(v[1] == rf("t/q"));
        CHECK(v[2] == rf("t^2"));
        CHECK(v[3] == rf("t^3"));
        const std::vector<RatFun> pts{rf("q"), rf("t"), rf("2")};
        // s_{(1)} = p_1, s_{(1,1)} = e_2, s_{(2)} = h_2, s_{(2,1)} at three points.
        CHECK(schur_at({1}, pts) == rf("q+t+2"));
        CHECK(schur_at({1, 1}, pts) == rf("q*t+2*q+2*t"));
        CHECK(schur_at({2}, pts) == rf("q^2+t^2+4+q*t+2*q+2*t"));
        CHECK(schur_at({2, 1}, pts) == rf("(q+t)*(q+2)*(t+2)"));
        CHECK(schur_at({1, 1, 1, 1}, pts) == RatFun(0));
        CHECK(schur_at({}, {}) == RatFun(1));
    }

    TEST_CASE("evaluation of power sums") {
        CHECK(eval_powersum(sp("0;")) == UPoly(RatFun(1)));
        CHECK(eval_powersum(sp(";2")) == up("(1-u^2)/(1-t^2)"));
        CHECK(eval_powersum(sp("1;1")) == up("1+t*(1-u)/(1-t)"));
        CHECK(eval_powersum(sp("1,0;")) == UPoly(RatFun(1)));
        // Λᵃ − δ_2 = (1) at the points 1/q, t.
        CHECK(eval_powersum(sp("2,0;")) == UPoly(rf("1/q+t")));
    }

    TEST_CASE("evaluation of P for small cases") {
        CHECK(phi(sp(";")) == UPoly(RatFun(1)));
        CHECK(phi(sp("0;")) == UPoly(RatFun(1)));
        CHECK(phi(sp(";1")) == up("(1-u)/(1-t)"));
        CHECK(phi_tilde(sp("0;")) == UPoly(RatFun(1)));
        CHECK(eval_via_variables(macdonald_P(sp(";1")), 1) == RatFun(1));
        CHECK(eval_via_variables(unit(Basis::monomial, sp("1,0;")), 2) == RatFun(1));
    }

    TEST_CASE("worked example (4,1;3)") {
        const SuperPartition L = sp("4,1;3");
        const RatFun B = rf("(1-q^4*t^3)*(1-q^2*t^2)^2*(1-q*t)^3*(1-t)");
        const UPoly first = up("t^6/q^3*(1-u)*(1-q*u)*(1-q*t*u)*(1-q^2*t*u)*(1-q^2*t^2*u)*(1-q^3*t^2*u)*(1-q^4*t^2*u)").scaled(B.inverse());
        const UPoly second = up("q*t^5*(1-u)*(1-u/t)*(1-q*u)*(1-q^2*u)*(1-q*t*u)*(1-q^2*t*u)*(1-q^3*t*u)").scaled(B.inverse());
        CHECK(phi_formula(L, false).value() == first);
        CHECK(phi_formula(L, true).value() == second);
        CHECK(phi(L) == first);
        CHECK(phi_tilde(L) == second);
        const EvalStats s = eval_stats(L, false), st = eval_stats(L, true);
        CHECK(s.n_S == 6);
        CHECK(s.n_a == 1);
        CHECK(s.size_a == 4);
        CHECK(s.n_conj_a == 0);
        CHECK(st.n_S == 5);
        CHECK(st.n_a == 1);
        CHECK(st.size_a == 5);
        CHECK(st.n_conj_a == 0);
        CHECK(phi_formula(L, false).factored().rfind("t^6/q^3*", 0) == 0);
        CHECK(phi_formula(L, true).factored().rfind("q*t^5*", 0) == 0);
        // The four-variable route at u = t².
        CHECK(eval_via_variables(macdonald_P(L), 4) == upoly_eval(first, rf("t^2")));
    }

    TEST_CASE("first evaluation: closed forms agree with the computed value") {
        sweep(4, 3, [](const SuperPartition& L) {
            const UPoly value = phi(L);
            CHECK(value == phi_formula(L, false).value());
            CHECK(value == phi_formula_alt(L, false));
            CHECK(value.degree() <= L.n() - binom2(L.m()));
            CHECK(eval_stats(L, false).n_conj_a == misc_stats(L, std::max(L.length(), 1)).n_conj_a_over_delta);
            CHECK(eval_stats(L, false).n_conj_a == zeta(L));
        });
    }

    TEST_CASE("first evaluation: variable route at u = t^(N-m)") {
        sweep(3, 3, [](const SuperPartition& L) {
            const SymFun P = macdonald_P(L);
            const UPoly value = phi(L);
            for (int N = L.m(); N <= L.m() + 3; ++N) {
                if (N == 0) continue;
                CAPTURE(N);
                CHECK(eval_via_variables(P, N) == upoly_eval(value, RatFun::qt_power(0, N - L.m())));
            }
        });
    }

    TEST_CASE("second evaluation: closed forms and the variable route") {
        sweep(4, 3, [](const SuperPartition& L) {
            if (L.m() == 0) {
                CHECK_THROWS_AS(phi_formula(L, true), EvalError);
                return;
            }
            const UPoly value = phi_tilde(L);
            CHECK(value == phi_formula(L, true).value());
            CHECK(value == phi_formula_alt(L, true));
            if (L.n() <= 3) CHECK(value == evaluate_tilde_interpolated(macdonald_P(L)));
        });
    }

    TEST_CASE("vanishing string and divisibility") {
        sweep(4, 3, [](const SuperPartition& L) {
            const UPoly value = phi(L);
            for (std::size_t k = 0; k < L.s().size(); ++k) CHECK(upoly_eval(value, RatFun::qt_power(0, static_cast<long>(k))).is_zero());
            v_coefficient(L, false);
            if (L.m() >= 1) v_coefficient(L, true);
        });
    }

    TEST_CASE("recursions for the constants v") {
        sweep(4, 3, [](const SuperPartition& L) {
            const int m = L.m(), ell = L.length();
            const Partition circ = L.circ();
            if (m == 0 || L.a().back() != 0) {
                if (ell == 0) return;
                // First column without a circle.
                RatFun r = RatFun::qt_power(-binom2(m), binom2(ell));
                for (int i = 1; i <= ell; ++i) r /= one_minus_qt(part(circ, static_cast<std::size_t>(i - 1)) - 1, ell - (i - 1));
                CHECK(v_coefficient(L, false) == r * v_coefficient(remove_first_column(L), false));
            } else {
                // Circle in the first column.
                RatFun prod(1);
                for (int i : fermionic_rows_after_tilde(L))
                    prod *= one_minus_qt(part(circ, static_cast<std::size_t>(i - 1)) - 1, ell - 1 - (i - 1));
                const RatFun vt = v_coefficient(L, true);
                CHECK(vt == prod * v_coefficient(remove_first_circle(L), false));
            }
            if (m >= 1) {
                // v and ṽ differ by a monomial.
                long a_size = 0, conj_a_size = 0;
                for (int a : L.a()) a_size += a;
                const SuperPartition C = conjugate(L);
                for (int a : C.a()) conj_a_size += a;
                const long sq = static_cast<long>(m - 1) * (m - 1);
                CHECK(v_coefficient(L, false) == v_coefficient(L, true) * RatFun::qt_power(sq - a_size, conj_a_size - sq));
            }
        });
    }

    TEST_CASE("duality of evaluations") {
        sweep(4, 3, [](const SuperPartition& L) {
            const SuperPartition C = conjugate(L);
            const int m = L.m();
            const RatFun b = substitute(norm_formula(C), kDualMap).inverse();
            const UPoly dual = phi(C).substituted(kDualMap).rescaled_variable(RatFun::qt_power(m, m));
            RatFun c = RatFun::qt_power(0, -L.n()) * b;
            if ((L.n() + binom2(m)) % 2) c = -c;
            CHECK(phi(L) == dual.scaled(c));
        });
    }

    TEST_CASE("norm through the evaluations") {
        CHECK(norm_from_eval(sp(";1")) == rf("(1-q)/(1-t)"));
        CHECK(norm_from_eval(sp("0;")) == RatFun(1));
        sweep(4, 3, [](const SuperPartition& L) { CHECK(norm_from_eval(L) == norm_formula(L)); });
    }

    TEST_CASE("second evaluation needs a fermion") {
        CHECK_THROWS_AS(evaluate_tilde(macdonald_P(sp(";1"))), EvalError);
        CHECK_THROWS_AS(eval_via_variables(macdonald_P(sp("2,1,0;")), 2), EvalError);
    }
}
