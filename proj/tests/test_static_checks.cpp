#include <doctest.h>

#include <cmath>

#include "nssp/convolution.hpp"
#include "nssp/initial.hpp"
#include "nssp/littlewood_paley.hpp"
#include "nssp/operators.hpp"
#include "nssp/static_checks.hpp"
#include "test_helpers.hpp"

using namespace nssp;
using namespace nssp::test;

namespace {

SpectralField pair_mode(const GridSpec& g, const std::array<int, 3>& xi, double amp = 1.0, int comp = 0) {
    SpectralField u(g);
    u.at(comp, xi) = Complex(0.5 * amp, 0.0);
    u.at(comp, {-xi[0], -xi[1], -xi[2]}) = Complex(0.5 * amp, 0.0);
    return u;
}

}  // namespace

TEST_CASE("orthogonality of low/high projections") {
    GridSpec g{3, 16, 1.0};
    SpectralField u = random_field(g, 2);
    CHECK(check_orthogonality(u, 3.0, 3.0).passed());

    SpectralField m5 = pair_mode(g, {5, 0, 0});
    CheckReport r = check_orthogonality(m5, 2.0, 4.0);
    CHECK(r.passed());
    CHECK(r.lhs == 0.0);  // lowpass part is empty

    for (std::uint64_t s = 1; s <= 10; ++s) {
        SpectralField v = random_field(g, 100 + s);
        for (double k : {1.0, 2.0, 4.0, 8.0})
            for (double l : {1.0, 2.0, 4.0, 8.0})
                if (k <= l) CHECK(check_orthogonality(v, k, l).passed());
    }
    CHECK_THROWS(check_orthogonality(u, 4.0, 2.0));
}

TEST_CASE("bernstein inequality and its equality case") {
    GridSpec g{3, 16, 1.0};
    SpectralField at_cutoff = pair_mode(g, {3, 0, 0});
    CheckReport eq = check_bernstein(at_cutoff, 3.0, 1.5);
    CHECK(eq.passed());
    CHECK(std::abs(eq.lhs - eq.rhs) <= 1e-12 * std::max(eq.lhs, 1.0));

    for (std::uint64_t s = 1; s <= 10; ++s) {
        SpectralField u = random_field(g, 200 + s);
        for (double k : {1.0, 2.0, 4.0})
            for (double a : {0.5, 1.0, 2.0}) CHECK(check_bernstein(u, k, a).passed());
    }

    SpectralField low = pair_mode(g, {1, 0, 0});
    CheckReport empty = check_bernstein(low, 5.0, 1.0);  // u^k = 0
    CHECK(empty.passed());
    CHECK(empty.lhs == 0.0);
}

TEST_CASE("product spectrum support under zero padding") {
    GridSpec g{3, 16, 1.0};
    SpectralField u = pair_mode(g, {2, 0, 0});
    u += pair_mode(g, {0, 3, 0}, 1.0, 1);
    // u_k with k=2.5 keeps only the |xi|=2 mode, u_l with l=3.5 keeps both;
    // every product then lives within |xi| <= 2+3 <= k+l.
    CHECK(check_product_support(u, 2.5, 3.5).passed());

    for (std::uint64_t s = 1; s <= 3; ++s) {
        SpectralField v = random_field(g, 300 + s);
        CHECK(check_product_support(v, 4.0, 4.0).passed());
    }
    CHECK_THROWS(check_product_support(u, double(g.n + 1), 4.0));
}

TEST_CASE("lowpass sup bound by the besov norm") {
    GridSpec g{3, 16, 1.0};
    SpectralField z(g);
    CHECK(check_linf_bound(z, 2.0, -1.0).margin == 0.0);

    SpectralField m = pair_mode(g, {1, 0, 0});
    CheckReport r = check_linf_bound(m, 2.0, -1.0);
    CHECK(r.margin > 0.0);
    CHECK(std::isfinite(r.margin));

    // fitted c(sigma) stays within 2x as k doubles; the bound is one-sided,
    // so the fit is probed on a near-scale-free ensemble that saturates it
    for (double sigma : {-1.0, -0.5}) {
        double fit_min = 1e300, fit_max = 0.0;
        for (double k : {2.0, 4.0, 8.0, 16.0}) {
            double fit = 0.0;
            for (std::uint64_t s = 1; s <= 20; ++s) {
                SpectralField u = random_field(GridSpec{3, 32, 1.0}, 400 + s, true, 0.25);
                fit = std::max(fit, check_linf_bound(u, k, sigma).margin);
            }
            fit_min = std::min(fit_min, fit);
            fit_max = std::max(fit_max, fit);
        }
        CHECK(fit_max <= 2.0 * fit_min);
    }
    CHECK_THROWS(check_linf_bound(m, 0.5, -1.0));
    CHECK_THROWS(check_linf_bound(m, 2.0, 0.5));
}

TEST_CASE("band-to-tail besov ratio") {
    GridSpec g{3, 16, 1.0};
    SpectralField u = random_field(g, 17);

    // dyadic-aligned upper cutoff: sup over a subset of blocks, ratio <= 1
    for (double l : {2.0, 4.0, 8.0}) {
        CheckReport r = check_band_tail(u, 1.5, l);
        CHECK(r.margin <= 1.0 + 1e-12);
    }

    SpectralField m = pair_mode(g, {3, 0, 0});
    CheckReport inside = check_band_tail(m, 2.0, 4.0);
    CHECK(inside.margin == doctest::Approx(1.0));
    CheckReport outside = check_band_tail(m, 4.0, 5.0);
    CHECK(outside.margin == 0.0);

    // misaligned cutoffs: report only, record the ensemble max
    double worst = 0.0;
    for (std::uint64_t s = 1; s <= 10; ++s) {
        SpectralField v = random_field(g, 500 + s);
        worst = std::max(worst, check_band_tail(v, 1.7, 5.3).margin);
    }
    CHECK(std::isfinite(worst));
    CHECK(worst > 0.0);
    CHECK_THROWS(check_band_tail(u, 5.0, 5.0));
}

TEST_CASE("linear shell superposition identity") {
    GridSpec g{3, 16, 1.0};

    SpectralField z(g);
    CheckReport zr = superposition_identity(z, 1);
    CHECK(zr.passed());
    CHECK(zr.lhs == 0.0);

    // single mode with |xi| in [j0, j0+1): both sides equal (j0-k+1)*||u||^2
    SpectralField m = pair_mode(g, {2, 1, 0});  // |xi| = sqrt(5), j0 = 2
    const double e = l2_norm(m) * l2_norm(m);
    for (int k : {1, 2}) {
        CheckReport r = superposition_identity(m, k);
        CHECK(r.passed());
        CHECK(r.lhs == doctest::Approx((2 - k + 1) * e).epsilon(1e-12));
    }

    // field-route oracle: tails and bands summed from masked fields
    for (std::uint64_t s = 1; s <= 5; ++s) {
        SpectralField u = random_field(g, 600 + s);
        for (int k : {1, 2, 3}) {
            CheckReport r = superposition_identity(u, k);
            CHECK(r.passed());
            double lhs_fields = 0.0;
            for (int j = k; j <= 14; ++j) {
                const double t = l2_norm(highpass(u, double(j)));
                lhs_fields += t * t;
            }
            CHECK(r.lhs == doctest::Approx(lhs_fields).epsilon(1e-10));
        }
    }
}

TEST_CASE("half-order sobolev bracketing") {
    GridSpec g{3, 16, 1.0};

    SpectralField m = pair_mode(g, {3, 0, 0});  // integer |xi|: lower equality
    CheckReport r = hhalf_equivalence(m, 1);
    CHECK(r.passed());
    CHECK(r.margin == doctest::Approx(1.0).epsilon(1e-12));

    SpectralField z(g);
    CHECK(hhalf_equivalence(z, 2).margin == 1.0);

    for (std::uint64_t s = 1; s <= 10; ++s) {
        SpectralField u = random_field(g, 700 + s);
        CheckReport rr = hhalf_equivalence(u, 1);
        CHECK(rr.passed());
        CHECK(rr.margin >= 1.0 - 1e-12);
        CHECK(rr.margin <= 2.0 + 1e-12);
    }
}

TEST_CASE("polynomial shell superposition identity") {
    GridSpec g{3, 16, 1.0};

    // s=1 reduces to the linear identity with k=l
    SpectralField u = random_field(g, 31);
    CheckReport lin = superposition_identity(u, 2);
    CheckReport pol = poly_superposition_identity(u, 2, 1);
    CHECK(pol.passed());
    CHECK(pol.lhs == doctest::Approx(lin.lhs).epsilon(1e-12));

    // single mode with |xi| in [j0^s, (j0+1)^s): both sides (j0-l+1)*||u||^2
    SpectralField m = pair_mode(g, {5, 0, 0});  // s=2: 4 <= 5 < 9, j0 = 2
    CheckReport r = poly_superposition_identity(m, 1, 2);
    CHECK(r.passed());
    const double e = l2_norm(m) * l2_norm(m);
    CHECK(r.lhs == doctest::Approx(2.0 * e).epsilon(1e-12));

    for (std::uint64_t s = 1; s <= 5; ++s) {
        SpectralField v = random_field(g, 800 + s);
        for (int ss : {1, 2, 3})
            for (int l : {1, 2}) CHECK(poly_superposition_identity(v, l, ss).passed());
    }
}

TEST_CASE("power sum brackets") {
    CheckReport a = power_sum_bounds(1, 5);
    CHECK(a.passed());
    CHECK(a.lhs == doctest::Approx(5.0));
    CHECK(a.rhs == doctest::Approx(6.0));
    CHECK(a.margin == doctest::Approx(5.0));  // sum of p^0, p=1..5

    CheckReport b = power_sum_bounds(2, 10);
    CHECK(b.passed());
    CHECK(b.lhs == doctest::Approx(50.0));
    CHECK(b.rhs == doctest::Approx(60.5));
    CHECK(b.margin == doctest::Approx(55.0));

    CHECK(power_sum_bounds(50, 50).passed());
    CHECK_THROWS(power_sum_bounds(51, 2));
    CHECK_THROWS(power_sum_bounds(2, 51));
}

TEST_CASE("weighted double-sum rearrangement") {
    GridSpec g{3, 16, 1.0};

    // single shell: closed-form count sum_{l=l1..j0} (j0-l+1) l^{i-1}
    SpectralField m = pair_mode(g, {3, 0, 0});  // s=2: |xi|=3 in [1,4), j0 = 1
    const double e = l2_norm(m) * l2_norm(m);
    const int i = 2, l1 = 1;
    CheckReport r = weighted_rearrangement(m, l1, i, 2);
    CHECK(r.passed());
    CHECK(r.lhs == doctest::Approx(e).epsilon(1e-12));  // only (l,j)=(1,1) contributes

    SpectralField m2 = pair_mode(g, {3, 0, 0});  // s=1: j0 = 3, i=1 weights are 1
    CheckReport r2 = weighted_rearrangement(m2, 1, 1, 1);
    CHECK(r2.passed());
    CHECK(r2.lhs == doctest::Approx(6.0 * e).epsilon(1e-12));  // 3+2+1

    // i=1, s=1 cross-checks against nested linear superposition
    SpectralField u = random_field(g, 19);
    CheckReport lin = weighted_rearrangement(u, 1, 1, 1);
    CHECK(lin.passed());
    double nested = 0.0;
    for (int l = 1; l <= 14; ++l) nested += superposition_identity(u, l).lhs;
    CHECK(lin.lhs == doctest::Approx(nested).epsilon(1e-10));

    for (std::uint64_t s = 1; s <= 5; ++s) {
        SpectralField v = random_field(g, 900 + s);
        CHECK(weighted_rearrangement(v, 1, 3, 2).passed());
        CHECK(weighted_rearrangement(v, 2, 2, 2).passed());
    }
    CHECK_THROWS(weighted_rearrangement(u, 1, 4, 2));  // i > 2s-1
}

TEST_CASE("nonlinear cancellation identities") {
    SolverConfig cfg;
    cfg.grid = GridSpec{3, 16, 0.05};
    SpectralField u = make_initial(InitialKind::random_divfree, cfg.grid, 5, -2.0);

    cfg.nonlinear_form = NonlinearForm::rotational;
    CHECK(nonlinear_cancellation(u, cfg).passed());
    cfg.nonlinear_form = NonlinearForm::convective;
    cfg.dealias = DealiasRule::two_thirds;
    CHECK(nonlinear_cancellation(u, cfg).passed());

    for (double k : {2.0, 4.0}) CHECK(partial_cancellation(u, k).passed());
}

TEST_CASE("identity battery over many seeds at n in {16, 32}") {
    for (int n : {16, 32}) {
        GridSpec g{3, n, 1.0};
        const int seeds = n == 16 ? 100 : 12;
        for (int s = 1; s <= seeds; ++s) {
            SpectralField u = random_field(g, 1000u + static_cast<std::uint64_t>(s) * 7u);
            CHECK(check_orthogonality(u, 2.0, 4.0).passed());
            CHECK(superposition_identity(u, 1).passed());
            CHECK(poly_superposition_identity(u, 1, 2).passed());
            CHECK(weighted_rearrangement(u, 1, 1, 1).passed());
            CHECK(hhalf_equivalence(u, 1).passed());
            CHECK(check_bernstein(u, 2.0, 1.0).passed());
        }
    }
}
