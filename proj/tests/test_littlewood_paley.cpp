#include <doctest.h>

#include <cmath>

#include "nssp/littlewood_paley.hpp"
#include "nssp/operators.hpp"
#include "test_helpers.hpp"

using namespace nssp;
using namespace nssp::test;

namespace {

SpectralField single_mode(const GridSpec& g, const std::array<int, 3>& xi, int comp = 0) {
    SpectralField u(g);
    std::array<int, 3> mxi{-xi[0], -xi[1], -xi[2]};
    u.at(comp, xi) = Complex(0.5, 0.0);
    u.at(comp, mxi) = Complex(0.5, 0.0);
    return u;
}

/// Direct coefficient-masking oracle independent of the library masks.
SpectralField oracle_highpass(const SpectralField& u, double k) {
    SpectralField out = u;
    for (int c = 0; c < u.grid.dim; ++c)
        for_each_mode(u.grid, [&](std::size_t flat, const std::array<int, 3>& xi, int) {
            const double mag = std::sqrt(double(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]));
            if (mag < k) out.at(c, flat) = Complex(0.0, 0.0);
        });
    return out;
}

}  // namespace

TEST_CASE("highpass basics") {
    GridSpec g{3, 16, 1.0};
    SpectralField u = random_field(g, 3);
    CHECK(rel_l2_diff(highpass(u, 0.0), u) == 0.0);

    SpectralField m2 = single_mode(g, {2, 0, 0});
    CHECK(l2_norm(highpass(m2, 3.0)) == 0.0);

    SpectralField mix = single_mode(g, {1, 0, 0});
    mix += single_mode(g, {0, 4, 0});
    SpectralField hp = highpass(mix, 2.0);
    CHECK(std::abs(hp.at(0, {0, 4, 0})) > 0.0);
    CHECK(std::abs(hp.at(0, {1, 0, 0})) == 0.0);
}

TEST_CASE("highpass matches the masking oracle on random fields") {
    GridSpec g{3, 16, 1.0};
    for (std::uint64_t s = 1; s <= 5; ++s) {
        SpectralField u = random_field(g, s);
        for (double k : {1.0, 2.5, 4.0, 7.3}) CHECK(rel_l2_diff(highpass(u, k), oracle_highpass(u, k)) == 0.0);
    }
}

TEST_CASE("lowpass + highpass telescopes exactly") {
    GridSpec g{3, 16, 1.0};
    SpectralField u = random_field(g, 9);

    // k beyond the lattice corner: lowpass passes everything
    const double kbig = 0.5 * g.n * std::sqrt(3.0) + 1.0;
    CHECK(rel_l2_diff(lowpass(u, kbig), u) == 0.0);

    for (double k : {1.0, 3.0, 6.5}) {
        SpectralField sum = lowpass(u, k);
        sum += highpass(u, k);
        CHECK(rel_l2_diff(sum, u) == 0.0);
    }

    // band + tail telescopes onto the bigger tail, bitwise
    const double h = 2.0, k = 5.0;
    SpectralField lhs = band(u, h, k);
    lhs += highpass(u, k);
    SpectralField rhs = highpass(u, h);
    for (std::size_t i = 0; i < lhs.data.size(); ++i) CHECK(lhs.data[i] == rhs.data[i]);

    CHECK_THROWS(band(u, 3.0, 3.0));
    CHECK_THROWS(band(u, 5.0, 3.0));
}

TEST_CASE("dyadic blocks equal bands bitwise and are orthogonal") {
    GridSpec g{3, 16, 1.0};
    SpectralField u = random_field(g, 21);
    DyadicDecomposition d = dyadic_decompose(u);
    for (auto& [j, blk] : d.blocks) {
        SpectralField ref = band(u, std::exp2(j - 1), std::exp2(j));
        REQUIRE(blk.data.size() == ref.data.size());
        for (std::size_t i = 0; i < blk.data.size(); ++i) CHECK(blk.data[i] == ref.data[i]);
    }
    // orthogonality of distinct blocks
    for (auto& [j, bj] : d.blocks)
        for (auto& [l, bl] : d.blocks) {
            if (j >= l) continue;
            CHECK(std::abs(inner_product(bj, bl)) <= 1e-12 * l2_norm(bj) * l2_norm(bl) + 1e-300);
        }
}

TEST_CASE("dyadic reconstruction returns the field") {
    GridSpec g{3, 16, 1.0};
    SpectralField u = random_field(g, 33, /*zero_mean=*/false);
    DyadicDecomposition d = dyadic_decompose(u);
    SpectralField sum = d.tilde_block;
    for (auto& [j, blk] : d.blocks) sum += blk;
    CHECK(rel_l2_diff(sum, u) <= 1e-12);
}

TEST_CASE("dyadic block placement for simple spectra") {
    GridSpec g{3, 16, 1.0};
    // sin x1 lives in block 1 only (|xi| = 1 in [1,2))
    SpectralField u(g);
    const double amp = std::pow(kTwoPi, 1.5) / 2.0;
    u.at(1, {1, 0, 0}) = Complex(0.0, -amp);
    u.at(1, {-1, 0, 0}) = Complex(0.0, amp);
    DyadicDecomposition d = dyadic_decompose(u);
    CHECK(l2_norm(d.tilde_block) == 0.0);
    for (auto& [j, blk] : d.blocks) {
        if (j == 1)
            CHECK(l2_norm(blk) > 0.0);
        else
            CHECK(l2_norm(blk) == 0.0);
    }

    // constant field: only the tilde block
    SpectralField cst(g);
    cst.at(0, {0, 0, 0}) = 2.5;
    DyadicDecomposition dc = dyadic_decompose(cst);
    CHECK(l2_norm(dc.tilde_block) == doctest::Approx(2.5));
    for (auto& [j, blk] : dc.blocks) CHECK(l2_norm(blk) == 0.0);
}

TEST_CASE("besov norm of the sine field at sigma=-1 is 1/2") {
    GridSpec g{3, 16, 1.0};
    SpectralField u(g);
    const double amp = std::pow(kTwoPi, 1.5) / 2.0;
    u.at(1, {1, 0, 0}) = Complex(0.0, -amp);
    u.at(1, {-1, 0, 0}) = Complex(0.0, amp);
    CHECK(besov_norm(u, BesovParams{-1.0, true}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(besov_norm(u, BesovParams{-1.0, false}) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("besov norm conventions") {
    GridSpec g{3, 16, 1.0};
    SpectralField z(g);
    CHECK(besov_norm(z, BesovParams{-1.0, false}) == 0.0);

    // single mode at |xi| = 2^j0 sits in block j0+1
    for (int j0 : {1, 2}) {
        SpectralField u = single_mode(g, {1 << j0, 0, 0});
        const double li = linf_norm(u, 2);
        const double expect = std::exp2(-(j0 + 1)) * li;
        CHECK(besov_norm(u, BesovParams{-1.0, true}) == doctest::Approx(expect).epsilon(1e-12));
    }

    CHECK_THROWS(besov_norm(random_field(g, 2), BesovParams{0.5, false}));
    SpectralField with_mean = random_field(g, 2, /*zero_mean=*/false);
    CHECK_THROWS(besov_norm(with_mean, BesovParams{-1.0, true}));
}

TEST_CASE("besov norm is absolutely homogeneous and tail-monotone") {
    GridSpec g{3, 16, 1.0};
    SpectralField u = random_field(g, 55);
    const BesovParams p{-1.0, false};
    const double base = besov_norm(u, p);
    SpectralField v = u;
    v *= -3.5;
    CHECK(besov_norm(v, p) == doctest::Approx(3.5 * base).epsilon(1e-12));

    double prev = base;
    for (double k : {1.0, 2.0, 4.0, 8.0}) {
        const double cur = besov_norm(highpass(u, k), p);
        CHECK(cur <= prev + 1e-13);
        prev = cur;
    }
}

TEST_CASE("highpass of agreeing fields is supported in |xi| >= k") {
    // homogeneous and inhomogeneous norms agree for tails with k >= 1
    GridSpec g{3, 16, 1.0};
    SpectralField u = random_field(g, 60, /*zero_mean=*/false);
    for (double k : {1.0, 2.0, 5.0}) {
        SpectralField t = highpass(u, k);
        CHECK(besov_norm(t, BesovParams{-1.0, true}) ==
              doctest::Approx(besov_norm(t, BesovParams{-1.0, false})).epsilon(1e-13));
    }
}
