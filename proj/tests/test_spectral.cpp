#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "pjacobi/spectral.hpp"

using namespace pjacobi;

namespace {
std::vector<CX> test_grid() {
  std::vector<CX> zs;
  for (double u : {-2.0, -1.0, 0.0, 1.0, 2.0})
    for (double v : {0.25, 0.5, 1.0, -0.25, -0.5}) zs.emplace_back(u, v);
  return zs;
}
}  // namespace

TEST_CASE("phi_closed equals the Case I-IV formulas") {
  for (double a : {0.5, 0.9, 1.3})
    for (int N : {1, 2, 3, 4}) {
      const SpectralModel sm(make_spec(a, N));
      for (CX z : test_grid()) {
        INFO("N=" << N << " a=" << a << " z=" << z);
        CHECK(std::abs(sm.phi_closed(z) - oracles::phi_case(N, a, z)) < 1e-10);
      }
    }
}

TEST_CASE("continued fraction converges to the closed form") {
  SECTION("op examples") {
    const SpectralModel s1(make_spec(0.0, 1));
    CHECK(std::abs(s1.phi_cf(CX(0, 2), 200) - oracles::phi_case(1, 0.0, CX(0, 2))) < 1e-10);
    const SpectralModel s3(make_spec(0.9, 3));
    CHECK(std::abs(s3.phi_cf(CX(0.5, 0.5), 400) - oracles::phi_case(3, 0.9, CX(0.5, 0.5))) < 1e-8);
  }
  SECTION("grid agreement for N <= 5") {
    for (int N = 1; N <= 5; ++N) {
      const SpectralModel sm(make_spec(0.9, N));
      for (CX z : test_grid())
        CHECK(std::abs(sm.phi_cf(z, 400) - sm.phi_closed(z)) < 1e-8);
    }
  }
  SECTION("preconditions") {
    CHECK_THROWS_AS(phi_cf(make_spec(0.9, 2), CX(1.0, 0.0), 100), std::domain_error);
    CHECK_THROWS_AS(phi_cf(make_spec(0.9, 2), CX(1.0, 1.0), 0), std::invalid_argument);
  }
}

TEST_CASE("one-period fixed point of the continued-fraction map") {
  for (int N : {1, 3, 5}) {
    const SpectralModel sm(make_spec(0.9, N));
    for (CX z : {CX(0.4, 0.6), CX(-1.2, 0.3)})
      CHECK(std::abs(sm.quadratic_residual(z)) < 1e-10);
  }
}

TEST_CASE("explicit quadratic residuals for N <= 2") {
  const SpectralModel s1(make_spec(0.9, 1));
  CHECK(std::abs(s1.quadratic_residual(CX(1, 1))) < 1e-9);
  const SpectralModel s2(make_spec(0.5, 2));
  CHECK(std::abs(s2.quadratic_residual(CX(0, 2))) < 1e-9);
  const SpectralModel s5(make_spec(0.9, 5));
  CHECK(std::abs(s5.quadratic_residual(CX(1.0, 0.3))) < 1e-9);
}

TEST_CASE("Herglotz property: Im z > 0 implies Im phi < 0") {
  for (int N : {1, 2, 3, 4, 5}) {
    const SpectralModel sm(make_spec(0.9, N));
    for (CX z : test_grid())
      if (z.imag() > 0) CHECK(sm.phi_closed(z).imag() < 0);
  }
}

TEST_CASE("branched square root") {
  const auto spec = make_spec(0.9, 3);
  const SpectralModel sm(spec);
  const auto& sq = sm.branched_sqrt();
  SECTION("squares back to g^2 - 1 off the real axis") {
    for (CX z : test_grid()) {
      const CX g = eval_g(spec, z);
      const CX v = sq(z);
      CHECK(std::abs(v * v - (g * g - 1.0)) <= 1e-10 * std::max(1.0, std::abs(g * g)));
    }
  }
  SECTION("boundary values are +i(-1)^{N-k} sqrt(1-g^2) from above") {
    const auto& bands = sm.bands().bands;
    for (int k = 1; k <= 3; ++k) {
      const auto& [lo, hi] = bands[static_cast<std::size_t>(k - 1)];
      const double x = lo + (hi - lo) * 0.37;
      const double g = eval_g(spec, x);
      const double sgn = ((3 - k) % 2 == 0) ? 1.0 : -1.0;
      const CX expected = CX(0, 1) * sgn * std::sqrt(1 - g * g);
      CHECK(std::abs(sq(CX(x, 1e-9)) - expected) < 1e-6);
      CHECK(std::abs(sq(CX(x, -1e-9)) + expected) < 1e-6);
    }
  }
  SECTION("behaves like g at infinity") {
    const CX z(3.0, 40.0);
    CHECK(std::abs(sq(z) / eval_g(spec, z) - 1.0) < 1e-2);
  }
}

TEST_CASE("resolvent entries: closed-form displays") {
  SECTION("Case I") {
    const double a = 0.8;
    const SpectralModel sm(make_spec(a, 1));
    for (CX z : {CX(0.5, 0.7), CX(-1.0, -0.4)}) {
      const auto r = sm.resolvent_entries(z);
      const auto o = oracles::resolvent_case(1, a, z);
      CHECK(std::abs(r.r00 - o.r00) < 1e-10);
      CHECK(std::abs(r.r01 - o.r01) < 1e-10);
      CHECK(std::abs(r.r11 - o.r11) < 1e-10);
    }
  }
  SECTION("Case II: r00 = (z+a)/sqrt((z^2-a^2)(z^2-a^2-1))") {
    const double a = 0.6;
    const SpectralModel sm(make_spec(a, 2));
    for (CX z : {CX(0.9, 0.5), CX(-0.3, 1.2)}) {
      const auto r = sm.resolvent_entries(z);
      const auto o = oracles::resolvent_case(2, a, z);
      CHECK(std::abs(r.r00 - o.r00) < 1e-10);
      CHECK(std::abs(r.r01 - o.r01) < 1e-10);
      CHECK(std::abs(r.r11 - o.r11) < 1e-10);
    }
  }
  SECTION("rejects real z") {
    CHECK_THROWS_AS(SpectralModel(make_spec(0.9, 2)).resolvent_entries(CX(0.5, 0.0)),
                    std::domain_error);
  }
}

TEST_CASE("finite-truncation oracle for the resolvent") {
  for (double a : {0.5, 0.9})
    for (int N : {1, 2, 3, 5}) {
      const auto spec = make_spec(a, N);
      const SpectralModel sm(spec);
      const CX z(0.4, 0.5);
      const auto exact = sm.resolvent_entries(z);
      double prev = 1e300;
      for (int M : {100, 200, 400}) {
        const auto tr = truncated_resolvent_center(spec, z, M);
        const double err = std::max({std::abs(tr.r00 - exact.r00), std::abs(tr.r01 - exact.r01),
                                     std::abs(tr.r11 - exact.r11)});
        CHECK(err <= prev * 1.0001 + 1e-15);
        prev = err;
      }
      CHECK(prev < 1e-6);
    }
}

TEST_CASE("simplified-resolvent identity (2/phi) - (z-a) = 2 sqrt(g^2-1)/P*_N") {
  for (int N : {1, 2, 3, 4}) {
    const auto spec = make_spec(0.9, N);
    const SpectralModel sm(spec);
    for (CX z : test_grid()) {
      const CX phi = sm.phi_closed(z);
      const CX lhs = 2.0 / phi - (z - 0.9);
      const CX rhs = 2.0 * sm.branched_sqrt()(z) / eval_P_star(spec, N, z);
      CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("spectral densities: closed forms and positivity") {
  SECTION("Case I") {
    const double a = 0.7;
    const SpectralModel sm(make_spec(a, 1));
    const auto d = sm.densities();
    for (double x : {a - 0.8, a - 0.2, a + 0.5}) {
      const auto o = oracles::density_case(1, a, x);
      CHECK(d.d00(x) == Catch::Approx(o.d00).epsilon(1e-10));
      CHECK(d.d01(x) == Catch::Approx(o.d01).margin(1e-10));
      CHECK(d.d11(x) == Catch::Approx(o.d11).epsilon(1e-10));
    }
  }
  SECTION("Case II: d01 is odd with the sgn(x) closed form") {
    const double a = 0.5;
    const SpectralModel sm(make_spec(a, 2));
    const auto d = sm.densities();
    for (double x : {0.7, 0.9, 1.05}) {
      const auto o = oracles::density_case(2, a, x);
      CHECK(d.d01(x) == Catch::Approx(o.d01).epsilon(1e-9));
      CHECK(d.d01(-x) == Catch::Approx(-o.d01).epsilon(1e-9));
      CHECK(d.d00(x) == Catch::Approx(o.d00).epsilon(1e-9));
      CHECK(d.d11(x) == Catch::Approx(o.d11).epsilon(1e-9));
    }
  }
  SECTION("pointwise 2x2 positive semidefiniteness") {
    for (int N : {1, 2, 3, 4, 5}) {
      const SpectralModel sm(make_spec(0.9, N));
      const auto d = sm.densities();
      for (const auto& [lo, hi] : sm.bands().bands)
        for (double f : {0.1, 0.4, 0.6, 0.9}) {
          const double x = lo + (hi - lo) * f;
          const double d00 = d.d00(x), d01 = d.d01(x), d11 = d.d11(x);
          CHECK(d00 > 0);
          CHECK(d11 > 0);
          CHECK(d00 * d11 - d01 * d01 >= -1e-10);
        }
    }
  }
  SECTION("rejects out-of-band evaluation") {
    const SpectralModel sm(make_spec(0.9, 2));
    CHECK_THROWS_AS(sm.densities().d00(0.0), std::domain_error);  // gap point
  }
}

TEST_CASE("density moments via the Neumann expansion") {
  // integral d00 = 1, d11 = 1, d01 = 0, x d01 = 1/2
  for (double a : {0.5, 0.9})
    for (int N : {1, 2, 3}) {
      const auto spec = make_spec(a, N);
      const SpectralModel sm(spec);
      const auto d = sm.densities();
      double m00 = 0, m11 = 0, m01 = 0, m01x = 0;
      for (const auto& [lo, hi] : sm.bands().bands) {
        double part[4];
        integrate_band_vec(
            [&](double x, std::span<double> out) {
              out[0] = d.d00(x);
              out[1] = d.d11(x);
              out[2] = d.d01(x);
              out[3] = x * d.d01(x);
            },
            lo, hi, 4, std::span<double>(part, 4));
        m00 += part[0];
        m11 += part[1];
        m01 += part[2];
        m01x += part[3];
      }
      INFO("N=" << N << " a=" << a);
      CHECK(m00 == Catch::Approx(1.0).margin(1e-8));
      CHECK(m11 == Catch::Approx(1.0).margin(1e-8));
      CHECK(m01 == Catch::Approx(0.0).margin(1e-8));
      CHECK(m01x == Catch::Approx(0.5).margin(1e-8));
    }
}

TEST_CASE("Plemelj extraction recovers the densities") {
  SECTION("phi at a=0 recovers the Case I weight") {
    const SpectralModel sm(make_spec(0.0, 1));
    const double x = 0.4;
    const double w = plemelj_extract([&](CX z) { return sm.phi_closed(z); }, x);
    CHECK(w == Catch::Approx(oracles::weight_case(1, 0.0, x)).margin(1e-8));
  }
  SECTION("r11 at N=2 recovers d11; r01 at N=3 recovers d01") {
    const SpectralModel s2(make_spec(0.5, 2));
    CHECK(plemelj_extract([&](CX z) { return s2.resolvent_entries(z).r11; }, 0.8) ==
          Catch::Approx(s2.densities().d11(0.8)).margin(1e-6));
    const SpectralModel s3(make_spec(0.9, 3));
    const auto& band = s3.bands().bands[1];
    const double x = band.first + (band.second - band.first) * 0.5;
    CHECK(plemelj_extract([&](CX z) { return s3.resolvent_entries(z).r01; }, x) ==
          Catch::Approx(s3.densities().d01(x)).margin(1e-6));
  }
}

TEST_CASE("phi_closed handles special points") {
  SECTION("removable singularity at massless zeros of P_{N-1}") {
    // N=2: y_1 = a has m = 0; the rationalized variant takes over near it
    const double a = 0.9;
    const SpectralModel sm(make_spec(a, 2));
    const CX near(a + 1e-10, 1e-12);
    CHECK(std::isfinite(std::abs(sm.phi_closed(near))));
    const CX off(a, 0.1);
    CHECK(std::abs(sm.phi_closed(near) - sm.phi_closed(CX(a + 1e-10, 1e-6))) < 1e-3);
    (void)off;
  }
  SECTION("massive pole on the real axis is rejected") {
    const SpectralModel sm(make_spec(0.9, 3));
    const double y2 = sm.mass_points()[1].y;
    REQUIRE(sm.mass_points()[1].m > 0);
    CHECK_THROWS_AS(sm.phi_closed(CX(y2, 0.0)), std::domain_error);
  }
}
