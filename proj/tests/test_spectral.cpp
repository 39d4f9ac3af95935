#include <gtest/gtest.h>

#include "specflow/errors.hpp"
#include "specflow/fft.hpp"
#include "specflow/spectral.hpp"
#include "support.hpp"

using namespace specflow;
using specflow::test::kPi;
using cd = std::complex<double>;

namespace {

std::size_t mirror(std::size_t j, std::size_t n) { return (n - j) % n; }

}  // namespace

TEST(Wavenumbers, FftOrderingFourPoints) {
  const auto kt = wavenumbers(build_grid(1, 4, 2 * kPi));
  const std::vector<double> expected{0.0, 1.0, -2.0, -1.0};
  ASSERT_EQ(kt.k_axis[0].size(), 4u);
  for (std::size_t j = 0; j < 4; ++j) EXPECT_DOUBLE_EQ(kt.k_axis[0][j], expected[j]);
}

TEST(Wavenumbers, StrictTwoThirdsMask) {
  const auto kt = wavenumbers(build_grid(1, 8, 2 * kPi));
  EXPECT_DOUBLE_EQ(kt.k_cut[0], 2.0);
  for (std::size_t j = 0; j < 8; ++j) {
    const double k = kt.k_axis[0][j];
    const bool keep = k == 0.0 || k == 1.0 || k == -1.0;
    EXPECT_EQ(kt.dealias_mask[j] != 0, keep) << "k=" << k;
  }
}

TEST(Wavenumbers, ZeroModeFirstOnEveryGrid) {
  for (int n : {4, 8, 64}) {
    for (double L : {1.0, 2 * kPi, 16 * kPi}) {
      const auto kt = wavenumbers(build_grid(2, n, L));
      EXPECT_EQ(kt.k_axis[0][0], 0.0);
      EXPECT_EQ(kt.k_axis[1][0], 0.0);
      EXPECT_EQ(kt.k2[0], 0.0);
    }
  }
}

TEST(Wavenumbers, ScaleWithDomainLength) {
  const auto kt = wavenumbers(build_grid(1, 16, 16 * kPi));
  EXPECT_DOUBLE_EQ(kt.k_axis[0][1], 1.0 / 8.0);
  EXPECT_DOUBLE_EQ(kt.k_axis[0][8], -1.0);
}

TEST(Wavenumbers, MaskSymmetricUnderNegation) {
  const auto kt = wavenumbers(build_grid(2, 16, 3.0));
  const std::size_t n = 16;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_EQ(kt.dealias_mask[i * n + j], kt.dealias_mask[mirror(i, n) * n + mirror(j, n)]);
    }
  }
  const auto k1 = wavenumbers(build_grid(1, 32, 1.0));
  for (std::size_t j = 0; j < 32; ++j) EXPECT_EQ(k1.dealias_mask[j], k1.dealias_mask[mirror(j, 32)]);
}

TEST(Fft, ConstantFieldHasOnlyDc) {
  const GridSpec g = build_grid(2, 8, 1.0);
  const auto f = test::sample(g, [](double, double) { return 0.75; });
  const auto F = forward(f);
  EXPECT_NEAR(F[0].real(), 0.75 * 64, 1e-12);
  EXPECT_NEAR(F[0].imag(), 0.0, 1e-12);
  for (std::size_t m = 1; m < F.size(); ++m) EXPECT_LT(std::abs(F[m]), 1e-12);
}

TEST(Fft, CosineCoefficients) {
  const GridSpec g = build_grid(1, 8, 2 * kPi);
  const auto F = forward(test::sample(g, [](double x, double) { return std::cos(x); }));
  for (std::size_t m = 0; m < 8; ++m) {
    const cd expected = (m == 1 || m == 7) ? cd(4.0, 0.0) : cd(0.0, 0.0);
    EXPECT_NEAR(std::abs(F[m] - expected), 0.0, 1e-13) << "mode " << m;
  }
}

TEST(Fft, RoundTripDouble) {
  for (int dim : {1, 2}) {
    const GridSpec g = build_grid(dim, 32, 5.0);
    const auto f = test::random_field(g, 7 + dim);
    const auto back = inverse(forward(f));
    EXPECT_LE(test::max_diff(back.values, f.values), 1e-12 * test::norm2(f.values) /
                                                         std::sqrt(double(f.size())));
  }
}

TEST(Fft, RoundTripSingle) {
  const GridSpec g = build_grid(2, 16, 1.0, 0.0, Precision::Single);
  const auto f = convert<float>(test::random_field(g, 3));
  const auto back = inverse(forward(f));
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(back[i], f[i], 1e-5f);
}

TEST(Fft, Parseval) {
  for (int dim : {1, 2}) {
    const GridSpec g = build_grid(dim, 64, 2.0);
    const auto f = test::random_field(g, 11, 1.0, 0.3);
    const auto F = forward(f);
    double real_sum = 0.0, spec_sum = 0.0;
    for (double v : f.values) real_sum += v * v;
    for (const auto& c : F.coeffs) spec_sum += std::norm(c);
    spec_sum /= static_cast<double>(g.total_points());
    EXPECT_NEAR(spec_sum / real_sum, 1.0, 1e-10);
  }
}

TEST(Fft, HermitianSymmetry) {
  const std::size_t n = 16;
  const GridSpec g = build_grid(2, n, 1.0);
  const auto F = forward(test::random_field(g, 5));
  double scale = 0.0;
  for (const auto& c : F.coeffs) scale = std::max(scale, std::abs(c));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cd a = F[i * n + j];
      const cd b = std::conj(F[mirror(i, n) * n + mirror(j, n)]);
      EXPECT_LE(std::abs(a - b), 1e-12 * scale);
    }
  }
}

TEST(Fft, RejectsNonFiniteInput) {
  const GridSpec g = build_grid(1, 8, 1.0);
  RealField<double> f(g);
  f[3] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(forward(f), NumericError);
}

TEST(Fft, PlanMatchesOneShot) {
  const GridSpec g = build_grid(2, 8, 1.0);
  const auto f = test::random_field(g, 9);
  Fft<double> plan(g);
  std::vector<cd> out(g.total_points());
  plan.forward(std::span<const double>(f.values), std::span<cd>(out));
  const auto F = forward(f);
  for (std::size_t m = 0; m < out.size(); ++m) EXPECT_EQ(out[m], F[m]);
}

TEST(Derivative, OrderZeroIsIdentity) {
  const GridSpec g = build_grid(2, 8, 1.0);
  const auto F = forward(test::random_field(g, 1));
  const auto D = spectral_derivative(F, 0);
  for (std::size_t m = 0; m < F.size(); ++m) EXPECT_EQ(D[m], F[m]);
}

TEST(Derivative, SecondDerivativeOfSine) {
  const GridSpec g = build_grid(1, 16, 2 * kPi);
  const auto f = test::sample(g, [](double x, double) { return std::sin(x); });
  const auto d2 = inverse(spectral_derivative(forward(f), 2));
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(d2[i], -f[i], 1e-14);
}

TEST(Derivative, FirstDerivativeOfCosine) {
  const GridSpec g = build_grid(1, 32, 4 * kPi, -kPi);
  const auto f = test::sample(g, [](double x, double) { return std::cos(1.5 * x); });
  const auto d1 = inverse(spectral_derivative(forward(f), 1));
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_NEAR(d1[i], -1.5 * std::sin(1.5 * g.coordinate(0, i)), 1e-13);
  }
}

TEST(Derivative, LaplacianIn2D) {
  const GridSpec g = build_grid(2, 16, 2 * kPi);
  const auto f = test::sample(g, [](double x, double y) { return std::cos(2 * x) * std::sin(y); });
  const auto lap = inverse(spectral_derivative(forward(f), 2));
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(lap[i], -5.0 * f[i], 1e-12);
}

TEST(Derivative, ZeroModeMultiplierVanishes) {
  const GridSpec g = build_grid(2, 8, 1.0);
  const auto F = forward(test::random_field(g, 2, 1.0, 4.0));
  ASSERT_GT(std::abs(F[0]), 1.0);
  EXPECT_EQ(spectral_derivative(F, 2)[0], cd(0.0, 0.0));
  const GridSpec g1 = build_grid(1, 8, 1.0);
  EXPECT_EQ(spectral_derivative(forward(test::random_field(g1, 2, 1.0, 4.0)), 1)[0], cd(0.0, 0.0));
}

TEST(Derivative, ComposedLaplacianMatchesFourthOrderExactly) {
  for (int dim : {1, 2}) {
    const GridSpec g = build_grid(dim, 16, 3.0);
    const auto F = forward(test::random_field(g, 4));
    const auto twice = spectral_derivative(spectral_derivative(F, 2), 2);
    const auto once = spectral_derivative(F, 4);
    for (std::size_t m = 0; m < F.size(); ++m) EXPECT_EQ(twice[m], once[m]) << "dim " << dim;
  }
}

TEST(Derivative, UnsupportedOrders) {
  const auto F2 = forward(test::random_field(build_grid(2, 8, 1.0), 1));
  EXPECT_THROW(spectral_derivative(F2, 1), UnsupportedOperation);
  EXPECT_THROW(spectral_derivative(F2, 3), UnsupportedOperation);
  EXPECT_THROW(spectral_derivative(F2, -2), UnsupportedOperation);
  const auto F1 = forward(test::random_field(build_grid(1, 8, 1.0), 1));
  EXPECT_NO_THROW(spectral_derivative(F1, 3));
}

TEST(Derivative, TableMustMatchGrid) {
  const auto F = forward(test::random_field(build_grid(1, 8, 1.0), 1));
  EXPECT_THROW(spectral_derivative(F, 2, wavenumbers(build_grid(1, 16, 1.0))), ShapeError);
}
