#include <doctest.h>

#include "oracles.hpp"
#include "wlab/riemannian.hpp"

using namespace wlab;

namespace {

// Real forms through the word algebra: a basis word is sorted with a sign.
std::vector<double> dense_real(const RealForm& f) {
  const int d = f.d(), k = f.k();
  std::size_t size = 1;
  for (int i = 0; i < k; ++i) size *= d;
  std::vector<double> a(size, 0.0);
  for (std::size_t x = 0; x < size; ++x) {
    std::vector<int> s(k);
    std::size_t y = x;
    for (int t = k - 1; t >= 0; --t) {
      s[t] = static_cast<int>(y % d);
      y /= d;
    }
    std::vector<int> sorted = s;
    int sg = oracle::sort_sign(sorted);
    if (!sg) continue;
    std::vector<int> one;
    for (int v : sorted) one.push_back(v + 1);
    a[x] = sg * f.coeff(MultiIndex(one));
  }
  return a;
}

}  // namespace

TEST_SUITE("riemannian") {

TEST_CASE("basic real calculus") {
  RealForm c = real_contract(Eigen::VectorXd::Unit(3, 0), RealForm::basis(3, {1, 2}));
  CHECK(c.coeff({2}) == 1.0);
  CHECK(real_inner(RealForm::basis(3, {1, 3}), RealForm::basis(3, {1, 3})) == 1.0);
  CHECK(real_inner(RealForm::basis(3, {1, 3}), RealForm::basis(3, {2, 3})) == 0.0);
  CHECK_THROWS(real_wedge(RealForm::basis(2, {1, 2}), RealForm::basis(2, {1})));
}

TEST_CASE("wedge, contraction and norms against the dense oracle") {
  Rng rng(1);
  for (int d = 1; d <= 5; ++d)
    for (int k1 = 0; k1 <= d; ++k1)
      for (int k2 = 0; k1 + k2 <= d; ++k2) {
        RealForm a = RealForm::random(d, k1, rng), b = RealForm::random(d, k2, rng);
        RealForm w = real_wedge(a, b);
        // dense shuffle product
        std::vector<double> da = dense_real(a), db = dense_real(b), dw = dense_real(w);
        const int K = k1 + k2;
        auto sh = oracle::shuffles(K, k1);
        std::size_t size = dw.size();
        double dev = 0.0;
        for (std::size_t x = 0; x < size; ++x) {
          std::vector<int> s(K);
          std::size_t y = x;
          for (int t = K - 1; t >= 0; --t) {
            s[t] = static_cast<int>(y % d);
            y /= d;
          }
          double acc = 0.0;
          for (const auto& perm : sh) {
            std::size_t ia = 0, ib = 0;
            for (int i : perm.in) ia = ia * d + s[i];
            for (int i : perm.out) ib = ib * d + s[i];
            acc += perm.sign * da[ia] * db[ib];
          }
          dev = std::max(dev, std::abs(acc - dw[x]));
        }
        CHECK(dev < 1e-12);
        // associativity and graded commutativity
        RealForm c = RealForm::random(d, 0, rng);
        CHECK((real_wedge(real_wedge(a, b), c).coeffs() - real_wedge(a, real_wedge(b, c)).coeffs()).norm() < 1e-12);
        double sign = (k1 * k2) % 2 ? -1.0 : 1.0;
        CHECK((w.coeffs() - sign * real_wedge(b, a).coeffs()).norm() < 1e-12);
        // 1/k! full contraction equals the coefficient norm
        double full = 0.0;
        for (double v : da) full += v * v;
        CHECK(full / double(oracle::factorial(k1)) == doctest::Approx(real_norm_squared(a)).epsilon(1e-12));
        if (k1 > 0) {
          Eigen::VectorXd x = Eigen::VectorXd::Random(d);
          RealForm ia = real_contract(x, a);
          RealForm lhs = real_contract(x, real_wedge(a, b));
          RealForm rhs = real_wedge(ia, b);
          if (k2 > 0) rhs += (k1 % 2 ? -1.0 : 1.0) * real_wedge(a, real_contract(x, b));
          CHECK((lhs.coeffs() - rhs.coeffs()).norm() < 1e-12);
        }
      }
}

TEST_CASE("Betti predicate") {
  CHECK(betti_prediction(6, 3, 2, true) == BettiVerdict::Vanishes);
  CHECK(betti_prediction(5, 4, 3, true) == BettiVerdict::Vanishes);
  CHECK(betti_prediction(5, 2, 3, false) == BettiVerdict::ParallelOnly);
  CHECK(to_string(BettiVerdict::ParallelOnly) == "parallel-only");
  CHECK_THROWS(betti_prediction(5, 0, 2, true));
  CHECK_THROWS(betti_prediction(5, 5, 2, true));
}

TEST_CASE("Betti predicate is monotone in the positivity level") {
  auto rank = [](BettiVerdict v) { return v == BettiVerdict::Vanishes ? 2 : v == BettiVerdict::ParallelOnly ? 1 : 0; };
  for (int d = 2; d <= 10; ++d)
    for (int k = 1; k <= d - 1; ++k)
      for (int p = 1; p < d; ++p)
        for (bool strict : {true, false}) {
          CHECK(rank(betti_prediction(d, k, p, strict)) >= rank(betti_prediction(d, k, p + 1, strict)));
          if (strict) CHECK(rank(betti_prediction(d, k, p, true)) >= rank(betti_prediction(d, k, p, false)));
        }
}

}  // TEST_SUITE
