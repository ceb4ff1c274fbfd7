#include <cmath>
#include <random>

#include "doctest.h"
#include "hardykit/error.hpp"
#include "hardykit/inequalities.hpp"
#include "hardykit/operators.hpp"
#include "hardykit/random_instance.hpp"
#include "oracles.hpp"

using namespace hardykit;

namespace {

FiniteDist uniform_grid(std::size_t n) {
  GridSpec spec;
  spec.n_atoms = n;
  return grid_of_continuous(spec);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::IoError;
}

SupportFunction rev(const SupportFunction& f) {
  return SupportFunction(std::vector<double>(f.values().rbegin(), f.values().rend()));
}

}  // namespace

TEST_CASE("hardy_eval examples") {
  const auto d = bernoulli(0.5);
  const SupportFunction psi({1.0, 0.0});
  const auto r = hardy_eval(d, psi, 2.0);
  CHECK(r.lhs == doctest::Approx(0.625));
  CHECK(r.rhs == doctest::Approx(2.0));
  CHECK(r.constant == 4.0);
  CHECK(r.holds);
  CHECK(r.lhs == doctest::Approx(oracle::hardy_lhs(d, psi, 2.0)).epsilon(1e-12));

  const auto one = hardy_eval(uniform_points(0, 1, 7), SupportFunction::constant(7, 1.0), 2.0);
  CHECK(one.lhs == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.rhs == doctest::Approx(4.0).epsilon(1e-15));

  const auto pt = hardy_eval(degenerate(2.0), SupportFunction({3.0}), 3.0);
  CHECK(pt.lhs == doctest::Approx(27.0));
  CHECK(pt.rhs == doctest::Approx(std::pow(1.5, 3) * 27.0));

  CHECK(code_of([&] { hardy_eval(d, psi, 1.0); }) == ErrorCode::BadExponent);
  CHECK(code_of([&] { hardy_eval(d, SupportFunction({-1.0, 0.0}), 2.0); }) ==
        ErrorCode::NegativeValue);
}

TEST_CASE("zero over zero ratio is zero") {
  const auto r = hardy_eval(bernoulli(0.5), SupportFunction({0.0, 0.0}), 2.0);
  CHECK(r.ratio == 0.0);
  CHECK(r.holds);
}

TEST_CASE("strict indicator variant fails above the threshold") {
  const auto bad = hardy_strict_variant_eval(bernoulli(0.9), SupportFunction({1.0, 0.0}), 2.0);
  CHECK(bad.lhs == doctest::Approx(0.9));
  CHECK(bad.rhs == doctest::Approx(0.4));
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.violated());
  const auto ok = hardy_strict_variant_eval(bernoulli(0.5), SupportFunction({1.0, 0.0}), 2.0);
  CHECK(ok.lhs == doctest::Approx(0.5));
  CHECK(ok.holds);
  CHECK(hardy_strict_variant_eval(degenerate(0.0), SupportFunction({2.0}), 2.0).lhs == 0.0);
}

TEST_CASE("right-tail Hardy mirrors the left-tail one") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto inst = random_instance(instance_seed(21, s));
    const auto left = hardy_eval(inst.d, inst.psi, inst.p);
    const auto right = hardy_right_eval(reflect(inst.d), rev(inst.psi), inst.p);
    CHECK(right.lhs == doctest::Approx(left.lhs).epsilon(1e-12));
  }
  CHECK(hardy_right_eval(bernoulli(0.2), SupportFunction({1.0, 1.0}), 2.0).lhs == 1.0);
}

TEST_CASE("two-sided evaluator") {
  const auto inst = random_instance(instance_seed(22, 1), 12);
  const auto& d = inst.d;
  const double lo = d.atom(0) - 1.0, hi = d.atom(d.size() - 1) + 1.0;
  CHECK(hardy_two_sided_eval(d, inst.psi, 2.0, lo).lhs ==
        doctest::Approx(hardy_right_eval(d, inst.psi, 2.0).lhs).epsilon(1e-14));
  CHECK(hardy_two_sided_eval(d, inst.psi, 2.0, hi).lhs ==
        doctest::Approx(hardy_eval(d, inst.psi, 2.0).lhs).epsilon(1e-14));
  const auto u = hardy_two_sided_eval(uniform_points(1, 4, 4), SupportFunction::constant(4, 1.0),
                                      2.0, 2.5);
  CHECK(u.lhs == 1.0);
  CHECK(u.rhs == 4.0);
}

TEST_CASE("stochastic ordering, variant a") {
  const auto dx = uniform_points(2, 4, 2);
  const auto dy = uniform_points(1, 3, 2);
  const auto r = hardy_ordered_eval(dx, dy, SupportFunction({1.0, 0.0}), 2.0, OrderedVariant::A);
  // X=2: E psi(Y)1[Y<=2] = 0.5, G(2) = 0.5; X=4: 0.5 / 1.
  CHECK(r.lhs == doctest::Approx(0.5 * 1.0 + 0.5 * 0.25));
  CHECK(r.rhs == doctest::Approx(2.0));
  CHECK(r.holds);

  const auto shifted = hardy_ordered_eval(uniform_points(1, 1.25, 2), uniform_points(0, 0.25, 2),
                                          SupportFunction::constant(2, 1.0), 2.0,
                                          OrderedVariant::A);
  CHECK(shifted.lhs == doctest::Approx(1.0));
  CHECK(shifted.holds);

  CHECK(code_of([&] {
          hardy_ordered_eval(dy, dx, SupportFunction({1.0, 0.0}), 2.0, OrderedVariant::A);
        }) == ErrorCode::OrderingViolated);
  CHECK(code_of([&] {
          hardy_ordered_eval(uniform_points(1, 4, 2), dy, SupportFunction({1.0, 0.0}), 2.0,
                             OrderedVariant::A);
        }) == ErrorCode::SharedAtom);
}

TEST_CASE("stochastic ordering, variant a holds on random ordered pairs") {
  for (std::uint64_t s = 0; s < 300; ++s) {
    std::mt19937_64 rng(instance_seed(23, s));
    const auto dy = random_dist(rng);
    // Shifting up by a positive amount that avoids every atom keeps F <= G.
    const double shift = 0.5 + uniform01(rng);
    std::vector<double> ax(dy.atoms().begin(), dy.atoms().end());
    for (double& a : ax) a += shift;
    bool clash = false;
    for (double a : ax) clash |= dy.count_le(a) != dy.count_lt(a);
    if (clash) continue;
    const auto dx = make_finite_dist(ax, {dy.probs().begin(), dy.probs().end()});
    const auto psi = random_psi(rng, dy.size());
    for (double p : kSuiteExponents) {
      CHECK(hardy_ordered_eval(dx, dy, psi, p, OrderedVariant::A).holds);
    }
  }
}

TEST_CASE("stochastic ordering, variant b on a grid") {
  const auto dx = uniform_grid(512);
  std::vector<double> ay(dx.atoms().begin(), dx.atoms().end());
  for (double& a : ay) a += 0.3;
  const auto dy = make_finite_dist(ay, {dx.probs().begin(), dx.probs().end()});
  const auto psi = SupportFunction::tabulate(dy, [](double y) { return 1.0 / y; });
  const auto r = hardy_ordered_eval(dx, dy, psi, 2.0, OrderedVariant::B);
  CHECK(r.holds);
  CHECK(r.tol == doctest::Approx(10.0 / 512));
  CHECK(code_of([&] {
          hardy_ordered_eval(bernoulli(0.5), bernoulli(0.5), SupportFunction({1.0, 1.0}), 2.0,
                             OrderedVariant::B);
        }) == ErrorCode::RequiresGrid);
}

TEST_CASE("copson_eval") {
  const double q = 0.3, a = 1.5, b = 0.7;
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const auto r = copson_eval(bernoulli(q), SupportFunction({a, b}), p);
    CHECK(r.lhs == doctest::Approx((1 - q) * std::pow(a + q * b, p) + q * std::pow(q * b, p))
                       .epsilon(1e-13));
    CHECK(r.holds);
  }
  // p = 1: Tonelli turns the lhs into E psi exactly.
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto inst = random_instance(instance_seed(24, s));
    const auto r = copson_eval(inst.d, inst.psi, 1.0);
    CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-12));
  }
  CHECK(copson_eval(bernoulli(q), SupportFunction({0.0, 0.0}), 2.0).lhs == 0.0);
  CHECK(code_of([&] { copson_eval(bernoulli(q), SupportFunction({1.0, 1.0}), 0.5); }) ==
        ErrorCode::BadExponent);
}

TEST_CASE("reverse Hardy") {
  const auto u = uniform_points(0, 1, 9);
  const auto c = reverse_hardy_eval(u, SupportFunction::constant(9, 2.0), 3.0,
                                    ReverseHardyVariant::General);
  CHECK(c.lhs == doctest::Approx(8.0));
  CHECK(c.rhs == doctest::Approx(8.0));
  CHECK(c.holds);
  CHECK(c.direction == Direction::Lower);

  // Continuum: int (H 1[v<=1/2])^2 = 1/2 + 1/4 = 3/4 and 2 int_0^{1/2} (1 - v) dv = 3/4.
  const auto g = uniform_grid(1024);
  const auto ind = SupportFunction::tabulate(g, [](double v) { return v <= 0.5 ? 1.0 : 0.0; });
  const auto dens = reverse_hardy_eval(g, ind, 2.0, ReverseHardyVariant::Density);
  CHECK(dens.holds);
  CHECK(dens.lhs - dens.rhs >= -10.0 / 1024);
  CHECK(dens.lhs == doctest::Approx(0.75).epsilon(10.0 / 1024));
  CHECK(dens.rhs >= 0.5);

  CHECK(code_of([&] {
          reverse_hardy_eval(u, SupportFunction::constant(9, 1.0), 2.0,
                             ReverseHardyVariant::Density);
        }) == ErrorCode::RequiresGrid);
  CHECK(code_of([&] {
          reverse_hardy_eval(bernoulli(0.5), SupportFunction({0.0, 1.0}), 2.0,
                             ReverseHardyVariant::General);
        }) == ErrorCode::NotMonotone);
  CHECK(code_of([&] {
          reverse_hardy_eval(bernoulli(0.5), SupportFunction({1.0, 0.0}), 2.5,
                             ReverseHardyVariant::Integer);
        }) == ErrorCode::BadExponent);
}

TEST_CASE("reverse Hardy integer variant against triple enumeration") {
  for (std::size_t k : {2u, 3u, 5u, 8u}) {
    const auto d = uniform_points(1, static_cast<double>(k), k);
    SupportFunction e1 = SupportFunction::constant(k, 0.0);
    e1[0] = 1.0;
    const auto r = reverse_hardy_eval(d, e1, 2.0, ReverseHardyVariant::Integer);
    // rhs = E[psi^2(max(X1,X2)) E(F^-2(Y) 1[Y >= max] | max)] over all triples.
    double rhs = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t y = 0; y < k; ++y) {
          const std::size_t m = std::max(a, b);
          if (y >= m) rhs += d.prob(a) * d.prob(b) * d.prob(y) * e1[m] / std::pow(oracle::F(d, y), 2);
        }
      }
    }
    CHECK(r.rhs == doctest::Approx(rhs).epsilon(1e-12));
    CHECK(r.holds);
    CHECK(r.ratio >= 1.0 - 1e-12);
  }
}

TEST_CASE("reverse Hardy general and integer hold on random monotone instances") {
  for (std::uint64_t s = 0; s < 500; ++s) {
    auto inst = random_instance(instance_seed(25, s));
    std::vector<double> v(inst.psi.values().begin(), inst.psi.values().end());
    std::sort(v.rbegin(), v.rend());
    const SupportFunction psi(v);
    CHECK(reverse_hardy_eval(inst.d, psi, inst.p, ReverseHardyVariant::General).holds);
    for (double p : {2.0, 3.0, 4.0}) {
      CHECK(reverse_hardy_eval(inst.d, psi, p, ReverseHardyVariant::Integer).holds);
    }
  }
}

TEST_CASE("reverse Copson") {
  const auto g = uniform_grid(1024);
  SupportFunction f(std::vector<double>(g.cdf_values().begin(), g.cdf_values().end()));
  for (double p : {1.0, 2.0, 3.5}) {
    const auto r = reverse_copson_eval(g, f, p, ReverseCopsonVariant::Nrc0);
    CHECK(std::abs(r.lhs - r.rhs) <= 10.0 / 1024 * std::max(1.0, r.rhs));
    CHECK(r.holds);
  }
  for (std::uint64_t s = 0; s < 100; ++s) {
    auto inst = random_instance(instance_seed(26, s));
    std::vector<double> v(inst.psi.values().begin(), inst.psi.values().end());
    std::sort(v.rbegin(), v.rend());
    const auto r = reverse_copson_eval(inst.d, SupportFunction(v), 1.0, ReverseCopsonVariant::Nrc2);
    CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-12));
  }
  const auto b = bernoulli(0.75);
  const SupportFunction bf({0.25, 1.0});
  CHECK(code_of([&] { reverse_copson_eval(b, bf, 2.0, ReverseCopsonVariant::Nrc0); }) ==
        ErrorCode::RequiresGrid);
  // On the raw Bernoulli law only the sharpened bound applies; it holds.
  CHECK(reverse_copson_eval(b, bf, 2.0, ReverseCopsonVariant::Sharpened).holds);
}

TEST_CASE("reverse Copson nrc1 and probes") {
  const auto g = uniform_grid(2048);
  for (double p : {1.0, 2.0, 3.0}) {
    const auto r = reverse_copson_eval(g, SupportFunction::constant(g.size(), 1.0), p,
                                       ReverseCopsonVariant::Nrc1);
    CHECK(r.holds);
    CHECK(r.lhs == doctest::Approx(std::tgamma(p + 1)).epsilon(0.05));
  }
  const auto lin = SupportFunction::tabulate(g, [](double v) { return 1.0 - v; });
  CHECK(reverse_copson_eval(g, lin, 2.0, ReverseCopsonVariant::Nrc1).holds);
  CHECK(code_of([&] { reverse_copson_eval(g, lin, 2.5, ReverseCopsonVariant::Nrc1); }) ==
        ErrorCode::BadExponent);
  const auto probe = reverse_copson_eval(g, lin, 2.5, ReverseCopsonVariant::Nrc1, true);
  CHECK_FALSE(probe.asserted);
  CHECK(probe.constant == doctest::Approx(std::tgamma(3.5)));
  CHECK(code_of([&] { reverse_copson_eval(g, SupportFunction::tabulate(g, [](double v) { return v; }),
                                          2.0, ReverseCopsonVariant::Nrc2); }) ==
        ErrorCode::NotMonotone);
}

TEST_CASE("reverse Copson nrc2 and sharpened bound on random discrete laws") {
  for (std::uint64_t s = 0; s < 500; ++s) {
    auto inst = random_instance(instance_seed(27, s));
    std::vector<double> v(inst.psi.values().begin(), inst.psi.values().end());
    std::sort(v.rbegin(), v.rend());
    for (double p : {1.0, 2.0, 3.0, 5.0}) {
      CHECK(reverse_copson_eval(inst.d, SupportFunction(v), p, ReverseCopsonVariant::Nrc2).holds);
    }
    // psi = F * (nonincreasing) keeps psi / F nonincreasing.
    std::vector<double> w(v.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = inst.d.cdf_at(i) * v[i];
    CHECK(reverse_copson_eval(inst.d, SupportFunction(w), inst.p, ReverseCopsonVariant::Sharpened)
              .holds);
  }
}

TEST_CASE("carleman_eval") {
  const auto c = carleman_eval(uniform_points(0, 1, 5), SupportFunction::constant(5, 3.0));
  CHECK(c.lhs == doctest::Approx(3.0).epsilon(1e-15));
  const auto b = carleman_eval(bernoulli(0.5), SupportFunction({1.0, 4.0}));
  CHECK(b.lhs == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(b.rhs == doctest::Approx(std::exp(1.0) * 2.5));
  CHECK(carleman_eval(degenerate(1.0), SupportFunction({0.25})).lhs == doctest::Approx(0.25));
  CHECK(code_of([] { carleman_eval(bernoulli(0.5), SupportFunction({0.0, 1.0})); }) ==
        ErrorCode::NonpositivePsi);
}

TEST_CASE("carleman tail rewrites on grids") {
  const auto g = uniform_grid(4096);
  const auto one = SupportFunction::constant(g.size(), 2.0);
  for (Side side : {Side::Left, Side::Right}) {
    const auto r = carleman_tail_eval(g, one, side);
    CHECK(r.lhs == doctest::Approx(r.rhs).epsilon(1e-12));
    CHECK(r.holds);
  }
  // psi = v on the left and 1 - v on the right: continuum sides 1/e and 1.
  const auto left = carleman_tail_eval(g, SupportFunction::tabulate(g, [](double v) { return v; }),
                                       Side::Left);
  CHECK(left.holds);
  CHECK(left.lhs == doctest::Approx(std::exp(-1.0)).epsilon(0.01));
  CHECK(left.rhs == doctest::Approx(1.0).epsilon(0.01));
  const auto right = carleman_tail_eval(
      g, SupportFunction::tabulate(g, [](double v) { return 1.0 - v; }), Side::Right);
  CHECK(right.holds);
  CHECK(right.lhs == doctest::Approx(std::exp(-1.0)).epsilon(0.01));

  // psi = v + 0.1 is not integrable against the right-tail hazard; both
  // continuum sides diverge and the grid values fail the comparison.
  const auto shifted = carleman_tail_eval(
      g, SupportFunction::tabulate(g, [](double v) { return v + 0.1; }), Side::Right);
  CHECK_FALSE(shifted.holds);

  CHECK(code_of([&] { carleman_tail_eval(bernoulli(0.5), SupportFunction({1.0, 1.0}), Side::Left); }) ==
        ErrorCode::RequiresGrid);
}

TEST_CASE("weighted Hardy") {
  const auto inst = random_weighted(instance_seed(28, 0));
  WeightedProblem zero = inst;
  zero.U = SupportFunction::constant(zero.dX.size(), 0.0);
  const auto z = weighted_hardy_eval(zero, SupportFunction::constant(zero.dY.size(), 1.0));
  CHECK(z.lhs == 0.0);
  CHECK(z.holds);

  // q = p with U = F^{-p}, V = 1 reproduces the Hardy left side.
  const auto g = uniform_grid(256);
  std::vector<double> u(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) u[i] = std::pow(g.cdf_at(i), -2.0);
  const WeightedProblem w{g, g, SupportFunction(u), SupportFunction::constant(g.size(), 1.0), 2.0, 2.0};
  const auto psi = SupportFunction::tabulate(g, [](double v) { return 1.0 / std::sqrt(v); });
  const auto r = weighted_hardy_eval(w, psi);
  CHECK(std::pow(r.lhs, 2.0) == doctest::Approx(hardy_eval(g, psi, 2.0).lhs).epsilon(1e-12));
  CHECK(r.holds);

  for (std::uint64_t s = 0; s < 300; ++s) {
    auto wp = random_weighted(instance_seed(29, s));
    wp.p = 2.0;
    wp.q = 3.0;
    std::mt19937_64 rng(s);
    CHECK(weighted_hardy_eval(wp, random_psi(rng, wp.dY.size())).holds);
  }
}

TEST_CASE("finite-sum lemmas") {
  const std::vector<double> one = {1.0};
  CHECK(lemma_broadbent_check(one, one, 2.0).lhs == 1.0);
  CHECK(lemma_broadbent_check(one, one, 2.0).rhs == 4.0);
  const std::vector<double> c = {2.0, 2.0, 2.0}, w = {0.5, 0.0, 1.5};
  CHECK(lemma_broadbent_check(c, w, 3.0).lhs == doctest::Approx(8.0 * 2.0));
  const std::vector<double> a1 = {1.7};
  CHECK(lemma_copson_check(a1, one, 2.5).lhs == doctest::Approx(std::pow(1.7, 2.5)));
  const std::vector<double> zeros = {0.0, 0.0};
  CHECK(lemma_copson_check(zeros, std::vector<double>{1.0, 1.0}, 2.0).lhs == 0.0);
  CHECK(code_of([&] { lemma_copson_check(c, std::vector<double>{0.0, 1.0, 1.0}, 2.0); }) ==
        ErrorCode::NonpositiveProb);

  const auto pt = lemma_muckenhoupt_check(degenerate(0.0), SupportFunction({2.0}), 0.4, Side::Left);
  CHECK(pt.lhs == doctest::Approx(0.4 * std::pow(2.0, 0.4)));
  CHECK(pt.rhs == doctest::Approx(std::pow(2.0, 0.4)));
  const auto z = lemma_muckenhoupt_check(bernoulli(0.5), SupportFunction({0.0, 0.0}), 0.5, Side::Right);
  CHECK(z.lhs == 0.0);
  CHECK(z.holds);

  std::mt19937_64 rng(30);
  for (int t = 0; t < 300; ++t) {
    const auto d = random_dist(rng);
    const auto a = random_psi(rng, 10);
    const auto ws = random_psi(rng, 10);
    for (double p : kSuiteExponents) {
      CHECK(lemma_broadbent_check(a.values(), ws.values(), p).holds);
      CHECK(lemma_copson_check(a.values(), ws.values(), p).holds);
    }
    const auto chi = random_psi(rng, d.size());
    CHECK(lemma_muckenhoupt_check(d, chi, 0.3, Side::Left).holds);
    CHECK(lemma_muckenhoupt_check(d, chi, 0.8, Side::Right).holds);
  }
}

TEST_CASE("universal validity on random instances") {
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const auto inst = random_instance(instance_seed(31, s));
    const auto& d = inst.d;
    const double p = inst.p;
    CHECK(hardy_eval(d, inst.psi, p).holds);
    CHECK(hardy_right_eval(d, inst.psi, p).holds);
    CHECK(hardy_two_sided_eval(d, inst.psi, p, inst.cut).holds);
    CHECK(copson_eval(d, inst.psi, p).holds);
    CHECK(carleman_eval(d, inst.psi).holds);
    // Conditional Hardy on {X <= c}.
    if (inst.cut >= d.atom(0)) {
      const auto cond = conditional_le(d, inst.cut);
      const SupportFunction psi_c(std::vector<double>(inst.psi.values().begin(),
                                                      inst.psi.values().begin() + cond.size()));
      CHECK(hardy_eval(cond, psi_c, p).holds);
    }
    // ratio compares against the constant-scaled right side.
    CHECK(hardy_eval(d, inst.psi, p).ratio <= 1.0 + 1e-10);
    CHECK(copson_eval(d, inst.psi, p).ratio <= 1.0 + 1e-10);
  }
}

TEST_CASE("scan evaluators match pair enumeration on small supports") {
  int checked = 0;
  for (std::uint64_t s = 0; s < 4000 && checked < 500; ++s) {
    const auto inst = random_instance(instance_seed(32, s), 4);
    const auto& d = inst.d;
    const auto& psi = inst.psi;
    const double p = inst.p;
    CHECK(hardy_eval(d, psi, p).lhs == doctest::Approx(oracle::hardy_lhs(d, psi, p)).epsilon(1e-12));
    CHECK(hardy_right_eval(d, psi, p).lhs ==
          doctest::Approx(oracle::hardy_right_lhs(d, psi, p)).epsilon(1e-12));
    CHECK(copson_eval(d, psi, p).lhs == doctest::Approx(oracle::copson_lhs(d, psi, p)).epsilon(1e-12));
    CHECK(carleman_eval(d, psi).lhs == doctest::Approx(oracle::carleman_lhs(d, psi)).epsilon(1e-12));
    CHECK(hardy_two_sided_eval(d, psi, p, inst.cut).lhs ==
          doctest::Approx(oracle::two_sided_lhs(d, psi, p, inst.cut)).epsilon(1e-12));
    ++checked;
  }
}

TEST_CASE("Bernoulli sharpened bounds") {
  std::mt19937_64 rng(33);
  for (int k = 1; k < 100; ++k) {
    const double q = k / 100.0;
    const auto d = bernoulli(q);
    for (int t = 0; t < 20; ++t) {
      const SupportFunction psi({3.0 * uniform01(rng), 3.0 * uniform01(rng)});
      for (double p : {1.1, 1.5, 2.0, 3.0, 5.0}) {
        const double m = oracle::moment(d, psi, p);
        CHECK(hardy_eval(d, psi, p).lhs <= (1 + q) * m * (1 + 1e-12));
        const double copson = copson_eval(d, psi, p).lhs;
        CHECK(copson <= std::pow(1 + q, p - 1) * m * (1 + 1e-12));
        CHECK(std::pow(1 + q, p - 1) <= std::pow(2.0, p - 1));
      }
    }
  }
}
