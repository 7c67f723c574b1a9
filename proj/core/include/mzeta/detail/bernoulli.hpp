#pragma once

#include <array>

namespace mzeta::detail {

// B_{2j} for j = 0..16 as exact rationals evaluated once in double.
// Sixteen correction terms plus one extra for the first-omitted-term bound.
inline constexpr std::array<double, 17> kEvenBernoulli = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
};

namespace impl {
constexpr std::array<double, 17> make_bernoulli_over_factorial() {
  std::array<double, 17> r{};
  double fact = 1.0;  // (2j)!
  for (int j = 0; j <= 16; ++j) {
    if (j > 0) fact *= (2.0 * j - 1.0) * (2.0 * j);
    r[static_cast<std::size_t>(j)] = kEvenBernoulli[static_cast<std::size_t>(j)] / fact;
  }
  return r;
}
}  // namespace impl

// B_{2j} / (2j)!
inline constexpr std::array<double, 17> kBernoulliOverFactorial =
    impl::make_bernoulli_over_factorial();

}  // namespace mzeta::detail
