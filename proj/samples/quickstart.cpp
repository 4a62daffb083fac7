// Solve a few spectral radii and compare them to their closed forms.
#include <cstdio>

#include "hyperabc/hyperabc.hpp"

int main() {
  using namespace hyperabc;
  const auto star = hyperstar(5, 3);
  const auto est = spectral_radius(star, Weighting::abc);
  std::printf("S_{5,3}  abc rho %.12f  closed form %.12f  iters %ld\n", est.rho, rho_abc_hyperstar(5, 3), est.iters);

  const auto path = hyperpath(6, 3);
  std::printf("P_{6,3}  abc rho %.12f  closed form %.12f\n", spectral_radius(path, Weighting::abc).rho,
              rho_abc_hyperpath(6, 3));
  std::printf("P_{6,3}  randic rho %.12f\n", spectral_radius(path, Weighting::randic).rho);

  const auto report = classify(hypercycle(3, 3));
  std::printf("C_{3,3}  kind %s  girth %d\n", to_string(report.kind), report.girth.value_or(-1));
  for (const auto& c : run_worked_examples()) std::printf("%-24s %s\n", c.name.c_str(), to_string(c.status));
  return 0;
}
