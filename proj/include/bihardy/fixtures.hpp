#ifndef BIHARDY_FIXTURES_HPP
#define BIHARDY_FIXTURES_HPP

#include <string>
#include <vector>

#include "bihardy/subspace.hpp"

namespace bihardy {

/// A named built-in analysis input.
struct DemoFixture {
  std::string name;
  DegreeWindow window;
  GeneratorSet gens;
};

/// Taylor coefficients of the disc automorphism (z - a) / (1 - a z),
/// truncated at `degree`: -a, then (1 - a^2) a^{k-1} for k >= 1.
std::vector<double> blaschke_coefficients(double a, int degree);

std::vector<std::string> demo_names();

/// Built-in fixtures:
///   full_space  gens {1}          window (8,8,2)
///   monomial    gens {z1 z2}      window (8,8,2)
///   blaschke    degree-20 truncation of (z1 - 0.5)/(1 - 0.5 z1), window (24,2,1)
///   nonbeurling gens {z1, z2}     window (6,6,1)
/// Throws InvalidInput for unknown names.
DemoFixture demo_fixture(const std::string& name);

}  // namespace bihardy

#endif  // BIHARDY_FIXTURES_HPP
