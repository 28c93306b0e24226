#include "bihardy/fixtures.hpp"

namespace bihardy {

std::vector<double> blaschke_coefficients(double a, int degree) {
  std::vector<double> coeffs(degree + 1);
  coeffs[0] = -a;
  double power = 1.0;  // a^{k-1}
  for (int k = 1; k <= degree; ++k) {
    coeffs[k] = (1.0 - a * a) * power;
    power *= a;
  }
  return coeffs;
}

std::vector<std::string> demo_names() {
  return {"full_space", "monomial", "blaschke", "nonbeurling"};
}

DemoFixture demo_fixture(const std::string& name) {
  if (name == "full_space") {
    DegreeWindow w(8, 8, 2);
    return DemoFixture{name, w, GeneratorSet({HardyElement::monomial(w, 0, 0)})};
  }
  if (name == "monomial") {
    DegreeWindow w(8, 8, 2);
    return DemoFixture{name, w, GeneratorSet({HardyElement::monomial(w, 1, 1)})};
  }
  if (name == "blaschke") {
    DegreeWindow w(24, 2, 1);
    HardyElement g(w);
    const std::vector<double> coeffs = blaschke_coefficients(0.5, 20);
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) {
      g.set_coeff(k, 0, Complex(coeffs[k], 0.0));
    }
    return DemoFixture{name, w, GeneratorSet({g})};
  }
  if (name == "nonbeurling") {
    DegreeWindow w(6, 6, 1);
    return DemoFixture{name, w,
                       GeneratorSet({HardyElement::monomial(w, 1, 0),
                                     HardyElement::monomial(w, 0, 1)})};
  }
  throw InvalidInput("unknown demo fixture: " + name);
}

}  // namespace bihardy
