#include "sagbi/format.hpp"

namespace sagbi {

std::string formatMonomial(const PolyRing& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variableName(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string formatPolynomial(const Polynomial& f) {
  if (f.isZero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    Rational c = t.coefficient;
    if (c.sign() < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    if (t.monomial.isOne()) {
      out += c.toString();
    } else if (c.isOne()) {
      out += formatMonomial(*f.ring(), t.monomial);
    } else {
      out += c.toString() + '*' + formatMonomial(*f.ring(), t.monomial);
    }
  }
  return out;
}

}  // namespace sagbi
