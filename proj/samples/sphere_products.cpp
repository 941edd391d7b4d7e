// Small tour of the library: products of shifted spheres at d = 3 and the
// inverse problem of writing an isoclass in the generators.

#include <iostream>

#include "spherahall/spherahall.hpp"

using namespace spherahall;

int main() {
  const long q = 2;
  const SphereDim d3{3};
  ObjClass s = simple(d3, 0), s1 = simple(d3, -1);

  HallElement a = HallElement::basis(s, q), b = HallElement::basis(s1, q);
  std::cout << "[S][S]        = " << (a * a).str() << "\n";
  std::cout << "[S][S[-1]]    = " << (a * b).str() << "\n";
  std::cout << "[S[-1]][S]    = " << (b * a).str() << "\n";

  std::cout << "F(S, S; S+S)  = " << hall_number(s, s, parse_object("2*S", d3), q).str() << "\n";

  ObjClass m = parse_object("M2[0] + S[1]", d3);
  NCPolynomial p = express_in_spheres(m, q);
  std::cout << "[" << m.str() << "] = " << format_at_q(p, q) << "\n";
  std::cout << "round trip ok: " << std::boolalpha << (phi_eval(p, d3, q) == HallElement::basis(m, q)) << "\n";

  RelationReport rep = verify_relations(d3, 0, 0, q);
  std::cout << "d = 3 relations at index 0: " << (rep.all_passed() ? "all vanish" : "failures") << "\n";
}
