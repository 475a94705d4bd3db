// Two connected sums with congruent Seifert forms and different Jones
// polynomials.

#include "knotlab/knotlab.hpp"

#include <iostream>

int main() {
    using namespace knotlab;
    const SeifertMatrix m = lambda_seifert({0, 0, 3});
    const SeifertMatrix k1 = connect_sum_form(m, m);
    const SeifertMatrix k2 = connect_sum_form(lambda_seifert({-6, 0, 3}), m);

    const SEquivReport one = first_sequiv_certificate(m, {-3, Band::first});
    const CongruenceCertificate t = connect_sum_certificate(*one.certificate, 2);
    std::cout << "T = " << t.to_string() << "  verifies: " << std::boolalpha << verify_certificate(k1, k2, t) << "\n";

    const PlanarDiagram base = lambda_diagram({0, 0, 3});
    const LaurentPoly v1 = jones_t(connect_sum_diagram(base, 1, base, 1));
    const LaurentPoly v2 = jones_t(connect_sum_diagram(lambda_diagram({-6, 0, 3}), 1, base, 1));
    std::cout << "V(K1) = " << v1 << "\nV(K2) = " << v2 << "\nequal: " << (v1 == v2) << "\n";
}
