// Twists one band of lambda(0,0,3) and shows that the Seifert form stays in
// the same congruence class while the Jones polynomial moves.

#include "knotlab/knotlab.hpp"

#include <iostream>

int main() {
    using namespace knotlab;
    const LambdaSpec base{0, 0, 3};
    const SeifertMatrix form = lambda_seifert(base);
    std::cout << base.to_string() << "  M = " << form.to_string() << "  V = " << jones_t(lambda_diagram(base)) << "\n";

    for (std::int64_t ell : {-3, -2, 3}) {
        const LambdaSpec twisted = lambda_twist(base, ell, Band::first);
        const SEquivReport r = first_sequiv_certificate(form, {ell, Band::first});
        std::cout << twisted.to_string() << "  M = " << r.twisted.to_string() << "  ";
        if (r.certificate) {
            std::cout << "T = " << r.certificate->to_string();
        } else {
            std::cout << "no certificate (" << r.reason << ")";
        }
        std::cout << "  V = " << jones_t(lambda_diagram(twisted)) << "\n";
    }
}
