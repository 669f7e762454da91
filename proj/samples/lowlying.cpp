// Minimal library walkthrough: build the E7 session, print a few low-lying
// eigenpolynomials and one product decomposition.
//
//   cmake --build build --target sample_lowlying && ./build/samples/sample_lowlying
#include <iostream>

#include "cstrig/cstrig.hpp"

int main() {
    using namespace cstrig;
    Session s(AlgebraId::parse("E7"));

    Weight adjoint{1, 0, 0, 0, 0, 0, 0};
    Weight smallest{0, 0, 0, 0, 0, 0, 1};

    std::cout << "P[" << adjoint.compact_string() << "] = "
              << s.jacobi(adjoint).zform.to_string() << "\n";
    std::cout << "P[" << smallest.compact_string() << "] = "
              << s.jacobi(smallest).zform.to_string() << "\n\n";

    std::cout << "at coupling 1 the family degenerates to characters:\n";
    std::cout << "P[1000000](k=1) = " << specialize(s.jacobi(adjoint), BigRational(1)).to_string()
              << "\n\n";

    GeneralizedCGSeries series = s.generalized_cg(smallest, smallest);
    std::cout << "P[0000001] * P[0000001] =\n";
    for (const auto& [w, c] : series.terms)
        std::cout << "  " << c.to_string() << "  *  P[" << w.compact_string() << "]\n";
    return 0;
}
