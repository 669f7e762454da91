// Prints the full second-order operator for a chosen algebra, the way the
// library synthesizes it: a_jk from the symmetrized second-order action,
// b_j split by coupling degree.
#include <iostream>

#include "cstrig/cstrig.hpp"

int main(int argc, char** argv) {
    using namespace cstrig;
    const char* name = argc > 1 ? argv[1] : "A2";
    Session s(AlgebraId::parse(name));
    const CSOperator& op = s.cs_operator();
    for (int j = 0; j < op.rank; ++j)
        for (int k = j; k < op.rank; ++k)
            std::cout << "a[" << j + 1 << "][" << k + 1 << "] = " << op.a_at(j, k).to_string()
                      << "\n";
    for (int j = 0; j < op.rank; ++j)
        std::cout << "b[" << j + 1 << "] = (" << op.b0[static_cast<std::size_t>(j)].to_string()
                  << ") + k (" << op.b1[static_cast<std::size_t>(j)].to_string() << ")\n";
    return 0;
}
