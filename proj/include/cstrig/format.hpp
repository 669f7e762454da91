#pragma once

namespace cstrig {

// Rendering style for polynomials and rational functions.
//  plain       : juxtaposed products, e.g. "2 z1 z6"
//  mathematica : explicit operators,  e.g. "2*z1*z6"
enum class Style { plain, mathematica };

}  // namespace cstrig
