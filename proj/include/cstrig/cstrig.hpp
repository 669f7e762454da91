// Umbrella header.
#pragma once

#include "cstrig/bigint.hpp"
#include "cstrig/rational.hpp"
#include "cstrig/kappa.hpp"
#include "cstrig/weight.hpp"
#include "cstrig/root_system.hpp"
#include "cstrig/zpolynomial.hpp"
#include "cstrig/monomial.hpp"
#include "cstrig/session.hpp"
#include "cstrig/characters.hpp"
#include "cstrig/zbasis.hpp"
#include "cstrig/operator.hpp"
#include "cstrig/jacobi.hpp"
#include "cstrig/parse.hpp"
