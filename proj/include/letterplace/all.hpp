#pragma once

#include "letterplace/error.hpp"
#include "letterplace/poset.hpp"
#include "letterplace/homset.hpp"
#include "letterplace/monomial.hpp"
#include "letterplace/letterplace.hpp"
#include "letterplace/quotient.hpp"
#include "letterplace/pstable.hpp"
#include "letterplace/stronglystable.hpp"
#include "letterplace/polynomial.hpp"
#include "letterplace/groebner.hpp"
#include "letterplace/determinantal.hpp"
