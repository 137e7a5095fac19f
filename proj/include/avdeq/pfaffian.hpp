#pragma once

#include "avdeq/matrix.hpp"

namespace avdeq {

// Pfaffian of a skew-symmetric matrix of even dimension, Pf(m)^2 = det(m).
// Throws NotSkew / OddDimension.
Rat pfaffian(const RatMat& m);
Rat pfaffian(const IntMat& m);

}  // namespace avdeq
