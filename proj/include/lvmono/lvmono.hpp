#pragma once

// Umbrella header: exact monodromy representation of x^p y^p (1 - x - y),
// its symplectic reduction, the Lie algebra of the Zariski closure, and
// the derived minimal differential-equation degree.

#include "lvmono/cartan.hpp"
#include "lvmono/homology.hpp"
#include "lvmono/lie.hpp"
#include "lvmono/linalg.hpp"
#include "lvmono/matrix.hpp"
#include "lvmono/polynomial.hpp"
#include "lvmono/rational.hpp"
#include "lvmono/rep.hpp"
#include "lvmono/serialize.hpp"
#include "lvmono/verify.hpp"
#include "lvmono/version.hpp"
