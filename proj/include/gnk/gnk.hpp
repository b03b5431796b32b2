#ifndef GNK_GNK_HPP_
#define GNK_GNK_HPP_

#include "gnk/errors.hpp"
#include "gnk/words.hpp"
#include "gnk/presentation.hpp"
#include "gnk/pure_braid.hpp"
#include "gnk/parity.hpp"
#include "gnk/unknotting.hpp"
#include "gnk/rational.hpp"
#include "gnk/polynomial.hpp"
#include "gnk/geometry.hpp"
#include "gnk/trajectory.hpp"
#include "gnk/simulate.hpp"
#include "gnk/parse.hpp"
#include "gnk/certificate.hpp"
#include "gnk/trajectory_io.hpp"
#include "gnk/suites.hpp"

#endif  // GNK_GNK_HPP_
