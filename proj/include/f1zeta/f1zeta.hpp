#pragma once

#include "f1zeta/errors.hpp"
#include "f1zeta/rational.hpp"
#include "f1zeta/arith.hpp"
#include "f1zeta/scheme.hpp"
#include "f1zeta/weil_local.hpp"
#include "f1zeta/powerlog.hpp"
#include "f1zeta/zeta_calculus.hpp"
#include "f1zeta/f1_zeta.hpp"
#include "f1zeta/reductive.hpp"
#include "f1zeta/regularize.hpp"
#include "f1zeta/io.hpp"
