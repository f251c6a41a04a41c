#pragma once

#include "shockcop/extended_real.hpp"
#include "shockcop/distfn.hpp"
#include "shockcop/genfn.hpp"
#include "shockcop/model.hpp"
#include "shockcop/copulas.hpp"
#include "shockcop/imprecise.hpp"
#include "shockcop/verify.hpp"
#include "shockcop/io.hpp"
#include "shockcop/instances.hpp"
#include "shockcop/worked_example.hpp"
#include "shockcop/suites.hpp"
#include "shockcop/surface.hpp"
