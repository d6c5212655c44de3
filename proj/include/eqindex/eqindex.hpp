#pragma once

#include "eqindex/error.hpp"
#include "eqindex/rat.hpp"
#include "eqindex/half_laurent.hpp"
#include "eqindex/rational_char.hpp"
#include "eqindex/model.hpp"
#include "eqindex/localization.hpp"
#include "eqindex/reduction.hpp"
#include "eqindex/cutting.hpp"
#include "eqindex/io.hpp"
#include "eqindex/fixtures.hpp"
