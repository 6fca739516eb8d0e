#pragma once

#include "arith.hpp"
#include "fixtures.hpp"
#include "formulas.hpp"
#include "quad_forms.hpp"
#include "rank.hpp"
#include "residue_symbols.hpp"
#include "unit_index.hpp"
