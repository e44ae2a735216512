#pragma once

#include "qfe/basis.hpp"
#include "qfe/carlitz.hpp"
#include "qfe/families.hpp"
#include "qfe/poly_expr.hpp"
#include "qfe/render.hpp"
#include "qfe/serialize.hpp"
#include "qfe/umbral.hpp"
#include "qfe/verify.hpp"
