#pragma once

#include "superch/char_function.hpp"
#include "superch/errors.hpp"
#include "superch/exterior_algebra.hpp"
#include "superch/identity_engine.hpp"
#include "superch/io_json.hpp"
#include "superch/matrix.hpp"
#include "superch/rational.hpp"
#include "superch/render.hpp"
#include "superch/series.hpp"
#include "superch/spoly.hpp"
#include "superch/spoly_parse.hpp"
#include "superch/supermatrix.hpp"
#include "superch/unipoly.hpp"
#include "superch/verifier.hpp"
