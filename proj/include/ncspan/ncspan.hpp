#pragma once

#include "ncspan/errors.hpp"
#include "ncspan/rational.hpp"
#include "ncspan/polynomial.hpp"
#include "ncspan/linearize.hpp"
#include "ncspan/matrix.hpp"
#include "ncspan/span_basis.hpp"
#include "ncspan/linalg.hpp"
#include "ncspan/span_analysis.hpp"
#include "ncspan/suite.hpp"
#include "ncspan/text.hpp"
