#pragma once

#include "antiforce/antiforcing.hpp"
#include "antiforce/construction.hpp"
#include "antiforce/errors.hpp"
#include "antiforce/generators.hpp"
#include "antiforce/graph.hpp"
#include "antiforce/io.hpp"
#include "antiforce/isomorphism.hpp"
#include "antiforce/matching.hpp"
#include "antiforce/nice.hpp"
#include "antiforce/products.hpp"
#include "antiforce/report.hpp"
#include "antiforce/suite.hpp"
