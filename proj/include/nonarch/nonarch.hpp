#pragma once

#include "nonarch/errors.hpp"
#include "nonarch/eval.hpp"
#include "nonarch/filter_lab.hpp"
#include "nonarch/germ.hpp"
#include "nonarch/magnitude.hpp"
#include "nonarch/parser.hpp"
#include "nonarch/polynomial.hpp"
#include "nonarch/rational.hpp"
#include "nonarch/worlds.hpp"
