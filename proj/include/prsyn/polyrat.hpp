#pragma once

#include <prsyn/polyrat/rational.hpp>
#include <prsyn/polyrat/polynomial.hpp>
#include <prsyn/polyrat/sturm.hpp>
#include <prsyn/polyrat/matrix.hpp>
#include <prsyn/polyrat/ratfunc.hpp>
#include <prsyn/polyrat/positive_real.hpp>
#include <prsyn/polyrat/biquad.hpp>
#include <prsyn/polyrat/sylvester.hpp>
