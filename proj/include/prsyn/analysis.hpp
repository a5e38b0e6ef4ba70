#pragma once

#include <prsyn/analysis/impedance.hpp>
#include <prsyn/analysis/phasor.hpp>
#include <prsyn/analysis/blocked.hpp>
#include <prsyn/analysis/state_space.hpp>
#include <prsyn/analysis/pbh.hpp>
#include <prsyn/analysis/json.hpp>
