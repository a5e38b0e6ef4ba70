#pragma once

#include <prsyn/synth/named.hpp>
#include <prsyn/synth/quartet.hpp>
#include <prsyn/synth/resultant.hpp>
#include <prsyn/synth/seven_element.hpp>
#include <prsyn/synth/step.hpp>
#include <prsyn/synth/structure.hpp>
