#pragma once

#include <prsyn/network/netlist.hpp>
#include <prsyn/network/graph.hpp>
#include <prsyn/network/transform.hpp>
#include <prsyn/network/mechanical.hpp>
#include <prsyn/network/json.hpp>
