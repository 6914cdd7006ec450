#pragma once

#include "tropjac/ceresa.hpp"
#include "tropjac/zonotope.hpp"

#include <string>

namespace tropjac {

/// JSON documents for the command line tool. All numbers are exact rational
/// strings; key order is fixed so reruns are byte-identical.

/// Genus, genus-3 type, Q, period generators and the dicing check. Genus 0
/// curves get no Jacobian section.
std::string analyze_json(const MetricGraph& g);

std::string ceresa_json(const CeresaReport& r);

/// {"k": 1, "cells": [{"verts": [[...], ...], "framing": [...]}, ...]}
std::string chain_json(const FramedChain& c);

}  // namespace tropjac
