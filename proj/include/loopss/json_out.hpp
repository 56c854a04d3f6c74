#pragma once

#include <string>
#include <vector>

#include "loopss/model.hpp"
#include "loopss/page.hpp"

namespace loopss {

/// Deterministic JSON for one page:
///   { "r": int, "window": {"d": int, "t_max": int},
///     "cells": [{"s","t","rank","torsion","basis"}...],
///     "differentials": [{"from":[s,t],"to":[s,t],"matrix":[[int]]}...] }
/// Cells are sorted by (s desc, t asc) and restricted to the reliable rows;
/// differentials are those of `spec` (pass nullptr for none). Key order is
/// fixed and output is byte-identical across runs.
std::string emit_json(const Page& page, const DifferentialSpec* spec);

/// One page -> single object; several pages -> array ordered by r.
std::string emit_json_pages(const std::vector<const Page*>& pages, const ManifoldModel& model);

/// Closed-form output for the circle model.
std::string circle_json();

}  // namespace loopss
