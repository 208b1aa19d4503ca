/*
 * (C) Copyright 2026 The sphquad Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>

#include "sphquad/nets.hpp"

namespace sphquad::nets::detail {

// Visits every valid, normalized (not canonicalized) net with the given parts.
void for_each_exact_net(const IntegerParts& p, const std::function<void(const NetDescriptor&)>& fn);

}  // namespace sphquad::nets::detail
