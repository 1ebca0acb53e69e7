// Copyright 2026 The mecprice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MECPRICE_MECPRICE_HPP
#define MECPRICE_MECPRICE_HPP

#include "mecprice/bench.hpp"
#include "mecprice/checks.hpp"
#include "mecprice/config.hpp"
#include "mecprice/differentiated_pricing.hpp"
#include "mecprice/follower.hpp"
#include "mecprice/kinetics.hpp"
#include "mecprice/knapsack.hpp"
#include "mecprice/protocol.hpp"
#include "mecprice/scenario.hpp"
#include "mecprice/uniform_pricing.hpp"

#endif  // MECPRICE_MECPRICE_HPP
