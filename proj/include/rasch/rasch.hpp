// SPDX-License-Identifier: Apache-2.0
//
// ras-channel: EM channel modelling for reconfigurable antenna systems,
// built on spherical vector wave expansions
// Copyright (C) 2026 the ras-channel developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RASCH_RASCH_HPP
#define RASCH_RASCH_HPP

#include "antenna.hpp"
#include "channel.hpp"
#include "cli.hpp"
#include "config.hpp"
#include "frame.hpp"
#include "geometry.hpp"
#include "math.hpp"
#include "modes.hpp"
#include "oracle.hpp"
#include "projection.hpp"
#include "rotation.hpp"
#include "specfun.hpp"
#include "svwf.hpp"

#endif
