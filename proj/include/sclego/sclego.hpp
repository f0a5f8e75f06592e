// Copyright 2026 The sclego Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCLEGO_SCLEGO_HPP
#define SCLEGO_SCLEGO_HPP

#include "sclego/collateral.hpp"
#include "sclego/config.hpp"
#include "sclego/core.hpp"
#include "sclego/dates.hpp"
#include "sclego/downstream.hpp"
#include "sclego/errors.hpp"
#include "sclego/format.hpp"
#include "sclego/io.hpp"
#include "sclego/pegsim.hpp"
#include "sclego/report.hpp"
#include "sclego/render.hpp"
#include "sclego/rng.hpp"
#include "sclego/upstream.hpp"

#endif  // SCLEGO_SCLEGO_HPP
