// Copyright 2026 The RSL Workbench Authors
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

#ifndef RSL_RSL_HPP_
#define RSL_RSL_HPP_

#include "rsl/canonical.hpp"
#include "rsl/catalog.hpp"
#include "rsl/certify.hpp"
#include "rsl/construct.hpp"
#include "rsl/density.hpp"
#include "rsl/embedding.hpp"
#include "rsl/enumerate.hpp"
#include "rsl/graph.hpp"
#include "rsl/graph6.hpp"
#include "rsl/minsearch.hpp"
#include "rsl/ramsey.hpp"
#include "rsl/store.hpp"

#endif  // RSL_RSL_HPP_
