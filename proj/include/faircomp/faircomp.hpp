// Copyright 2026 The faircomp Authors
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


#ifndef FAIRCOMP_FAIRCOMP_HPP
#define FAIRCOMP_FAIRCOMP_HPP

#include "faircomp/rational.hpp"
#include "faircomp/problem.hpp"
#include "faircomp/assignment.hpp"
#include "faircomp/coalition.hpp"
#include "faircomp/rules.hpp"
#include "faircomp/generate.hpp"
#include "faircomp/axioms.hpp"
#include "faircomp/fixtures.hpp"
#include "faircomp/falsify.hpp"
#include "faircomp/json_io.hpp"
#include "faircomp/table.hpp"
#include "faircomp/report.hpp"

#endif  // FAIRCOMP_FAIRCOMP_HPP
