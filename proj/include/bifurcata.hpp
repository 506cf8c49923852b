/*
   Copyright 2026 The bifurcata Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "bifurcata/algebraic.hpp"
#include "bifurcata/bifurcation.hpp"
#include "bifurcata/bipoly.hpp"
#include "bifurcata/curve_topology.hpp"
#include "bifurcata/disk_box.hpp"
#include "bifurcata/errors.hpp"
#include "bifurcata/infinity_scan.hpp"
#include "bifurcata/minpoly.hpp"
#include "bifurcata/parser.hpp"
#include "bifurcata/poly.hpp"
#include "bifurcata/puiseux.hpp"
#include "bifurcata/rational.hpp"
#include "bifurcata/real_root.hpp"
#include "bifurcata/report.hpp"
#include "bifurcata/system.hpp"
#include "bifurcata/tower.hpp"
