/*
   Copyright 2026 The qcatalan Authors

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

#ifndef QCATALAN_QCATALAN_HPP
#define QCATALAN_QCATALAN_HPP

// Umbrella header.

#include "qcatalan/ring.hpp"
#include "qcatalan/cyclotomic.hpp"
#include "qcatalan/qcomb.hpp"
#include "qcatalan/report.hpp"
#include "qcatalan/congruence.hpp"
#include "qcatalan/rootid.hpp"
#include "qcatalan/charsum.hpp"
#include "qcatalan/qdsl.hpp"
#include "qcatalan/harness.hpp"

#endif  // QCATALAN_QCATALAN_HPP
