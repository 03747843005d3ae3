/*
   Copyright 2026 The jumploci Authors

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

// Umbrella header.
#ifndef JUMPLOCI_JUMPLOCI_HPP
#define JUMPLOCI_JUMPLOCI_HPP

#include "admiss.hpp"
#include "charvar.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "fox.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "poly_linalg.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "roots.hpp"
#include "unipoly.hpp"

#endif
