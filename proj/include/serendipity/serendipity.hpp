/*
   Copyright 2026 The serendipity-fe Authors

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

#ifndef SERENDIPITY_SERENDIPITY_HPP
#define SERENDIPITY_SERENDIPITY_HPP

#include "assembly.hpp"
#include "bubble.hpp"
#include "cube.hpp"
#include "decomp.hpp"
#include "dofs.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "sampling.hpp"
#include "spaces.hpp"

#endif // SERENDIPITY_SERENDIPITY_HPP
