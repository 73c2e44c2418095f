// Copyright 2026 The artin3free Authors
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


#ifndef ARTIN_ARTIN_HPP_
#define ARTIN_ARTIN_HPP_

#include "dihedral.hpp"
#include "errors.hpp"
#include "letter.hpp"
#include "oracle.hpp"
#include "p2g.hpp"
#include "presentation.hpp"
#include "reducer.hpp"
#include "rrs.hpp"
#include "word.hpp"

#endif  // ARTIN_ARTIN_HPP_
