/*
   Copyright 2026 The ffdyn authors

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

#include "ffdyn/circulant.hpp"
#include "ffdyn/dynamics.hpp"
#include "ffdyn/errors.hpp"
#include "ffdyn/factor.hpp"
#include "ffdyn/field.hpp"
#include "ffdyn/intfactor.hpp"
#include "ffdyn/poly.hpp"
#include "ffdyn/sequence.hpp"
#include "ffdyn/textio.hpp"
#include "ffdyn/verify.hpp"
