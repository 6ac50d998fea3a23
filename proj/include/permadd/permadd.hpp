// Copyright 2026 The permadd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "permadd/algebra.hpp"
#include "permadd/error.hpp"
#include "permadd/fq_vector.hpp"
#include "permadd/gf.hpp"
#include "permadd/group.hpp"
#include "permadd/ideal.hpp"
#include "permadd/lincode.hpp"
#include "permadd/linalg.hpp"
#include "permadd/multicast.hpp"
#include "permadd/network.hpp"
#include "permadd/spectral.hpp"
