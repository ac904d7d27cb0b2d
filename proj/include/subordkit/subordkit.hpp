#pragma once

#include "subordkit/bits.hpp"
#include "subordkit/boolcore.hpp"
#include "subordkit/space.hpp"
#include "subordkit/subord.hpp"
#include "subordkit/frames.hpp"
#include "subordkit/functors.hpp"
#include "subordkit/morphclass.hpp"
#include "subordkit/duality.hpp"
#include "subordkit/dsl.hpp"
#include "subordkit/harness.hpp"
