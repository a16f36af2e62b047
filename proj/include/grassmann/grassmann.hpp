#pragma once

#include "grassmann/coefficient.hpp"
#include "grassmann/dimensions.hpp"
#include "grassmann/element.hpp"
#include "grassmann/endomorphism.hpp"
#include "grassmann/error.hpp"
#include "grassmann/generators.hpp"
#include "grassmann/groups.hpp"
#include "grassmann/identities.hpp"
#include "grassmann/linsolve.hpp"
#include "grassmann/matrix.hpp"
#include "grassmann/random.hpp"
#include "grassmann/skew.hpp"
#include "grassmann/verify.hpp"
