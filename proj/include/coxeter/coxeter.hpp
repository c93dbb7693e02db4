#pragma once

#include "coxeter/conjugacy.hpp"
#include "coxeter/errors.hpp"
#include "coxeter/excess.hpp"
#include "coxeter/group.hpp"
#include "coxeter/involution.hpp"
#include "coxeter/matrix.hpp"
#include "coxeter/parabolic.hpp"
#include "coxeter/type_a.hpp"
#include "coxeter/verify.hpp"
#include "coxeter/witness.hpp"
