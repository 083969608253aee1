#pragma once

#include "arith.hpp"
#include "bigint.hpp"
#include "checker.hpp"
#include "cohom.hpp"
#include "curves.hpp"
#include "errors.hpp"
#include "frobmat.hpp"
#include "galois.hpp"
#include "hecke.hpp"
#include "linalg.hpp"
#include "pgl.hpp"
#include "rational.hpp"
#include "reptheory.hpp"
