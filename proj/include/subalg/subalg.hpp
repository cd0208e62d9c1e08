#pragma once

#include "subalg/algmem.hpp"
#include "subalg/bounds.hpp"
#include "subalg/context.hpp"
#include "subalg/counter.hpp"
#include "subalg/csg.hpp"
#include "subalg/field.hpp"
#include "subalg/groebner.hpp"
#include "subalg/instance_io.hpp"
#include "subalg/lba.hpp"
#include "subalg/monalg.hpp"
#include "subalg/monomial.hpp"
#include "subalg/order.hpp"
#include "subalg/parse.hpp"
#include "subalg/polynomial.hpp"
#include "subalg/reductions.hpp"
#include "subalg/sagbi.hpp"
