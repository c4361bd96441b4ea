#pragma once

#include "catkit/bijection.hpp"
#include "catkit/dyckpath.hpp"
#include "catkit/error.hpp"
#include "catkit/exactnum.hpp"
#include "catkit/families.hpp"
#include "catkit/natural.hpp"
#include "catkit/oeis.hpp"
#include "catkit/seq_io.hpp"
#include "catkit/transform.hpp"
#include "catkit/verify.hpp"
