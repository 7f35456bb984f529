#pragma once

#include "glnrep/rational.hpp"
#include "glnrep/partition.hpp"
#include "glnrep/exponents.hpp"
#include "glnrep/multisegment.hpp"
#include "glnrep/arthur.hpp"
#include "glnrep/decay.hpp"
#include "glnrep/bounds.hpp"
#include "glnrep/parallel.hpp"
#include "glnrep/verify.hpp"
#include "glnrep/json_io.hpp"
