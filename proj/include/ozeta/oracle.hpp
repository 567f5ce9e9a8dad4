#pragma once

#include "ozeta/oracle/builders.hpp"
#include "ozeta/oracle/census.hpp"
#include "ozeta/oracle/finite_algebra.hpp"
#include "ozeta/oracle/p2.hpp"
#include "ozeta/oracle/segal_oracle.hpp"
#include "ozeta/oracle/slice_check.hpp"
#include "ozeta/oracle/sublattices.hpp"
#include "ozeta/oracle/tower.hpp"
