#pragma once

#include "psc/errors.hpp"
#include "psc/permutation.hpp"
#include "psc/perm_group.hpp"
#include "psc/subgroups.hpp"
#include "psc/posets.hpp"
#include "psc/complex.hpp"
#include "psc/smith.hpp"
#include "psc/presentation.hpp"
#include "psc/topology.hpp"
#include "psc/group_spec.hpp"
#include "psc/pipeline.hpp"
#include "psc/io.hpp"
#include "psc/verify.hpp"
