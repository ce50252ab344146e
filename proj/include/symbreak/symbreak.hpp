#pragma once

#include "symbreak/bitset.hpp"
#include "symbreak/char_matrix.hpp"
#include "symbreak/determining.hpp"
#include "symbreak/distinguishing.hpp"
#include "symbreak/errors.hpp"
#include "symbreak/formulas.hpp"
#include "symbreak/graph.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/group.hpp"
#include "symbreak/manifest.hpp"
#include "symbreak/named_graphs.hpp"
#include "symbreak/permutation.hpp"
#include "symbreak/refinement.hpp"
#include "symbreak/symmetry.hpp"
