#pragma once

// Compact co-occurrence counting index: for a string S and query set Q,
// answers how many length-w windows of S contain every member of Q, in
// space proportional to the non-zero entries of the difference encoding
// of the left-minimal co-occurrence counts.

#include "cooc/bench.hpp"
#include "cooc/delta.hpp"
#include "cooc/errors.hpp"
#include "cooc/gadgets.hpp"
#include "cooc/hashing.hpp"
#include "cooc/index.hpp"
#include "cooc/oracle.hpp"
#include "cooc/predecessor.hpp"
#include "cooc/query_profile.hpp"
#include "cooc/scanner.hpp"
#include "cooc/tokens.hpp"
