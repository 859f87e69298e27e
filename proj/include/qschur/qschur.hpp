#pragma once

// Umbrella header: exact graded combinatorics of cyclotomic quiver Schur
// algebras for the linear quiver (e = 0) and the large cyclic quiver
// (e >= n): multipartition and tableau combinatorics, block decomposition,
// canonical bases via straightening, graded decomposition and Cartan
// matrices, tilting multiplicities and graded dimensions.

#include "qschur/combinatorics.hpp"
#include "qschur/errors.hpp"
#include "qschur/fock.hpp"
#include "qschur/io.hpp"
#include "qschur/laurent.hpp"
#include "qschur/oracle.hpp"
#include "qschur/roots.hpp"
