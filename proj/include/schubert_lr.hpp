#pragma once

#include "schubert_lr/integer.hpp"
#include "schubert_lr/partition.hpp"
#include "schubert_lr/permutation.hpp"
#include "schubert_lr/staircase.hpp"
#include "schubert_lr/skew_tableau.hpp"
#include "schubert_lr/problem.hpp"
#include "schubert_lr/filtered_tableau.hpp"
#include "schubert_lr/polynomial.hpp"
#include "schubert_lr/schubert_polynomial.hpp"
#include "schubert_lr/oracle.hpp"
#include "schubert_lr/problem_io.hpp"
#include "schubert_lr/cli.hpp"
