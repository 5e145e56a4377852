#pragma once

#include <map>
#include <set>
#include <vector>

#include "hodge/rep_weights.hpp"
#include "hodge/root_system.hpp"

namespace hodge {

/// Characteristic vector (weighted Dynkin diagram) of a complex nilpotent
/// orbit: (sigma_1(Y), ..., sigma_r(Y)) for the dominant neutral element;
/// entries lie in {0,1,2}.
using CharVector = std::vector<int>;

/// Characteristic vector of the sl_n orbit indexed by a partition of n:
/// merge the sets {d_i-1, d_i-3, ..., 1-d_i}, sort non-increasing, take
/// consecutive differences.
CharVector partition_char_vector(const std::vector<int>& parts);

/// All characteristic vectors, enumerated Bala-Carter style: for every
/// standard Levi subsystem and every even subset grading of its base that is
/// distinguished in the Levi, record the dominant representative.
std::set<CharVector> enumerate_char_vectors(const RootSystem& rs);

/// Index sets {i : sigma_i != 0} of the nonzero characteristic vectors;
/// these are the conjugacy classes of Jacobson-Morosov parabolics.
std::set<std::set<int>> jm_parabolic_classes(const RootSystem& rs);

/// True iff the vector with 2 on I and 0 elsewhere is a characteristic
/// vector, i.e. the parabolic indexed by I (1-based) is even Jacobson-Morosov.
bool is_even_jm(const RootSystem& rs, const std::set<int>& index_set);

/// Cumulative dimensions of the Y-eigenspace filtration of a weight system:
/// level l -> dim W_l = sum of multiplicities with mu(Y) <= l.
std::map<long long, long long> jm_filtration_dims(const RootSystem& rs, const WeightSystem& ws,
                                                  const GradingElement& y);

}  // namespace hodge
