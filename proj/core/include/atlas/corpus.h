#pragma once

#include "atlas/fingrp.h"

#include <string>
#include <vector>

namespace atlas {

// Built-in semidirect-product corpus, |N x| Gamma| <= 200. Mixes abelian and
// nonabelian kernels, split metacyclic groups, wreath-like swaps and outer
// twists; every case is constructed (not hard-coded) and verified on load.
struct CliffordCase {
  std::string name;
  FiniteGroup n;
  FiniteGroup gamma;
  std::vector<std::vector<size_t>> action;
};

std::vector<CliffordCase> builtin_clifford_corpus();

// Quaternion group of order 8 in its left-regular realization.
FiniteGroup quaternion_group();

}  // namespace atlas
