#pragma once

#include <tklv/extblock.hpp>

#include <random>
#include <string>
#include <vector>

namespace testblocks {

// Regular module of W^sigma for a simply-laced Cartan matrix and a diagram
// automorphism sigma (identity gives the untwisted group).  Parameters are
// the sigma-fixed elements, kappas the sigma-orbits on simple reflections.
// Orbits must have size 1 or 2.
tklv::RawBlock weyl_block(const std::string& name, const std::vector<std::vector<int>>& cartan,
                          const std::vector<int>& sigma);

std::vector<std::vector<int>> cartan_A(int n);
std::vector<std::vector<int>> cartan_D(int n);
std::vector<int> identity_perm(int n);
std::vector<int> flip_perm(int n);  // i -> n-1-i

// Named groups used throughout the tests.
tklv::RawBlock A(int n);       // S_{n+1}
tklv::RawBlock A2_twisted();   // one kappa of length 3
tklv::RawBlock A3_twisted();   // B2, lengths (2,1)
tklv::RawBlock A4_twisted();   // B2, lengths (2,3)
tklv::RawBlock A5_twisted();   // B3, lengths (2,2,1)
tklv::RawBlock D4_twisted();   // B3, lengths (1,1,2)

// Index of a permutation (one-line notation, 1-based) in A(n).
int perm_index(const std::vector<int>& one_line);

// Tensor product: kappas of a act on the first factor, then those of b.
// Parameter (i, j) gets id i * b.size + j.
tklv::RawBlock product(const tklv::RawBlock& a, const tklv::RawBlock& b);

// Random block with at most max_params parameters, built from local motifs
// per kappa.  Every kappa is locally valid; braid relations are not arranged.
tklv::RawBlock random_motif_block(std::mt19937& rng, int max_params);

// One kappa of the given length, one copy of each motif of that length that
// the tests know to be a genuine module with a canonical basis.
tklv::RawBlock motif_block(const std::string& which);
std::vector<std::string> motif_names();

}  // namespace testblocks
