// Exhaustive enumeration of labeled matroids, positroids, and chirotopes
// on small ground sets. Deterministic orders throughout.
#pragma once

#include <vector>

#include "positroid/chirotope.hpp"
#include "positroid/matroid.hpp"

namespace positroid {

// Every labeled matroid of rank k on [n], each exactly once, by DFS over
// the inclusion/exclusion of k-subsets with exchange-axiom pruning.
std::vector<Matroid> enumerate_matroids(int n, int k);

// Brute-force reference: filters all 2^C(n,k) basis families. Only viable
// for tiny parameters; kept as the independent counting oracle.
std::vector<Matroid> enumerate_matroids_bruteforce(int n, int k);

std::vector<Matroid> enumerate_positroids(int n, int k);

// Matroids admitting the all-plus chirotope, i.e. underlying matroids of
// positively oriented matroids in canonical form.
std::vector<Matroid> enumerate_pom_matroids(int n, int k);

// Every chirotope of rank d on [n] up to global sign, by filtering all
// 3^C(n,d) sign maps whose lex-first nonzero sign is +1.
std::vector<Chirotope> enumerate_chirotopes(int n, int d);

// Number of permutations of [n] with exactly m fixed points, summed with
// weight 2^m: the decorated-permutation count of positroids on [n].
long long decorated_permutation_count(int n);

}  // namespace positroid
