// Finite posets with an adjoined least element, Moebius functions, and
// order complex Euler characteristics.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace positroid {

struct PosetDiagnostics {
    bool graded = false;
    std::vector<int> rank_vector;  // element counts per rank, bottom included
    bool thin = false;
    bool eulerian = false;
};

class Poset {
  public:
    Poset() = default;  // empty; fill via with_bottom

    // Elements 1..m with the given order relation (leq[i][j] nonzero iff
    // element i <= element j, 0-based within `leq`); a least element is
    // adjoined at index 0. Validates reflexivity, antisymmetry and
    // transitivity of the input relation.
    static Poset with_bottom(std::vector<std::string> labels,
                             std::vector<std::vector<std::uint8_t>> leq);

    int size() const { return m_; }  // bottom included
    bool leq(int x, int y) const { return leq_[x][y] != 0; }
    const std::string& label(int x) const { return labels_[x]; }

    std::vector<std::pair<int, int>> covers() const;

    // Longest-chain rank of every element, bottom first (rank 0).
    std::vector<int> element_ranks() const;

    // Longest chain length from x to y (edges, not vertices); x <= y.
    int interval_length(int x, int y) const;

    // Standard recursive Moebius function; throws not_comparable.
    long long mobius(int x, int y) const;

    PosetDiagnostics diagnostics() const;

    // Reduced Euler characteristic of the order complex of the poset minus
    // its bottom element (the empty complex yields -1).
    long long order_complex_euler() const;

    // Same for the open interval (x,y); throws not_comparable.
    long long order_complex_euler_open(int x, int y) const;

  private:
    int m_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::uint8_t>> leq_;
    std::vector<int> topo_;  // indices in a linear extension
};

}  // namespace positroid
