#pragma once
// Degree-sequence toolkit: Erdos-Gallai realizability, brute-force
// realization, the degree component operation algebra, Cds-matrix groups
// and degree-sequence lattices.

#include "topocode/graph.hpp"

#include <string>
#include <vector>

namespace topocode {

// even sum + all prefix inequalities; input need not be sorted
bool erdos_gallai(const std::vector<int>& degrees);

// exhaustive search for a simple graph with these degrees; length <= 8
std::optional<Graph> realize_brute(const std::vector<int>& degrees);

// Outputs are re-sorted non-increasing; position_map[i] gives the index the
// i-th output entry held in the unsorted result of the operation.
struct DsResult {
    std::vector<int> degrees;
    std::vector<int> position_map;
};

// increase op (+)(k): add one to each named position, append the value k
// (a new vertex joined to the k named ones); positions are 0-based
DsResult ds_increase(const std::vector<int>& d, const std::vector<int>& positions);
// inverse: subtract one from each named position, drop one entry equal to k
DsResult ds_decrease(const std::vector<int>& d, const std::vector<int>& positions);
// component-coincide (.)_s: first s entries pairwise summed, rest concatenated
DsResult ds_component_coincide(const std::vector<int>& d, const std::vector<int>& c, int s);
// degree-coincide (.)<i,j>: remove d_i and c_j, append d_i + c_j
DsResult ds_degree_coincide(const std::vector<int>& d, const std::vector<int>& c, int i, int j);
// degree-join (-)<i,j>: increment d_i and c_j, concatenate (a joining edge)
DsResult ds_degree_join(const std::vector<int>& d, const std::vector<int>& c, int i, int j);
// self-contraction (.)_1: merge entries i and j of one sequence
DsResult ds_self_contract(const std::vector<int>& d, int i, int j);

// named dispatch: op in {increase, decrease, component-coincide,
// degree-coincide, degree-join, contract}; aux is the second sequence when
// the op needs one; args are positions / s / (i,j) per op
DsResult ds_transform(const std::string& op, const std::vector<int>& d,
                      const std::vector<int>& aux, const std::vector<int>& args);

// colored degree-sequence matrix: a degree row and a color row
struct CdsMatrix {
    std::vector<int> degrees;
    std::vector<int> colors;
};

// every-zero Cds-matrix group: color rows f_r = f_1 + r (mod M), residues
// kept in [1, M], M = max degree
struct CdsGroup {
    CdsMatrix base;
    int modulus = 0;
    std::vector<std::vector<int>> color_rows;  // element r at index r, r in [0, M-1]
};
CdsGroup cds_group(const CdsMatrix& base);
// f_i (+) f_j with preappointed zero f_k -> element index (i + j - k mod M)
int cds_add(const CdsGroup& g, int i, int j, int zero);

struct DsLatticePoint {
    std::vector<int> degrees;
    bool graphical = false;
};
// one lattice element: fold coeffs[i] copies of base[i] with the op
// (op in {linear-sum, degree-coincide, degree-join})
DsLatticePoint ds_lattice_sample(const std::vector<std::vector<int>>& base,
                                 const std::vector<int>& coeffs, const std::string& op);

}  // namespace topocode
