#pragma once
// Number-based strings: token sequences read out of Topcode-matrices by the
// Vo algorithms, Tb-strings from general matrices, tokenwise string
// operations, every-zero string families, and the desk-scale PNBSPP solver.

#include "topocode/topcode.hpp"

#include <string>
#include <vector>

namespace topocode {

struct NumberString {
    std::vector<long long> tokens;  // non-negative

    bool digit_form() const;  // every token in [0, 9]
    // digit-concatenated rendering; lossy once a token exceeds 9
    std::string digits() const;
    // delimiter-separated rendering; lossless for any tokens
    std::string delimited(char sep = ',') const;
};

bool operator==(const NumberString& a, const NumberString& b);

NumberString string_from_digits(const std::string& s);
NumberString string_from_tokens(std::vector<long long> tokens);

// algo: vo1 | vo2 | vo3 | vo4 with an optional r / i suffix ("vo1r", "vo2-i");
// r reads the X<->Y swapped matrix, i reads the column-reversed matrix
NumberString vo_string(const TopcodeMatrix& m, const std::string& algo);

// algo: voI | voII | voIII | voIV with an optional -r / -i suffix; roman
// forms need the dash before an i suffix ("voI-i"), a bare r is accepted.
// r reads the upside-down matrix, i the right-to-left mirrored matrix.
// The matrix must be rectangular with at least two rows and two columns.
NumberString tb_string(const std::vector<std::vector<long long>>& a, const std::string& algo);

// op: plus | minus | times | interleave | mix, tokenwise after the optional
// 0-based permutations (empty = identity); interleave doubles the length,
// mix picks a' on odd positions and b' on even ones (1-indexed)
NumberString string_op(const NumberString& a, const NumberString& b, const std::string& op,
                       const std::vector<int>& perm_a = {},
                       const std::vector<int>& perm_b = {});

NumberString reciprocal_string(const NumberString& s);  // reversal; digit form only
NumberString digit_dual(const NumberString& s);         // 9-complement; digit form only

// f_r = (base + r) mod modulus tokenwise for r = 1..modulus
std::vector<NumberString> every_zero_string_family(const NumberString& base, int modulus);
// 1-based indices into the family; returns lambda with
// f_i [+] f_j = f_lambda under the zero f_k, i.e. lambda = i + j - k (mod M)
int string_group_add(const std::vector<NumberString>& family, int i, int j, int zero);

enum class PnbsppMode { graphicable_any, match_target };

// Cuts the digit string into 3q contiguous nonempty segments - every
// composition, enumerated in lexicographic cut order - reads consecutive
// triples as columns (x_i, e_i, y_i) and keeps the matrices that realize a
// simple graph (duplicates dropped, first occurrence kept).  In match_target
// mode only matrices equal to *target up to column order and per-column
// XY exchange are returned.  Throws when the composition count exceeds
// max_cuts or q is outside [1, 5].
std::vector<TopcodeMatrix> pnbspp_solve(const NumberString& s, int q,
                                        PnbsppMode mode = PnbsppMode::graphicable_any,
                                        const TopcodeMatrix* target = nullptr,
                                        long long max_cuts = 2000000);

}  // namespace topocode
