#pragma once

// Borcherds-Cartan datum: index set, even-diagonal integer matrix A with
// nonpositive off-diagonal entries, positive symmetrizer D, and a fixed
// orientation of the graph with an edge between i and j whenever the
// bilinear form i.j = r_i a_ij is nonzero.
//
// Immutable after construction; safe to share read-only across tasks.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klr {

enum class DatumErrorKind {
    OddDiagonal,         // a_ii odd, or a positive even value other than 2
    PositiveOffDiagonal, // a_ij > 0 for i != j
    NotSymmetrizable,    // r_i a_ij != r_j a_ji for the supplied D
    BadOrientation,      // missing/duplicate/illegal edge
    BadShape,            // non-square matrix, size mismatches
};

struct DatumError : std::runtime_error {
    DatumErrorKind kind;
    DatumError(DatumErrorKind k, const std::string& what)
        : std::runtime_error(what), kind(k) {}
};

const char* datumErrorName(DatumErrorKind k);

struct RawDatum {
    std::vector<std::string> indices;
    std::vector<std::vector<long>> A;
    std::optional<std::vector<long>> D;
    std::optional<std::vector<std::pair<int, int>>> orientation; // by position
};

class BorcherdsCartanDatum {
public:
    // Validates all invariants; derives the I+/I- split and, when no
    // orientation is supplied, orients each edge from the lower list
    // position to the higher one.
    static BorcherdsCartanDatum validate(const RawDatum& raw);

    int rank() const { return static_cast<int>(indices_.size()); }
    const std::vector<std::string>& indices() const { return indices_; }
    const std::vector<std::vector<long>>& cartan() const { return A_; }
    const std::vector<long>& symmetrizer() const { return D_; }

    long a(int i, int j) const { return A_[i][j]; }
    long r(int i) const { return D_[i]; }

    // The symmetric bilinear form i.j = r_i a_ij = r_j a_ji.
    long bilinear(int i, int j) const { return D_[i] * A_[i][j]; }

    bool isReal(int i) const { return A_[i][i] == 2; }
    bool isImaginary(int i) const { return A_[i][i] <= 0; }
    const std::vector<int>& realIndices() const { return iPlus_; }
    const std::vector<int>& imaginaryIndices() const { return iMinus_; }

    // Edge (i -> j) present exactly when i.j != 0, i != j, oriented.
    bool hasArrow(int from, int to) const {
        return orientation_.count({from, to}) > 0;
    }
    const std::set<std::pair<int, int>>& orientation() const { return orientation_; }

    int positionOf(const std::string& label) const; // -1 when absent
    const std::string& label(int i) const { return indices_[i]; }

private:
    std::vector<std::string> indices_;
    std::vector<std::vector<long>> A_;
    std::vector<long> D_;
    std::vector<int> iPlus_;
    std::vector<int> iMinus_;
    std::set<std::pair<int, int>> orientation_;
};

// Smallest positive integer symmetrizer for A, if one exists, found by
// propagating the ratio constraints r_i a_ij = r_j a_ji along connected
// components and clearing denominators.  Convenience for datum authoring.
std::optional<std::vector<long>> find_symmetrizer(const std::vector<std::vector<long>>& A);

// JSON file schema:
//   {"indices": [...], "A": [[...]], "D": [...], "orientation": [["i","j"],...]}
// with D and orientation optional (D is derived by find_symmetrizer when
// absent).  The parser rejects anything violating the datum invariants.
BorcherdsCartanDatum datumFromJsonText(const std::string& text);
std::string datumToJsonText(const BorcherdsCartanDatum& datum);
BorcherdsCartanDatum datumFromFile(const std::string& path);

} // namespace klr
