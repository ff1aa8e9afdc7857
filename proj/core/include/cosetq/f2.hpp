#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cosetq/errors.hpp"

namespace cosetq {

// Hard storage cap: one machine word per vector. All exhaustive enumeration
// is limited to far fewer coordinates than this anyway.
inline constexpr int kMaxLength = 64;

// Default cap on 2^n style enumeration; overridable per call.
inline constexpr int kDefaultEnumLimit = 28;

// A fixed-length vector over F2. Coordinates are 1-indexed in the public
// interface; bit i of the backing word holds coordinate i+1.
class BitVector {
public:
    BitVector() : n_(1), bits_(0) {}
    explicit BitVector(int n, std::uint64_t bits = 0);

    // "0110...", one character per coordinate, leftmost = coordinate 1.
    static BitVector from_string(std::string_view s);
    static BitVector from_support(int n, const std::vector<int>& coords);

    int length() const { return n_; }
    std::uint64_t word() const { return bits_; }
    bool bit(int i) const;  // 1-indexed
    int weight() const;
    bool is_zero() const { return bits_ == 0; }
    std::vector<int> support() const;  // ascending, 1-indexed

    BitVector operator^(const BitVector& o) const;
    bool operator==(const BitVector& o) const = default;

    std::string to_string() const;

private:
    int n_;
    std::uint64_t bits_;
};

// A binary linear code held as a reduced row echelon basis: rows are sorted
// by pivot coordinate, each pivot appears in exactly one row. Two equal
// codes therefore compare equal row-by-row.
class LinearCode {
public:
    explicit LinearCode(int n);  // the zero code of length n

    static LinearCode span(int n, const std::vector<BitVector>& vectors);

    int length() const { return n_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::uint64_t>& rows() const { return rows_; }
    std::vector<BitVector> basis() const;
    std::uint64_t pivot_mask() const { return pivot_mask_; }

    // Adds v to the span; returns true when the dimension grew.
    bool insert(const BitVector& v);
    bool insert_word(std::uint64_t v);

    bool contains(const BitVector& v) const;

    // Canonical coset representative: v with all pivot coordinates cleared
    // by row reductions. reduce(v) == 0 iff v is a codeword, and two vectors
    // share a coset iff their reductions coincide.
    std::uint64_t reduce(std::uint64_t v) const;

    // The dual code (nullspace). dual().dual() == *this.
    LinearCode dual() const;

    // Minimum weight of a nonzero codeword, by enumerating all 2^k - 1 of
    // them. Undefined for the zero code.
    int min_distance(int enum_limit = kDefaultEnumLimit) const;

    // Union of the supports of all codewords, as a bit mask. Equals the
    // union over any generating set.
    std::uint64_t support_mask() const;

    bool operator==(const LinearCode& o) const = default;

private:
    int n_;
    std::uint64_t pivot_mask_;
    std::vector<std::uint64_t> rows_;
};

// Pure-function flavor of LinearCode::insert.
std::pair<LinearCode, bool> rref_insert(const LinearCode& code, const BitVector& v);

LinearCode dual_code(const LinearCode& code);

// A list of spanning vectors, each of weight at most max_weight.
struct GeneratorSet {
    int n = 1;
    int max_weight = 1;
    std::vector<BitVector> generators;

    GeneratorSet(int n, int max_weight, std::vector<BitVector> gens);

    std::uint64_t support_mask() const;
    bool covers_all() const;
    LinearCode span() const;
};

// Union of generator supports as 1-indexed coordinates.
std::vector<int> support_union(const GeneratorSet& gens);

std::uint64_t full_mask(int n);

// -- code files ------------------------------------------------------------
//
// Text format: first line "n k", then k lines of n characters from {0,1}.
// Rows may be dependent; spanning happens at load time. Lines after the k
// rows must be blank or start with '#'.
struct CodeFile {
    int n = 0;
    std::vector<BitVector> rows;   // as listed in the file
    std::vector<std::string> comments;  // trailing '#' lines, markers stripped

    LinearCode span() const;
};

CodeFile read_code_file(std::istream& in);
CodeFile load_code_file(const std::string& path);
void write_code_file(std::ostream& out, int n, const std::vector<BitVector>& rows,
                     const std::string& trailing_comment = "");

}  // namespace cosetq
