#include "cosetq/f2.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace cosetq {

std::uint64_t full_mask(int n) {
    return n >= 64 ? ~0ull : (1ull << n) - 1;
}

BitVector::BitVector(int n, std::uint64_t bits) : n_(n), bits_(bits) {
    if (n < 1 || n > kMaxLength)
        throw domain_error("vector length must be in [1, " + std::to_string(kMaxLength) + "]");
    if (bits & ~full_mask(n))
        throw domain_error("bit set beyond coordinate " + std::to_string(n));
}

BitVector BitVector::from_string(std::string_view s) {
    if (s.empty()) throw domain_error("empty vector literal");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            bits |= 1ull << i;
        else if (s[i] != '0')
            throw domain_error("vector literal must use only '0' and '1'");
    }
    return BitVector(static_cast<int>(s.size()), bits);
}

BitVector BitVector::from_support(int n, const std::vector<int>& coords) {
    std::uint64_t bits = 0;
    for (int c : coords) {
        if (c < 1 || c > n) throw domain_error("coordinate out of range");
        bits |= 1ull << (c - 1);
    }
    return BitVector(n, bits);
}

bool BitVector::bit(int i) const {
    if (i < 1 || i > n_) throw domain_error("coordinate out of range");
    return bits_ >> (i - 1) & 1;
}

int BitVector::weight() const { return std::popcount(bits_); }

std::vector<int> BitVector::support() const {
    std::vector<int> s;
    for (std::uint64_t b = bits_; b; b &= b - 1)
        s.push_back(std::countr_zero(b) + 1);
    return s;
}

BitVector BitVector::operator^(const BitVector& o) const {
    if (n_ != o.n_) throw dimension_mismatch("xor of vectors of different length");
    return BitVector(n_, bits_ ^ o.bits_);
}

std::string BitVector::to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (bits_ >> i & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

LinearCode::LinearCode(int n) : n_(n), pivot_mask_(0) {
    if (n < 1 || n > kMaxLength)
        throw domain_error("code length must be in [1, " + std::to_string(kMaxLength) + "]");
}

LinearCode LinearCode::span(int n, const std::vector<BitVector>& vectors) {
    LinearCode c(n);
    for (const auto& v : vectors) c.insert(v);
    return c;
}

std::vector<BitVector> LinearCode::basis() const {
    std::vector<BitVector> b;
    b.reserve(rows_.size());
    for (auto r : rows_) b.emplace_back(n_, r);
    return b;
}

std::uint64_t LinearCode::reduce(std::uint64_t v) const {
    // Single pass suffices: a row's pivot occurs in no other row, so
    // clearing it cannot re-set an earlier pivot.
    for (auto row : rows_) {
        int p = std::countr_zero(row);
        if (v >> p & 1) v ^= row;
    }
    return v;
}

bool LinearCode::insert_word(std::uint64_t v) {
    if (v & ~full_mask(n_)) throw dimension_mismatch("vector longer than code length");
    std::uint64_t r = reduce(v);
    if (r == 0) return false;
    int p = std::countr_zero(r);
    for (auto& row : rows_)
        if (row >> p & 1) row ^= r;
    auto pos = std::find_if(rows_.begin(), rows_.end(), [p](std::uint64_t row) {
        return std::countr_zero(row) > p;
    });
    rows_.insert(pos, r);
    pivot_mask_ |= 1ull << p;
    return true;
}

bool LinearCode::insert(const BitVector& v) {
    if (v.length() != n_) throw dimension_mismatch("vector length != code length");
    return insert_word(v.word());
}

bool LinearCode::contains(const BitVector& v) const {
    if (v.length() != n_) throw dimension_mismatch("vector length != code length");
    return reduce(v.word()) == 0;
}

LinearCode LinearCode::dual() const {
    // For each free coordinate f, the vector e_f + sum over rows with a 1 in
    // column f of e_pivot(row) is orthogonal to every basis row; these n-k
    // vectors span the nullspace.
    LinearCode d(n_);
    for (int j = 0; j < n_; ++j) {
        if (pivot_mask_ >> j & 1) continue;
        std::uint64_t x = 1ull << j;
        for (auto row : rows_)
            if (row >> j & 1) x |= 1ull << std::countr_zero(row);
        d.insert_word(x);
    }
    return d;
}

int LinearCode::min_distance(int enum_limit) const {
    int k = dimension();
    if (k == 0) throw precondition_error("minimum distance of the zero code is undefined");
    if (k > enum_limit)
        throw resource_limit_error("2^" + std::to_string(k) + " codewords exceed the enumeration limit");
    std::uint64_t x = 0;
    int best = n_;
    for (std::uint64_t s = 1; s < (1ull << k); ++s) {
        x ^= rows_[static_cast<std::size_t>(std::countr_zero(s))];
        best = std::min(best, std::popcount(x));
    }
    return best;
}

std::uint64_t LinearCode::support_mask() const {
    std::uint64_t m = 0;
    for (auto r : rows_) m |= r;
    return m;
}

std::pair<LinearCode, bool> rref_insert(const LinearCode& code, const BitVector& v) {
    LinearCode out = code;
    bool grew = out.insert(v);
    return {out, grew};
}

LinearCode dual_code(const LinearCode& code) { return code.dual(); }

GeneratorSet::GeneratorSet(int n_in, int max_weight_in, std::vector<BitVector> gens)
    : n(n_in), max_weight(max_weight_in), generators(std::move(gens)) {
    if (n < 1 || n > kMaxLength) throw domain_error("generator set length out of range");
    if (max_weight < 1) throw domain_error("max_weight must be >= 1");
    for (const auto& g : generators) {
        if (g.length() != n) throw dimension_mismatch("generator length != n");
        if (g.weight() > max_weight)
            throw precondition_error("generator of weight " + std::to_string(g.weight()) +
                                     " exceeds max_weight " + std::to_string(max_weight));
    }
}

std::uint64_t GeneratorSet::support_mask() const {
    std::uint64_t m = 0;
    for (const auto& g : generators) m |= g.word();
    return m;
}

bool GeneratorSet::covers_all() const { return support_mask() == full_mask(n); }

LinearCode GeneratorSet::span() const { return LinearCode::span(n, generators); }

std::vector<int> support_union(const GeneratorSet& gens) {
    return BitVector(gens.n, gens.support_mask()).support();
}

LinearCode CodeFile::span() const { return LinearCode::span(n, rows); }

CodeFile read_code_file(std::istream& in) {
    CodeFile f;
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw parse_error(1, "missing header line \"n k\"");
    ++lineno;
    std::istringstream head(line);
    long n = 0, k = 0;
    if (!(head >> n >> k)) throw parse_error(lineno, "header must be \"n k\"");
    std::string extra;
    if (head >> extra) throw parse_error(lineno, "trailing tokens after \"n k\"");
    if (n < 1 || n > kMaxLength)
        throw parse_error(lineno, "code length must be in [1, " + std::to_string(kMaxLength) + "]");
    if (k < 0) throw parse_error(lineno, "row count must be >= 0");
    f.n = static_cast<int>(n);

    for (long i = 0; i < k; ++i) {
        if (!std::getline(in, line)) throw parse_error(lineno + 1, "expected a row of 0/1 characters");
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (static_cast<long>(line.size()) != n)
            throw parse_error(lineno, "row has " + std::to_string(line.size()) +
                                          " characters, expected " + std::to_string(n));
        for (char c : line)
            if (c != '0' && c != '1') throw parse_error(lineno, "row characters must be '0' or '1'");
        f.rows.push_back(BitVector::from_string(line));
    }

    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line[0] != '#') throw parse_error(lineno, "unexpected content after the listed rows");
        std::size_t start = line.find_first_not_of("# ");
        f.comments.push_back(start == std::string::npos ? "" : line.substr(start));
    }
    return f;
}

CodeFile load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw resource_limit_error("cannot open " + path);
    return read_code_file(in);
}

void write_code_file(std::ostream& out, int n, const std::vector<BitVector>& rows,
                     const std::string& trailing_comment) {
    out << n << ' ' << rows.size() << '\n';
    for (const auto& r : rows) {
        if (r.length() != n) throw dimension_mismatch("row length != n");
        out << r.to_string() << '\n';
    }
    if (!trailing_comment.empty()) out << "# " << trailing_comment << '\n';
}

}  // namespace cosetq
