#include "cosetq/search.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <unordered_set>

#include "cosetq/cwgf.hpp"
#include "cosetq/errors.hpp"
#include "cosetq/localfactor.hpp"
#include "cosetq/polynomial.hpp"

namespace cosetq {

namespace {

// A span in reduced row echelon form packs into 128 bits as long as
// dimension * n <= 128; n <= 11 guarantees that.
using Key = unsigned __int128;

struct KeyHash {
    std::size_t operator()(Key k) const {
        auto mix = [](std::uint64_t x) {
            x += 0x9e3779b97f4a7c15ull;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            return x ^ (x >> 31);
        };
        return mix(static_cast<std::uint64_t>(k)) ^ (mix(static_cast<std::uint64_t>(k >> 64)) << 1);
    }
};

Key pack_rows(const std::vector<std::uint64_t>& rows, int n) {
    Key key = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) key |= Key(rows[i]) << (i * n);
    return key;
}

LinearCode unpack_rows(Key key, int dim, int n) {
    LinearCode code(n);
    std::uint64_t mask = full_mask(n);
    for (int i = 0; i < dim; ++i) code.insert_word(static_cast<std::uint64_t>(key >> (i * n)) & mask);
    return code;
}

std::vector<std::uint64_t> generator_pool(int n, int w) {
    std::vector<std::uint64_t> gens;
    for (std::uint64_t v = 1; v <= full_mask(n); ++v)
        if (std::popcount(v) <= w) gens.push_back(v);
    return gens;
}

}  // namespace

std::uint64_t for_each_span(int n, int w, bool covered_only, std::uint64_t max_spans,
                            const std::function<void(const LinearCode&)>& fn) {
    if (n < 1 || n > 11)
        throw precondition_error("span enumeration requires 1 <= n <= 11, got n = " +
                                 std::to_string(n));
    if (w < 1 || w > n) throw precondition_error("span enumeration requires 1 <= w <= n");

    const auto gens = generator_pool(n, w);
    const std::uint64_t cover = full_mask(n);
    std::uint64_t enumerated = 0;
    std::uint64_t visited = 0;

    std::vector<Key> layer = {0};  // dimension 0: the zero code
    for (int dim = 0; dim <= n && !layer.empty(); ++dim) {
        for (Key key : layer) {
            LinearCode code = unpack_rows(key, dim, n);
            if (!covered_only || code.support_mask() == cover) {
                fn(code);
                ++visited;
            }
        }
        if (dim == n) break;
        std::unordered_set<Key, KeyHash> next;
        next.reserve(layer.size() * 4);
        for (Key key : layer) {
            LinearCode code = unpack_rows(key, dim, n);
            for (std::uint64_t g : gens) {
                if (code.reduce(g) == 0) continue;
                LinearCode grown = code;
                grown.insert_word(g);
                if (next.insert(pack_rows(grown.rows(), n)).second && ++enumerated > max_spans)
                    throw resource_limit_error("span enumeration exceeded max_spans = " +
                                               std::to_string(max_spans));
            }
        }
        layer.assign(next.begin(), next.end());
        std::sort(layer.begin(), layer.end());
    }
    return visited;
}

LinearCode random_covered_span(int n, int w, std::mt19937_64& rng) {
    if (n < 1 || n > kMaxLength) throw precondition_error("length out of range");
    if (w < 1 || w > n) throw precondition_error("weight cap out of range");
    LinearCode code(n);
    const std::uint64_t cover = full_mask(n);
    std::uniform_int_distribution<int> weight_dist(1, w);
    std::uniform_int_distribution<int> coord(0, n - 1);
    for (int guard = 0; code.support_mask() != cover; ++guard) {
        if (guard > 100000) throw precondition_error("random span failed to cover");
        int t = weight_dist(rng);
        std::uint64_t word = 0;
        while (std::popcount(word) < t) word |= 1ull << coord(rng);
        code.insert_word(word);
    }
    return code;
}

SearchResult conjecture_check(const SearchConfig& cfg) {
    if (cfg.w < 1) throw domain_error("w must be positive");
    if (cfg.n < 1) throw domain_error("n must be positive");
    if (cfg.n % cfg.w != 0)
        throw domain_error("single-block bound needs w | n; got n = " + std::to_string(cfg.n) +
                           ", w = " + std::to_string(cfg.w));

    const std::vector<Rational> grid =
        cfg.lambda_grid.empty() ? default_lambda_grid() : cfg.lambda_grid;
    const int blocks = cfg.n / cfg.w;
    std::vector<Rational> bound;
    bound.reserve(grid.size());
    for (const auto& lam : grid) bound.push_back(rat_pow(phi(cfg.w, 0, lam), blocks));

    SearchResult res;
    Rational best(0);
    bool have_witness = false;

    auto test_code = [&](const LinearCode& code) {
        CosetWeightDistribution dist = coset_weight_distribution(code, cfg.limits.enum_limit);
        ++res.codes_tested;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            Rational ratio = evaluate_q(dist, grid[i]) / bound[i];
            if (!have_witness || cmp(ratio, best) > 0) {
                best = ratio;
                res.witness = {code, grid[i], to_double(ratio)};
                have_witness = true;
            }
        }
    };

    if (cfg.mode == SearchMode::exhaustive) {
        for_each_span(cfg.n, cfg.w, /*covered_only=*/true, cfg.limits.max_spans, test_code);
    } else {
        std::mt19937_64 rng(cfg.seed);
        for (std::uint64_t s = 0; s < cfg.sample_count; ++s)
            test_code(random_covered_span(cfg.n, cfg.w, rng));
    }

    res.max_ratio = to_double(best);
    res.max_is_exactly_one = have_witness && best == 1;
    res.verdict = (have_witness && cmp(best, Rational(1)) > 0) ? "refuted" : "confirmed";
    return res;
}

void write_witness_file(std::ostream& out, const SearchWitness& witness) {
    std::vector<BitVector> rows;
    for (std::uint64_t r : witness.code.rows()) rows.emplace_back(witness.code.length(), r);
    write_code_file(out, witness.code.length(), rows,
                    "ratio=" + format_g12(witness.ratio) + " lambda=" + to_string(witness.lambda));
}

}  // namespace cosetq
