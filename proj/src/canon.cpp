#include "cspec/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace cspec {

namespace {

constexpr int kMaxGroupVertices = 10;  // full-element groups and n! scans stop here

// Weights recoded as small integers in sorted order, so the search
// loops compare bytes instead of rationals.
struct Coded {
    int n = 0;
    std::vector<Rational> alphabet;
    std::vector<std::uint8_t> code;      // n*n matrix, symmetric, diagonal unused
    std::vector<std::vector<std::uint8_t>> incident;  // per vertex, sorted
    std::vector<int> twin_class;         // vertices interchangeable with every third vertex

    std::uint8_t at(int u, int v) const { return code[static_cast<std::size_t>(u) * n + v]; }
};

Coded encode(const WeightedCompleteGraph& g) {
    Coded c;
    c.n = g.n();
    c.alphabet = distinct_weights(g);
    std::map<Rational, std::uint8_t> codebook;
    for (std::size_t i = 0; i < c.alphabet.size(); ++i)
        codebook.emplace(c.alphabet[i], static_cast<std::uint8_t>(i));

    c.code.assign(static_cast<std::size_t>(c.n) * c.n, 0);
    for (int v = 0; v < c.n; ++v)
        for (int u = 0; u < v; ++u) {
            const auto w = codebook.at(g.weight(u, v));
            c.code[static_cast<std::size_t>(u) * c.n + v] = w;
            c.code[static_cast<std::size_t>(v) * c.n + u] = w;
        }

    c.incident.resize(c.n);
    for (int v = 0; v < c.n; ++v) {
        for (int u = 0; u < c.n; ++u)
            if (u != v) c.incident[v].push_back(c.at(u, v));
        std::sort(c.incident[v].begin(), c.incident[v].end());
    }

    // u, v are twins when swapping them is an automorphism
    c.twin_class.assign(c.n, -1);
    for (int v = 0; v < c.n; ++v) {
        if (c.twin_class[v] >= 0) continue;
        c.twin_class[v] = v;
        for (int u = v + 1; u < c.n; ++u) {
            if (c.twin_class[u] >= 0) continue;
            bool twin = true;
            for (int x = 0; x < c.n && twin; ++x)
                if (x != u && x != v) twin = c.at(v, x) == c.at(u, x);
            if (twin) c.twin_class[u] = v;
        }
    }
    return c;
}

// Branch-and-bound search for the minimal flattened code sequence.
// Adding vertex x at position k appends the codes against the k chosen
// vertices, which matches the flat pair order exactly.
class MinSequenceSearch {
public:
    explicit MinSequenceSearch(const Coded& c) : c_(c) {}

    std::vector<std::uint8_t> run() {
        const int n = c_.n;
        if (n <= 1) return {};
        best_.clear();
        prefix_.clear();
        used_.assign(n, false);
        cur_.clear();
        cur_.reserve(WeightedCompleteGraph::pair_count(n));
        descend(0);
        return best_;
    }

private:
    struct Candidate {
        std::vector<std::uint8_t> segment;
        int vertex;
    };

    std::vector<Candidate> candidates(int k) const {
        std::vector<Candidate> out;
        std::vector<bool> class_taken(c_.n, false);
        for (int v = 0; v < c_.n; ++v) {
            if (used_[v]) continue;
            const int cls = c_.twin_class[v];
            if (class_taken[cls]) continue;
            class_taken[cls] = true;
            Candidate cand;
            cand.vertex = v;
            cand.segment.reserve(k);
            for (int i = 0; i < k; ++i) cand.segment.push_back(c_.at(prefix_[i], v));
            out.push_back(std::move(cand));
        }
        std::sort(out.begin(), out.end(), [&](const Candidate& a, const Candidate& b) {
            if (a.segment != b.segment) return a.segment < b.segment;
            if (c_.incident[a.vertex] != c_.incident[b.vertex])
                return c_.incident[a.vertex] < c_.incident[b.vertex];
            return a.vertex < b.vertex;
        });
        return out;
    }

    // Completes cur_ greedily (always the lex-least next segment) and
    // installs the result as the new best.
    void refresh_best() {
        auto saved_prefix = prefix_;
        auto saved_used = used_;
        auto seq = cur_;
        while (static_cast<int>(prefix_.size()) < c_.n) {
            const auto cands = candidates(static_cast<int>(prefix_.size()));
            const auto& pick = cands.front();
            seq.insert(seq.end(), pick.segment.begin(), pick.segment.end());
            used_[pick.vertex] = true;
            prefix_.push_back(pick.vertex);
        }
        best_ = std::move(seq);
        prefix_ = std::move(saved_prefix);
        used_ = std::move(saved_used);
    }

    // Invariant: cur_ equals the matching prefix of best_ (or best_ is
    // still empty on the very first descent).
    void descend(int k) {
        if (k == c_.n) return;
        const std::size_t off = cur_.size();
        for (const auto& cand : candidates(k)) {
            int cmp = -1;  // unset best counts as "greater than anything"
            if (!best_.empty()) {
                cmp = 0;
                for (int i = 0; i < k && cmp == 0; ++i) {
                    const auto b = best_[off + i];
                    cmp = cand.segment[i] < b ? -1 : cand.segment[i] > b ? 1 : 0;
                }
            }
            if (cmp > 0) break;  // candidates are sorted by segment
            cur_.insert(cur_.end(), cand.segment.begin(), cand.segment.end());
            used_[cand.vertex] = true;
            prefix_.push_back(cand.vertex);
            if (cmp < 0) refresh_best();
            descend(k + 1);
            prefix_.pop_back();
            used_[cand.vertex] = false;
            cur_.resize(off);
        }
    }

    const Coded& c_;
    std::vector<std::uint8_t> best_;
    std::vector<std::uint8_t> cur_;
    std::vector<int> prefix_;
    std::vector<bool> used_;
};

// permutation ranking in lexicographic order, n <= kMaxGroupVertices
struct Ranker {
    explicit Ranker(int n) : n(n) {
        fact[0] = 1;
        for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    }

    std::uint64_t total() const { return fact[n]; }

    std::uint64_t rank(const std::uint8_t* p) const {
        std::uint64_t r = 0;
        std::uint32_t used = 0;
        for (int k = 0; k < n; ++k) {
            const int v = p[k];
            const auto below = v - std::popcount(used & ((1u << v) - 1));
            r += static_cast<std::uint64_t>(below) * fact[n - 1 - k];
            used |= 1u << v;
        }
        return r;
    }

    void unrank(std::uint64_t r, std::uint8_t* out) const {
        std::uint32_t free_mask = (1u << n) - 1;
        for (int k = 0; k < n; ++k) {
            const auto f = fact[n - 1 - k];
            auto idx = static_cast<int>(r / f);
            r %= f;
            std::uint32_t m = free_mask;
            while (idx-- > 0) m &= m - 1;
            const int v = std::countr_zero(m);
            out[k] = static_cast<std::uint8_t>(v);
            free_mask &= ~(1u << v);
        }
    }

    int n;
    std::array<std::uint64_t, kMaxGroupVertices + 1> fact{};
};

std::vector<std::uint8_t> flatten_group(const AutomorphismGroup& g) {
    std::vector<std::uint8_t> flat;
    flat.reserve(g.elements.size() * g.n);
    for (const auto& e : g.elements)
        for (int i = 0; i < g.n; ++i) flat.push_back(static_cast<std::uint8_t>(e(i)));
    return flat;
}

void require_group_size(int n) {
    if (n > kMaxGroupVertices)
        throw std::domain_error("group enumeration supports at most 10 vertices");
}

}  // namespace

std::string CanonicalKey::str() const {
    std::string out = std::to_string(n) + ":";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (i) out += ',';
        out += weights[i].str();
    }
    return out;
}

CanonicalKey canonical_form(const WeightedCompleteGraph& g) {
    const Coded c = encode(g);
    const auto seq = MinSequenceSearch(c).run();
    CanonicalKey key;
    key.n = g.n();
    key.weights.reserve(seq.size());
    for (auto s : seq) key.weights.push_back(c.alphabet[s]);
    return key;
}

WeightedCompleteGraph canonical_representative(const WeightedCompleteGraph& g) {
    return {g.n(), canonical_form(g).weights};
}

bool is_isomorphic(const WeightedCompleteGraph& a, const WeightedCompleteGraph& b) {
    if (a.n() != b.n()) return false;
    return canonical_form(a) == canonical_form(b);
}

AutomorphismGroup automorphism_group(const WeightedCompleteGraph& g) {
    require_group_size(g.n());
    const Coded c = encode(g);
    const int n = c.n;
    AutomorphismGroup group;
    group.n = n;
    if (n == 0) {
        group.elements.push_back(VertexBijection::identity(0));
        return group;
    }

    std::vector<int> img(n, -1);
    std::vector<bool> taken(n, false);
    auto search = [&](auto&& self, int k) -> void {
        if (k == n) {
            group.elements.emplace_back(img);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (taken[w] || c.incident[w] != c.incident[k]) continue;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) ok = c.at(img[i], w) == c.at(i, k);
            if (!ok) continue;
            img[k] = w;
            taken[w] = true;
            self(self, k + 1);
            taken[w] = false;
            img[k] = -1;
        }
    };
    search(search, 0);
    return group;
}

std::vector<PsoClass> pso_representatives(const WeightedCompleteGraph& h,
                                          const WeightedCompleteGraph& g) {
    if (h.n() != g.n()) throw std::domain_error("pseudoorderings need equal vertex counts");
    require_group_size(h.n());
    const int n = h.n();
    if (n == 0) return {{VertexBijection::identity(0), 1}};
    const Ranker rk(n);

    const auto aut_h = flatten_group(automorphism_group(h));
    const auto aut_g = flatten_group(automorphism_group(g));
    const std::size_t nh = aut_h.size() / n;
    const std::size_t ng = aut_g.size() / n;

    const std::uint64_t total = rk.total();
    std::vector<std::uint64_t> covered((total + 63) / 64, 0);
    auto test_and_set = [&](std::uint64_t r) {
        const auto word = r >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (r & 63);
        const bool fresh = !(covered[word] & bit);
        covered[word] |= bit;
        return fresh;
    };

    std::vector<PsoClass> classes;
    std::array<std::uint8_t, kMaxGroupVertices> f{}, pre{}, comp{};
    for (std::uint64_t r = 0; r < total; ++r) {
        if (covered[r >> 6] >> (r & 63) & 1) continue;
        rk.unrank(r, f.data());
        PsoClass cls;
        cls.representative = VertexBijection(std::vector<int>(f.begin(), f.begin() + n));
        // orbit: psi . f . phi over both groups, deduplicated by rank
        for (std::size_t a = 0; a < nh; ++a) {
            const std::uint8_t* phi = aut_h.data() + a * n;
            for (int i = 0; i < n; ++i) pre[i] = f[phi[i]];
            for (std::size_t b = 0; b < ng; ++b) {
                const std::uint8_t* psi = aut_g.data() + b * n;
                for (int i = 0; i < n; ++i) comp[i] = psi[pre[i]];
                if (test_and_set(rk.rank(comp.data()))) ++cls.orbit_size;
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

bool aut_composition_covers(const WeightedCompleteGraph& h, const WeightedCompleteGraph& g) {
    if (h.n() != g.n()) throw std::domain_error("composition cover needs equal vertex counts");
    require_group_size(h.n());
    const int n = h.n();
    if (n == 0) return true;
    const Ranker rk(n);

    const auto aut_h = flatten_group(automorphism_group(h));
    const auto aut_g = flatten_group(automorphism_group(g));
    const std::size_t nh = aut_h.size() / n;
    const std::size_t ng = aut_g.size() / n;

    std::vector<std::uint64_t> seen((rk.total() + 63) / 64, 0);
    std::uint64_t count = 0;
    std::array<std::uint8_t, kMaxGroupVertices> comp{};
    for (std::size_t a = 0; a < nh; ++a) {
        const std::uint8_t* phi = aut_h.data() + a * n;
        for (std::size_t b = 0; b < ng; ++b) {
            const std::uint8_t* psi = aut_g.data() + b * n;
            for (int i = 0; i < n; ++i) comp[i] = psi[phi[i]];
            const auto r = rk.rank(comp.data());
            const auto word = r >> 6;
            const std::uint64_t bit = std::uint64_t{1} << (r & 63);
            if (!(seen[word] & bit)) {
                seen[word] |= bit;
                ++count;
            }
        }
    }
    return count == rk.total();
}

}  // namespace cspec
