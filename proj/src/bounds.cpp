#include <sigfix/bounds.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <vector>

namespace sigfix {

namespace {

void check_length(std::size_t n, std::size_t limit, const char* op) {
    if (n < 1) throw std::invalid_argument(std::string(op) + ": code length must be at least 1");
    if (n > limit) {
        throw LimitExceeded(std::string(op) + ": code length " + std::to_string(n) + " exceeds " + std::to_string(limit));
    }
}

void check_distance(Length d, const char* op) {
    if (!d.is_infinite() && d.value() < 1) throw std::invalid_argument(std::string(op) + ": distance must be at least 1");
}

bool beyond_length(std::size_t n, Length d) { return d.is_infinite() || d.value() > n; }

// sum_{k=0}^{r} C(n, k), n <= 63
std::uint64_t ball_volume(std::size_t n, std::size_t r) {
    std::uint64_t sum = 0, binom = 1;
    for (std::size_t k = 0; k <= std::min(r, n); ++k) {
        sum += binom;
        binom = binom * (n - k) / (k + 1);
    }
    return sum;
}

// --------------------------------------------------------------- clique

class Bitset {
public:
    explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    // first set bit, or npos
    std::size_t first() const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        }
        return npos;
    }
    void and_with(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    }
    void and_not(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::uint64_t> words_;
};

// Maximum clique with greedy colouring bounds (MCQ style).
class CliqueSearch {
public:
    CliqueSearch(std::vector<Bitset> adjacency, std::size_t lower, std::uint64_t budget)
        : adj_(std::move(adjacency)), best_(lower), budget_(budget) {}

    // Size of the largest clique if it exceeds the initial lower bound,
    // otherwise the lower bound. nullopt if the budget ran out.
    std::optional<std::size_t> solve() {
        Bitset all(adj_.size());
        for (std::size_t i = 0; i < adj_.size(); ++i) all.set(i);
        if (!expand(all, 0)) return std::nullopt;
        return best_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool expand(Bitset candidates, std::size_t size) {
        if (++nodes_ > budget_) return false;
        std::vector<std::size_t> order;
        std::vector<std::size_t> colour;
        order.reserve(candidates.count());
        Bitset uncoloured = candidates;
        std::size_t k = 0;
        while (!uncoloured.none()) {
            ++k;
            Bitset q = uncoloured;
            for (std::size_t v = q.first(); v != Bitset::npos; v = q.first()) {
                q.reset(v);
                uncoloured.reset(v);
                q.and_not(adj_[v]);
                order.push_back(v);
                colour.push_back(k);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + colour[i] <= best_) return true;
            std::size_t v = order[i];
            Bitset next = candidates;
            next.and_with(adj_[v]);
            if (next.none()) {
                best_ = std::max(best_, size + 1);
            } else if (!expand(next, size + 1)) {
                return false;
            }
            candidates.reset(v);
        }
        return true;
    }

    std::vector<Bitset> adj_;
    std::size_t best_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t gilbert_lower(std::size_t n, Length d) {
    check_length(n, max_bound_length, "gilbert_lower");
    check_distance(d, "gilbert_lower");
    if (beyond_length(n, d)) return 1;
    std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t vol = ball_volume(n, d.value() - 1);
    return (total + vol - 1) / vol;
}

std::uint64_t sphere_packing_upper(std::size_t n, Length d) {
    check_length(n, max_bound_length, "sphere_packing_upper");
    check_distance(d, "sphere_packing_upper");
    if (beyond_length(n, d)) return 1;
    std::uint64_t total = std::uint64_t{1} << n;
    return total / ball_volume(n, (d.value() - 1) / 2);
}

namespace {

std::size_t popcount(std::uint32_t w) { return static_cast<std::size_t>(std::popcount(w)); }

// Exhaustive search for a largest code. Codewords are chosen one at a time
// as the minimum (under an orbit-invariant key) of the remaining code; the
// coordinate permutations fixing the chosen words permute coordinates
// within cells, so only one word per orbit needs to be tried. Once the
// symmetry depth is exhausted the rest is a plain maximum clique problem.
class CodeSearch {
public:
    CodeSearch(std::size_t n, std::size_t d, std::uint64_t budget) : n_(n), d_(d), budget_(budget) {}

    std::optional<std::size_t> run() {
        std::vector<std::uint32_t> pool;
        for (std::uint32_t c = 1; c < (std::uint32_t{1} << n_); ++c) {
            if (popcount(c) >= d_) pool.push_back(c);
        }
        std::vector<std::uint32_t> cells{(std::uint32_t{1} << n_) - 1};
        if (!branch(1, cells, pool, 0)) return std::nullopt;
        return best_;
    }

private:
    static constexpr std::size_t symmetry_depth = 4;

    // counts of ones per cell; cells are bit masks in a fixed order
    static std::vector<std::size_t> key(std::uint32_t c, const std::vector<std::uint32_t>& cells) {
        std::vector<std::size_t> k(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) k[i] = popcount(c & cells[i]);
        return k;
    }

    // in every cell the ones occupy the lowest positions
    static bool canonical(std::uint32_t c, const std::vector<std::uint32_t>& cells) {
        for (std::uint32_t cell : cells) {
            std::uint32_t ones = c & cell;
            std::uint32_t low = 0, rest = cell;
            for (std::size_t i = 0; i < popcount(ones); ++i) {
                std::uint32_t bit = rest & (~rest + 1);
                low |= bit;
                rest &= ~bit;
            }
            if (ones != low) return false;
        }
        return true;
    }

    static std::vector<std::uint32_t> refine(const std::vector<std::uint32_t>& cells, std::uint32_t c) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t cell : cells) {
            if (cell & c) out.push_back(cell & c);
            if (cell & ~c) out.push_back(cell & ~c);
        }
        return out;
    }

    std::size_t colour_bound(const std::vector<std::uint32_t>& pool) const {
        std::vector<std::vector<std::uint32_t>> classes;
        for (std::uint32_t c : pool) {
            bool placed = false;
            for (auto& cls : classes) {
                bool ok = std::all_of(cls.begin(), cls.end(), [&](std::uint32_t o) { return popcount(c ^ o) < d_; });
                if (ok) {
                    cls.push_back(c);
                    placed = true;
                    break;
                }
            }
            if (!placed) classes.push_back({c});
        }
        return classes.size();
    }

    bool branch(std::size_t size, const std::vector<std::uint32_t>& cells, const std::vector<std::uint32_t>& pool,
                std::size_t depth) {
        if (++nodes_ > budget_) return false;
        best_ = std::max(best_, size);
        if (pool.empty()) return true;
        if (depth == symmetry_depth || cells.size() == n_) return clique(size, pool);

        std::vector<std::pair<std::vector<std::size_t>, std::uint32_t>> reps;
        for (std::uint32_t c : pool) {
            if (canonical(c, cells)) reps.emplace_back(key(c, cells), c);
        }
        std::sort(reps.begin(), reps.end());
        for (const auto& [rep_key, rep] : reps) {
            std::vector<std::uint32_t> next;
            for (std::uint32_t c : pool) {
                if (c == rep || popcount(c ^ rep) < d_) continue;
                if (key(c, cells) < rep_key) continue;
                next.push_back(c);
            }
            if (size + 1 + next.size() <= best_) continue;
            if (size + 1 + colour_bound(next) <= best_) continue;
            if (!branch(size + 1, refine(cells, rep), next, depth + 1)) return false;
        }
        return true;
    }

    bool clique(std::size_t size, const std::vector<std::uint32_t>& pool) {
        std::vector<std::size_t> degree(pool.size(), 0);
        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                if (popcount(pool[i] ^ pool[j]) >= d_) {
                    ++degree[i];
                    ++degree[j];
                }
            }
        }
        std::vector<std::size_t> order(pool.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
        std::vector<Bitset> adj(pool.size(), Bitset(pool.size()));
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                if (popcount(pool[order[i]] ^ pool[order[j]]) >= d_) {
                    adj[i].set(j);
                    adj[j].set(i);
                }
            }
        }
        std::size_t lower = best_ > size ? best_ - size : 0;
        CliqueSearch search(std::move(adj), lower, budget_ - std::min(budget_, nodes_));
        auto found = search.solve();
        nodes_ += search.nodes();
        if (!found) return false;
        best_ = std::max(best_, size + *found);
        return true;
    }

    std::size_t n_;
    std::size_t d_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t best_ = 1;
};

}  // namespace

std::optional<std::uint64_t> try_exact_A(std::size_t n, Length d, std::uint64_t node_budget) {
    check_length(n, max_exact_length, "exact_A");
    check_distance(d, "exact_A");
    if (beyond_length(n, d)) return 1;
    if (d.value() == 1) return std::uint64_t{1} << n;
    // even-weight code, and puncturing a d = 2 code leaves distinct words
    if (d.value() == 2) return std::uint64_t{1} << (n - 1);
    // the all-zero word may be assumed to be in the code (translation)
    auto found = CodeSearch(n, d.value(), node_budget).run();
    if (!found) return std::nullopt;
    return *found;
}

std::uint64_t exact_A(std::size_t n, Length d) {
    return *try_exact_A(n, d, std::numeric_limits<std::uint64_t>::max());
}

CodeBound code_bound(std::size_t n, Length d, bool with_exact) {
    CodeBound b;
    b.n = n;
    b.d = d;
    b.gilbert_lower = gilbert_lower(n, d);
    b.sphere_packing_upper = sphere_packing_upper(n, d);
    if (with_exact && n <= max_exact_length) b.exact = exact_A(n, d);
    return b;
}

std::uint64_t A_upper(std::size_t n, Length d) {
    if (n == 0) return 1;
    if (beyond_length(n, d)) return 1;
    if (n > max_exact_length) return sphere_packing_upper(n, d);
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> memo;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(n, d.value());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    auto exact = try_exact_A(n, d, A_upper_node_budget);
    return memo[key] = exact ? *exact : sphere_packing_upper(n, d);
}

std::uint64_t fp_bound(std::size_t n, std::size_t tau_tilde, Length g_tilde) {
    std::uint64_t a = A_upper(n, g_tilde);
    if (tau_tilde >= 64) return a;
    return std::min(std::uint64_t{1} << tau_tilde, a);
}

}  // namespace sigfix
