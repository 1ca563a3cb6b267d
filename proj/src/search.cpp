#include "spc/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <limits>
#include <thread>

#include "spc/errors.hpp"

namespace spc {

namespace {

// Work unit: vertices below `forced_depth` take their sign from `forced_mask`.
struct Task {
    std::uint64_t forced_mask = 0;
    std::size_t forced_depth = 0;
};

struct TaskResult {
    std::uint64_t count = 0;
    std::uint64_t nodes = 0; // leaves reached plus pruned subtrees
    std::optional<std::uint64_t> first;
    std::vector<std::uint64_t> collected;
    bool truncated = false;
};

struct RunConfig {
    bool prune = true;
    bool stop_at_first = false;
    bool collect = false;
    std::size_t collect_limit = 0;
    const std::function<void(std::uint64_t)>* visit = nullptr;
};

class Enumerator {
public:
    Enumerator(const Graph& g, const RunConfig& config) : g_(g), config_(config), n_(g.num_vertices()) {
        back_.assign(n_, 0);
        for (const auto& e : g.edges()) back_[e.second] |= std::uint64_t{1} << e.first;
        // Edges decided once vertex v is labeled.
        decided_after_.assign(n_ + 1, 0);
        for (std::size_t v = 0; v < n_; ++v) {
            decided_after_[v + 1] = decided_after_[v] + static_cast<std::size_t>(std::popcount(back_[v]));
        }
    }

    TaskResult run(const Task& task) {
        result_ = {};
        task_ = task;
        if (config_.prune) {
            dfs(0, 0, 0, 0);
        } else {
            sweep();
        }
        return std::move(result_);
    }

private:
    // Returns true when enumeration should stop.
    bool leaf(std::uint64_t mask, bool spc) {
        ++result_.nodes;
        if (!spc) return false;
        ++result_.count;
        if (!result_.first) result_.first = mask;
        if (config_.visit) (*config_.visit)(mask);
        if (config_.collect) {
            if (result_.collected.size() < config_.collect_limit) {
                result_.collected.push_back(mask);
            } else {
                result_.truncated = true;
            }
        }
        return config_.stop_at_first;
    }

    bool feasible(std::size_t depth, std::size_t v_pos, std::size_t e_neg) const {
        const auto remaining_v = static_cast<std::int64_t>(n_ - depth);
        const auto remaining_e = static_cast<std::int64_t>(g_.num_edges() - decided_after_[depth]);
        const std::int64_t v_delta = static_cast<std::int64_t>(depth) - 2 * static_cast<std::int64_t>(v_pos);
        const std::int64_t e_delta = 2 * static_cast<std::int64_t>(e_neg) -
                                     static_cast<std::int64_t>(decided_after_[depth]);
        return std::abs(v_delta) <= remaining_v + 1 && std::abs(e_delta) <= remaining_e + 1;
    }

    // Vertices 0..depth-1 are labeled in `mask`.
    bool dfs(std::size_t depth, std::uint64_t mask, std::size_t v_pos, std::size_t e_neg) {
        if (depth == n_) {
            const std::size_t m = g_.num_edges();
            return leaf(mask, spc_condition(static_cast<std::int64_t>(n_) - 2 * static_cast<std::int64_t>(v_pos),
                                            2 * static_cast<std::int64_t>(e_neg) - static_cast<std::int64_t>(m)));
        }
        const std::uint64_t bit = std::uint64_t{1} << depth;
        for (const bool positive : {true, false}) {
            if (depth < task_.forced_depth && positive != ((task_.forced_mask & bit) != 0)) continue;
            // Earlier neighbours with the opposite sign produce negative edges.
            const std::uint64_t opposite = positive ? (back_[depth] & ~mask) : (back_[depth] & mask);
            const std::size_t next_e_neg = e_neg + static_cast<std::size_t>(std::popcount(opposite));
            const std::size_t next_v_pos = v_pos + (positive ? 1 : 0);
            if (!feasible(depth + 1, next_v_pos, next_e_neg)) {
                ++result_.nodes;
                continue;
            }
            if (dfs(depth + 1, positive ? (mask | bit) : mask, next_v_pos, next_e_neg)) return true;
        }
        return false;
    }

    // Plain enumeration: every completion of the forced prefix, each one evaluated
    // from scratch against the edge list.
    void sweep() {
        const std::size_t free_vertices = n_ - task_.forced_depth;
        const std::uint64_t total = std::uint64_t{1} << free_vertices;
        for (std::uint64_t c = 0; c < total; ++c) {
            std::uint64_t mask = task_.forced_mask & ((std::uint64_t{1} << task_.forced_depth) - 1);
            // Counter bit for vertex v is the (n-1-v)th bit, inverted so +1 comes first.
            for (std::size_t v = task_.forced_depth; v < n_; ++v) {
                if (((c >> (n_ - 1 - v)) & 1U) == 0) mask |= std::uint64_t{1} << v;
            }
            std::int64_t v_pos = std::popcount(mask);
            std::int64_t e_neg = 0;
            for (const auto& e : g_.edges()) e_neg += ((mask >> e.first) ^ (mask >> e.second)) & 1U;
            const auto n = static_cast<std::int64_t>(n_);
            const auto m = static_cast<std::int64_t>(g_.num_edges());
            if (leaf(mask, spc_condition(n - 2 * v_pos, 2 * e_neg - m))) return;
        }
    }

    const Graph& g_;
    RunConfig config_;
    std::size_t n_;
    std::vector<std::uint64_t> back_;
    std::vector<std::size_t> decided_after_;
    Task task_;
    TaskResult result_;
};

void check_size(const Graph& g, const SearchOptions& opts) {
    if (opts.max_vertices < 1) throw BadParameter("max_vertices must be at least 1");
    const std::size_t n = g.num_vertices();
    if (n > opts.max_vertices || n > kMaxSearchableVertices) {
        throw TooLarge("graph has " + std::to_string(n) + " vertices; search cap is " +
                       std::to_string(std::min(opts.max_vertices, kMaxSearchableVertices)));
    }
}

// Prefix tasks over the first `depth` vertices, in enumeration order.
std::vector<Task> make_tasks(std::size_t depth, bool fix_first) {
    std::vector<Task> tasks;
    const std::size_t free_bits = depth - (fix_first ? 1 : 0);
    const std::uint64_t total = std::uint64_t{1} << free_bits;
    for (std::uint64_t c = 0; c < total; ++c) {
        std::uint64_t mask = fix_first ? 1 : 0;
        for (std::size_t v = fix_first ? 1 : 0; v < depth; ++v) {
            if (((c >> (depth - 1 - v)) & 1U) == 0) mask |= std::uint64_t{1} << v;
        }
        tasks.push_back({mask, depth});
    }
    return tasks;
}

std::size_t split_depth(std::size_t n, bool fix_first, unsigned threads) {
    const std::size_t base = fix_first ? 1 : 0;
    if (threads <= 1) return base;
    const auto extra = static_cast<std::size_t>(std::bit_width(threads - 1U)) + 3;
    return std::min(n, base + extra);
}

} // namespace

std::uint64_t labeling_mask(const SignedLabeling& l) {
    if (l.size() > kMaxSearchableVertices) throw TooLarge("labeling too long for a 64-bit mask");
    std::uint64_t mask = 0;
    for (std::size_t v = 0; v < l.size(); ++v) {
        if (l[v] == Sign::Positive) mask |= std::uint64_t{1} << v;
    }
    return mask;
}

std::uint64_t for_each_spc_labeling(const Graph& g, const SearchOptions& opts,
                                    const std::function<void(std::uint64_t)>& visit) {
    check_size(g, opts);
    const bool fix = opts.fixes_first_vertex() && g.num_vertices() > 0;
    RunConfig config;
    config.prune = opts.prune;
    config.visit = &visit;
    Enumerator e(g, config);
    return e.run({fix ? 1U : 0U, fix ? 1U : 0U}).count;
}

SearchResult search_spc(const Graph& g, const SearchOptions& opts) {
    check_size(g, opts);
    const std::size_t n = g.num_vertices();
    const bool fix = opts.fixes_first_vertex() && n > 0;

    RunConfig config;
    config.prune = opts.prune;
    config.stop_at_first = opts.mode == SearchMode::Exists;
    config.collect = opts.mode == SearchMode::Collect;
    config.collect_limit = opts.collect_limit;

    const std::vector<Task> tasks = make_tasks(split_depth(n, fix, opts.threads), fix);
    std::vector<TaskResult> results(tasks.size());
    std::vector<char> ran(tasks.size(), 0);

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};
    auto worker = [&] {
        Enumerator e(g, config);
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            if (config.stop_at_first && first_hit.load() < i) continue;
            results[i] = e.run(tasks[i]);
            ran[i] = 1;
            if (config.stop_at_first && results[i].first) {
                std::size_t seen = first_hit.load();
                while (i < seen && !first_hit.compare_exchange_weak(seen, i)) {
                }
            }
        }
    };
    const unsigned workers = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(tasks.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
    }

    // Merge in task order; in Exists mode everything after the first hit is dropped
    // so the totals match a sequential run exactly.
    SearchResult out;
    out.symmetry_factor = fix ? 2 : 1;
    std::uint64_t raw_count = 0;
    std::vector<std::uint64_t> masks;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (!ran[i]) break;
        TaskResult& r = results[i];
        out.nodes_explored += r.nodes;
        raw_count += r.count;
        if (r.first && !out.witness) out.witness = SignedLabeling::from_mask(*r.first, n);
        for (std::uint64_t m : r.collected) {
            if (masks.size() < opts.collect_limit) {
                masks.push_back(m);
            } else {
                out.collection_truncated = true;
            }
        }
        out.collection_truncated = out.collection_truncated || r.truncated;
        if (config.stop_at_first && r.first) break;
    }
    out.exists = out.witness.has_value();
    if (opts.mode != SearchMode::Exists) out.count = raw_count * out.symmetry_factor;
    if (config.collect) {
        for (std::uint64_t m : masks) out.collected.push_back(SignedLabeling::from_mask(m, n));
        if (fix) {
            for (std::uint64_t m : masks) {
                if (out.collected.size() >= opts.collect_limit) {
                    out.collection_truncated = true;
                    break;
                }
                out.collected.push_back(negate(SignedLabeling::from_mask(m, n)));
            }
        }
    }
    return out;
}

OracleAgreement verify_scheme_against_oracle(const SchemeOutput& s, std::size_t max_vertices) {
    SearchOptions opts;
    opts.mode = SearchMode::Count;
    opts.fix_first_vertex = true;
    opts.max_vertices = max_vertices;

    // Enumeration fixes vertex 0 to +1, so look for the representative of the
    // scheme labeling's negation class.
    const SignedLabeling canonical =
        s.labeling.size() > 0 && s.labeling[0] == Sign::Negative ? negate(s.labeling) : s.labeling;
    const std::uint64_t target = labeling_mask(canonical);

    OracleAgreement a;
    a.scheme_is_spc = s.report.is_spc;
    std::optional<std::uint64_t> first;
    const std::uint64_t raw = for_each_spc_labeling(s.graph, opts, [&](std::uint64_t mask) {
        if (!first) first = mask;
        if (mask == target) a.found_in_enumeration = true;
    });
    a.oracle_count = raw * (s.graph.num_vertices() > 0 ? 2 : 1);
    a.oracle_exists = raw > 0;
    if (first) a.witness = SignedLabeling::from_mask(*first, s.graph.num_vertices());

    const bool claimed = s.report.is_spc ||
                         std::any_of(s.expected.begin(), s.expected.end(),
                                     [](const ExpectedCounts& e) { return e.claims_spc; });
    a.membership_agrees = a.found_in_enumeration == a.scheme_is_spc;
    a.existence_agrees = !claimed || a.oracle_exists;
    a.agreement = a.membership_agrees && a.existence_agrees;
    return a;
}

} // namespace spc
