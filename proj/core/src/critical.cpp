#include "cyclift/critical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <thread>

#include "cyclift/errors.hpp"

namespace cyclift {

namespace {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return result;
}

// Lexicographically smallest combination of the given rank, w ascending
// indices out of [0, n).
std::vector<int> unrank_combination(std::uint64_t rank, int n, int w) {
    std::vector<int> combo(w);
    int next = 0;
    for (int pos = 0; pos < w; ++pos) {
        for (int v = next; v < n; ++v) {
            std::uint64_t block = binomial(n - v - 1, w - pos - 1);
            if (rank < block) {
                combo[pos] = v;
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return combo;
}

bool next_combination(std::vector<int>& combo, int n) {
    const int w = static_cast<int>(combo.size());
    for (int i = w - 1; i >= 0; --i) {
        if (combo[i] < n - w + i) {
            ++combo[i];
            for (int j = i + 1; j < w; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Decodes one support-pattern; works for both decoder families.
class PatternTester {
public:
    PatternTester(const TannerGraph& G, const DecoderConfig& config)
        : soft_(config.algorithm == DecoderAlgorithm::MinSum) {
        if (soft_) {
            ms_.emplace(G, config);
            llrs_.assign(G.n_vars(), 1.0);
        } else {
            hd_.emplace(G, config);
            bits_.assign(G.n_vars(), 0);
        }
    }

    bool fails(std::span<const int> support) {
        if (!soft_) {
            for (int v : support) bits_[v] = 1;
            bool ok = hd_->decode(bits_).success;
            for (int v : support) bits_[v] = 0;
            return !ok;
        }
        for (int v : support) llrs_[v] = -1.0;
        bool ok = ms_->decode(llrs_).success;
        for (int v : support) llrs_[v] = 1.0;
        return !ok;
    }

private:
    bool soft_;
    std::optional<HardDecisionDecoder> hd_;
    std::optional<MinSumDecoder> ms_;
    std::vector<std::uint8_t> bits_;
    std::vector<double> llrs_;
};

}  // namespace

CriticalSearchResult critical_number_search(const TannerGraph& G, const DecoderConfig& config,
                                            const CriticalSearchOptions& options,
                                            const SearchScope& scope) {
    std::vector<int> pool;
    if (scope.kind == SearchScope::Kind::AllVariables) {
        pool.resize(G.n_vars());
        for (int v = 0; v < G.n_vars(); ++v) pool[v] = v;
        if (options.max_weight > 4) {
            throw validation_error("all-variables scope is limited to max_weight <= 4");
        }
    } else {
        pool = scope.vars;
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        for (int v : pool) {
            if (v < 0 || v >= G.n_vars()) {
                throw validation_error("scope variable " + std::to_string(v) + " out of range");
            }
        }
    }
    if (options.max_weight < 1) throw validation_error("max_weight must be >= 1");

    const int pool_size = static_cast<int>(pool.size());
    std::uint64_t estimate = 0;
    for (int w = 1; w <= options.max_weight; ++w) estimate += binomial(pool_size, w);
    if (estimate > options.pattern_cap) {
        throw budget_error("estimated pattern count " + std::to_string(estimate) +
                           " exceeds the cap of " + std::to_string(options.pattern_cap));
    }

    int n_threads = options.n_threads > 0
                        ? options.n_threads
                        : std::max(1u, std::thread::hardware_concurrency());

    CriticalSearchResult result;
    for (int w = 1; w <= options.max_weight; ++w) {
        const std::uint64_t total = binomial(pool_size, w);
        result.patterns_tested += total;
        const int workers = static_cast<int>(
            std::min<std::uint64_t>(total, static_cast<std::uint64_t>(n_threads)));
        std::vector<std::vector<std::vector<int>>> found(workers);

        auto work = [&](int worker) {
            const std::uint64_t lo = total * worker / workers;
            const std::uint64_t hi = total * (worker + 1) / workers;
            if (lo >= hi) return;
            PatternTester tester(G, config);
            std::vector<int> combo = unrank_combination(lo, pool_size, w);
            std::vector<int> support(w);
            for (std::uint64_t r = lo; r < hi; ++r) {
                for (int k = 0; k < w; ++k) support[k] = pool[combo[k]];
                if (tester.fails(support)) found[worker].push_back(support);
                if (r + 1 < hi) next_combination(combo, pool_size);
            }
        };

        if (workers <= 1) {
            work(0);
        } else {
            std::vector<std::thread> threads;
            threads.reserve(workers);
            for (int t = 0; t < workers; ++t) threads.emplace_back(work, t);
            for (auto& th : threads) th.join();
        }

        std::vector<std::vector<int>> failures;
        for (auto& part : found) {
            failures.insert(failures.end(), std::make_move_iterator(part.begin()),
                            std::make_move_iterator(part.end()));
        }
        if (!failures.empty()) {
            std::sort(failures.begin(), failures.end());
            result.J = w;
            result.failures = std::move(failures);
            return result;
        }
    }
    return result;
}

TrappingSetCatalog harvest_trapping_sets(const std::vector<std::vector<int>>& failures,
                                         const TannerGraph& G, const DecoderConfig& config,
                                         const HarvestOptions& options) {
    const int max_cycle_len =
        options.max_cycle_len > 0 ? options.max_cycle_len : default_catalog_cycle_len(G);
    const bool soft = config.algorithm == DecoderAlgorithm::MinSum;

    std::optional<HardDecisionDecoder> hd;
    std::optional<MinSumDecoder> ms;
    if (soft) ms.emplace(G, config);
    else hd.emplace(G, config);

    auto start = [&](std::span<const int> support) {
        if (soft) {
            std::vector<double> llrs(G.n_vars(), 1.0);
            for (int v : support) llrs[v] = -1.0;
            ms->start(llrs);
        } else {
            std::vector<std::uint8_t> bits(G.n_vars(), 0);
            for (int v : support) bits[v] = 1;
            hd->start(bits);
        }
    };
    auto step = [&]() { soft ? ms->step() : hd->step(); };
    auto syndrome_ok = [&]() { return soft ? ms->syndrome_ok() : hd->syndrome_ok(); };
    auto state_hash = [&]() { return soft ? ms->state_hash() : hd->state_hash(); };
    auto current_support = [&]() {
        auto decision = soft ? ms->decision() : hd->decision();
        std::vector<int> sup;
        for (int v = 0; v < G.n_vars(); ++v) {
            if (decision[v]) sup.push_back(v);
        }
        return sup;
    };

    // support sets -> smallest originating pattern weight
    std::map<std::vector<int>, int> harvested;
    const int window = options.period_cap + 1;
    std::vector<std::uint64_t> hashes(window);
    std::vector<std::vector<int>> supports(window);

    for (const auto& pattern : failures) {
        start(pattern);
        if (syndrome_ok()) continue;  // not actually a failure
        bool converged = false;
        int T = 0;
        for (int it = 1; it <= config.max_iterations; ++it) {
            step();
            hashes[it % window] = state_hash();
            supports[it % window] = current_support();
            T = it;
            if (syndrome_ok()) {
                converged = true;
                break;
            }
        }
        if (converged) continue;

        int period = 0;
        for (int p = 1; p <= options.period_cap && p < T; ++p) {
            if (hashes[T % window] == hashes[(T - p) % window]) {
                period = p;
                break;
            }
        }
        std::set<int> unioned;
        if (period == 0) period = 1;  // no cycle detected: final support only
        for (int it = T - period + 1; it <= T; ++it) {
            for (int v : supports[it % window]) unioned.insert(v);
        }

        std::vector<int> vars(unioned.begin(), unioned.end());
        const int weight = static_cast<int>(pattern.size());
        auto it = harvested.find(vars);
        if (it == harvested.end()) harvested.emplace(std::move(vars), weight);
        else it->second = std::min(it->second, weight);
    }

    TrappingSetCatalog catalog;
    for (const auto& [vars, weight] : harvested) {
        catalog.insert(make_trapping_set(G, vars, max_cycle_len, weight));
    }
    return catalog;
}

}  // namespace cyclift
