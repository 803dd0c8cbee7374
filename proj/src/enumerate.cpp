#include "signedpat/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace signedpat {

namespace {

constexpr std::uint64_t kFlushInterval = 4096;

struct SharedBudget {
    std::uint64_t max_nodes;
    std::atomic<std::uint64_t> used{0};
    std::atomic<bool> exceeded{false};
};

class PrefixSearch {
public:
    PrefixSearch(int n, int r, const PatternSet& patterns, SharedBudget& budget)
        : n_(n), r_(r), patterns_(patterns), budget_(budget), symbols_(n), signs_(n), used_(n + 1, 0)
    {
    }

    /// Avoiders whose first letter is symbol^sign.
    BigInt count_from(int symbol, int sign)
    {
        tally_ = 0;
        if (try_place(0, symbol, sign)) {
            used_[symbol] = 1;
            extend(1);
            used_[symbol] = 0;
        }
        flush();
        return tally_;
    }

private:
    bool try_place(int depth, int symbol, int sign)
    {
        if (++local_nodes_ == kFlushInterval)
            flush();
        symbols_[depth] = symbol;
        signs_[depth] = sign;
        std::span<const int> sym(symbols_.data(), depth + 1);
        std::span<const int> sg(signs_.data(), depth + 1);
        for (const auto& p : patterns_)
            if (occurs_ending_at_last(sym, sg, p))
                return false;
        return true;
    }

    void extend(int depth)
    {
        if (depth == n_) {
            ++tally_;
            return;
        }
        for (int v = 1; v <= n_; ++v) {
            if (used_[v])
                continue;
            for (int s = 1; s <= r_; ++s) {
                if (!try_place(depth, v, s))
                    continue;
                used_[v] = 1;
                extend(depth + 1);
                used_[v] = 0;
            }
        }
    }

    void flush()
    {
        if (local_nodes_ == 0)
            return;
        const auto total = budget_.used.fetch_add(local_nodes_) + local_nodes_;
        local_nodes_ = 0;
        if (total > budget_.max_nodes || budget_.exceeded.load()) {
            budget_.exceeded = true;
            throw CapacityError("search exceeded the node budget of " + std::to_string(budget_.max_nodes)
                                + " placements (n=" + std::to_string(n_) + ", r=" + std::to_string(r_) + ")");
        }
    }

    int n_;
    int r_;
    const PatternSet& patterns_;
    SharedBudget& budget_;
    std::vector<int> symbols_;
    std::vector<int> signs_;
    std::vector<char> used_;
    std::uint64_t local_nodes_ = 0;
    BigInt tally_;
};

} // namespace

BigInt count_avoiders(int n, int r, const PatternSet& patterns, const SearchLimits& limits)
{
    if (n < 0)
        throw ValidationError("n must be non-negative");
    if (r < 1)
        throw ValidationError("sign bound must be positive");
    if (patterns.sign_bound() > r)
        throw ValidationError("pattern set sign bound " + std::to_string(patterns.sign_bound())
                              + " exceeds r=" + std::to_string(r));
    if (n == 0)
        return 1;

    // One task per first letter; the total is the ordered sum of the parts.
    const int tasks = n * r;
    std::vector<BigInt> partial(tasks);
    SharedBudget budget{limits.max_nodes};
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            PrefixSearch search(n, r, patterns, budget);
            for (int t = next++; t < tasks && !budget.exceeded; t = next++)
                partial[t] = search.count_from(t / r + 1, t % r + 1);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };

    unsigned workers = limits.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : limits.workers;
    workers = std::min<unsigned>(workers, tasks);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    BigInt total = 0;
    for (const auto& part : partial)
        total += part;
    return total;
}

BigInt count_plain_avoiders(int n, std::span<const PlainPattern> patterns, const SearchLimits& limits)
{
    std::vector<SignedPattern> signed_patterns;
    signed_patterns.reserve(patterns.size());
    for (const auto& p : patterns)
        signed_patterns.emplace_back(p, std::vector<int>(p.size(), 1), 1);
    return count_avoiders(n, 1, PatternSet(std::move(signed_patterns), 1), limits);
}

CountSequence fingerprint(const PatternSet& patterns, int r, int nmax, const SearchLimits& limits)
{
    if (nmax < 0)
        throw ValidationError("nmax must be non-negative");
    CountSequence seq{r, patterns, {}};
    seq.counts.reserve(nmax + 1);
    for (int n = 0; n <= nmax; ++n)
        seq.counts.push_back(count_avoiders(n, r, patterns, limits));
    return seq;
}

std::string join_counts(std::span<const BigInt> counts, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (i != 0)
            out += sep;
        out += counts[i].str();
    }
    return out;
}

} // namespace signedpat
