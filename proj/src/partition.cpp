#include <mutex>
#include <vector>

#include "latcount/formulas.hpp"

namespace latcount {
namespace {

// rows[n][k] = P(n, k) for 0 <= k <= n, filled by
// P(n, k) = P(n - 1, k - 1) + P(n - k, k).
class PartitionTable {
public:
    Count get(long n, long k) {
        if (n < 0 || k < 0 || k > n) return 0;
        std::lock_guard lock(mutex_);
        while (static_cast<long>(rows_.size()) <= n) extend();
        return rows_[n][k];
    }

private:
    void extend() {
        const long n = static_cast<long>(rows_.size());
        std::vector<Count> row(n + 1, 0);
        if (n == 0) {
            row[0] = 1;
        } else {
            for (long k = 1; k <= n; ++k) {
                Count value = rows_[n - 1].size() > static_cast<std::size_t>(k - 1) ? rows_[n - 1][k - 1] : Count(0);
                if (n - k >= k) value += rows_[n - k][k];
                row[k] = value;
            }
        }
        rows_.push_back(std::move(row));
    }

    std::mutex mutex_;
    std::vector<std::vector<Count>> rows_;
};

PartitionTable& table() {
    static PartitionTable instance;
    return instance;
}

}  // namespace

Count partition_count(long n, long k) { return table().get(n, k); }

Count binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Count out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

}  // namespace latcount
