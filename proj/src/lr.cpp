#include "rsf/lr.hpp"

#include <numeric>
#include <stdexcept>

namespace rsf {

namespace {

// Fills nu/lambda row by row, each row right to left, so cells are visited in
// reading order and the lattice condition can be checked as each entry is placed.
class TableauCounter {
public:
    TableauCounter(const Partition& nu, const Partition& lambda, const Partition& mu)
        : nu_(nu), lambda_(lambda), content_(mu.parts()), used_(content_.size() + 1, 0) {
        for (int i = 0; i < nu_.length(); ++i)
            for (int c = nu_.row(i) - 1; c >= lambda_.row(i); --c)
                cells_.push_back({i, c});
        grid_.resize(static_cast<std::size_t>(nu_.length()));
        for (int i = 0; i < nu_.length(); ++i)
            grid_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(nu_.row(i)), 0);
    }

    std::int64_t count() { return fill(0); }

private:
    struct Cell {
        int row, col;
    };

    std::int64_t fill(std::size_t index) {
        if (index == cells_.size())
            return 1;
        const auto [i, c] = cells_[index];
        const int parts = static_cast<int>(content_.size());
        int hi = parts;
        if (c + 1 < nu_.row(i))
            hi = std::min(hi, grid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c + 1)]);
        int lo = 1;
        if (i > 0 && c >= lambda_.row(i - 1))
            lo = grid_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c)] + 1;

        std::int64_t total = 0;
        for (int v = lo; v <= hi; ++v) {
            auto& slot = used_[static_cast<std::size_t>(v)];
            if (slot >= content_[static_cast<std::size_t>(v - 1)])
                continue;
            if (v > 1 && slot + 1 > used_[static_cast<std::size_t>(v - 1)])
                continue;
            ++slot;
            grid_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = v;
            total += fill(index + 1);
            --slot;
        }
        return total;
    }

    const Partition& nu_;
    const Partition& lambda_;
    std::vector<int> content_;
    std::vector<int> used_;  // used_[v] = entries equal to v placed so far
    std::vector<Cell> cells_;
    std::vector<std::vector<int>> grid_;
};

}  // namespace

std::int64_t lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
    if (nu.size() != lambda.size() + mu.size() || !nu.contains(lambda))
        return 0;
    if (!nu.contains(mu))
        return 0;
    return TableauCounter(nu, lambda, mu).count();
}

std::int64_t lr_multi(const Partition& outer, const std::vector<Partition>& inners) {
    if (inners.empty())
        throw std::invalid_argument("lr_multi: at least one factor is required");
    if (inners.size() == 1)
        return outer == inners.front() ? 1 : 0;

    const Partition& last = inners.back();
    const std::vector<Partition> head(inners.begin(), inners.end() - 1);
    const int head_size = std::accumulate(head.begin(), head.end(), 0,
                                          [](int acc, const Partition& p) { return acc + p.size(); });
    if (head_size + last.size() != outer.size())
        return 0;

    std::int64_t total = 0;
    for (const auto& sigma : partitions_inside(outer, head_size)) {
        std::int64_t tail = lr_coefficient(outer, sigma, last);
        if (tail != 0)
            total += tail * lr_multi(sigma, head);
    }
    return total;
}

std::vector<std::pair<Partition, std::int64_t>> schur_product_expand(const Partition& lambda, const Partition& mu) {
    std::vector<std::pair<Partition, std::int64_t>> out;
    for (const auto& nu : partitions_of(lambda.size() + mu.size())) {
        std::int64_t c = lr_coefficient(nu, lambda, mu);
        if (c != 0)
            out.emplace_back(nu, c);
    }
    return out;
}

}  // namespace rsf
