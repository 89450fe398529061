#include "rsf/maya.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rsf {

namespace {

int least_multiple_covering(int length, int r) { return (length + r - 1) / r * r; }

// Parity of the permutation sorting `seq` into strictly decreasing order
// (entries assumed distinct).
int decreasing_sort_sign(const std::vector<int>& seq) {
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] < seq[j])
                ++inversions;
    return inversions % 2 ? -1 : 1;
}

void require_modulus(int r) {
    if (r < 2)
        throw std::invalid_argument("modulus r must be >= 2");
}

}  // namespace

MayaDiagram::MayaDiagram(std::vector<int> head, int tail_top) : head_(std::move(head)), tail_top_(tail_top) {
    trim();
}

void MayaDiagram::trim() {
    while (!head_.empty() && head_.back() == tail_top_ + 1) {
        tail_top_ = head_.back();
        head_.pop_back();
    }
}

int MayaDiagram::entry(int i) const {
    if (i < 1)
        throw std::out_of_range("MayaDiagram::entry is 1-based");
    const int m = static_cast<int>(head_.size());
    if (i <= m)
        return head_[static_cast<std::size_t>(i - 1)];
    return tail_top_ - (i - m - 1);
}

MayaDiagram MayaDiagram::with_added(int i, int amount) const {
    std::vector<int> seq;
    const int len = std::max(i, static_cast<int>(head_.size()));
    for (int k = 1; k <= len; ++k)
        seq.push_back(entry(k));
    seq[static_cast<std::size_t>(i - 1)] += amount;
    return MayaDiagram(std::move(seq), entry(len + 1));
}

MayaDiagram MayaDiagram::shifted(int offset) const {
    std::vector<int> seq = head_;
    for (int& x : seq)
        x += offset;
    return MayaDiagram(std::move(seq), tail_top_ + offset);
}

bool MayaDiagram::is_decreasing() const noexcept {
    for (std::size_t i = 1; i < head_.size(); ++i)
        if (head_[i] >= head_[i - 1])
            return false;
    return head_.empty() || head_.back() > tail_top_;
}

Partition MayaDiagram::to_partition() const {
    if (!is_decreasing())
        throw std::invalid_argument("to_partition: Maya diagram is not strictly decreasing");
    const int m = static_cast<int>(head_.size());
    std::vector<int> parts;
    for (int j = 1; j <= m; ++j)
        parts.push_back(head_[static_cast<std::size_t>(j - 1)] - tail_top_ - m - 1 + j);
    return Partition(std::move(parts));
}

MayaDiagram from_partition(const Partition& lambda, int r) {
    require_modulus(r);
    return MayaDiagram(beta_set(lambda, least_multiple_covering(lambda.length(), r)), -1);
}

SortedMaya sort_sign(const MayaDiagram& alpha) {
    std::vector<int> head = alpha.head();
    for (int x : head)
        if (x <= alpha.tail_top())
            return {alpha, 0};
    int sign = decreasing_sort_sign(head);
    std::sort(head.begin(), head.end(), std::greater<>());
    if (std::adjacent_find(head.begin(), head.end()) != head.end())
        return {alpha, 0};
    return {MayaDiagram(std::move(head), alpha.tail_top()), sign};
}

int CoreQuotient::quotient_size() const noexcept {
    int total = 0;
    for (const auto& q : quotient)
        total += q.size();
    return total;
}

CoreQuotient r_decompose(const Partition& lambda, int r) {
    require_modulus(r);
    const int n = least_multiple_covering(lambda.length(), r);
    const std::vector<int> betas = beta_set(lambda, n);

    std::vector<std::vector<int>> runners(static_cast<std::size_t>(r));
    for (int b : betas)  // decreasing, so each runner is decreasing too
        runners[static_cast<std::size_t>(b % r)].push_back(b);

    CoreQuotient cq;
    cq.r = r;
    std::vector<int> core_betas;
    std::size_t deepest = 0;
    for (int k = 0; k < r; ++k) {
        const auto& runner = runners[static_cast<std::size_t>(k)];
        std::vector<int> levels;
        for (int b : runner)
            levels.push_back((b - k) / r);
        cq.quotient.push_back(from_beta_set(std::move(levels)));
        for (int j = 0; j < static_cast<int>(runner.size()); ++j)
            core_betas.push_back(k + r * j);
        deepest = std::max(deepest, runner.size());
    }
    cq.core = from_beta_set(std::move(core_betas));

    // Read the runners row by row, slot 0 first; the sign is that of the
    // permutation back to the decreasing bead sequence. Dividing by the same
    // sign for the core (same runner counts) makes it independent of n.
    std::vector<int> interleaved, core_interleaved;
    for (std::size_t i = 0; i < deepest; ++i)
        for (int k = 0; k < r; ++k) {
            const auto& runner = runners[static_cast<std::size_t>(k)];
            if (i < runner.size()) {
                interleaved.push_back(runner[i]);
                core_interleaved.push_back(k + r * static_cast<int>(runner.size() - 1 - i));
            }
        }
    cq.sign = decreasing_sort_sign(interleaved) * decreasing_sort_sign(core_interleaved);
    return cq;
}

bool is_r_core(const Partition& lambda, int r) {
    require_modulus(r);
    return border_strip_removals(lambda, r).empty();
}

Partition r_compose(const CoreQuotient& cq) {
    const int r = cq.r;
    require_modulus(r);
    if (static_cast<int>(cq.quotient.size()) != r)
        throw std::invalid_argument("r_compose: quotient must have exactly r slots");
    if (!is_r_core(cq.core, r))
        throw std::invalid_argument("r_compose: " + cq.core.to_string() + " is not an r-core");

    std::vector<int> counts(static_cast<std::size_t>(r), 0);
    for (int b : beta_set(cq.core, least_multiple_covering(cq.core.length(), r)))
        ++counts[static_cast<std::size_t>(b % r)];
    // Adding r beads to the core's beta set puts one more bead on every runner.
    int extra = 0;
    for (int k = 0; k < r; ++k)
        extra = std::max(extra, cq.quotient[static_cast<std::size_t>(k)].length() - counts[static_cast<std::size_t>(k)]);

    std::vector<int> betas;
    for (int k = 0; k < r; ++k)
        for (int level : beta_set(cq.quotient[static_cast<std::size_t>(k)], counts[static_cast<std::size_t>(k)] + extra))
            betas.push_back(r * level + k);
    return from_beta_set(std::move(betas));
}

int delta2_column_hooks(const Partition& lambda) {
    Partition current = lambda;
    int vertical = 0;
    for (;;) {
        auto removals = border_strip_removals(current, 2);
        if (removals.empty())
            break;
        // Lowest row touched by the domino; deepest wins, horizontal before vertical.
        auto lowest_row = [&](const BorderStripRemoval& rm) {
            int row = 0;
            for (int i = 0; i < current.length(); ++i)
                if (rm.result.row(i) != current.row(i))
                    row = i;
            return row;
        };
        auto best = std::max_element(removals.begin(), removals.end(), [&](const auto& a, const auto& b) {
            int ra = lowest_row(a), rb = lowest_row(b);
            if (ra != rb)
                return ra < rb;
            return a.height > b.height;
        });
        vertical += best->height;
        current = best->result;
    }
    return vertical % 2 ? -1 : 1;
}

}  // namespace rsf
