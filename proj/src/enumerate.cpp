#include "creals/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace creals {

namespace {

/// All reduced rationals of exactly the given height, in tie order:
/// |numerator| ascending, nonnegative before negative, denominator ascending.
std::vector<Rat> rationals_of_height(unsigned long h) {
    // Candidates (num, den) with gcd(|num|, den) = 1 and max(|num|, den) = h.
    std::vector<std::tuple<unsigned long, int, unsigned long>> keys;
    if (h == 1) {
        keys = {{0, 0, 1}, {1, 0, 1}, {1, 1, 1}};
    } else {
        for (unsigned long num = 1; num < h; ++num) {
            if (std::gcd(num, h) == 1) {
                keys.emplace_back(num, 0, h);
                keys.emplace_back(num, 1, h);
            }
        }
        for (unsigned long den = 1; den < h; ++den) {
            if (std::gcd(h, den) == 1) {
                keys.emplace_back(h, 0, den);
                keys.emplace_back(h, 1, den);
            }
        }
    }
    std::sort(keys.begin(), keys.end());
    std::vector<Rat> out;
    out.reserve(keys.size());
    for (const auto& [num, negative, den] : keys) {
        long n = static_cast<long>(num);
        out.push_back(make_rat(Int(negative ? -n : n),
                               Int(static_cast<long>(den))));
    }
    return out;
}

}  // namespace

std::vector<Rat> first_rationals(std::size_t count) {
    std::vector<Rat> out;
    out.reserve(count);
    for (unsigned long h = 1; out.size() < count; ++h) {
        for (const Rat& q : rationals_of_height(h)) {
            if (out.size() == count) break;
            out.push_back(q);
        }
    }
    return out;
}

bool for_each_index_tuple(
    std::size_t arity, std::size_t max_index, std::size_t limit,
    const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    if (limit == 0) return false;
    std::vector<std::size_t> idx(arity, 0);
    if (arity == 0) {
        return fn(idx);
    }
    std::size_t visited = 0;
    for (std::size_t block = 0; block <= max_index; ++block) {
        // Lexicographic odometer over {0..block}^arity, keeping only tuples
        // whose maximum is exactly `block` so each tuple appears once.
        std::fill(idx.begin(), idx.end(), 0);
        for (;;) {
            if (std::find(idx.begin(), idx.end(), block) != idx.end()) {
                if (fn(idx)) return true;
                if (++visited == limit) return false;
            }
            std::size_t pos = arity;
            while (pos > 0 && idx[pos - 1] == block) {
                idx[--pos] = 0;
            }
            if (pos == 0) break;
            ++idx[pos - 1];
        }
    }
    return false;
}

}  // namespace creals
