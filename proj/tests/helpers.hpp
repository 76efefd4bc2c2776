#pragma once

#include <random>
#include <string>
#include <vector>

#include "vinc/combinatorics.hpp"

namespace th {

// {{2,3},{5}} style from explicit blocks; each block must be a run.
inline vinc::LabeledIntervalPartition lip(const std::vector<std::vector<int>>& blocks) {
    std::vector<vinc::Interval> iv;
    for (const auto& b : blocks) iv.push_back({b.front(), static_cast<int>(b.size())});
    return vinc::LabeledIntervalPartition(iv);
}

inline vinc::Permutation perm(const std::string& digits) { return vinc::Permutation::from_digits(digits); }

// Random interval partition with ground set inside [n].
inline vinc::LabeledIntervalPartition random_lip(std::mt19937_64& rng, int n) {
    std::vector<vinc::Interval> out;
    std::bernoulli_distribution keep(0.6), join(0.5);
    for (int x = 1; x <= n; ++x) {
        if (!keep(rng)) continue;
        if (!out.empty() && out.back().last() + 1 == x && join(rng))
            ++out.back().len;
        else
            out.push_back({x, 1});
    }
    return vinc::LabeledIntervalPartition(out);
}

// Every interval partition whose ground set is inside [n].
inline std::vector<vinc::LabeledIntervalPartition> all_lips(int n) {
    std::vector<vinc::LabeledIntervalPartition> out;
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;  // per element: absent, new block, extend
    for (int code = 0; code < total; ++code) {
        std::vector<vinc::Interval> iv;
        int c = code;
        bool ok = true;
        int prev = 0;
        for (int x = 1; x <= n && ok; ++x) {
            int l = c % 3;
            c /= 3;
            if (l == 1) iv.push_back({x, 1});
            if (l == 2) {
                if (prev != x - 1 || iv.empty()) ok = false;
                else ++iv.back().len;
            }
            if (l != 0) prev = x;
        }
        if (ok) out.emplace_back(iv);
    }
    return out;
}

}  // namespace th
