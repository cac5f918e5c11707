#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace capelli {

inline int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            if (perm[a] > perm[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Calls fn(perm, sign) for every permutation of {1..n} in lexicographic order.
template <class Fn>
void for_each_permutation(int n, Fn fn) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        fn(perm, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

struct Matching {
    int sign = 1;
    std::vector<std::pair<int, int>> pairs;  // each pair (a,b) with a<b
};

// Signed perfect matchings of {1..2m}: pair the smallest remaining element
// with the element in position j of the remaining list, sign (-1)^j.
// The matching {(1,2),(3,4),...} has sign +1.
inline std::vector<Matching> perfect_matchings(int m) {
    if (m < 0) throw std::invalid_argument("negative matching size");
    std::vector<Matching> out;
    std::vector<int> remaining(static_cast<std::size_t>(2 * m));
    std::iota(remaining.begin(), remaining.end(), 1);
    Matching cur;
    auto rec = [&](auto&& self, std::vector<int>& rest) -> void {
        if (rest.empty()) {
            out.push_back(cur);
            return;
        }
        int first = rest.front();
        for (std::size_t j = 1; j < rest.size(); ++j) {
            int partner = rest[j];
            std::vector<int> next;
            next.reserve(rest.size() - 2);
            for (std::size_t t = 1; t < rest.size(); ++t)
                if (t != j) next.push_back(rest[t]);
            int saved = cur.sign;
            // partner sits at 1-based position j+1
            if ((j + 1) % 2 == 1) cur.sign = -cur.sign;
            cur.pairs.emplace_back(first, partner);
            self(self, next);
            cur.pairs.pop_back();
            cur.sign = saved;
        }
    };
    rec(rec, remaining);
    return out;
}

// Pfaffian of an antisymmetric 2m x 2m matrix via signed perfect matchings.
// `at(i,j)` is 1-based.
template <class T, class At>
T pfaffian(int size, At at) {
    if (size % 2 != 0) return T(0);
    T total(0);
    for (const auto& mt : perfect_matchings(size / 2)) {
        T term(mt.sign);
        for (auto [a, b] : mt.pairs) term *= at(a, b);
        total += term;
    }
    return total;
}

// Leibniz determinant, 1-based accessor. Entries are multiplied in row order.
template <class T, class At>
T leibniz_determinant(int size, At at) {
    T total(0);
    for_each_permutation(size, [&](const std::vector<int>& perm, int sign) {
        T term(sign);
        for (int i = 1; i <= size; ++i) term *= at(i, perm[static_cast<std::size_t>(i - 1)]);
        total += term;
    });
    return total;
}

}  // namespace capelli
