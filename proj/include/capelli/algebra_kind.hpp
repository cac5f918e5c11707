#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace capelli {

enum class KindType { I, II, III };

// A variable z_{ab} after canonicalization: its slot in the row-major
// variable list and the sign picked up by aliasing (type III z_{ba} = -z_{ab}).
struct VarRef {
    int index = 0;
    int sign = 1;
};

// Which of the three Heisenberg algebras is in play, with its index bounds.
//   I(p,q): independent z_{i alpha}, 1<=i<=p, 1<=alpha<=q
//   II(N):  symmetric z_{ij}=z_{ji}, canonical i<=j
//   III(N): antisymmetric z_{ij}=-z_{ji}, canonical i<j, z_{ii}=0
class AlgebraKind {
public:
    static AlgebraKind type_i(int p, int q) { return AlgebraKind(KindType::I, p, q); }
    static AlgebraKind type_ii(int n) { return AlgebraKind(KindType::II, n, n); }
    static AlgebraKind type_iii(int n) { return AlgebraKind(KindType::III, n, n); }

    KindType type() const { return type_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    // N for types II/III; p for type I.
    int size() const { return rows_; }
    // Largest n for which the n x n leading minor of z exists.
    int rank() const { return std::min(rows_, cols_); }

    int num_vars() const { return static_cast<int>(pairs_.size()); }
    const std::pair<int, int>& pair_of(int index) const { return pairs_.at(static_cast<std::size_t>(index)); }

    bool valid_pair(int a, int b) const {
        if (a < 1 || b < 1 || a > rows_ || b > cols_) return false;
        return !(type_ == KindType::III && a == b);
    }

    VarRef var(int a, int b) const {
        if (a < 1 || b < 1 || a > rows_ || b > cols_)
            throw std::invalid_argument("index pair (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") out of range for " + name());
        if (type_ == KindType::III && a == b)
            throw std::invalid_argument("diagonal index (" + std::to_string(a) + "," + std::to_string(a) +
                                        ") is identically zero for type III");
        int sign = 1;
        if (type_ != KindType::I && a > b) {
            std::swap(a, b);
            if (type_ == KindType::III) sign = -1;
        }
        return {slot(a, b), sign};
    }

    std::string name() const {
        switch (type_) {
            case KindType::I: return "I(" + std::to_string(rows_) + "," + std::to_string(cols_) + ")";
            case KindType::II: return "II(" + std::to_string(rows_) + ")";
            case KindType::III: return "III(" + std::to_string(rows_) + ")";
        }
        return {};
    }

    friend bool operator==(const AlgebraKind& a, const AlgebraKind& b) {
        return a.type_ == b.type_ && a.rows_ == b.rows_ && a.cols_ == b.cols_;
    }

private:
    AlgebraKind(KindType t, int rows, int cols) : type_(t), rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("algebra dimensions must be positive");
        for (int a = 1; a <= rows; ++a)
            for (int b = 1; b <= cols; ++b) {
                if (t == KindType::II && b < a) continue;
                if (t == KindType::III && b <= a) continue;
                pairs_.emplace_back(a, b);
            }
    }

    int slot(int a, int b) const {
        switch (type_) {
            case KindType::I: return (a - 1) * cols_ + (b - 1);
            case KindType::II: {
                // rows 1..a-1 contribute N, N-1, ..., N-a+2 entries
                int before = (a - 1) * rows_ - (a - 1) * (a - 2) / 2;
                return before + (b - a);
            }
            case KindType::III: {
                int before = (a - 1) * (rows_ - 1) - (a - 1) * (a - 2) / 2;
                return before + (b - a - 1);
            }
        }
        return -1;
    }

    KindType type_;
    int rows_;
    int cols_;
    std::vector<std::pair<int, int>> pairs_;
};

}  // namespace capelli
