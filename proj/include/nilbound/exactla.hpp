#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "nilbound/ring.hpp"

namespace nilbound {

/// Sparse vector over F_p, entries sorted by label, values in (0, p).
template <class Label>
struct SparseVec {
    std::vector<std::pair<Label, uint64_t>> entries;

    bool empty() const { return entries.empty(); }

    void add_entry(const Label& l, uint64_t v, uint64_t p) {
        v %= p;
        if (v) entries.emplace_back(l, v);
    }

    /// Sorts and collapses duplicate labels; call once after building.
    void normalize(uint64_t p) {
        std::sort(entries.begin(), entries.end(),
                  [](auto& a, auto& b) { return a.first < b.first; });
        std::vector<std::pair<Label, uint64_t>> out;
        for (auto& [l, v] : entries) {
            if (!out.empty() && out.back().first == l)
                out.back().second = mod_add(out.back().second, v, p);
            else
                out.emplace_back(l, v % p);
            if (!out.empty() && out.back().second == 0) out.pop_back();
        }
        entries = std::move(out);
    }
};

/// r -= c * s, both sorted; result stays sorted with no zero entries.
template <class Label>
void axpy_sub(SparseVec<Label>& r, uint64_t c, const SparseVec<Label>& s,
              uint64_t p) {
    std::vector<std::pair<Label, uint64_t>> out;
    out.reserve(r.entries.size() + s.entries.size());
    size_t i = 0, j = 0;
    while (i < r.entries.size() || j < s.entries.size()) {
        if (j == s.entries.size() ||
            (i < r.entries.size() && r.entries[i].first < s.entries[j].first)) {
            out.push_back(r.entries[i++]);
        } else if (i == r.entries.size() ||
                   s.entries[j].first < r.entries[i].first) {
            uint64_t v = mod_sub(0, mod_mul(c, s.entries[j].second, p), p);
            if (v) out.emplace_back(s.entries[j].first, v);
            ++j;
        } else {
            uint64_t v = mod_sub(r.entries[i].second,
                                 mod_mul(c, s.entries[j].second, p), p);
            if (v) out.emplace_back(r.entries[i].first, v);
            ++i;
            ++j;
        }
    }
    r.entries = std::move(out);
}

template <class Label>
void scale_vec(SparseVec<Label>& r, uint64_t c, uint64_t p) {
    for (auto& [l, v] : r.entries) v = mod_mul(v, c, p);
}

/// Incrementally built reduced row-echelon span over F_p. Labels play the
/// role of column indices; rows are kept sorted by pivot label, pivots
/// normalized to 1, and fully reduced against each other, so the stored
/// basis depends only on the spanned subspace, not on insertion order.
template <class Label>
class GradedSpan {
public:
    explicit GradedSpan(uint64_t p) : p_(p) {
        if (!is_prime(p)) throw UsageError("GradedSpan: modulus must be prime");
    }

    uint64_t modulus() const { return p_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<SparseVec<Label>>& rows() const { return rows_; }

    /// Residual of v after reduction against all rows.
    SparseVec<Label> reduce(SparseVec<Label> v) const {
        for (auto& row : rows_) {
            if (v.empty()) break;
            uint64_t c = coefficient_at(v, row.entries.front().first);
            if (c) axpy_sub(v, c, row, p_);
        }
        return v;
    }

    bool member(const SparseVec<Label>& v) const { return reduce(v).empty(); }

    /// Inserts v; returns true iff v was outside the span.
    bool insert(SparseVec<Label> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        scale_vec(v, mod_inv(v.entries.front().second, p_), p_);
        // eliminate the new pivot from existing rows
        const Label& pivot = v.entries.front().first;
        for (auto& row : rows_) {
            uint64_t c = coefficient_at(row, pivot);
            if (c) axpy_sub(row, c, v, p_);
        }
        auto pos = std::lower_bound(
            rows_.begin(), rows_.end(), v, [](auto& a, auto& b) {
                return a.entries.front().first < b.entries.front().first;
            });
        rows_.insert(pos, std::move(v));
        return true;
    }

private:
    static uint64_t coefficient_at(const SparseVec<Label>& v, const Label& l) {
        auto it = std::lower_bound(
            v.entries.begin(), v.entries.end(), l,
            [](auto& e, const Label& lab) { return e.first < lab; });
        if (it != v.entries.end() && it->first == l) return it->second;
        return 0;
    }

    uint64_t p_;
    std::vector<SparseVec<Label>> rows_;
};

/// Number of candidates that successively enlarge the span.
template <class Label>
size_t new_generator_count(GradedSpan<Label> span,
                           const std::vector<SparseVec<Label>>& candidates) {
    size_t count = 0;
    for (auto& v : candidates)
        if (span.insert(v)) ++count;
    return count;
}

/// Echelon span that additionally remembers, for every row, its expression
/// as a combination of the inserted vectors, so a membership test can be
/// turned into explicit solution coefficients.
template <class Label>
class LinearSolver {
public:
    explicit LinearSolver(uint64_t p) : p_(p) {
        if (!is_prime(p)) throw UsageError("LinearSolver: modulus must be prime");
    }

    size_t inserted() const { return count_; }

    void insert(SparseVec<Label> v) {
        std::vector<uint64_t> expr(count_ + 1, 0);
        expr[count_] = 1;
        ++count_;
        reduce_tracked(v, expr);
        if (v.empty()) return; // dependent candidate
        uint64_t inv = mod_inv(v.entries.front().second, p_);
        scale_vec(v, inv, p_);
        for (auto& e : expr) e = mod_mul(e, inv, p_);
        rows_.emplace_back(std::move(v), std::move(expr));
        std::sort(rows_.begin(), rows_.end(), [](auto& a, auto& b) {
            return a.first.entries.front().first < b.first.entries.front().first;
        });
    }

    /// Coefficients c with target = sum c_i * inserted_i, if solvable.
    std::optional<std::vector<uint64_t>> solve(SparseVec<Label> target) const {
        // target - sum mu_j row_j = 0  =>  target = sum mu_j row_j
        std::vector<uint64_t> acc(count_, 0);
        for (auto& [row, rexpr] : rows_) {
            if (target.empty()) break;
            uint64_t c = coefficient_at(target, row.entries.front().first);
            if (!c) continue;
            axpy_sub(target, c, row, p_);
            for (size_t k = 0; k < rexpr.size(); ++k)
                acc[k] = mod_add(acc[k], mod_mul(c, rexpr[k], p_), p_);
        }
        if (!target.empty()) return std::nullopt;
        return acc;
    }

private:
    void reduce_tracked(SparseVec<Label>& v, std::vector<uint64_t>& expr) const {
        for (auto& [row, rexpr] : rows_) {
            if (v.empty()) break;
            uint64_t c = coefficient_at(v, row.entries.front().first);
            if (!c) continue;
            axpy_sub(v, c, row, p_);
            for (size_t k = 0; k < rexpr.size(); ++k)
                expr[k] = mod_sub(expr[k], mod_mul(c, rexpr[k], p_), p_);
        }
    }

    static uint64_t coefficient_at(const SparseVec<Label>& v, const Label& l) {
        auto it = std::lower_bound(
            v.entries.begin(), v.entries.end(), l,
            [](auto& e, const Label& lab) { return e.first < lab; });
        if (it != v.entries.end() && it->first == l) return it->second;
        return 0;
    }

    uint64_t p_;
    size_t count_ = 0;
    std::vector<std::pair<SparseVec<Label>, std::vector<uint64_t>>> rows_;
};

} // namespace nilbound
