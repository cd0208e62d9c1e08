#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "subalg/monomial.hpp"

namespace subalg {

enum class OrderKind { lex, grlex, grevlex, block };

/// Total multiplicative monomial order with 1 minimal: lexicographic,
/// graded lexicographic, graded reverse lexicographic, or a block order
/// comparing contiguous variable blocks left to right with a sub-order per
/// block. A block order whose leading block holds the x-variables is an
/// elimination order for the trailing blocks.
class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
    static MonomialOrder grlex() { return MonomialOrder(OrderKind::grlex); }
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }

    /// Blocks are given by their widths, in order; sub[i] orders block i.
    static MonomialOrder block(std::vector<std::size_t> widths, std::vector<OrderKind> sub) {
        if (widths.size() != sub.size() || widths.size() < 2)
            throw std::invalid_argument("block order needs >= 2 blocks with one sub-order each");
        for (OrderKind k : sub)
            if (k == OrderKind::block)
                throw std::invalid_argument("block sub-orders must not be block orders");
        MonomialOrder o(OrderKind::block);
        o.widths_ = std::move(widths);
        o.sub_ = std::move(sub);
        return o;
    }

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& block_widths() const { return widths_; }
    const std::vector<OrderKind>& block_orders() const { return sub_; }
    bool is_elimination() const { return kind_ == OrderKind::block; }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (a.width() != b.width())
            throw std::invalid_argument("order: monomial width mismatch");
        if (kind_ != OrderKind::block)
            return compare_range(kind_, a, b, 0, a.width());
        std::size_t total = 0;
        for (std::size_t w : widths_) total += w;
        if (total != a.width())
            throw std::invalid_argument("order: block widths do not cover the context");
        std::size_t first = 0;
        for (std::size_t i = 0; i < widths_.size(); ++i) {
            int c = compare_range(sub_[i], a, b, first, widths_[i]);
            if (c != 0) return c;
            first += widths_[i];
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool equal(const Monomial& a, const Monomial& b) const { return compare(a, b) == 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && widths_ == o.widths_ && sub_ == o.sub_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

private:
    explicit MonomialOrder(OrderKind k) : kind_(k) {}

    static int compare_range(OrderKind k, const Monomial& a, const Monomial& b,
                             std::size_t first, std::size_t count) {
        switch (k) {
            case OrderKind::lex: {
                for (std::size_t i = first; i < first + count; ++i) {
                    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
                }
                return 0;
            }
            case OrderKind::grlex: {
                long long da = a.degree_on(first, count), db = b.degree_on(first, count);
                if (da != db) return da < db ? -1 : 1;
                return compare_range(OrderKind::lex, a, b, first, count);
            }
            case OrderKind::grevlex: {
                long long da = a.degree_on(first, count), db = b.degree_on(first, count);
                if (da != db) return da < db ? -1 : 1;
                // ties: the last position where they differ, smaller exponent wins
                for (std::size_t i = first + count; i-- > first;) {
                    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
                }
                return 0;
            }
            case OrderKind::block:
                throw std::logic_error("nested block order");
        }
        return 0;
    }

    OrderKind kind_;
    std::vector<std::size_t> widths_;
    std::vector<OrderKind> sub_;
};

inline std::string order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "grlex";
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::block: return "block";
    }
    return "?";
}

}  // namespace subalg
