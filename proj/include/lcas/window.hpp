#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lcas/exponents.hpp"
#include "lcas/fp.hpp"
#include "lcas/laurent.hpp"

namespace lcas {

// Finite set of cells with a fixed ordering: cells are stored sorted
// lexicographically, so vectors indexed by a window are canonical.
class Window {
public:
    Window() = default;

    explicit Window(std::vector<ExpVec> cells) {
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        for (const ExpVec& c : cells)
            if (c.size() != cells.front().size())
                throw DomainError("window cells have mixed dimensions");
        cells_ = std::move(cells);
        for (size_t i = 0; i < cells_.size(); ++i) index_.emplace(cells_[i], i);
    }

    static Window from_shape(const Shape& s) {
        return Window(std::vector<ExpVec>(s.begin(), s.end()));
    }

    size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const ExpVec& cell(size_t i) const { return cells_[i]; }
    const std::vector<ExpVec>& cells() const { return cells_; }

    std::optional<size_t> index_of(const ExpVec& c) const {
        auto it = index_.find(c);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const ExpVec& c) const { return index_.count(c) != 0; }

    Window translated(const ExpVec& by) const {
        std::vector<ExpVec> moved;
        moved.reserve(cells_.size());
        for (const ExpVec& c : cells_) moved.push_back(vec_add(c, by));
        return Window(std::move(moved));
    }

    friend bool operator==(const Window& a, const Window& b) { return a.cells_ == b.cells_; }

private:
    std::vector<ExpVec> cells_;
    std::map<ExpVec, size_t> index_;
};

// Values on a window's cells, aligned with the window's cell order.
struct Configuration {
    Window window;
    std::vector<uint32_t> values;

    Configuration() = default;
    Configuration(Window w, std::vector<uint32_t> v) : window(std::move(w)), values(std::move(v)) {
        if (window.size() != values.size())
            throw DomainError("configuration values do not match the window");
    }

    uint32_t at(const ExpVec& cell) const {
        auto i = window.index_of(cell);
        if (!i) throw DomainError("cell outside the window");
        return values[*i];
    }

    friend bool operator==(const Configuration& a, const Configuration& b) {
        return a.window == b.window && a.values == b.values;
    }
};

} // namespace lcas
