#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "phdiv/errors.hpp"
#include "phdiv/persistence.hpp"

namespace phdiv {

namespace {

/// Dense Z/2 column.
class BitColumn {
public:
    explicit BitColumn(std::size_t rows) : words_((rows + 63) / 64, 0) {}

    void set(std::size_t row) { words_[row / 64] ^= std::uint64_t{1} << (row % 64); }

    void add(const BitColumn& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    }

    /// Highest set row, or -1 for the zero column.
    std::ptrdiff_t low() const {
        for (std::size_t w = words_.size(); w-- > 0;) {
            if (words_[w] != 0) {
                return static_cast<std::ptrdiff_t>(w * 64 + 63 - std::countl_zero(words_[w]));
            }
        }
        return -1;
    }

private:
    std::vector<std::uint64_t> words_;
};

}  // namespace

OracleDiagrams oracle_reduce(const Filtration& filt, std::size_t max_simplices) {
    if (filt.max_dim() < 2) {
        throw FiltrationDimError("the oracle needs a filtration built with max_dim = 2");
    }
    const std::size_t approx = filt.vertex_count() + filt.edges().size();
    if (approx > max_simplices) {
        throw SizeLimit("oracle limited to " + std::to_string(max_simplices) + " simplices");
    }
    const std::vector<Simplex> simplices = filt.materialize();
    const std::size_t count = simplices.size();
    if (count > max_simplices) {
        throw SizeLimit("filtration has " + std::to_string(count) +
                        " simplices; the oracle is limited to " + std::to_string(max_simplices));
    }

    // Row index of every simplex, looked up by its vertex tuple.
    std::map<std::array<Vertex, 3>, std::size_t> row_of[3];
    for (std::size_t idx = 0; idx < count; ++idx) {
        row_of[simplices[idx].dim][simplices[idx].vertices] = idx;
    }

    std::vector<BitColumn> columns(count, BitColumn(count));
    for (std::size_t idx = 0; idx < count; ++idx) {
        const Simplex& s = simplices[idx];
        const auto& v = s.vertices;
        if (s.dim == 1) {
            columns[idx].set(row_of[0].at({v[0], 0, 0}));
            columns[idx].set(row_of[0].at({v[1], 0, 0}));
        } else if (s.dim == 2) {
            columns[idx].set(row_of[1].at({v[0], v[1], 0}));
            columns[idx].set(row_of[1].at({v[0], v[2], 0}));
            columns[idx].set(row_of[1].at({v[1], v[2], 0}));
        }
    }

    std::vector<std::ptrdiff_t> column_with_low(count, -1);
    std::vector<bool> is_low(count, false);
    std::vector<std::ptrdiff_t> lows(count, -1);
    for (std::size_t j = 0; j < count; ++j) {
        std::ptrdiff_t low = columns[j].low();
        while (low >= 0 && column_with_low[low] >= 0) {
            columns[j].add(columns[column_with_low[low]]);
            low = columns[j].low();
        }
        lows[j] = low;
        if (low >= 0) {
            column_with_low[low] = static_cast<std::ptrdiff_t>(j);
            is_low[low] = true;
        }
    }

    OracleDiagrams out{{0, {}}, {1, {}}};
    for (std::size_t j = 0; j < count; ++j) {
        if (lows[j] >= 0) {
            const Simplex& birth = simplices[lows[j]];
            PersistenceDiagram* target = birth.dim == 0 ? &out.h0 : birth.dim == 1 ? &out.h1 : nullptr;
            if (target) target->intervals.push_back({birth.value, simplices[j].value});
        } else if (!is_low[j]) {
            const Simplex& s = simplices[j];
            if (s.dim == 0) out.h0.intervals.push_back({s.value, kEssential});
            if (s.dim == 1) out.h1.intervals.push_back({s.value, kEssential});
        }
    }
    return out;
}

}  // namespace phdiv
