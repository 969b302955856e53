#include "stepup/sources.hpp"

#include "stepup/errors.hpp"

#include <limits>
#include <unordered_map>

namespace stepup {

ColoringSource::ColoringSource(int uniformity, std::uint64_t n_vertices, ColorFn color_of)
    : k_(uniformity), n_(n_vertices), fn_(std::move(color_of))
{
    if (k_ < 1)
        throw ParameterError("uniformity must be positive");
    if (!fn_)
        throw ParameterError("coloring function is empty");
}

ColorTable ColorTable::build(std::uint64_t n, const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& key)
{
    if (n > (std::uint64_t{1} << 16))
        throw CapacityError("color table limited to 65536 vertices");
    ColorTable table;
    table.n_ = n;
    table.ids_.assign(n * n, 0);
    std::unordered_map<std::uint64_t, std::uint32_t> interned;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i) {
            const auto [it, fresh] = interned.try_emplace(key(i, j), static_cast<std::uint32_t>(interned.size()));
            table.ids_[i * n + j] = it->second;
            table.ids_[j * n + i] = it->second;
        }
    }
    table.palette_ = static_cast<std::uint32_t>(interned.size());
    return table;
}

ColorTable ColorTable::from_sigma(const SigmaParams& params, const std::function<SigmaColor(const SigmaColor&)>& projection)
{
    const auto verts = sigma_vertices(params);
    std::unordered_map<SigmaColor, std::uint64_t, SigmaColorHash> keys;
    return build(params.n_requested, [&](std::uint64_t i, std::uint64_t j) {
        SigmaColor c = sigma_color(verts[i], verts[j]);
        if (projection)
            c = projection(c);
        return keys.try_emplace(c, keys.size()).first->second;
    });
}

SigmaSource::SigmaSource(const SigmaParams& params) : params_(params)
{
    if (params.t > 24)
        throw CapacityError("sigma source supports t <= 24");
    if (params.n_requested <= sigma_table_limit)
        table_ = ColorTable::from_sigma(params);
    else
        vertices_ = sigma_vertices(params);
}

std::uint64_t SigmaSource::color_of(std::span<const std::uint64_t> edge) const
{
    if (table_.size() != 0)
        return table_.at(edge[0], edge[1]);
    const SigmaColor c = sigma_color(vertices_[edge[0]], vertices_[edge[1]]);
    // 7 + 7 + 25 + 25 bits.
    return (static_cast<std::uint64_t>(c.c1) << 57) | (static_cast<std::uint64_t>(c.c2) << 50)
        | ((c.c3 - 1) << 25) | (c.c4 - 1);
}

ChiSource::ChiSource(std::uint64_t n_vertices)
    : n_vertices_(n_vertices), bits_(lift_size(n_vertices)), params_(chi_params(n_vertices))
{
    gamma_ids_ = ColorTable::from_sigma(params_);
}

TableSource::TableSource(int uniformity, std::uint64_t n_vertices, std::vector<std::uint32_t> ids)
    : k_(uniformity), n_(n_vertices), ids_(std::move(ids))
{
    if (k_ < 1 || static_cast<std::uint64_t>(k_) > n_)
        throw ParameterError("table source: need 1 <= k <= n");
    if (choose_wide(static_cast<std::int64_t>(n_), k_) != ids_.size())
        throw FormatError("table source: id count differs from C(n, k)");
}

std::uint64_t TableSource::color_of(std::span<const std::uint64_t> edge) const
{
    return ids_[static_cast<std::size_t>(colex_rank(edge))];
}

} // namespace stepup
