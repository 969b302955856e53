#include "stepup/chi.hpp"

#include "stepup/errors.hpp"

#include <algorithm>
#include <array>

namespace stepup {

HVertex::HVertex(std::uint64_t value, int n) : value_(value), n_(n)
{
    if (n < 1 || n > 64)
        throw RangeError("HVertex: bit length must be in [1, 64]");
    if (n < 64 && (value >> n) != 0)
        throw RangeError("HVertex: value does not fit in n bits");
}

int HVertex::at(int i) const
{
    if (i < 1 || i > n_)
        throw RangeError("HVertex: coordinate out of range");
    return static_cast<int>((value_ >> (n_ - i)) & 1u);
}

int gamma(const HVertex& x, const HVertex& y)
{
    if (x.bits() != y.bits())
        throw DimensionError("gamma: bit lengths differ");
    if (x.value() == y.value())
        throw DegenerateError("gamma: x == y");
    return gamma_raw(x.value(), y.value(), x.bits());
}

int delta(const HVertex& x, const HVertex& y, const HVertex& z)
{
    if (!(x.value() < y.value() && y.value() < z.value()))
        throw OrderError("delta: requires x < y < z");
    return gamma(x, y) < gamma(y, z) ? 1 : -1;
}

ChiColor chi_color(HVertex u, HVertex v, HVertex w, const SigmaParams& params)
{
    const int n = u.bits();
    if (v.bits() != n || w.bits() != n)
        throw DimensionError("chi_color: bit lengths differ");
    if (params.n_requested < static_cast<std::uint64_t>(n))
        throw CapacityError("chi_color: sigma parameters cover fewer than n vertices");
    std::array<HVertex, 3> t{u, v, w};
    std::sort(t.begin(), t.end(), [](const HVertex& a, const HVertex& b) { return a.value() < b.value(); });
    if (t[0].value() == t[1].value() || t[1].value() == t[2].value())
        throw OrderError("chi_color: vertices must be distinct");
    const int a = gamma(t[0], t[1]);
    const int b = gamma(t[1], t[2]);
    const SigmaColor base = sigma_edge(static_cast<std::uint64_t>(std::min(a, b)),
        static_cast<std::uint64_t>(std::max(a, b)), params);
    return ChiColor{base, a < b ? 1 : -1};
}

int lift_size(std::uint64_t N)
{
    if (N < 2)
        throw RangeError("lift_size: N must be >= 2");
    return ceil_log2(N);
}

SigmaParams chi_params(std::uint64_t N)
{
    const int n = lift_size(N);
    return select_params(static_cast<std::uint64_t>(std::max(2, n)));
}

} // namespace stepup
