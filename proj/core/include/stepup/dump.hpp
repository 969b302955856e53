#pragma once

// Coloring dumps: every sorted edge of the complete k-graph mapped to a
// palette id. Ids are contiguous from 0 in first-seen colex edge order.
//
// csv:  PATH holds a header row ("u,v,color_id" or "u,v,w,color_id") and one
//       record per edge with 1-based labels ascending; PATH.palette.json holds
//       the header fields and the palette table.
// json: one document with the same header fields, the palette table and an
//       "edges" array of [u, v, (w,) color_id] records.

#include "stepup/sigma.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace stepup {

enum class DumpFormat { csv, json };

struct ColoringDump {
    std::string kind;              // "sigma", "chi", "certificate", "table"
    int k = 2;
    std::uint64_t vertices = 0;
    std::optional<SigmaParams> params;
    std::optional<int> bits;       // chi: bit length of the lift
    std::vector<std::string> fields;                    // names of the palette tuple fields
    std::vector<std::vector<std::int64_t>> palette;     // palette[id] = tuple
    std::vector<std::uint32_t> edge_colors;             // colex edge order

    std::uint64_t palette_size() const noexcept { return palette.size(); }
    bool operator==(const ColoringDump&) const = default;
};

/// Edges above which generate refuses to build a full dump.
inline constexpr std::uint64_t max_dump_edges = 100'000'000;

ColoringDump make_sigma_dump(std::uint64_t n, unsigned workers = 0);
ColoringDump make_chi_dump(std::uint64_t N, unsigned workers = 0);
/// Interns arbitrary per-edge ids (colex order) into a dump with a
/// single-field palette holding the original id.
ColoringDump make_table_dump(std::string kind, int k, std::uint64_t n, const std::vector<std::uint32_t>& ids);

std::string palette_sidecar_path(const std::string& path);

/// IoError on write failure.
void write_dump(const ColoringDump& dump, const std::string& path, DumpFormat format);
void write_dump_json(const ColoringDump& dump, std::ostream& out);
void write_dump_csv(const ColoringDump& dump, std::ostream& records, std::ostream& sidecar);

/// Format detected from content. IoError if unreadable, FormatError if malformed.
ColoringDump read_dump(const std::string& path);
ColoringDump parse_dump_json(std::istream& in);
/// sidecar may be null; vertex count is then the largest label.
ColoringDump parse_dump_csv(std::istream& records, std::istream* sidecar);

} // namespace stepup
