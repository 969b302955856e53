#include "stepup/dump.hpp"

#include "stepup/chi.hpp"
#include "stepup/combinat.hpp"
#include "stepup/errors.hpp"
#include "stepup/sources.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace stepup {

namespace {

constexpr std::size_t chunk_edges = std::size_t{1} << 20;

unsigned worker_count(unsigned requested)
{
    if (requested != 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::uint64_t edge_total(std::uint64_t n, int k)
{
    const u128 total = choose_wide(static_cast<std::int64_t>(n), k);
    if (total > max_dump_edges)
        throw CapacityError("coloring has " + to_string(total) + " edges; full dumps are limited to "
            + std::to_string(max_dump_edges));
    return static_cast<std::uint64_t>(total);
}

// Computes key(edge) for every edge in colex order, chunk by chunk, in
// parallel, and interns keys sequentially in first-seen order.
template <class KeyFn>
std::vector<std::uint32_t> intern_edges(std::uint64_t n, int k, unsigned workers, KeyFn key,
    std::vector<std::uint64_t>& keys_in_order)
{
    const std::uint64_t total = edge_total(n, k);
    const unsigned w = worker_count(workers);
    std::vector<std::uint32_t> ids;
    ids.reserve(total);
    std::unordered_map<std::uint64_t, std::uint32_t> interned;
    std::vector<std::uint64_t> keys;
    for (std::uint64_t base = 0; base < total; base += chunk_edges) {
        const std::uint64_t len = std::min<std::uint64_t>(chunk_edges, total - base);
        keys.assign(len, 0);
        auto fill = [&](std::uint64_t a, std::uint64_t b) {
            if (a >= b)
                return;
            std::vector<std::uint64_t> edge(static_cast<std::size_t>(k));
            colex_unrank(base + a, edge);
            for (std::uint64_t i = a; i < b; ++i) {
                keys[i] = key(std::span<const std::uint64_t>(edge));
                next_colex(edge, n);
            }
        };
        if (w == 1) {
            fill(0, len);
        } else {
            std::vector<std::thread> threads;
            for (unsigned t = 0; t < w; ++t)
                threads.emplace_back(fill, len * t / w, len * (t + 1) / w);
            for (auto& t : threads)
                t.join();
        }
        for (const auto kval : keys) {
            const auto [it, fresh] = interned.try_emplace(kval, static_cast<std::uint32_t>(interned.size()));
            if (fresh)
                keys_in_order.push_back(kval);
            ids.push_back(it->second);
        }
    }
    return ids;
}

std::vector<std::int64_t> sigma_tuple(const SigmaColor& c)
{
    return {c.c1, c.c2, static_cast<std::int64_t>(c.c3), static_cast<std::int64_t>(c.c4)};
}

} // namespace

ColoringDump make_sigma_dump(std::uint64_t n, unsigned workers)
{
    const SigmaParams params = select_params(n);
    edge_total(n, 2);
    const SigmaSource src(params);
    const auto verts = sigma_vertices(params);
    std::vector<std::uint64_t> keys;
    ColoringDump dump;
    dump.kind = "sigma";
    dump.k = 2;
    dump.vertices = n;
    dump.params = params;
    dump.fields = {"c1", "c2", "c3", "c4"};
    // Representative edge per key, to recover the color tuple.
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> witness;
    dump.edge_colors = intern_edges(n, 2, workers,
        [&](std::span<const std::uint64_t> e) { return src.color_of(e); }, keys);
    {
        std::vector<std::uint64_t> edge{0, 1};
        std::size_t found = 0;
        std::vector<bool> have(keys.size(), false);
        std::uint64_t idx = 0;
        do {
            const auto id = dump.edge_colors[idx++];
            if (!have[id]) {
                have[id] = true;
                ++found;
                witness.emplace(id, std::make_pair(edge[0], edge[1]));
            }
        } while (found < keys.size() && next_colex(edge, n));
    }
    dump.palette.resize(keys.size());
    for (std::uint32_t id = 0; id < keys.size(); ++id) {
        const auto [i, j] = witness.at(id);
        dump.palette[id] = sigma_tuple(sigma_color(verts[i], verts[j]));
    }
    return dump;
}

ColoringDump make_chi_dump(std::uint64_t N, unsigned workers)
{
    if (N < 3)
        throw RangeError("chi dump needs N >= 3");
    edge_total(N, 3);
    const ChiSource src(N);
    const int n = src.bits();
    // Sigma color for every interned gamma-pair id.
    std::unordered_map<std::uint64_t, SigmaColor> sigma_of;
    {
        const auto params = src.params();
        const auto verts = sigma_vertices(params);
        const ColorTable table = ColorTable::from_sigma(params);
        for (std::uint64_t b = 1; b < static_cast<std::uint64_t>(n); ++b)
            for (std::uint64_t a = 0; a < b; ++a)
                sigma_of.try_emplace(table.at(a, b), sigma_color(verts[a], verts[b]));
    }
    std::vector<std::uint64_t> keys;
    ColoringDump dump;
    dump.kind = "chi";
    dump.k = 3;
    dump.vertices = N;
    dump.params = src.params();
    dump.bits = n;
    dump.fields = {"c1", "c2", "c3", "c4", "delta"};
    dump.edge_colors = intern_edges(N, 3, workers,
        [&](std::span<const std::uint64_t> e) { return src.color_of(e); }, keys);
    dump.palette.reserve(keys.size());
    for (const auto key : keys) {
        auto tuple = sigma_tuple(sigma_of.at(key / 2));
        tuple.push_back(key % 2 == 1 ? 1 : -1);
        dump.palette.push_back(std::move(tuple));
    }
    return dump;
}

ColoringDump make_table_dump(std::string kind, int k, std::uint64_t n, const std::vector<std::uint32_t>& ids)
{
    if (choose_wide(static_cast<std::int64_t>(n), k) != ids.size())
        throw FormatError("table dump: id count differs from C(n, k)");
    ColoringDump dump;
    dump.kind = std::move(kind);
    dump.k = k;
    dump.vertices = n;
    dump.fields = {"label"};
    std::unordered_map<std::uint32_t, std::uint32_t> interned;
    dump.edge_colors.reserve(ids.size());
    for (const auto id : ids) {
        const auto [it, fresh] = interned.try_emplace(id, static_cast<std::uint32_t>(interned.size()));
        if (fresh)
            dump.palette.push_back({static_cast<std::int64_t>(id)});
        dump.edge_colors.push_back(it->second);
    }
    return dump;
}

std::string palette_sidecar_path(const std::string& path)
{
    return path + ".palette.json";
}

namespace {

void write_header_fields(const ColoringDump& d, std::ostream& out)
{
    out << "\"kind\":\"" << d.kind << "\",\"k\":" << d.k << ",\"vertices\":" << d.vertices
        << ",\"palette_size\":" << d.palette.size();
    if (d.params)
        out << ",\"params\":{\"t\":" << d.params->t << ",\"m\":" << d.params->m << ",\"nprime\":" << d.params->n_prime
            << ",\"bound\":" << to_string(d.params->palette_bound()) << "}";
    if (d.bits)
        out << ",\"bits\":" << *d.bits;
    out << ",\"fields\":[";
    for (std::size_t i = 0; i < d.fields.size(); ++i)
        out << (i ? "," : "") << '"' << d.fields[i] << '"';
    out << "],\"palette\":[";
    for (std::size_t id = 0; id < d.palette.size(); ++id) {
        out << (id ? "," : "") << '[' << id;
        for (const auto v : d.palette[id])
            out << ',' << v;
        out << ']';
    }
    out << ']';
}

// Calls fn(labels) with 1-based labels for each edge in colex order.
template <class Fn>
void for_each_edge(const ColoringDump& d, Fn fn)
{
    if (d.edge_colors.empty())
        return;
    std::vector<std::uint64_t> edge(static_cast<std::size_t>(d.k));
    colex_unrank(0, edge);
    for (std::size_t i = 0; i < d.edge_colors.size(); ++i) {
        fn(std::span<const std::uint64_t>(edge), d.edge_colors[i]);
        next_colex(edge, d.vertices);
    }
}

} // namespace

void write_dump_json(const ColoringDump& d, std::ostream& out)
{
    out << "{\"format\":\"stepup-coloring\",\"version\":1,";
    write_header_fields(d, out);
    out << ",\"edges\":[";
    bool first = true;
    for_each_edge(d, [&](std::span<const std::uint64_t> e, std::uint32_t id) {
        out << (first ? "\n[" : ",\n[");
        first = false;
        for (const auto v : e)
            out << v + 1 << ',';
        out << id << ']';
    });
    out << "\n]}\n";
}

void write_dump_csv(const ColoringDump& d, std::ostream& records, std::ostream& sidecar)
{
    records << (d.k == 2 ? "u,v,color_id\n" : d.k == 3 ? "u,v,w,color_id\n" : "");
    if (d.k != 2 && d.k != 3)
        throw FormatError("csv dumps support k in {2, 3}");
    std::string line;
    for_each_edge(d, [&](std::span<const std::uint64_t> e, std::uint32_t id) {
        line.clear();
        for (const auto v : e) {
            line += std::to_string(v + 1);
            line += ',';
        }
        line += std::to_string(id);
        line += '\n';
        records << line;
    });
    sidecar << "{\"format\":\"stepup-coloring-palette\",\"version\":1,";
    write_header_fields(d, sidecar);
    sidecar << "}\n";
}

void write_dump(const ColoringDump& dump, const std::string& path, DumpFormat format)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    if (format == DumpFormat::json) {
        write_dump_json(dump, out);
    } else {
        const std::string side = palette_sidecar_path(path);
        std::ofstream sc(side, std::ios::binary);
        if (!sc)
            throw IoError("cannot open " + side + " for writing");
        write_dump_csv(dump, out, sc);
        sc.flush();
        if (!sc)
            throw IoError("write failed: " + side);
    }
    out.flush();
    if (!out)
        throw IoError("write failed: " + path);
}

namespace {

using json = nlohmann::json;

void read_header_fields(const json& j, ColoringDump& d)
{
    d.kind = j.at("kind").get<std::string>();
    d.k = j.at("k").get<int>();
    d.vertices = j.at("vertices").get<std::uint64_t>();
    if (j.contains("params")) {
        const auto& p = j.at("params");
        SigmaParams sp;
        sp.t = p.at("t").get<int>();
        sp.m = p.at("m").get<int>();
        sp.n_prime = p.at("nprime").get<std::uint64_t>();
        sp.n_requested = d.kind == "chi" ? static_cast<std::uint64_t>(std::max(2, j.at("bits").get<int>())) : d.vertices;
        d.params = sp;
    }
    if (j.contains("bits"))
        d.bits = j.at("bits").get<int>();
    d.fields = j.at("fields").get<std::vector<std::string>>();
    for (const auto& entry : j.at("palette")) {
        auto tuple = entry.get<std::vector<std::int64_t>>();
        if (tuple.empty() || tuple.front() != static_cast<std::int64_t>(d.palette.size()))
            throw FormatError("palette ids must be contiguous from 0");
        d.palette.emplace_back(tuple.begin() + 1, tuple.end());
    }
    if (j.at("palette_size").get<std::uint64_t>() != d.palette.size())
        throw FormatError("palette_size disagrees with the palette table");
}

// Places records (labels 1-based, any order) into colex slots; checks that
// every edge of the complete k-graph appears exactly once.
void place_records(ColoringDump& d, const std::vector<std::vector<std::uint64_t>>& edges,
    const std::vector<std::uint32_t>& ids)
{
    if (d.k < 1)
        throw FormatError("uniformity must be positive");
    const u128 total = choose_wide(static_cast<std::int64_t>(d.vertices), d.k);
    if (total != edges.size())
        throw FormatError("dump has " + std::to_string(edges.size()) + " records, expected " + to_string(total));
    d.edge_colors.assign(edges.size(), 0);
    std::vector<bool> seen(edges.size(), false);
    std::vector<std::uint64_t> zero_based(static_cast<std::size_t>(d.k));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.size() != static_cast<std::size_t>(d.k))
            throw FormatError("record has the wrong number of vertices");
        for (std::size_t a = 0; a < e.size(); ++a) {
            if (e[a] < 1 || e[a] > d.vertices)
                throw FormatError("vertex label out of range");
            if (a > 0 && e[a] <= e[a - 1])
                throw FormatError("vertex labels must be strictly ascending");
            zero_based[a] = e[a] - 1;
        }
        const auto r = static_cast<std::size_t>(colex_rank(zero_based));
        if (seen[r])
            throw FormatError("edge listed twice");
        seen[r] = true;
        d.edge_colors[r] = ids[i];
    }
}

} // namespace

ColoringDump parse_dump_json(std::istream& in)
{
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FormatError(std::string("invalid json: ") + e.what());
    }
    try {
        if (j.value("format", "") != "stepup-coloring")
            throw FormatError("not a stepup coloring document");
        ColoringDump d;
        read_header_fields(j, d);
        std::vector<std::vector<std::uint64_t>> edges;
        std::vector<std::uint32_t> ids;
        for (const auto& rec : j.at("edges")) {
            auto row = rec.get<std::vector<std::uint64_t>>();
            if (row.size() != static_cast<std::size_t>(d.k) + 1)
                throw FormatError("edge record has the wrong arity");
            ids.push_back(static_cast<std::uint32_t>(row.back()));
            row.pop_back();
            edges.push_back(std::move(row));
        }
        place_records(d, edges, ids);
        for (const auto id : d.edge_colors)
            if (id >= d.palette.size())
                throw FormatError("color id outside the palette table");
        return d;
    } catch (const json::exception& e) {
        throw FormatError(std::string("malformed dump: ") + e.what());
    }
}

ColoringDump parse_dump_csv(std::istream& records, std::istream* sidecar)
{
    ColoringDump d;
    std::string line;
    if (!std::getline(records, line))
        throw FormatError("empty csv dump");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    if (line == "u,v,color_id")
        d.k = 2;
    else if (line == "u,v,w,color_id")
        d.k = 3;
    else
        throw FormatError("unrecognized csv header: " + line);

    std::vector<std::vector<std::uint64_t>> edges;
    std::vector<std::uint32_t> ids;
    std::uint64_t max_label = 0;
    std::size_t line_no = 1;
    while (std::getline(records, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        std::vector<std::uint64_t> fields;
        const char* p = line.data();
        const char* end = p + line.size();
        while (true) {
            std::uint64_t v = 0;
            const auto [next, ec] = std::from_chars(p, end, v);
            if (ec != std::errc{} || next == p)
                throw FormatError("bad number on line " + std::to_string(line_no));
            fields.push_back(v);
            p = next;
            if (p == end)
                break;
            if (*p != ',')
                throw FormatError("bad separator on line " + std::to_string(line_no));
            ++p;
        }
        if (fields.size() != static_cast<std::size_t>(d.k) + 1)
            throw FormatError("wrong field count on line " + std::to_string(line_no));
        if (fields.back() > std::numeric_limits<std::uint32_t>::max())
            throw FormatError("color id too large on line " + std::to_string(line_no));
        ids.push_back(static_cast<std::uint32_t>(fields.back()));
        fields.pop_back();
        for (auto v : fields)
            max_label = std::max(max_label, v);
        edges.push_back(std::move(fields));
    }

    if (sidecar) {
        json j;
        try {
            *sidecar >> j;
            if (j.value("format", "") != "stepup-coloring-palette")
                throw FormatError("not a stepup palette sidecar");
            const int k = d.k;
            read_header_fields(j, d);
            if (d.k != k)
                throw FormatError("sidecar uniformity disagrees with the csv header");
        } catch (const json::exception& e) {
            throw FormatError(std::string("malformed palette sidecar: ") + e.what());
        }
        place_records(d, edges, ids);
        for (const auto id : d.edge_colors)
            if (id >= d.palette.size())
                throw FormatError("color id outside the palette table");
    } else {
        d.kind = "table";
        d.vertices = max_label;
        place_records(d, edges, ids);
        std::uint32_t top = 0;
        for (const auto id : d.edge_colors)
            top = std::max(top, id);
        d.fields = {"label"};
        for (std::uint32_t id = 0; id <= top && !d.edge_colors.empty(); ++id)
            d.palette.push_back({static_cast<std::int64_t>(id)});
    }
    return d;
}

ColoringDump read_dump(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    const int first = in.peek();
    if (first == '{')
        return parse_dump_json(in);
    std::ifstream side(palette_sidecar_path(path), std::ios::binary);
    return parse_dump_csv(in, side ? &side : nullptr);
}

} // namespace stepup
