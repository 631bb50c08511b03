#include "hrank/bundle.hpp"

#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>

#include "hrank/errors.hpp"

namespace hrank {

namespace {

constexpr char kMagic[8] = {'H', 'R', 'N', 'K', 'B', 'N', 'D', 'L'};
constexpr std::uint32_t kVersion = 1;

// little-endian encoders, independent of host byte order

void put_u32(std::string& buf, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& buf, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& buf, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    put_u64(buf, bits);
}

void put_str(std::string& buf, const std::string& s) {
    put_u32(buf, static_cast<std::uint32_t>(s.size()));
    buf.append(s);
}

struct Reader {
    const std::string& buf;
    std::size_t pos = 0;

    void need(std::size_t n) const {
        if (pos + n > buf.size()) throw ParseError("bundle truncated");
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
        pos += 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[pos + i])) << (8 * i);
        pos += 8;
        return v;
    }
    double f64() {
        std::uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, sizeof v);
        return v;
    }
    std::string str() {
        std::uint32_t n = u32();
        need(n);
        std::string s = buf.substr(pos, n);
        pos += n;
        return s;
    }
};

}  // namespace

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char chunk[1 << 16];
    while (in.read(chunk, sizeof chunk) || in.gcount() > 0)
        h = fnv1a(chunk, static_cast<std::size_t>(in.gcount()), h);
    return h;
}

void save_bundle(const std::string& path, const TypedGraph& graph, const BundleMeta& meta) {
    std::string payload;
    put_u64(payload, meta.schema_hash);
    put_u64(payload, meta.nodes_hash);
    put_u64(payload, meta.edges_hash);
    put_u64(payload, meta.timestamp);

    const Schema& schema = graph.schema();
    put_u32(payload, static_cast<std::uint32_t>(schema.types().size()));
    for (const auto& t : schema.types()) put_str(payload, t);
    put_u32(payload, static_cast<std::uint32_t>(schema.relations().size()));
    for (const auto& r : schema.relations()) {
        put_str(payload, r.name);
        put_str(payload, r.source);
        put_str(payload, r.target);
    }

    for (const auto& t : schema.types()) {
        const auto& ids = graph.node_ids(t);
        put_u64(payload, ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            put_str(payload, ids[i]);
            // node_attrs returns ordered containers, so the bytes are stable
            const auto& attrs = graph.node_attrs(t, i);
            put_u32(payload, static_cast<std::uint32_t>(attrs.size()));
            for (const auto& [name, values] : attrs) {
                put_str(payload, name);
                put_u32(payload, static_cast<std::uint32_t>(values.size()));
                for (const auto& v : values) put_str(payload, v);
            }
        }
    }

    for (const auto& r : schema.relations()) {
        const SparseMatrix& w = graph.adjacency({r.name, true});
        put_u64(payload, w.nnz());
        for (std::size_t i = 0; i < w.rows(); ++i) {
            auto cols = w.row_cols(i);
            auto vals = w.row_vals(i);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                put_u64(payload, i);
                put_u64(payload, cols[k]);
                put_f64(payload, vals[k]);
            }
        }
    }

    std::string header;
    header.append(kMagic, sizeof kMagic);
    put_u32(header, kVersion);
    put_u64(header, fnv1a(payload.data(), payload.size()));

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write file: " + path);
    out.write(header.data(), static_cast<std::streamsize>(header.size()));
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw ParseError("short write to " + path);
}

NetworkBundle load_bundle(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open bundle: " + path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (all.size() < sizeof kMagic + 4 + 8 ||
        std::memcmp(all.data(), kMagic, sizeof kMagic) != 0)
        throw ParseError("not a network bundle: " + path);

    Reader r{all, sizeof kMagic};
    std::uint32_t version = r.u32();
    if (version != kVersion)
        throw ParseError("unsupported bundle version " + std::to_string(version));
    std::uint64_t stored_hash = r.u64();
    std::uint64_t actual_hash = fnv1a(all.data() + r.pos, all.size() - r.pos);
    if (stored_hash != actual_hash)
        std::cerr << "warning: bundle payload checksum mismatch in " << path
                  << " (stored " << stored_hash << ", computed " << actual_hash << ")\n";

    BundleMeta meta;
    meta.version = version;
    meta.schema_hash = r.u64();
    meta.nodes_hash = r.u64();
    meta.edges_hash = r.u64();
    meta.timestamp = r.u64();

    std::uint32_t n_types = r.u32();
    std::vector<std::string> types;
    types.reserve(n_types);
    for (std::uint32_t i = 0; i < n_types; ++i) types.push_back(r.str());
    std::uint32_t n_rels = r.u32();
    std::vector<Relation> relations;
    relations.reserve(n_rels);
    for (std::uint32_t i = 0; i < n_rels; ++i) {
        Relation rel;
        rel.name = r.str();
        rel.source = r.str();
        rel.target = r.str();
        relations.push_back(std::move(rel));
    }
    Schema schema(types, std::move(relations));

    std::vector<std::vector<NodeRecord>> nodes_by_type;
    nodes_by_type.reserve(n_types);
    for (const auto& t : types) {
        std::uint64_t n = r.u64();
        std::vector<NodeRecord> nodes;
        nodes.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            NodeRecord rec;
            rec.type = t;
            rec.id = r.str();
            std::uint32_t n_attrs = r.u32();
            for (std::uint32_t a = 0; a < n_attrs; ++a) {
                std::string name = r.str();
                std::uint32_t n_values = r.u32();
                auto& values = rec.attrs[name];
                for (std::uint32_t v = 0; v < n_values; ++v) values.insert(r.str());
            }
            nodes.push_back(std::move(rec));
        }
        nodes_by_type.push_back(std::move(nodes));
    }

    std::vector<std::vector<SparseMatrix::Triplet>> adjacency(n_rels);
    for (std::uint32_t ri = 0; ri < n_rels; ++ri) {
        std::uint64_t nnz = r.u64();
        adjacency[ri].reserve(nnz);
        for (std::uint64_t k = 0; k < nnz; ++k) {
            std::uint64_t row = r.u64();
            std::uint64_t col = r.u64();
            double val = r.f64();
            adjacency[ri].push_back({static_cast<std::size_t>(row),
                                     static_cast<std::size_t>(col), val});
        }
    }

    return {TypedGraph::from_parts(std::move(schema), std::move(nodes_by_type),
                                   std::move(adjacency)),
            meta};
}

}  // namespace hrank
