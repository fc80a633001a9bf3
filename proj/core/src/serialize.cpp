#include "vsdo/serialize.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace vsdo {

namespace {

constexpr char kMagic[5] = {'V', 'S', 'D', 'O', '1'};
constexpr std::uint8_t kVersion = 1;

struct Writer {
    std::ostream& out;

    void bytes(const void* p, std::size_t len) {
        out.write(static_cast<const char*>(p), static_cast<std::streamsize>(len));
    }
    void u8(std::uint8_t v) { bytes(&v, 1); }
    void u32(std::uint32_t v) {
        unsigned char b[4];
        for (int i = 0; i < 4; ++i) b[i] = (v >> (8 * i)) & 0xff;
        bytes(b, 4);
    }
    void u64(std::uint64_t v) {
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = (v >> (8 * i)) & 0xff;
        bytes(b, 8);
    }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
};

struct Reader {
    std::istream& in;

    void bytes(void* p, std::size_t len) {
        in.read(static_cast<char*>(p), static_cast<std::streamsize>(len));
        if (static_cast<std::size_t>(in.gcount()) != len)
            throw FormatError("truncated oracle stream");
    }
    std::uint8_t u8() {
        std::uint8_t v;
        bytes(&v, 1);
        return v;
    }
    std::uint32_t u32() {
        unsigned char b[4];
        bytes(b, 4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(b[i]) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        unsigned char b[8];
        bytes(b, 8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(b[i]) << (8 * i);
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }
};

void write_bitset(Writer& w, const std::vector<char>& bits) {
    for (std::size_t base = 0; base < bits.size(); base += 8) {
        std::uint8_t byte = 0;
        for (std::size_t i = 0; i < 8 && base + i < bits.size(); ++i)
            if (bits[base + i]) byte |= std::uint8_t(1u << i);
        w.u8(byte);
    }
}

std::vector<char> read_bitset(Reader& r, std::size_t n) {
    std::vector<char> bits(n, 0);
    for (std::size_t base = 0; base < n; base += 8) {
        std::uint8_t byte = r.u8();
        for (std::size_t i = 0; i < 8 && base + i < n; ++i)
            bits[base + i] = (byte >> i) & 1;
    }
    return bits;
}

}  // namespace

void save_oracle(const Oracle& o, std::ostream& out) {
    Writer w{out};
    w.bytes(kMagic, sizeof kMagic);
    w.u8(kVersion);
    w.u8(0);  // reserved
    w.u8(o.cfg_.provider == SzProvider::exact ? 0 : 1);
    w.u64(o.n_);
    w.u64(o.m_);
    w.u64(o.maxw_);
    w.f64(o.cfg_.eps);
    w.f64(o.cfg_.level_eps);
    w.f64(o.cfg_.round_eps);
    w.u64(o.cfg_.round_eps_fixed);
    w.u32(o.source_);
    w.u32(o.cfg_.leaf_size);
    w.u64(o.nodes_.size());

    for (const auto& [id, node] : o.nodes_) {
        w.u64(id);
        w.u8(node.leaf ? 1 : 0);
        const std::uint32_t k = static_cast<std::uint32_t>(node.size());
        w.u32(k);
        for (VertexId v : node.to_global) w.u32(v);
        for (Distance d : node.tree_dist) w.u64(d.raw());
        for (std::uint32_t v : node.tin) w.u32(v);
        for (std::uint32_t v : node.tout) w.u32(v);
        if (node.leaf) {
            w.u64(node.graph.edge_count());
            for (VertexId u = 0; u < k; ++u)
                for (const Edge& e : node.graph.out(u)) {
                    w.u32(u);
                    w.u32(e.to);
                    w.u64(e.w);
                }
        } else {
            w.u32(node.centroid);
            w.u32(static_cast<std::uint32_t>(node.root_path.size()));
            for (VertexId v : node.root_path) w.u32(v);
            write_bitset(w, node.in_child1);
            write_bitset(w, node.in_child2);
            w.u32(node.detours.level_count);
            for (std::uint32_t level = 0; level < node.detours.level_count; ++level)
                for (VertexId v = 0; v < k; ++v) {
                    const auto& log = node.detours.entries[level][v];
                    w.u32(static_cast<std::uint32_t>(log.size()));
                    for (const RoundEntry& e : log) {
                        w.u32(e.round);
                        w.u64(e.length);
                        w.u32(e.branch);
                    }
                }
            for (Distance d : node.replacement) w.u64(d.raw());
        }
    }
}

Oracle load_oracle(std::istream& in) {
    Reader r{in};
    char magic[5];
    r.bytes(magic, sizeof magic);
    if (std::memcmp(magic, kMagic, sizeof kMagic) != 0)
        throw FormatError("bad oracle magic");
    const std::uint8_t version = r.u8();
    if (version != kVersion) throw FormatError("unsupported oracle version");
    r.u8();  // reserved
    const std::uint8_t provider = r.u8();
    if (provider > 1) throw FormatError("bad provider tag");

    Oracle o;
    o.n_ = r.u64();
    o.m_ = r.u64();
    o.maxw_ = r.u64();
    o.cfg_.eps = r.f64();
    o.cfg_.level_eps = r.f64();
    o.cfg_.round_eps = r.f64();
    o.cfg_.round_eps_fixed = r.u64();
    o.cfg_.provider = provider == 0 ? SzProvider::exact : SzProvider::fast;
    o.source_ = r.u32();
    o.cfg_.leaf_size = r.u32();
    const std::uint64_t node_count = r.u64();

    for (std::uint64_t i = 0; i < node_count; ++i) {
        OracleNode node;
        node.id = r.u64();
        node.leaf = r.u8() != 0;
        const std::uint32_t k = r.u32();
        node.to_global.resize(k);
        for (auto& v : node.to_global) v = r.u32();
        node.tree_dist.resize(k);
        for (auto& d : node.tree_dist) d = Distance::from_raw(r.u64());
        node.tin.resize(k);
        for (auto& v : node.tin) v = r.u32();
        node.tout.resize(k);
        for (auto& v : node.tout) v = r.u32();
        if (node.leaf) {
            node.graph = Digraph(k);
            const std::uint64_t edges = r.u64();
            for (std::uint64_t e = 0; e < edges; ++e) {
                const std::uint32_t src = r.u32();
                const std::uint32_t dst = r.u32();
                const std::uint64_t wgt = r.u64();
                if (src >= k || dst >= k) throw FormatError("leaf edge out of range");
                node.graph.add_edge(src, dst, wgt);
            }
        } else {
            node.centroid = r.u32();
            const std::uint32_t p = r.u32();
            if (p == 0 || p > k) throw FormatError("bad root path length");
            node.root_path.resize(p);
            for (auto& v : node.root_path) {
                v = r.u32();
                if (v >= k) throw FormatError("root path vertex out of range");
            }
            node.path_pos.assign(k, kNoPos);
            for (std::uint32_t q = 0; q < p; ++q) node.path_pos[node.root_path[q]] = q;
            node.in_child1 = read_bitset(r, k);
            node.in_child2 = read_bitset(r, k);
            node.detours.path_len = p;
            node.detours.padded_len = 1u << ceil_log2(p);
            node.detours.level_count = r.u32();
            if (node.detours.level_count != ceil_log2(p) + 1)
                throw FormatError("level count mismatch");
            node.detours.round_eps = o.cfg_.round_eps;
            node.detours.round_eps_fixed = o.cfg_.round_eps_fixed;
            node.detours.entries.assign(node.detours.level_count, {});
            for (auto& level : node.detours.entries) {
                level.resize(k);
                for (auto& log : level) {
                    const std::uint32_t cnt = r.u32();
                    log.resize(cnt);
                    for (auto& e : log) {
                        e.round = r.u32();
                        e.length = r.u64();
                        e.branch = r.u32();
                    }
                }
            }
            node.replacement.resize(p);
            for (auto& d : node.replacement) d = Distance::from_raw(r.u64());
        }
        const std::uint64_t id = node.id;
        o.nodes_.emplace(id, std::move(node));
    }
    if (!o.nodes_.contains(1)) throw FormatError("missing root node");
    return o;
}

std::string serialize_oracle(const Oracle& o) {
    std::ostringstream out(std::ios::binary);
    save_oracle(o, out);
    return std::move(out).str();
}

Oracle deserialize_oracle(const std::string& bytes) {
    std::istringstream in(bytes, std::ios::binary);
    return load_oracle(in);
}

void save_oracle_file(const Oracle& o, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    save_oracle(o, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Oracle load_oracle_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return load_oracle(in);
}

}  // namespace vsdo
