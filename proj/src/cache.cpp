#include "innercore/cache.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "innercore/emit.hpp"
#include "innercore/errors.hpp"

namespace innercore {

namespace {

constexpr char kMagic[8] = {'I', 'C', 'O', 'R', 'S', 'N', 'P', '\0'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v & 0xffffffffu));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

void put_i64(std::string& out, std::int64_t v) { put_u64(out, static_cast<std::uint64_t>(v)); }
void put_i32(std::string& out, std::int32_t v) { put_u32(out, static_cast<std::uint32_t>(v)); }
void put_f64(std::string& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }

struct Reader {
  const std::string& buf;
  std::size_t at = 0;

  void need(std::size_t n) const {
    if (at + n > buf.size()) throw InputError("snapshot cache truncated");
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | static_cast<unsigned char>(buf[at + i]);
    at += 4;
    return v;
  }
  std::uint64_t u64() {
    const std::uint64_t lo = u32();
    const std::uint64_t hi = u32();
    return lo | (hi << 32);
  }
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str(std::size_t n) {
    need(n);
    std::string s = buf.substr(at, n);
    at += n;
    return s;
  }
};

}  // namespace

void write_cache(const std::string& path, const TemporalGraph& graph) {
  std::string out;
  out.append(kMagic, sizeof kMagic);
  put_u32(out, kVersion);
  put_u64(out, graph.book().size());
  for (NodeId id = 0; id < graph.book().size(); ++id) {
    const std::string& raw = graph.book().raw(id);
    put_u32(out, static_cast<std::uint32_t>(raw.size()));
    out += raw;
  }
  put_u64(out, graph.snapshots().size());
  for (const SnapshotGraph& g : graph.snapshots()) {
    put_i32(out, g.day().days);
    put_u64(out, g.node_count());
    for (NodeId v : g.nodes()) put_u32(out, v);
    put_u64(out, g.edge_count());
    for (const Edge& e : g.edges()) {
      put_u32(out, e.src);
      put_u32(out, e.dst);
      put_f64(out, e.weight);
      put_i64(out, e.timestamp);
    }
  }
  atomic_write_file(path, out);
}

TemporalGraph read_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open snapshot cache: " + path);
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Reader r{buf};
  if (r.str(sizeof kMagic) != std::string(kMagic, sizeof kMagic))
    throw InputError("not a snapshot cache: " + path);
  const std::uint32_t version = r.u32();
  if (version != kVersion)
    throw InputError("unsupported snapshot cache version " + std::to_string(version));

  AddressBook book;
  const std::uint64_t addr_count = r.u64();
  for (std::uint64_t i = 0; i < addr_count; ++i) {
    const std::uint32_t len = r.u32();
    const std::string raw = r.str(len);
    if (book.intern(raw) != i) throw InputError("snapshot cache has duplicate addresses");
  }

  std::vector<SnapshotGraph> snaps;
  const std::uint64_t snap_count = r.u64();
  for (std::uint64_t s = 0; s < snap_count; ++s) {
    const Date day{r.i32()};
    const std::uint64_t node_count = r.u64();
    std::vector<NodeId> nodes;
    nodes.reserve(node_count);
    for (std::uint64_t i = 0; i < node_count; ++i) nodes.push_back(r.u32());
    const std::uint64_t edge_count = r.u64();
    std::vector<Edge> edges;
    edges.reserve(edge_count);
    for (std::uint64_t i = 0; i < edge_count; ++i) {
      Edge e;
      e.src = r.u32();
      e.dst = r.u32();
      e.weight = r.f64();
      e.timestamp = r.i64();
      edges.push_back(e);
    }
    snaps.emplace_back(day, std::move(nodes), std::move(edges));
  }
  return TemporalGraph(std::move(book), std::move(snaps));
}

}  // namespace innercore
