#include "hallmhd/snapshot.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

#include "hallmhd/errors.hpp"

namespace hallmhd {

namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

template <typename T>
void put_le(std::vector<unsigned char>& out, T value) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  out.insert(out.end(), bytes, bytes + sizeof(T));
}

template <typename T>
T get_le(const unsigned char* p) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, p, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes, bytes + sizeof(T));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

constexpr std::size_t kHeaderBytes = 4 + 4 + 4 + 8 + 8;

template <typename State>
auto components(State& s) {
  return std::array{&s.rho, &s.u[0], &s.u[1], &s.u[2], &s.B[0], &s.B[1], &s.B[2]};
}

}  // namespace

std::uintmax_t snapshot_size_bytes(int n) {
  const auto cells = static_cast<std::uintmax_t>(n) * n * n;
  return kHeaderBytes + 7 * cells * sizeof(double);
}

void write_snapshot(const FieldState& state, const std::filesystem::path& path) {
  const FieldState phys = to_physical(state);
  const auto& grid = phys.grid();
  std::vector<unsigned char> buf;
  buf.reserve(snapshot_size_bytes(grid.n()));
  buf.insert(buf.end(), std::begin(kSnapshotMagic), std::end(kSnapshotMagic));
  put_le<std::uint32_t>(buf, kSnapshotVersion);
  put_le<std::uint32_t>(buf, static_cast<std::uint32_t>(grid.n()));
  put_le<double>(buf, grid.box_length());
  put_le<double>(buf, phys.time);
  for (const ScalarField* f : components(phys)) {
    const Eigen::ArrayXd& v = f->values();
    if constexpr (std::endian::native == std::endian::little) {
      const auto* p = reinterpret_cast<const unsigned char*>(v.data());
      buf.insert(buf.end(), p, p + v.size() * sizeof(double));
    } else {
      for (Eigen::Index i = 0; i < v.size(); ++i) put_le<double>(buf, v[i]);
    }
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

FieldState read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open snapshot " + path.string());
  const std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  if (buf.size() < 4 || std::memcmp(buf.data(), kSnapshotMagic, 4) != 0) {
    throw BadMagic(path.string() + ": missing HMHD magic bytes");
  }
  if (buf.size() < kHeaderBytes) {
    throw TruncatedPayload(path.string() + ": header is " + std::to_string(buf.size()) + " bytes, need " +
                           std::to_string(kHeaderBytes));
  }
  const auto version = get_le<std::uint32_t>(buf.data() + 4);
  if (version != kSnapshotVersion) {
    throw VersionMismatch(path.string() + ": format version " + std::to_string(version) + ", expected " +
                          std::to_string(kSnapshotVersion));
  }
  const auto n = get_le<std::uint32_t>(buf.data() + 8);
  const double L = get_le<double>(buf.data() + 12);
  const double time = get_le<double>(buf.data() + 20);
  if (n < 8 || n > (1u << 12) || (n & (n - 1)) != 0 || !(L > 0.0)) {
    throw SnapshotError(path.string() + ": invalid grid header n=" + std::to_string(n) +
                        " L=" + std::to_string(L));
  }
  const std::uintmax_t expected = snapshot_size_bytes(static_cast<int>(n));
  if (buf.size() != expected) {
    throw TruncatedPayload(path.string() + ": payload is " + std::to_string(buf.size()) + " bytes, expected " +
                           std::to_string(expected));
  }

  GridPtr grid = build_grid(static_cast<int>(n), L);
  FieldState s = FieldState::zeros(grid, Representation::physical);
  s.time = time;
  const std::size_t cells = static_cast<std::size_t>(n) * n * n;
  std::size_t offset = kHeaderBytes;
  for (ScalarField* f : components(s)) {
    Eigen::ArrayXd& v = f->values();
    for (std::size_t i = 0; i < cells; ++i) v[static_cast<Eigen::Index>(i)] = get_le<double>(buf.data() + offset + 8 * i);
    offset += cells * sizeof(double);
  }
  return s;
}

}  // namespace hallmhd
