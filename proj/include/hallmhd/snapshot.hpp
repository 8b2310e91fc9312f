#pragma once

#include <cstdint>
#include <filesystem>

#include "hallmhd/state.hpp"

namespace hallmhd {

inline constexpr char kSnapshotMagic[4] = {'H', 'M', 'H', 'D'};
inline constexpr std::uint32_t kSnapshotVersion = 1;

/// Header (magic, u32 version, u32 n, f64 L, f64 time) plus seven n^3 arrays.
std::uintmax_t snapshot_size_bytes(int n);

/// Binary snapshot, all little-endian with no padding:
///   "HMHD" | u32 version | u32 n | f64 box_length | f64 time |
///   rho, u1, u2, u3, B1, B2, B3 as n^3 f64 each, x index fastest.
/// Spectral states are transformed to physical samples first.
void write_snapshot(const FieldState& state, const std::filesystem::path& path);

/// Inverse of write_snapshot; returns physical fields on a fresh grid.
/// Throws BadMagic, VersionMismatch or TruncatedPayload (also for trailing
/// bytes), or IoError when the file cannot be opened.
FieldState read_snapshot(const std::filesystem::path& path);

}  // namespace hallmhd
