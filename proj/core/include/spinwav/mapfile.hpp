#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include "spinwav/rotation.hpp"
#include "spinwav/sphere.hpp"

namespace spinwav {

// Self-describing binary container:
//   8-byte magic "SPINWV01", u32 little-endian header length, JSON header,
//   then count * 16 bytes of little-endian (re, im) f64 pairs, row-major in
//   the header's declared axis order.
inline constexpr char kMapFileMagic[8] = {'S', 'P', 'I', 'N', 'W', 'V', '0', '1'};

enum class MapKind { harmonic, sphere, rotation, wigner };

// Optional numeric parameters carried in the header (e.g. alpha, jmin,
// nband, scale, multires).  Round-trips losslessly.
using MapMeta = std::map<std::string, double>;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

void write_map_file(const std::string& path, const HarmonicCoeffs& coeffs,
                    const MapMeta& meta = {});
void write_map_file(const std::string& path, const SphereMap& map,
                    const MapMeta& meta = {});
void write_map_file(const std::string& path, const RotationMap& map,
                    const MapMeta& meta = {});
void write_map_file(const std::string& path, const WignerCoeffs& coeffs,
                    const MapMeta& meta = {});

// Reads just the header.
MapKind probe_map_file(const std::string& path, MapMeta* meta = nullptr);

HarmonicCoeffs read_harmonic_file(const std::string& path, MapMeta* meta = nullptr);
SphereMap read_sphere_file(const std::string& path, MapMeta* meta = nullptr);
RotationMap read_rotation_file(const std::string& path, MapMeta* meta = nullptr);
WignerCoeffs read_wigner_file(const std::string& path, MapMeta* meta = nullptr);

}  // namespace spinwav
