#include "spinwav/mapfile.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace spinwav {

namespace {

using nlohmann::json;

void put_u64_le(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64_le(std::string& out, double v) {
  put_u64_le(out, std::bit_cast<std::uint64_t>(v));
}

std::uint64_t get_u64_le(const char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
  }
  return v;
}

std::string payload_of(const std::vector<Complex>& values) {
  std::string out;
  out.reserve(values.size() * 16);
  for (const Complex& v : values) {
    put_f64_le(out, v.real());
    put_f64_le(out, v.imag());
  }
  return out;
}

void write_file(const std::string& path, const json& header,
                const std::string& payload) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  const std::string header_text = header.dump();
  out.write(kMapFileMagic, sizeof(kMapFileMagic));
  const std::uint32_t hlen = static_cast<std::uint32_t>(header_text.size());
  char lenbuf[4];
  for (int i = 0; i < 4; ++i) lenbuf[i] = static_cast<char>((hlen >> (8 * i)) & 0xff);
  out.write(lenbuf, 4);
  out.write(header_text.data(), static_cast<std::streamsize>(header_text.size()));
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

json meta_json(const MapMeta& meta) {
  json j = json::object();
  for (const auto& [key, value] : meta) j[key] = value;
  return j;
}

struct Parsed {
  json header;
  std::vector<Complex> values;
  std::size_t payload_offset = 0;
};

Parsed parse_file(const std::string& path, bool want_payload) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string raw((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());

  if (raw.size() < sizeof(kMapFileMagic) + 4) {
    throw ParseError("file too short for magic and header length", raw.size());
  }
  if (std::memcmp(raw.data(), kMapFileMagic, sizeof(kMapFileMagic)) != 0) {
    throw ParseError("bad magic tag", 0);
  }
  std::uint32_t hlen = 0;
  for (int i = 0; i < 4; ++i) {
    hlen |= static_cast<std::uint32_t>(
                static_cast<unsigned char>(raw[sizeof(kMapFileMagic) + i]))
            << (8 * i);
  }
  const std::size_t header_start = sizeof(kMapFileMagic) + 4;
  if (raw.size() < header_start + hlen) {
    throw ParseError("truncated header", raw.size());
  }

  Parsed parsed;
  try {
    parsed.header = json::parse(raw.substr(header_start, hlen));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("header is not valid JSON: ") + e.what(),
                     header_start);
  }
  parsed.payload_offset = header_start + hlen;

  if (!parsed.header.contains("count") || !parsed.header["count"].is_number_unsigned()) {
    throw ParseError("header missing element count", header_start);
  }
  const std::uint64_t count = parsed.header["count"].get<std::uint64_t>();
  const std::size_t expected = parsed.payload_offset + count * 16;
  if (raw.size() != expected) {
    throw ParseError("payload length does not match declared element count",
                     std::min(raw.size(), expected));
  }
  if (want_payload) {
    parsed.values.resize(count);
    const char* p = raw.data() + parsed.payload_offset;
    for (std::uint64_t i = 0; i < count; ++i) {
      const double re = std::bit_cast<double>(get_u64_le(p + 16 * i));
      const double im = std::bit_cast<double>(get_u64_le(p + 16 * i + 8));
      parsed.values[i] = Complex{re, im};
    }
  }
  return parsed;
}

MapKind kind_from_string(const std::string& s, std::size_t offset) {
  if (s == "harmonic") return MapKind::harmonic;
  if (s == "sphere") return MapKind::sphere;
  if (s == "rotation") return MapKind::rotation;
  if (s == "wigner") return MapKind::wigner;
  throw ParseError("unknown map kind '" + s + "'", offset);
}

void extract_meta(const json& header, MapMeta* meta) {
  if (!meta) return;
  meta->clear();
  if (header.contains("params") && header["params"].is_object()) {
    for (const auto& [key, value] : header["params"].items()) {
      (*meta)[key] = value.get<double>();
    }
  }
}

int require_int(const json& header, const char* key) {
  if (!header.contains(key) || !header[key].is_number_integer()) {
    throw ParseError(std::string("header missing integer field '") + key + "'", 0);
  }
  return header[key].get<int>();
}

}  // namespace

void write_map_file(const std::string& path, const HarmonicCoeffs& coeffs,
                    const MapMeta& meta) {
  json header;
  header["kind"] = "harmonic";
  header["bandlimit"] = coeffs.band_limit();
  header["spin"] = coeffs.spin();
  header["axes"] = json::array({"lm"});
  header["count"] = coeffs.values().size();
  header["params"] = meta_json(meta);
  write_file(path, header, payload_of(coeffs.values()));
}

void write_map_file(const std::string& path, const SphereMap& map,
                    const MapMeta& meta) {
  const SphereGrid& grid = map.grid();
  json header;
  header["kind"] = "sphere";
  header["bandlimit"] = grid.band_limit;
  header["spin"] = map.spin();
  header["axes"] = json::array({"theta", "phi"});
  header["grid"] = {{"type", "gauss_legendre"},
                    {"n_theta", grid.n_theta()},
                    {"n_phi", grid.n_phi}};
  header["count"] = map.samples().size();
  header["params"] = meta_json(meta);
  write_file(path, header, payload_of(map.samples()));
}

void write_map_file(const std::string& path, const RotationMap& map,
                    const MapMeta& meta) {
  const RotationGrid& grid = map.grid();
  json header;
  header["kind"] = "rotation";
  header["bandlimit"] = grid.band_limit;
  header["nband"] = grid.azimuthal_band_limit();
  header["axes"] = json::array({"gamma", "beta", "alpha"});
  header["grid"] = {{"type", "so3_gauss_legendre"},
                    {"n_alpha", grid.n_alpha},
                    {"n_beta", grid.n_beta()},
                    {"n_gamma", grid.n_gamma}};
  header["count"] = map.samples().size();
  header["params"] = meta_json(meta);

  // Payload in declared (gamma, beta, alpha) row-major order.
  std::string payload;
  payload.reserve(map.samples().size() * 16);
  for (int g = 0; g < grid.n_gamma; ++g) {
    for (int b = 0; b < grid.n_beta(); ++b) {
      for (int a = 0; a < grid.n_alpha; ++a) {
        const Complex v = map(a, b, g);
        put_f64_le(payload, v.real());
        put_f64_le(payload, v.imag());
      }
    }
  }
  write_file(path, header, payload);
}

void write_map_file(const std::string& path, const WignerCoeffs& coeffs,
                    const MapMeta& meta) {
  json header;
  header["kind"] = "wigner";
  header["bandlimit"] = coeffs.band_limit();
  header["nband"] = coeffs.azimuthal_band_limit();
  header["axes"] = json::array({"n", "lm"});
  header["count"] = coeffs.values().size();
  header["params"] = meta_json(meta);
  write_file(path, header, payload_of(coeffs.values()));
}

MapKind probe_map_file(const std::string& path, MapMeta* meta) {
  Parsed parsed = parse_file(path, false);
  extract_meta(parsed.header, meta);
  if (!parsed.header.contains("kind") || !parsed.header["kind"].is_string()) {
    throw ParseError("header missing kind", 0);
  }
  return kind_from_string(parsed.header["kind"].get<std::string>(), 0);
}

HarmonicCoeffs read_harmonic_file(const std::string& path, MapMeta* meta) {
  Parsed parsed = parse_file(path, true);
  if (parsed.header.value("kind", "") != "harmonic") {
    throw std::invalid_argument(path + ": not a harmonic coefficient file");
  }
  const int L = require_int(parsed.header, "bandlimit");
  const int spin = require_int(parsed.header, "spin");
  HarmonicCoeffs coeffs(L, spin);
  if (parsed.values.size() != coeffs.values().size()) {
    throw ParseError("element count does not match band limit", parsed.payload_offset);
  }
  coeffs.values() = std::move(parsed.values);
  extract_meta(parsed.header, meta);
  return coeffs;
}

SphereMap read_sphere_file(const std::string& path, MapMeta* meta) {
  Parsed parsed = parse_file(path, true);
  if (parsed.header.value("kind", "") != "sphere") {
    throw std::invalid_argument(path + ": not a sphere map file");
  }
  const int L = require_int(parsed.header, "bandlimit");
  const int spin = require_int(parsed.header, "spin");
  SphereGrid grid = build_grid(L);
  if (parsed.header.contains("grid")) {
    const json& g = parsed.header["grid"];
    if (g.value("n_theta", -1) != grid.n_theta() ||
        g.value("n_phi", -1) != grid.n_phi) {
      throw std::invalid_argument(path + ": grid descriptor does not match band limit");
    }
  }
  SphereMap map(std::move(grid), spin);
  if (parsed.values.size() != map.samples().size()) {
    throw ParseError("element count does not match grid", parsed.payload_offset);
  }
  map.samples() = std::move(parsed.values);
  extract_meta(parsed.header, meta);
  return map;
}

RotationMap read_rotation_file(const std::string& path, MapMeta* meta) {
  Parsed parsed = parse_file(path, true);
  if (parsed.header.value("kind", "") != "rotation") {
    throw std::invalid_argument(path + ": not a rotation map file");
  }
  const int L = require_int(parsed.header, "bandlimit");
  const int N = require_int(parsed.header, "nband");
  RotationGrid grid = build_rotation_grid(L, N);
  if (parsed.header.contains("grid")) {
    const json& g = parsed.header["grid"];
    if (g.value("n_alpha", -1) != grid.n_alpha ||
        g.value("n_beta", -1) != grid.n_beta() ||
        g.value("n_gamma", -1) != grid.n_gamma) {
      throw std::invalid_argument(path + ": grid descriptor does not match band limits");
    }
  }
  RotationMap map(std::move(grid));
  if (parsed.values.size() != map.samples().size()) {
    throw ParseError("element count does not match grid", parsed.payload_offset);
  }
  const RotationGrid& rg = map.grid();
  std::size_t i = 0;
  for (int g = 0; g < rg.n_gamma; ++g) {
    for (int b = 0; b < rg.n_beta(); ++b) {
      for (int a = 0; a < rg.n_alpha; ++a) {
        map.at(a, b, g) = parsed.values[i++];
      }
    }
  }
  extract_meta(parsed.header, meta);
  return map;
}

WignerCoeffs read_wigner_file(const std::string& path, MapMeta* meta) {
  Parsed parsed = parse_file(path, true);
  if (parsed.header.value("kind", "") != "wigner") {
    throw std::invalid_argument(path + ": not a Wigner coefficient file");
  }
  const int L = require_int(parsed.header, "bandlimit");
  const int N = require_int(parsed.header, "nband");
  WignerCoeffs coeffs(L, N);
  if (parsed.values.size() != coeffs.values().size()) {
    throw ParseError("element count does not match band limits", parsed.payload_offset);
  }
  coeffs.values() = std::move(parsed.values);
  extract_meta(parsed.header, meta);
  return coeffs;
}

}  // namespace spinwav
