#include "nlslab/io.hpp"

#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace nlslab {

namespace {
constexpr char kMagic[4] = {'R', 'F', 'L', 'D'};
constexpr std::uint32_t kEndianTag = 0x01020304u;
}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_field_binary(const std::string& path, const RadialField& u) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("write_field_binary: cannot open " + path);
  os.write(kMagic, 4);
  os.write(reinterpret_cast<const char*>(&kEndianTag), sizeof(kEndianTag));
  const double R = u.grid.R;
  const std::uint64_t M = u.grid.M;
  os.write(reinterpret_cast<const char*>(&R), sizeof(R));
  os.write(reinterpret_cast<const char*>(&M), sizeof(M));
  for (const cx& v : u.g) {
    const double re = v.real(), im = v.imag();
    os.write(reinterpret_cast<const char*>(&re), sizeof(re));
    os.write(reinterpret_cast<const char*>(&im), sizeof(im));
  }
  if (!os) throw Error("write_field_binary: write failed for " + path);
}

RadialField read_field_binary(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("read_field_binary: cannot open " + path);
  char magic[4];
  std::uint32_t tag = 0;
  double R = 0.0;
  std::uint64_t M = 0;
  is.read(magic, 4);
  is.read(reinterpret_cast<char*>(&tag), sizeof(tag));
  is.read(reinterpret_cast<char*>(&R), sizeof(R));
  is.read(reinterpret_cast<char*>(&M), sizeof(M));
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw Error("read_field_binary: " + path + " is not a field container");
  if (tag != kEndianTag)
    throw Error("read_field_binary: " + path + " was written with a different byte order");
  RadialField u((RadialGrid(R, static_cast<std::size_t>(M))));
  for (cx& v : u.g) {
    double re = 0.0, im = 0.0;
    is.read(reinterpret_cast<char*>(&re), sizeof(re));
    is.read(reinterpret_cast<char*>(&im), sizeof(im));
    v = cx(re, im);
  }
  if (!is) throw Error("read_field_binary: truncated payload in " + path);
  return u;
}

std::string field_csv(const RadialField& u) {
  std::string out = "r,re,im\n";
  for (std::size_t i = 0; i < u.size(); ++i) {
    out += format_double(u.grid.r(i));
    out += ',';
    out += format_double(u.g[i].real());
    out += ',';
    out += format_double(u.g[i].imag());
    out += '\n';
  }
  return out;
}

void write_field_csv(const std::string& path, const RadialField& u) {
  write_text_file(path, field_csv(u));
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("write_text_file: cannot open " + path);
  os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!os) throw Error("write_text_file: write failed for " + path);
}

}  // namespace nlslab
