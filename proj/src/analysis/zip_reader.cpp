#include "fusion/analysis/zip_reader.hpp"

#include <zlib.h>

#include <cstdint>
#include <fstream>
#include <sstream>

#include "fusion/error.hpp"

namespace fusion::analysis {
namespace {

constexpr std::uint32_t kEndOfCentralDir = 0x06054b50;
constexpr std::uint32_t kCentralHeader = 0x02014b50;
constexpr std::uint32_t kLocalHeader = 0x04034b50;

class ByteReader {
 public:
  ByteReader(const std::string& bytes, const std::string& name) : bytes_(bytes), name_(name) {}

  std::uint32_t u16(std::size_t at) const {
    need(at, 2);
    return byte(at) | byte(at + 1) << 8;
  }
  std::uint32_t u32(std::size_t at) const {
    need(at, 4);
    return byte(at) | byte(at + 1) << 8 | byte(at + 2) << 16 | byte(at + 3) << 24;
  }
  std::string slice(std::size_t at, std::size_t length) const {
    need(at, length);
    return bytes_.substr(at, length);
  }
  std::size_t size() const { return bytes_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(name_, 0, 0, "malformed zip archive: " + what);
  }

 private:
  std::uint32_t byte(std::size_t at) const { return static_cast<unsigned char>(bytes_[at]); }
  void need(std::size_t at, std::size_t length) const {
    if (at > bytes_.size() || length > bytes_.size() - at) fail("truncated");
  }

  const std::string& bytes_;
  const std::string& name_;
};

std::string inflate_raw(const std::string& compressed, std::size_t expected, const ByteReader& r) {
  std::string out(expected, '\0');
  z_stream stream{};
  if (inflateInit2(&stream, -MAX_WBITS) != Z_OK) r.fail("inflate init");
  stream.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(compressed.data()));
  stream.avail_in = static_cast<uInt>(compressed.size());
  stream.next_out = reinterpret_cast<Bytef*>(out.data());
  stream.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&stream, Z_FINISH);
  const auto produced = stream.total_out;
  inflateEnd(&stream);
  if (rc != Z_STREAM_END || produced != expected) r.fail("corrupt deflate stream");
  return out;
}

}  // namespace

std::map<std::string, std::string> read_zip(const std::string& bytes, const std::string& name) {
  ByteReader r(bytes, name);
  if (bytes.size() < 22) r.fail("too short");

  std::size_t eocd = std::string::npos;
  const std::size_t lowest = bytes.size() > 22 + 0xFFFF ? bytes.size() - 22 - 0xFFFF : 0;
  for (std::size_t at = bytes.size() - 22 + 1; at-- > lowest;) {
    if (r.u32(at) == kEndOfCentralDir) {
      eocd = at;
      break;
    }
  }
  if (eocd == std::string::npos) r.fail("no end-of-central-directory record");

  const std::uint32_t entries = r.u16(eocd + 10);
  std::size_t at = r.u32(eocd + 16);
  std::map<std::string, std::string> files;
  for (std::uint32_t i = 0; i < entries; ++i) {
    if (r.u32(at) != kCentralHeader) r.fail("bad central directory header");
    const std::uint32_t method = r.u16(at + 10);
    const std::uint32_t crc = r.u32(at + 16);
    const std::uint32_t compressed_size = r.u32(at + 20);
    const std::uint32_t size = r.u32(at + 24);
    const std::uint32_t name_len = r.u16(at + 28);
    const std::uint32_t extra_len = r.u16(at + 30);
    const std::uint32_t comment_len = r.u16(at + 32);
    const std::uint32_t local = r.u32(at + 42);
    const std::string entry_name = r.slice(at + 46, name_len);
    at += 46 + name_len + extra_len + comment_len;

    if (entry_name.empty() || entry_name.back() == '/') continue;
    if (r.u32(local) != kLocalHeader) r.fail("bad local header for " + entry_name);
    const std::size_t data = local + 30 + r.u16(local + 26) + r.u16(local + 28);
    const std::string raw = r.slice(data, compressed_size);

    std::string contents;
    if (method == 0) {
      contents = raw;
    } else if (method == 8) {
      contents = inflate_raw(raw, size, r);
    } else {
      r.fail("unsupported compression method " + std::to_string(method) + " for " + entry_name);
    }
    const auto actual = crc32(0L, reinterpret_cast<const Bytef*>(contents.data()),
                              static_cast<uInt>(contents.size()));
    if (actual != crc) r.fail("CRC mismatch for " + entry_name);
    files[entry_name] = std::move(contents);
  }
  return files;
}

std::map<std::string, std::string> read_zip_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kEnvironment, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_zip(buffer.str(), path.string());
}

}  // namespace fusion::analysis
