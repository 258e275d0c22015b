#include "pyx/runtime.hpp"

#include <cstring>

// Little-endian fixed-width numerics, u32-length-prefixed strings. Values
// are tagged with their kind byte. This is the one encoding used for wire
// frames, heap payloads and profiled value sizes.

namespace pyx {

void WireWriter::u8(uint8_t v) { buf_.push_back(static_cast<char>(v)); }

void WireWriter::u16(uint16_t v) {
  for (int i = 0; i < 2; ++i)
    buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void WireWriter::u32(uint32_t v) {
  for (int i = 0; i < 4; ++i)
    buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void WireWriter::u64(uint64_t v) {
  for (int i = 0; i < 8; ++i)
    buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void WireWriter::f64(double v) {
  uint64_t bits;
  std::memcpy(&bits, &v, 8);
  u64(bits);
}

void WireWriter::str(std::string_view s) {
  u32(static_cast<uint32_t>(s.size()));
  buf_.append(s.data(), s.size());
}

void WireWriter::value(const Value &v) {
  struct Visitor {
    WireWriter &w;
    void operator()(int64_t i) {
      w.u8(0);
      w.u64(static_cast<uint64_t>(i));
    }
    void operator()(double d) {
      w.u8(1);
      w.f64(d);
    }
    void operator()(bool b) {
      w.u8(2);
      w.u8(b ? 1 : 0);
    }
    void operator()(const std::string &s) {
      w.u8(3);
      w.str(s);
    }
    void operator()(const Ref &r) {
      w.u8(r.kind == ValueKind::ArrayRef ? 5 : 4);
      w.u64(r.id);
    }
  };
  std::visit(Visitor{*this}, v);
}

void WireReader::need(size_t n) const {
  if (pos_ + n > data_.size())
    throw Diag("wire", "truncated frame payload");
}

uint8_t WireReader::u8() {
  need(1);
  return static_cast<uint8_t>(data_[pos_++]);
}

uint16_t WireReader::u16() {
  need(2);
  uint16_t v = 0;
  for (int i = 0; i < 2; ++i)
    v |= static_cast<uint16_t>(static_cast<uint8_t>(data_[pos_++])) << (8 * i);
  return v;
}

uint32_t WireReader::u32() {
  need(4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    v |= static_cast<uint32_t>(static_cast<uint8_t>(data_[pos_++])) << (8 * i);
  return v;
}

uint64_t WireReader::u64() {
  need(8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<uint64_t>(static_cast<uint8_t>(data_[pos_++])) << (8 * i);
  return v;
}

double WireReader::f64() {
  uint64_t bits = u64();
  double d;
  std::memcpy(&d, &bits, 8);
  return d;
}

std::string WireReader::str() {
  uint32_t n = u32();
  need(n);
  std::string s(data_.substr(pos_, n));
  pos_ += n;
  return s;
}

Value WireReader::value() {
  switch (u8()) {
  case 0: return static_cast<int64_t>(u64());
  case 1: return f64();
  case 2: return u8() != 0;
  case 3: return str();
  case 4: return Ref{ValueKind::ObjectRef, u64()};
  case 5: return Ref{ValueKind::ArrayRef, u64()};
  default:
    throw Diag("wire", "bad value tag");
  }
}

} // namespace pyx
