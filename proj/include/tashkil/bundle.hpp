#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "tashkil/errors.hpp"
#include "tashkil/hmm.hpp"
#include "tashkil/utf8.hpp"

namespace tashkil {

struct CorpusStats {
  std::uint64_t sentences = 0;
  std::uint64_t tokens = 0;
  std::uint64_t types = 0;  // distinct vowelized forms

  bool operator==(const CorpusStats&) const = default;
};

struct TrainedBundle {
  HmmModel model1;      // hidden = vowelized words
  HmmModel model2;      // hidden = diacritic patterns
  HmmModel char_model;  // hidden = marks, observed = letters
  std::uint64_t lexicon_hash = 0;
  CorpusStats stats;

  bool operator==(const TrainedBundle&) const = default;
};

// Bundle container, version 1. Fixed little-endian layout:
//   "TKLB", u32 version, u64 lexicon hash, 3x u64 corpus stats,
//   three models (kind u8, delta f64, two vocabs, initial row,
//   transition rows, emission rows; strings are u32 length + UTF-8;
//   rows are f64 floor, u32 n, n x (i32 index, f64 log-prob)),
//   u64 FNV-1a checksum of everything after the version field.
namespace detail {

inline constexpr char kBundleMagic[4] = {'T', 'K', 'L', 'B'};
inline constexpr std::uint32_t kBundleVersion = 1;

inline void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

inline void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

inline void put_f64(std::string& out, double v) {
  put_u64(out, std::bit_cast<std::uint64_t>(v));
}

inline void put_str(std::string& out, std::string_view s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.append(s);
}

struct Reader {
  std::string_view data;
  std::size_t pos = 0;

  void need(std::size_t n) const {
    if (pos + n > data.size()) throw CorruptTable("bundle truncated");
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
      v |= static_cast<std::uint32_t>(static_cast<unsigned char>(data[pos + i]))
           << (8 * i);
    pos += 4;
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data[pos + i]))
           << (8 * i);
    pos += 8;
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(data[pos++]);
  }
  std::string str() {
    const auto n = u32();
    need(n);
    std::string s(data.substr(pos, n));
    pos += n;
    return s;
  }
};

inline void put_row(std::string& out, const SparseRow& row) {
  put_f64(out, row.floor);
  put_u32(out, static_cast<std::uint32_t>(row.entries.size()));
  for (const auto& [idx, lp] : row.entries) {
    put_u32(out, static_cast<std::uint32_t>(idx));
    put_f64(out, lp);
  }
}

inline SparseRow read_row(Reader& r) {
  SparseRow row;
  row.floor = r.f64();
  const auto n = r.u32();
  row.entries.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::int32_t>(r.u32());
    row.entries.emplace_back(idx, r.f64());
  }
  return row;
}

inline void put_model(std::string& out, const HmmModel& m) {
  out.push_back(static_cast<char>(m.emission_kind));
  put_f64(out, m.smoothing.delta);
  put_u32(out, static_cast<std::uint32_t>(m.hidden.items.size()));
  for (const auto& s : m.hidden.items) put_str(out, s);
  put_u32(out, static_cast<std::uint32_t>(m.observed.items.size()));
  for (const auto& s : m.observed.items) put_str(out, s);
  put_row(out, m.initial);
  put_u32(out, static_cast<std::uint32_t>(m.transitions.size()));
  for (const auto& row : m.transitions) put_row(out, row);
  put_u32(out, static_cast<std::uint32_t>(m.emissions.size()));
  for (const auto& row : m.emissions) put_row(out, row);
}

inline HmmModel read_model(Reader& r) {
  HmmModel m;
  const auto kind = r.u8();
  if (kind > static_cast<std::uint8_t>(EmissionKind::StripMatch))
    throw CorruptTable("unknown emission kind");
  m.emission_kind = static_cast<EmissionKind>(kind);
  m.smoothing.delta = r.f64();
  const auto nh = r.u32();
  for (std::uint32_t i = 0; i < nh; ++i) m.hidden.add(r.str());
  const auto no = r.u32();
  for (std::uint32_t i = 0; i < no; ++i) m.observed.add(r.str());
  m.initial = read_row(r);
  const auto nt = r.u32();
  m.transitions.reserve(nt);
  for (std::uint32_t i = 0; i < nt; ++i) m.transitions.push_back(read_row(r));
  const auto ne = r.u32();
  m.emissions.reserve(ne);
  for (std::uint32_t i = 0; i < ne; ++i) m.emissions.push_back(read_row(r));
  if (m.transitions.size() != m.hidden.items.size())
    throw CorruptTable("transition table does not match hidden vocab");
  if (m.emission_kind == EmissionKind::Table &&
      m.emissions.size() != m.hidden.items.size())
    throw CorruptTable("emission table does not match hidden vocab");
  if (m.emission_kind == EmissionKind::StripMatch) {
    if (!m.emissions.empty())
      throw CorruptTable("unexpected emission rows for structural emissions");
    m.stripped.reserve(m.hidden.items.size());
    for (const auto& key : m.hidden.items)
      m.stripped.push_back(utf8_encode(strip_text(utf8_decode(key))));
  }
  return m;
}

}  // namespace detail

inline std::string serialize_bundle(const TrainedBundle& b) {
  std::string out;
  out.append(detail::kBundleMagic, 4);
  detail::put_u32(out, detail::kBundleVersion);
  detail::put_u64(out, b.lexicon_hash);
  detail::put_u64(out, b.stats.sentences);
  detail::put_u64(out, b.stats.tokens);
  detail::put_u64(out, b.stats.types);
  detail::put_model(out, b.model1);
  detail::put_model(out, b.model2);
  detail::put_model(out, b.char_model);
  detail::put_u64(out, fnv1a(std::string_view(out).substr(8)));
  return out;
}

inline TrainedBundle parse_bundle(std::string_view bytes) {
  if (bytes.size() < 20 || bytes.substr(0, 4) != std::string_view("TKLB", 4))
    throw FormatVersionMismatch("not a model bundle");
  detail::Reader header{bytes, 4};
  const auto version = header.u32();
  if (version != detail::kBundleVersion)
    throw FormatVersionMismatch("bundle version " + std::to_string(version) +
                                ", expected " +
                                std::to_string(detail::kBundleVersion));
  const auto body = bytes.substr(8, bytes.size() - 16);
  const std::uint64_t stored =
      detail::Reader{bytes, bytes.size() - 8}.u64();
  if (fnv1a(body) != stored) throw CorruptTable("bundle checksum mismatch");

  detail::Reader r{bytes.substr(0, bytes.size() - 8), 8};
  TrainedBundle b;
  b.lexicon_hash = r.u64();
  b.stats.sentences = r.u64();
  b.stats.tokens = r.u64();
  b.stats.types = r.u64();
  b.model1 = detail::read_model(r);
  b.model2 = detail::read_model(r);
  b.char_model = detail::read_model(r);
  if (r.pos != r.data.size()) throw CorruptTable("trailing bytes in bundle");
  b.model1.validate();
  b.model2.validate();
  b.char_model.validate();
  return b;
}

inline void save_bundle(const TrainedBundle& b, const std::string& path) {
  write_file_bytes(path, serialize_bundle(b));
}

inline TrainedBundle load_bundle(const std::string& path) {
  return parse_bundle(read_file_bytes(path));
}

}  // namespace tashkil
