#include "ffnets/genmat.hpp"

#include <fstream>
#include <sstream>

namespace ffnets {

const FieldElement& MatrixSet::at(int i, int j, int k) const {
  if (i < 1 || i > s || j < 1 || j > jmax || k < 0 || k >= cols)
    throw std::out_of_range("matrix entry index");
  return entries[i - 1][j - 1][k];
}

uint64_t fnv1a64(const std::string& text) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

std::string hex16(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

void check_shape(const MatrixSet& ms) {
  if (ms.s < 1 || ms.jmax < 1 || ms.cols < 1 || ms.mu < 1 || ms.g < 0)
    throw std::invalid_argument("matrix set shape out of range");
  if (ms.entries.size() != size_t(ms.s))
    throw std::invalid_argument("matrix set shape out of range");
  for (const auto& mat : ms.entries) {
    if (mat.size() != size_t(ms.jmax))
      throw std::invalid_argument("matrix set shape out of range");
    for (const auto& row : mat)
      if (row.size() != size_t(ms.cols))
        throw std::invalid_argument("matrix set shape out of range");
  }
}

/* Field line plus header (sans digest) plus row blocks: the digest input. */
std::string render_body(const MatrixSet& ms) {
  std::ostringstream out;
  out << "q=" << ms.field.characteristic() << "^" << ms.field.extension_degree();
  if (ms.field.extension_degree() > 1) {
    out << " modulus=";
    const auto& mod = ms.field.modulus();
    for (size_t i = 0; i < mod.size(); ++i) out << (i ? "," : "") << int(mod[i]);
  }
  out << "\n"
      << "s=" << ms.s << " variant=" << variant_token(ms.variant)
      << " mu=" << ms.mu << " g=" << ms.g << "\n";
  for (int i = 1; i <= ms.s; ++i) {
    out << "C " << i << " rows=" << ms.jmax << " cols=" << ms.cols << "\n";
    for (int j = 1; j <= ms.jmax; ++j) {
      const auto& row = ms.entries[i - 1][j - 1];
      for (int k = 0; k < ms.cols; ++k)
        out << (k ? " " : "") << ms.field.index(row[k]);
      out << "\n";
    }
  }
  return out.str();
}

[[noreturn]] void malformed(const std::string& what) {
  throw std::runtime_error("malformed matrix file: " + what);
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

uint64_t parse_u64(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    malformed(what);
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    malformed(what);
  }
}

std::string expect_kv(const std::string& tok, const std::string& key) {
  if (tok.size() < key.size() || tok.compare(0, key.size(), key) != 0)
    malformed("expected " + key + "<value>");
  return tok.substr(key.size());
}

}  // namespace

std::string serialize(const MatrixSet& ms) {
  check_shape(ms);
  std::string body = render_body(ms);
  size_t header_end = body.find('\n', body.find('\n') + 1);
  std::string digest = hex16(fnv1a64(body));
  return "FFNETS v1\n" + body.substr(0, header_end) + " digest=" + digest +
         body.substr(header_end);
}

MatrixSet deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "FFNETS v1")
    throw std::runtime_error("unsupported matrix file version");

  if (!std::getline(in, line)) malformed("missing field line");
  auto ftoks = split_ws(line);
  if (ftoks.empty()) malformed("missing field line");
  std::string qtok = expect_kv(ftoks[0], "q=");
  size_t caret = qtok.find('^');
  if (caret == std::string::npos) malformed("field line needs q=<p>^<e>");
  uint64_t p = parse_u64(qtok.substr(0, caret), "characteristic");
  uint64_t e = parse_u64(qtok.substr(caret + 1), "extension degree");
  std::vector<uint8_t> modulus;
  if (ftoks.size() > 1) {
    std::string mtext = expect_kv(ftoks[1], "modulus=");
    std::string digit;
    std::istringstream ms_in(mtext);
    while (std::getline(ms_in, digit, ','))
      modulus.push_back(uint8_t(parse_u64(digit, "modulus coefficient")));
  }
  if (ftoks.size() > 2) malformed("trailing tokens on the field line");

  MatrixSet ms;
  try {
    ms.field = Field(uint32_t(p), uint32_t(e), std::move(modulus));
  } catch (const std::invalid_argument& ex) {
    malformed(ex.what());
  }

  if (!std::getline(in, line)) malformed("missing header line");
  auto htoks = split_ws(line);
  if (htoks.size() != 5) malformed("header needs s, variant, mu, g, digest");
  ms.s = int(parse_u64(expect_kv(htoks[0], "s="), "s"));
  try {
    ms.variant = parse_variant(expect_kv(htoks[1], "variant="));
  } catch (const std::invalid_argument& ex) {
    malformed(ex.what());
  }
  ms.mu = int(parse_u64(expect_kv(htoks[2], "mu="), "mu"));
  ms.g = int(parse_u64(expect_kv(htoks[3], "g="), "g"));
  std::string claimed = expect_kv(htoks[4], "digest=");
  if (ms.s < 1 || ms.s > 1000 || ms.mu < 1 || ms.g < 0) malformed("header out of range");

  for (int i = 1; i <= ms.s; ++i) {
    if (!std::getline(in, line)) malformed("missing matrix block");
    auto btoks = split_ws(line);
    if (btoks.size() != 4 || btoks[0] != "C") malformed("expected a C block header");
    if (parse_u64(btoks[1], "matrix index") != uint64_t(i))
      malformed("matrix blocks out of order");
    int jmax = int(parse_u64(expect_kv(btoks[2], "rows="), "rows"));
    int cols = int(parse_u64(expect_kv(btoks[3], "cols="), "cols"));
    if (jmax < 1 || cols < 1) malformed("matrix depth out of range");
    if (i == 1) {
      ms.jmax = jmax;
      ms.cols = cols;
    } else if (jmax != ms.jmax || cols != ms.cols) {
      malformed("matrix blocks disagree on depth");
    }
    std::vector<std::vector<FieldElement>> mat;
    mat.reserve(size_t(jmax));
    for (int j = 1; j <= jmax; ++j) {
      if (!std::getline(in, line)) malformed("missing matrix row");
      auto rtoks = split_ws(line);
      if (rtoks.size() != size_t(cols)) malformed("wrong number of row entries");
      std::vector<FieldElement> row;
      row.reserve(size_t(cols));
      for (const auto& tok : rtoks) {
        uint64_t idx = parse_u64(tok, "element index");
        if (idx >= ms.field.size()) malformed("element index out of range");
        row.push_back(ms.field.from_index(idx));
      }
      mat.push_back(std::move(row));
    }
    ms.entries.push_back(std::move(mat));
  }
  std::string rest;
  while (std::getline(in, line))
    if (!line.empty()) malformed("trailing content");

  if (hex16(fnv1a64(render_body(ms))) != claimed)
    throw std::runtime_error("digest mismatch: matrix file corrupted");
  return ms;
}

void write_matrix_file(const MatrixSet& ms, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << serialize(ms);
  if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

MatrixSet read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize(buf.str());
}

}  // namespace ffnets
