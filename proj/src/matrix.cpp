#include "omega/matrix.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace omega {

long long SparseIntMatrix::nnz() const {
  long long total = 0;
  for (const auto& c : columns) total += (long long)c.coeffs.coeffs.size();
  return total;
}

int SparseIntMatrix::row_index(const SchubertLabel& s) const {
  for (int i = 0; i < rows(); ++i)
    if (row_labels[i] == s) return i;
  throw std::out_of_range("label " + label_to_string(s) + " is not a row");
}

SparseIntMatrix empty_matrix(int r, int n) {
  SparseIntMatrix m;
  m.r = r;
  m.n = n;
  m.row_labels = canonical_schubert_order(r, n);
  return m;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_triples(const SparseIntMatrix& m) {
  std::ostringstream out;
  out << m.rows() << " " << m.cols() << " " << m.nnz() << "\n";
  for (int j = 0; j < m.cols(); ++j)
    for (const auto& [s, c] : m.columns[j].coeffs.coeffs)
      out << m.row_index(s) + 1 << " " << j + 1 << " " << c << "\n";
  return out.str();
}

std::string to_csv(const SparseIntMatrix& m) {
  std::ostringstream out;
  out << "row";
  for (const auto& col : m.columns) out << ",\"" << col.desc.to_string() << "\"";
  out << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    out << label_to_string(m.row_labels[i]);
    for (const auto& col : m.columns) out << "," << col.coeffs.at(m.row_labels[i]);
    out << "\n";
  }
  return out.str();
}

nlohmann::json to_json(const SparseIntMatrix& m) {
  nlohmann::json j;
  j["rank"] = m.r;
  j["n"] = m.n;
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const auto& s : m.row_labels) rows.push_back(label_to_string(s));
  auto& cols = j["columns"] = nlohmann::json::array();
  for (const auto& col : m.columns) {
    nlohmann::json c;
    c["descriptor"] = col.desc.to_json();
    auto& entries = c["entries"] = nlohmann::json::object();
    for (const auto& [s, v] : col.coeffs.coeffs) entries[label_to_string(s)] = v;
    cols.push_back(std::move(c));
  }
  return j;
}

nlohmann::json sidecar_json(const SparseIntMatrix& m) {
  nlohmann::json j;
  j["rank"] = m.r;
  j["n"] = m.n;
  j["format_version"] = 1;
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const auto& s : m.row_labels) rows.push_back(label_to_string(s));
  auto& cols = j["columns"] = nlohmann::json::array();
  for (const auto& col : m.columns) cols.push_back(col.desc.to_json());
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(to_triples(m)));
  j["checksum"] = buf;
  return j;
}

SparseIntMatrix matrix_from_cache(const std::string& triples_text, const nlohmann::json& sidecar) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv1a(triples_text));
  if (sidecar.at("checksum").get<std::string>() != buf)
    throw std::runtime_error("checksum mismatch in cached matrix data");

  SparseIntMatrix m;
  m.r = sidecar.at("rank").get<int>();
  m.n = sidecar.at("n").get<int>();
  for (const auto& row : sidecar.at("rows"))
    m.row_labels.push_back(parse_label(row.get<std::string>(), m.n));
  if (m.row_labels != canonical_schubert_order(m.r, m.n))
    throw std::runtime_error("cached matrix rows are not in canonical order");
  for (const auto& d : sidecar.at("columns")) {
    MatrixColumn col;
    col.desc = MatroidDescriptor::from_json(d);
    col.coeffs.r = m.r;
    col.coeffs.n = m.n;
    m.columns.push_back(std::move(col));
  }

  std::istringstream in(triples_text);
  int rows = 0, cols = 0;
  long long nnz = 0;
  if (!(in >> rows >> cols >> nnz)) throw std::runtime_error("malformed triples header");
  if (rows != m.rows() || cols != m.cols()) throw std::runtime_error("triples shape disagrees with sidecar");
  for (long long k = 0; k < nnz; ++k) {
    int i = 0, j = 0;
    long long v = 0;
    if (!(in >> i >> j >> v)) throw std::runtime_error("malformed triples entry");
    if (i < 1 || i > rows || j < 1 || j > cols) throw std::runtime_error("triples entry out of range");
    m.columns[j - 1].coeffs.add(m.row_labels[i - 1], v);
  }
  return m;
}

}  // namespace omega
