#include "arrpair/io.hpp"

#include <fstream>
#include <sstream>

#include "arrpair/errors.hpp"

namespace arrpair {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get_as(const Json& j, const char* key) {
  const Json& v = require(j, key);
  try {
    return v.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("key \"") + key + "\" has the wrong type");
  }
}

template <typename T>
Json optional_to_json(const std::optional<T>& value, Json (*convert)(const T&)) {
  return value ? convert(*value) : Json(nullptr);
}

}  // namespace

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

Json vector_to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

QVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  QVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("expected a nonempty array of rows");
  std::vector<QVector> rows;
  for (const auto& row : j) rows.push_back(vector_from_json(row));
  for (const auto& row : rows)
    if (row.size() != rows.front().size() || row.empty()) throw ParseError("matrix rows must be nonempty and of equal length");
  return QMatrix::from_rows(rows);
}

Json arrangement_to_json(const Arrangement& arr) {
  Json hs = Json::array();
  for (const auto& h : arr.hyperplanes()) {
    Json entry;
    entry["normal"] = vector_to_json(h.normal);
    entry["offset"] = rational_to_json(h.offset);
    hs.push_back(std::move(entry));
  }
  Json out;
  out["ambient_dim"] = arr.ambient_dim();
  out["hyperplanes"] = std::move(hs);
  return out;
}

Arrangement arrangement_from_json(const Json& j) {
  const Json& dim = require(j, "ambient_dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
    throw ParseError("\"ambient_dim\" must be a positive integer");
  const auto m = dim.get<std::size_t>();
  const Json& list = require(j, "hyperplanes");
  if (!list.is_array() || list.empty()) throw ParseError("\"hyperplanes\" must be a nonempty array");
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Json& entry = list[i];
    Hyperplane h{vector_from_json(require(entry, "normal")), rational_from_json(require(entry, "offset"))};
    if (h.normal.size() != m)
      throw ParseError("normal at index " + std::to_string(i + 1) + " has length " + std::to_string(h.normal.size()) +
                       ", expected " + std::to_string(m));
    hs.push_back(std::move(h));
  }
  return Arrangement(m, std::move(hs));
}

std::string serialize_arrangement(const Arrangement& arr) { return arrangement_to_json(arr).dump(2) + "\n"; }

Arrangement parse_arrangement(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return arrangement_from_json(j);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  if (!out) throw IoError("write failed for " + path.string());
}

Arrangement load_arrangement(const std::filesystem::path& path) { return parse_arrangement(read_file(path)); }

Json certificate_to_json(const DefinitenessCertificate& cert) {
  Json out;
  out["verdict"] = std::string(to_string(cert.verdict));
  out["leading_minors"] = vector_to_json(cert.leading_minors);
  out["negative_witness"] = optional_to_json(cert.negative_witness, &vector_to_json);
  out["negative_value"] = optional_to_json(cert.negative_value, &rational_to_json);
  out["positive_witness"] = optional_to_json(cert.positive_witness, &vector_to_json);
  out["positive_value"] = optional_to_json(cert.positive_value, &rational_to_json);
  return out;
}

DefinitenessCertificate certificate_from_json(const Json& j) {
  DefinitenessCertificate cert;
  cert.verdict = definiteness_from_string(get_as<std::string>(j, "verdict"));
  cert.leading_minors = vector_from_json(require(j, "leading_minors"));
  auto opt_vec = [&](const char* key, std::optional<QVector>& dst) {
    const Json& v = require(j, key);
    if (!v.is_null()) dst = vector_from_json(v);
  };
  auto opt_q = [&](const char* key, std::optional<Rational>& dst) {
    const Json& v = require(j, key);
    if (!v.is_null()) dst = rational_from_json(v);
  };
  opt_vec("negative_witness", cert.negative_witness);
  opt_q("negative_value", cert.negative_value);
  opt_vec("positive_witness", cert.positive_witness);
  opt_q("positive_value", cert.positive_value);
  return cert;
}

Json int_matrix_to_json(const IntMatrix& M) {
  Json out = Json::array();
  for (const auto& row : M) out.push_back(row);
  return out;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer matrix");
  IntMatrix M;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("expected an integer matrix row");
    std::vector<long long> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ParseError("matrix entries must be integers");
      r.push_back(x.get<long long>());
    }
    M.push_back(std::move(r));
  }
  for (const auto& row : M)
    if (row.size() != M.size()) throw ParseError("matrix must be square");
  return M;
}

Json report_to_json(const VerificationReport& rep) {
  Json out;
  out["ambient_dim"] = rep.ambient_dim;
  out["hyperplane_count"] = rep.hyperplane_count;
  out["region_count"] = rep.region_count;
  out["is_simple"] = rep.is_simple;
  out["is_coloop_free"] = rep.is_coloop_free;
  out["phi"] = int_matrix_to_json(rep.phi);
  out["gram"] = optional_to_json(rep.gram, &int_matrix_to_json);
  out["identity_holds"] = rep.identity_holds;
  out["psi_cycles"] = rep.psi_cycles;
  out["psi_independent"] = rep.psi_independent;
  out["psi_rank"] = rep.psi_rank;
  out["homology_rank_top"] = rep.homology_rank_top;
  out["rank_matches_r"] = rep.rank_matches_r;
  out["definiteness"] = certificate_to_json(rep.definiteness);
  out["phi_definiteness"] = certificate_to_json(rep.phi_definiteness);
  out["theorem_verdict"] = std::string(to_string(rep.theorem_verdict));
  out["notes"] = rep.notes;
  return out;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport rep;
  rep.ambient_dim = get_as<std::size_t>(j, "ambient_dim");
  rep.hyperplane_count = get_as<std::size_t>(j, "hyperplane_count");
  rep.region_count = get_as<std::size_t>(j, "region_count");
  rep.is_simple = get_as<bool>(j, "is_simple");
  rep.is_coloop_free = get_as<bool>(j, "is_coloop_free");
  rep.phi = int_matrix_from_json(require(j, "phi"));
  if (const Json& g = require(j, "gram"); !g.is_null()) rep.gram = int_matrix_from_json(g);
  rep.identity_holds = get_as<bool>(j, "identity_holds");
  rep.psi_cycles = get_as<bool>(j, "psi_cycles");
  rep.psi_independent = get_as<bool>(j, "psi_independent");
  rep.psi_rank = get_as<std::size_t>(j, "psi_rank");
  rep.homology_rank_top = get_as<std::size_t>(j, "homology_rank_top");
  rep.rank_matches_r = get_as<bool>(j, "rank_matches_r");
  rep.definiteness = certificate_from_json(require(j, "definiteness"));
  rep.phi_definiteness = certificate_from_json(require(j, "phi_definiteness"));
  rep.theorem_verdict = theorem_verdict_from_string(get_as<std::string>(j, "theorem_verdict"));
  rep.notes = get_as<std::vector<std::string>>(j, "notes");
  return rep;
}

}  // namespace arrpair
