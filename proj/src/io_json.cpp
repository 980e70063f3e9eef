#include "qht/io_json.hpp"

#include <fstream>
#include <sstream>

using nlohmann::json;

namespace qht {

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << path << ": " << e.what();
    throw ValidationError(os.str());
  }
}

// Reads one of the two part matrices ("re"/"im"), rejecting ragged rows.
void read_part(const json& j, const std::string& key, int dim,
               const std::string& where, std::vector<std::vector<double>>& out) {
  if (!j.contains(key))
    throw ValidationError(where + ": missing \"" + key + "\"");
  const json& rows = j.at(key);
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    std::ostringstream os;
    os << where << "." << key << ": expected " << dim << " rows";
    throw ValidationError(os.str());
  }
  out.clear();
  for (int i = 0; i < dim; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      std::ostringstream os;
      os << where << "." << key << " row " << i << ": expected " << dim
         << " entries, got "
         << (row.is_array() ? std::to_string(row.size()) : "a non-array");
      throw ValidationError(os.str());
    }
    std::vector<double> vals;
    for (int k = 0; k < dim; ++k) {
      const json& v = row.at(k);
      if (!v.is_number()) {
        std::ostringstream os;
        os << where << "." << key << " row " << i << " entry " << k
           << ": expected a number";
        throw ValidationError(os.str());
      }
      vals.push_back(v.get<double>());
    }
    out.push_back(std::move(vals));
  }
}

}  // namespace

Matrix operator_from_json(const json& j, const std::string& where) {
  if (!j.is_object())
    throw ValidationError(where + ": expected an operator object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer())
    throw ValidationError(where + ": missing integer \"dim\"");
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw ValidationError(where + ": dim must be >= 1");
  std::vector<std::vector<double>> re, im;
  read_part(j, "re", dim, where, re);
  read_part(j, "im", dim, where, im);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) m(i, k) = cplx(re[i][k], im[i][k]);
  return m;
}

HermitianOperator load_operator(const std::string& path) {
  return make_hermitian(operator_from_json(parse_file(path), path));
}

HypothesisPair load_pair(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("rho") || !j.contains("sigma"))
    throw ValidationError(path + ": expected {\"rho\": ..., \"sigma\": ...}");
  const DensityMatrix rho =
      make_density(make_hermitian(operator_from_json(j.at("rho"), path + ":rho")));
  const DensityMatrix sigma = make_density(
      make_hermitian(operator_from_json(j.at("sigma"), path + ":sigma")));
  return make_pair(rho, sigma);
}

ChannelFile load_channel(const std::string& path) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("letters") || !j.at("letters").is_array() ||
      j.at("letters").empty())
    throw ValidationError(path +
                          ": expected {\"letters\": [...], \"p\": optional}");
  std::vector<DensityMatrix> letters;
  for (size_t i = 0; i < j.at("letters").size(); ++i) {
    std::ostringstream where;
    where << path << ":letters[" << i << "]";
    letters.push_back(make_density(
        make_hermitian(operator_from_json(j.at("letters").at(i), where.str()))));
  }
  CQChannel ch = make_channel(std::move(letters));
  InputDistribution p = uniform_distribution(ch.alphabet());
  if (j.contains("p")) {
    if (!j.at("p").is_array() ||
        static_cast<int>(j.at("p").size()) != ch.alphabet()) {
      std::ostringstream os;
      os << path << ":p: expected " << ch.alphabet() << " probabilities";
      throw ValidationError(os.str());
    }
    std::vector<double> probs;
    for (const auto& v : j.at("p")) {
      if (!v.is_number())
        throw ValidationError(path + ":p: expected numbers");
      probs.push_back(v.get<double>());
    }
    p = make_distribution(std::move(probs));
  }
  return ChannelFile{std::move(ch), std::move(p)};
}

json operator_to_json(const Matrix& m) {
  json j;
  j["dim"] = m.rows;
  json re = json::array(), im = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json rrow = json::array(), irow = json::array();
    for (int k = 0; k < m.cols; ++k) {
      rrow.push_back(m(i, k).real());
      irow.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

}  // namespace qht
