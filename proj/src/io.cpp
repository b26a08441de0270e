#include "flagcert/io.hpp"

#include <stdexcept>

namespace flagcert {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("malformed JSON: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) fail(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<size_t>();
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json coords_json(std::span<const GaussQ> coords) {
  Json a = Json::array();
  for (const auto& c : coords) a.push_back(c.to_text());
  return a;
}

std::vector<GaussQ> coords_from(const Json& j, size_t expected) {
  if (!j.is_array() || j.size() != expected) fail("coordinate list of length " + std::to_string(expected) + " expected");
  std::vector<GaussQ> out;
  for (const auto& c : j) out.push_back(GaussQ::from_text(string_of(c, "coordinate")));
  return out;
}

Scalar lifted_scalar(const TowerPtr& tower, const std::vector<GaussQ>& coords) {
  // from_coords trims, so the result is canonical even when the coordinates were padded.
  return Scalar::from_coords(tower, coords);
}

}  // namespace

TowerPtr TowerInterner::intern(const Json& radicands) {
  if (!radicands.is_array()) fail("radicands must be an array");
  TowerPtr t;
  Json prefix = Json::array();
  for (const auto& r : radicands) {
    prefix.push_back(r);
    const std::string key = prefix.dump();
    if (auto it = towers_.find(key); it != towers_.end()) {
      t = it->second;
      continue;
    }
    Scalar rad;
    if (r.is_number_integer()) {
      rad = Scalar(r.get<long>());
    } else if (r.is_string()) {
      rad = Scalar(GaussQ::from_text(r.get<std::string>()));
    } else {
      rad = lifted_scalar(t, coords_from(r, size_t{1} << tower_depth(t)));
    }
    t = Tower::adjoin(t, rad);
    towers_.emplace(key, t);
  }
  return t;
}

void TowerInterner::adopt(const TowerPtr& tower) {
  const Json all = radicands_to_json(tower);
  TowerPtr level = tower;
  for (size_t k = all.size(); k > 0; --k) {
    towers_.insert_or_assign(Json(std::vector<Json>(all.begin(), all.begin() + static_cast<long>(k))).dump(), level);
    level = level->parent();
  }
}

Json radicands_to_json(const TowerPtr& tower) {
  std::vector<const Tower*> chain;
  for (const Tower* t = tower.get(); t; t = t->parent().get()) chain.push_back(t);
  Json a = Json::array();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const Tower* t = *it;
    const Scalar& r = t->radicand();
    if (!r.is_gaussian()) {
      a.push_back(coords_json(t->radicand_coords()));
    } else if (r.base().is_real() && r.base().re.get_den() == 1 && r.base().re.get_num().fits_slong_p()) {
      a.push_back(r.base().re.get_num().get_si());
    } else {
      a.push_back(r.base().to_text());
    }
  }
  return a;
}

Json scalar_to_json(const Scalar& s) {
  if (s.is_gaussian()) return s.base().to_text();
  Json j;
  j["radicands"] = radicands_to_json(s.tower());
  j["coords"] = coords_json(s.coords());
  return j;
}

Scalar scalar_from_json(const Json& j, TowerInterner& towers) {
  if (j.is_string()) return Scalar(GaussQ::from_text(j.get<std::string>()));
  const TowerPtr t = towers.intern(field(j, "radicands"));
  return lifted_scalar(t, coords_from(field(j, "coords"), size_t{1} << tower_depth(t)));
}

TowerPtr matrix_tower(const Matrix& m) {
  TowerPtr t;
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) t = common_tower(t, m(r, c).tower());
  return t;
}

Json matrix_to_json(const Matrix& m) {
  const TowerPtr t = matrix_tower(m);
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["radicands"] = radicands_to_json(t);
  Json rows = Json::array();
  for (size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.cols(); ++c) {
      if (t)
        row.push_back(coords_json(m(r, c).lifted(t)));
      else
        row.push_back(m(r, c).base().to_text());
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

Matrix matrix_from_json(const Json& j, TowerInterner& towers) {
  const size_t rows = size_field(j, "rows"), cols = size_field(j, "cols");
  const TowerPtr t = towers.intern(field(j, "radicands"));
  const Json& entries = field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) fail("entries must have one array per row");
  Matrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (!entries[r].is_array() || entries[r].size() != cols) fail("row " + std::to_string(r) + " has the wrong length");
    for (size_t c = 0; c < cols; ++c) {
      const Json& e = entries[r][c];
      m(r, c) = t ? lifted_scalar(t, coords_from(e, size_t{1} << tower_depth(t)))
                  : Scalar(GaussQ::from_text(string_of(e, "entry")));
    }
  }
  return m;
}

Json vector_to_json(const Vector& v) {
  const std::vector<Vector> cols{v};
  return matrix_to_json(Matrix::from_columns(cols, v.size()));
}

Vector vector_from_json(const Json& j, TowerInterner& towers) {
  const Matrix m = matrix_from_json(j, towers);
  if (m.cols() != 1) fail("vector must be a single column");
  return m.col(0);
}

Json form_to_json(const FormSpec& f) {
  Json j;
  j["kind"] = to_string(f.kind);
  j["gram"] = matrix_to_json(f.gram);
  return j;
}

FormSpec form_from_json(const Json& j, TowerInterner& towers) {
  return FormSpec::make(form_kind_from_string(string_of(field(j, "kind"), "form kind")),
                        matrix_from_json(field(j, "gram"), towers));
}

Json group_to_json(const GroupSpec& g) {
  Json j;
  j["name"] = g.name;
  j["ambient_dim"] = g.ambient_dim;
  Json cs = Json::array();
  for (const auto& c : g.constraints) {
    Json cj;
    cj["kind"] = to_string(c.kind);
    if (c.form) cj["form"] = form_to_json(*c.form);
    if (c.kind == Constraint::Kind::fixes_vector) cj["vector"] = vector_to_json(c.vector);
    cs.push_back(std::move(cj));
  }
  j["constraints"] = std::move(cs);
  return j;
}

GroupSpec group_from_json(const Json& j, TowerInterner& towers) {
  GroupSpec g;
  g.name = string_of(field(j, "name"), "group name");
  g.ambient_dim = size_field(j, "ambient_dim");
  const Json& cs = field(j, "constraints");
  if (!cs.is_array()) fail("constraints must be an array");
  for (const auto& cj : cs) {
    const std::string kind = string_of(field(cj, "kind"), "constraint kind");
    Constraint c;
    if (kind == "preserves_bilinear" || kind == "preserves_hermitian") {
      c = Constraint::preserves(form_from_json(field(cj, "form"), towers));
      if (to_string(c.kind) != kind) fail("constraint kind does not match its form");
    } else if (kind == "det_equals_one") {
      c = Constraint::det_one();
    } else if (kind == "fixes_vector") {
      c = Constraint::fixes(vector_from_json(field(cj, "vector"), towers));
    } else if (kind == "real_entries") {
      c = Constraint::real();
    } else {
      fail("unknown constraint kind '" + kind + "'");
    }
    if (c.form && c.form->dim() != g.ambient_dim) fail("constraint form dimension mismatch");
    if (c.kind == Constraint::Kind::fixes_vector && c.vector.size() != g.ambient_dim)
      fail("fixed vector dimension mismatch");
    g.constraints.push_back(std::move(c));
  }
  return g;
}

Json witness_to_json(const Witness& w) {
  Json j;
  j["schema"] = kWitnessSchema;
  j["group"] = group_to_json(w.group);
  Json claim;
  claim["kind"] = to_string(w.claim.kind);
  claim["source"] = matrix_to_json(w.claim.source);
  claim["target"] = matrix_to_json(w.claim.target);
  j["claim"] = std::move(claim);
  j["element"] = matrix_to_json(w.element);
  j["radicands"] = radicands_to_json(matrix_tower(w.element));
  return j;
}

Witness witness_from_json(const Json& j, TowerInterner& towers) {
  if (string_of(field(j, "schema"), "schema") != kWitnessSchema) fail("unsupported witness schema");
  Witness w;
  w.group = group_from_json(field(j, "group"), towers);
  const Json& claim = field(j, "claim");
  w.claim.kind = claim_kind_from_string(string_of(field(claim, "kind"), "claim kind"));
  w.claim.source = matrix_from_json(field(claim, "source"), towers);
  w.claim.target = matrix_from_json(field(claim, "target"), towers);
  w.element = matrix_from_json(field(j, "element"), towers);
  if (field(j, "radicands") != field(field(j, "element"), "radicands")) fail("radicand list disagrees with the element");
  w.verified = false;
  return w;
}

Json model_to_json(const StandardModel& m) {
  Json j;
  j["case"] = to_string(m.kind);
  j["name"] = m.name();
  j["n"] = m.n;
  j["p"] = m.p;
  j["q"] = m.q;
  j["dim"] = m.dim;
  j["b"] = form_to_json(m.b);
  if (m.omega) j["omega"] = form_to_json(*m.omega);
  j["h"] = form_to_json(m.h);
  if (m.kind == ModelCase::projective_split || m.kind == ModelCase::projective_pq) {
    j["J"] = matrix_to_json(m.J);
  }
  if (m.kind == ModelCase::quadric7) {
    j["z_plus"] = vector_to_json(m.z_plus);
    j["z_minus"] = vector_to_json(m.z_minus);
  }
  if (m.kind == ModelCase::isotropic) {
    j["h_on_v"] = form_to_json(*m.h_on_v);
    j["b_signature"] = form_to_json(*m.b_signature);
    j["to_standard"] = matrix_to_json(m.to_standard);
    j["fixed"] = vector_to_json(m.fixed);
  }
  return j;
}

}  // namespace flagcert
