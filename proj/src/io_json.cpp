#include "symflow/io_json.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "symflow/catalog.hpp"
#include "symflow/errors.hpp"

namespace symflow {

namespace {

Json entry_to_json(Field f, const Quat& q) {
  switch (f) {
    case Field::R: return q.w;
    case Field::C: return Json::array({q.w, q.x});
    case Field::H: return Json::array({q.w, q.x, q.y, q.z});
  }
  throw InvalidInput("unknown field");
}

Quat entry_from_json(Field f, const Json& j) {
  if (f == Field::R) {
    if (!j.is_number()) throw InvalidInput("real entries must be numbers");
    return Quat(j.get<double>());
  }
  if (!j.is_array()) throw InvalidInput("non-real entries must be arrays");
  const std::size_t want = f == Field::C ? 2 : 4;
  if (j.size() != want)
    throw InvalidInput("entry has " + std::to_string(j.size()) +
                       " components, expected " + std::to_string(want));
  Quat q;
  q.w = j[0].get<double>();
  q.x = j[1].get<double>();
  if (want == 4) {
    q.y = j[2].get<double>();
    q.z = j[3].get<double>();
  }
  return q;
}

}  // namespace

Json matrix_to_json(const MatrixK& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(entry_to_json(m.field(), m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"field", field_name(m.field())}, {"n", m.n()}, {"rows", rows}};
}

MatrixK matrix_from_json(const Json& j) {
  if (!j.contains("field") || !j.contains("n") || !j.contains("rows"))
    throw InvalidInput("matrix JSON needs 'field', 'n' and 'rows'");
  const Field f = field_from_name(j.at("field").get<std::string>());
  const int n = j.at("n").get<int>();
  const Json& rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw InvalidInput("matrix JSON 'rows' must hold n rows");
  MatrixK m(f, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InvalidInput("matrix JSON row " + std::to_string(i) + " must hold n entries");
    for (int c = 0; c < n; ++c)
      m.at(i, c) = entry_from_json(f, row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json automorphism_to_json(const Automorphism& a) {
  return Json{{"conjugator", matrix_to_json(a.conjugator())},
              {"entrywise_conjugation", a.entrywise_conjugation()}};
}

Automorphism automorphism_from_json(const Json& j) {
  if (!j.contains("conjugator"))
    throw InvalidInput("automorphism JSON needs 'conjugator'");
  const bool entrywise = j.value("entrywise_conjugation", false);
  return Automorphism(matrix_from_json(j.at("conjugator")), entrywise);
}

Json space_to_json(const SpaceSpec& s) {
  Json j{{"name", s.name}, {"field", field_name(s.field)}, {"n", s.n}};
  j["sigma"] = s.sigma ? automorphism_to_json(*s.sigma) : Json(nullptr);
  j["model_is_whole_sigma_set"] = s.model_is_whole_sigma_set;
  return j;
}

SpaceSpec space_from_json(const Json& j) {
  SpaceSpec s;
  s.name = j.value("name", std::string("unnamed"));
  if (j.contains("sigma") && !j.at("sigma").is_null()) {
    s.sigma = automorphism_from_json(j.at("sigma"));
    s.field = s.sigma->field();
    s.n = s.sigma->n();
    if (j.contains("field") &&
        field_from_name(j.at("field").get<std::string>()) != s.field)
      throw InvalidInput("space field tag disagrees with the conjugator");
    if (j.contains("n") && j.at("n").get<int>() != s.n)
      throw InvalidInput("space dimension disagrees with the conjugator");
  } else {
    if (j.contains("field")) s.field = field_from_name(j.at("field").get<std::string>());
    if (j.contains("n")) s.n = j.at("n").get<int>();
  }
  s.model_is_whole_sigma_set = j.value("model_is_whole_sigma_set", false);
  return s;
}

Json record_to_json(const CriticalPointRecord& r) {
  return Json{{"point", matrix_to_json(r.point)},
              {"value", r.value},
              {"residual", r.residual},
              {"hessian_eigenvalues", r.hessian_eigenvalues},
              {"kernel_dim", r.kernel_dim},
              {"morse", r.morse},
              {"cluster_size", r.cluster_size}};
}

Json records_to_json(const std::vector<CriticalPointRecord>& rs) {
  Json arr = Json::array();
  for (const CriticalPointRecord& r : rs) arr.push_back(record_to_json(r));
  return arr;
}

Json tolerances_to_json(const Tolerances& t) {
  return Json{{"equality", t.equality},
              {"singularity", t.singularity},
              {"series", t.series},
              {"criticality", t.criticality},
              {"kernel_gap", t.kernel_gap},
              {"svd_gap", t.svd_gap},
              {"cluster_radius", t.cluster_radius}};
}

void flow_trace_to_csv(const FlowTrace& trace, Field field, int n,
                       std::ostream& os) {
  const char* suffixes_h[] = {"_w", "_x", "_y", "_z"};
  const char* suffixes_c[] = {"_re", "_im"};
  const int d = field_dim(field);
  os << "t";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < d; ++c) {
        os << ",a" << i << j;
        if (field == Field::C) os << suffixes_c[c];
        if (field == Field::H) os << suffixes_h[c];
      }
  os << ",height,grad_norm,model_defect\n";
  char buf[32];
  auto emit = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
  };
  for (std::size_t s = 0; s < trace.times.size(); ++s) {
    emit(trace.times[s]);
    const MatrixK& a = trace.points[s];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Quat& q = a.at(i, j);
        const double comp[4] = {q.w, q.x, q.y, q.z};
        for (int c = 0; c < d; ++c) {
          os << ',';
          emit(comp[c]);
        }
      }
    os << ',';
    emit(trace.heights[s]);
    os << ',';
    emit(trace.grad_norms[s]);
    os << ',';
    emit(trace.model_defects[s]);
    os << '\n';
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

MatrixK load_matrix_file(const std::string& path) {
  return matrix_from_json(load_json_file(path));
}

SpaceSpec load_space(const std::string& name_or_path) {
  if (is_catalog_name(name_or_path)) return catalog_space(name_or_path);
  return space_from_json(load_json_file(name_or_path));
}

}  // namespace symflow
