#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "symflow/cayley.hpp"
#include "symflow/decomposition.hpp"
#include "symflow/symmetric_space.hpp"

namespace symflow {

using Json = nlohmann::json;

// Matrix files: {"field": "R"|"C"|"H", "n": int, "rows": [[entry,...],...]}
// with entry a number (R), [re, im] (C) or [w, x, y, z] (H).
Json matrix_to_json(const MatrixK& m);
MatrixK matrix_from_json(const Json& j);

// Space files: {"name", "field", "n", "sigma": {"conjugator": matrix,
// "entrywise_conjugation": bool}}; sigma null or absent means group mode.
Json space_to_json(const SpaceSpec& s);
SpaceSpec space_from_json(const Json& j);

Json automorphism_to_json(const Automorphism& a);
Automorphism automorphism_from_json(const Json& j);

Json record_to_json(const CriticalPointRecord& r);
Json records_to_json(const std::vector<CriticalPointRecord>& rs);

Json tolerances_to_json(const Tolerances& t);

// Flow traces as CSV: header row, then t, the entry components in row
// major order (w,x,y,z per quaternion entry; re,im for C; one column for
// R), height, grad_norm, model_defect.
void flow_trace_to_csv(const FlowTrace& trace, Field field, int n,
                       std::ostream& os);

MatrixK load_matrix_file(const std::string& path);
Json load_json_file(const std::string& path);

// Accepts a catalog name or a path to a space JSON file.
SpaceSpec load_space(const std::string& name_or_path);

}  // namespace symflow
