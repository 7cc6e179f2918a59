#include "latgauss/json_io.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>

namespace latgauss {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::int64_t kSafeMax = 9007199254740991;  // 2^53 - 1

// number within the 53-bit safe range, decimal string beyond it
ordered_json encode_int(const Int& v) {
  if (v >= -kSafeMax && v <= kSafeMax) return ordered_json(v.convert_to<std::int64_t>());
  return ordered_json(v.str());
}

ordered_json encode_vec(const IntVec& v) {
  ordered_json arr = ordered_json::array();
  for (const Int& x : v) arr.push_back(encode_int(x));
  return arr;
}

ordered_json encode_points(const std::vector<IntVec>& pts) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : pts) arr.push_back(encode_vec(p));
  return arr;
}

ordered_json encode_mat(const IntMat& m) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode_int(m(i, j)));
    arr.push_back(std::move(row));
  }
  return arr;
}

ordered_json face_coordinates(const Face& f, const LatticePolytope& p) {
  ordered_json arr = ordered_json::array();
  for (const std::size_t idx : f.vertex_indices) arr.push_back(encode_vec(p.vertices()[idx]));
  return arr;
}

ordered_json encode_complex(const Complex& c) {
  return ordered_json::array({c.real(), c.imag()});
}

Int parse_decimal_string(const std::string& s) {
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start)
    throw std::invalid_argument("vertex entry string is not a decimal integer: \"" + s + "\"");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("vertex entry string is not a decimal integer: \"" + s + "\"");
  return Int(s);
}

Int parse_int_entry(const nlohmann::json& v) {
  if (v.is_number_integer() || v.is_number_unsigned()) {
    if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
    return Int(v.get<std::int64_t>());
  }
  if (v.is_number_float())
    throw std::invalid_argument(
        "float vertex entries are not accepted; use integers or decimal strings");
  if (v.is_string()) return parse_decimal_string(v.get<std::string>());
  throw std::invalid_argument("vertex entries must be integers or decimal strings");
}

}  // namespace

std::vector<IntVec> parse_vertices_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("malformed JSON input");
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw std::invalid_argument("polytope input must be an object with a \"vertices\" array");
  std::vector<IntVec> vertices;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array())
      throw std::invalid_argument("each vertex must be an array of coordinates");
    IntVec v;
    v.reserve(row.size());
    for (const auto& entry : row) v.push_back(parse_int_entry(entry));
    vertices.push_back(std::move(v));
  }
  return vertices;
}

std::string certificate_to_json(const CertificateReport& report, const LatticePolytope& p) {
  ordered_json doc;
  doc["polytope_id"] = report.polytope_id;
  doc["dim"] = report.dim;
  doc["vertices"] = encode_points(p.vertices());
  doc["gauss_degree"] = encode_int(report.gauss_degree);

  ordered_json smooth;
  smooth["pass"] = report.smooth_dim1.pass;
  if (report.smooth_dim1.first_failing) {
    const EdgeCheck& fail = report.smooth_dim1.edges[*report.smooth_dim1.first_failing];
    ordered_json edge;
    edge["endpoints"] = face_coordinates(fail.edge, p);
    ordered_json normals = ordered_json::array();
    for (const auto& n : fail.normals) normals.push_back(encode_vec(n));
    edge["normals"] = std::move(normals);
    smooth["failing_edge"] = std::move(edge);
  } else {
    smooth["failing_edge"] = nullptr;
  }
  doc["smooth_dim1"] = std::move(smooth);

  ordered_json facets = ordered_json::array();
  for (const auto& [face, vol] : report.facet_volumes.volumes) {
    ordered_json item;
    item["face"] = face_coordinates(face, p);
    item["volume"] = encode_int(vol);
    facets.push_back(std::move(item));
  }
  doc["facet_volumes"] = std::move(facets);

  ordered_json degrees = ordered_json::array();
  for (const auto& [face, deg] : report.outer_degrees) {
    ordered_json item;
    item["face"] = face_coordinates(face, p);
    item["degree"] = encode_int(deg);
    degrees.push_back(std::move(item));
  }
  doc["outer_degrees"] = std::move(degrees);

  ordered_json lengths = ordered_json::array();
  for (const auto& [edge, len] : report.edge_lengths) {
    ordered_json item;
    item["edge"] = face_coordinates(edge, p);
    item["length"] = encode_int(len);
    lengths.push_back(std::move(item));
  }
  doc["edge_lengths"] = std::move(lengths);

  doc["khovanskii_betti"] =
      report.khovanskii_betti ? encode_int(*report.khovanskii_betti) : ordered_json(nullptr);

  if (report.surface) {
    const SmithThomBudget& budget = report.surface->budget;
    ordered_json b;
    b["pass"] = budget.pass;
    b["face_area_sum"] = encode_int(budget.face_area_sum);
    b["edge_length_sum"] = encode_int(budget.edge_length_sum);
    b["bound"] = encode_int(budget.bound);
    doc["smith_thom_budget"] = std::move(b);

    ordered_json surface;
    surface["pass"] = report.surface->pass;
    surface["failed_stage"] =
        report.surface->failed_stage.empty() ? ordered_json(nullptr)
                                             : ordered_json(report.surface->failed_stage);
    surface["detail"] = report.surface->detail.empty() ? ordered_json(nullptr)
                                                       : ordered_json(report.surface->detail);
    doc["surface_obstruction"] = std::move(surface);
  } else {
    doc["smith_thom_budget"] = nullptr;
    doc["surface_obstruction"] = nullptr;
  }

  if (report.decompositions.empty()) {
    // only possible when the volume exceeds the listing cap
    doc["decompositions"] = nullptr;
  } else {
    ordered_json decomps = ordered_json::array();
    for (const auto& [k, l] : report.decompositions)
      decomps.push_back(ordered_json::array({encode_int(k), encode_int(l)}));
    doc["decompositions"] = std::move(decomps);
  }

  if (report.facet_verdicts.empty()) {
    doc["facet_verdicts"] = nullptr;
  } else {
    ordered_json verdicts = ordered_json::array();
    for (const auto& v : report.facet_verdicts) verdicts.push_back(v);
    doc["facet_verdicts"] = std::move(verdicts);
  }

  doc["verdict"] = report.verdict;
  return doc.dump(2);
}

std::string simplex_class_to_json(const SimplexClass& c) {
  ordered_json doc;
  doc["volume"] = encode_int(c.volume);
  doc["canonical"] = encode_mat(c.canonical);
  doc["unimodular_facets"] = c.unimodular_facets;
  doc["smooth_dim1"] = c.smooth_dim1;
  return doc.dump();
}

std::string lemma_result_to_json(const LemmaResult& result, const EnumerateOptions& opts) {
  ordered_json doc;
  doc["dim"] = opts.dim;
  doc["max_vol"] = encode_int(opts.max_vol);
  doc["classes_checked"] = result.classes_checked;
  ordered_json cex = ordered_json::array();
  for (const auto& c : result.counterexamples)
    cex.push_back(ordered_json::parse(simplex_class_to_json(c)));
  doc["counterexamples"] = std::move(cex);
  return doc.dump(2);
}

std::string decompositions_to_json(const Int& vol,
                                   const std::vector<std::pair<Int, Int>>& decompositions) {
  ordered_json doc;
  doc["vol"] = encode_int(vol);
  ordered_json list = ordered_json::array();
  for (const auto& [k, l] : decompositions)
    list.push_back(ordered_json::array({encode_int(k), encode_int(l)}));
  doc["decompositions"] = std::move(list);
  return doc.dump(2);
}

std::string probe_report_to_json(const ProbeReport& report) {
  ordered_json doc;
  doc["family"] = report.family;
  doc["params"] = report.params;
  doc["targets_tested"] = report.targets_tested;
  doc["degenerate_targets"] = report.degenerate_targets;
  doc["fibers_all_real"] = report.fibers_all_real;
  doc["empirical_degree"] = report.empirical_degree;
  if (report.witness) {
    ordered_json w;
    w["target"] = report.witness->target;
    ordered_json pt = ordered_json::array();
    for (const auto& c : report.witness->point) pt.push_back(encode_complex(c));
    w["point"] = std::move(pt);
    w["residual"] = report.witness->residual;
    w["target_distance"] = report.witness->target_distance;
    doc["witness"] = std::move(w);
  } else {
    doc["witness"] = nullptr;
  }
  if (report.discriminant_scan) {
    const DiscriminantScan& s = *report.discriminant_scan;
    ordered_json scan;
    scan["lo"] = s.lo;
    scan["hi"] = s.hi;
    scan["samples"] = s.samples;
    scan["min_value"] = s.min_value;
    scan["argmin"] = s.argmin;
    doc["discriminant_scan"] = std::move(scan);
  } else {
    doc["discriminant_scan"] = nullptr;
  }
  doc["forward_checks"] = report.forward_checks;
  return doc.dump(2);
}

}  // namespace latgauss
