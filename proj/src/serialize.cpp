#include "framekit/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace framekit {
namespace {

using nlohmann::json;

json label_to_json(const Label& label) {
  switch (label.kind) {
    case Label::Kind::basis: return json{{"basis", label.a}};
    case Label::Kind::cyclic: return json{{"cyclic", label.a}};
    case Label::Kind::chirp: return json{{"chirp", {label.a, label.b}}};
    case Label::Kind::block: return json{{"block", {label.a, label.b}}};
    case Label::Kind::custom: return json("custom");
  }
  return json("custom");
}

Label label_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "custom") return Label::custom();
  if (j.is_object() && j.size() == 1) {
    if (j.contains("basis")) return Label::basis(j.at("basis").get<std::int64_t>());
    if (j.contains("cyclic")) return Label::cyclic(j.at("cyclic").get<std::int64_t>());
    if (j.contains("chirp")) {
      const auto& v = j.at("chirp");
      return Label::chirp(v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>());
    }
    if (j.contains("block")) {
      const auto& v = j.at("block");
      return Label::block(v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>());
    }
  }
  fail(errc::parse_error, "unrecognized label: " + j.dump());
}

json provenance_to_json(const Provenance& p) {
  switch (p.tag) {
    case ProvenanceTag::trace_constructed:
      return json{{"trace-constructed", {{"q", p.q}, {"n", p.n}}}};
    case ProvenanceTag::searched: return json("searched");
    case ProvenanceTag::user_supplied: return json("user-supplied");
  }
  return json("user-supplied");
}

Provenance provenance_from_json(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "searched") return {ProvenanceTag::searched, 0, 0};
    if (s == "user-supplied") return {ProvenanceTag::user_supplied, 0, 0};
  } else if (j.is_object() && j.contains("trace-constructed")) {
    const auto& t = j.at("trace-constructed");
    return {ProvenanceTag::trace_constructed, t.at("q").get<std::int64_t>(),
            t.at("n").get<int>()};
  }
  fail(errc::parse_error, "unrecognized provenance: " + j.dump());
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

}  // namespace

json design_set_to_json(const DesignSet& s) {
  json kind;
  if (const auto* plain = std::get_if<PlainKind>(&s.kind)) {
    kind = json{{"plain", {{"K", plain->K}, {"lambda", plain->lambda}}}};
  } else {
    const auto& rel = std::get<RelativeKind>(s.kind);
    kind = json{{"relative",
                 {{"N", rel.N}, {"L", rel.L}, {"K", rel.K}, {"lambda", rel.lambda}}}};
  }
  return json{{"modulus", s.modulus},
              {"elements", s.elements},
              {"kind", kind},
              {"provenance", provenance_to_json(s.provenance)}};
}

DesignSet design_set_from_json(const json& j) {
  return guarded([&] {
    const auto modulus = j.at("modulus").get<std::int64_t>();
    auto elements = j.at("elements").get<std::vector<std::int64_t>>();
    const auto& kind = j.at("kind");
    Provenance prov = j.contains("provenance") ? provenance_from_json(j.at("provenance"))
                                               : Provenance{};
    DesignSet s;
    if (kind.contains("plain")) {
      const auto lambda = kind.at("plain").at("lambda").get<std::int64_t>();
      s = make_plain_set(modulus, std::move(elements), lambda, prov);
    } else if (kind.contains("relative")) {
      const auto& rel = kind.at("relative");
      s = make_relative_set(rel.at("N").get<std::int64_t>(), rel.at("L").get<std::int64_t>(),
                            std::move(elements), rel.at("lambda").get<std::int64_t>(), prov);
      if (s.modulus != modulus) fail(errc::parse_error, "relative kind: N*L != modulus");
    } else {
      fail(errc::parse_error, "design set kind must be plain or relative");
    }
    return s;
  });
}

json frame_to_json(const Frame& f) {
  json vectors = json::array();
  for (std::int64_t j = 0; j < f.size(); ++j) {
    json vec = json::array();
    for (std::int64_t i = 0; i < f.dim(); ++i) {
      vec.push_back({f.vectors(i, j).real(), f.vectors(i, j).imag()});
    }
    vectors.push_back(std::move(vec));
  }
  json labels = json::array();
  for (const auto& label : f.labels) labels.push_back(label_to_json(label));
  return json{{"dim", f.dim()}, {"vectors", vectors}, {"labels", labels}};
}

Frame frame_from_json(const json& j) {
  return guarded([&] {
    const auto dim = j.at("dim").get<std::int64_t>();
    const auto& vectors = j.at("vectors");
    if (dim < 1 || !vectors.is_array()) fail(errc::parse_error, "bad frame shape");
    Frame f;
    f.vectors.resize(dim, static_cast<std::int64_t>(vectors.size()));
    for (std::size_t col = 0; col < vectors.size(); ++col) {
      const auto& vec = vectors[col];
      if (static_cast<std::int64_t>(vec.size()) != dim) {
        fail(errc::parse_error, "vector length does not match dim");
      }
      for (std::int64_t i = 0; i < dim; ++i) {
        const auto& entry = vec[static_cast<std::size_t>(i)];
        f.vectors(i, static_cast<std::int64_t>(col)) =
            std::complex<double>(entry.at(0).get<double>(), entry.at(1).get<double>());
      }
    }
    if (j.contains("labels")) {
      const auto& labels = j.at("labels");
      if (labels.size() != vectors.size()) {
        fail(errc::parse_error, "label count does not match vector count");
      }
      for (const auto& l : labels) f.labels.push_back(label_from_json(l));
    } else {
      f.labels.assign(vectors.size(), Label::custom());
    }
    return f;
  });
}

json weighted_frame_to_json(const WeightedFrame& wf) {
  json j = frame_to_json(wf.frame);
  j["weights"] = wf.weights;
  return j;
}

WeightedFrame weighted_frame_from_json(const json& j) {
  return guarded([&] {
    WeightedFrame wf;
    wf.frame = frame_from_json(j);
    wf.weights = j.at("weights").get<std::vector<double>>();
    if (static_cast<std::int64_t>(wf.weights.size()) != wf.frame.size()) {
      fail(errc::parse_error, "weight count does not match vector count");
    }
    return wf;
  });
}

json analysis_report_to_json(const AnalysisReport& r) {
  return json{{"n_vectors", r.n_vectors},
              {"dim", r.dim},
              {"unit_norm", r.unit_norm},
              {"max_norm_defect", r.max_norm_defect},
              {"coherence", r.coherence},
              {"welch_bound", r.welch_bound},
              {"orthoplex_bound", r.orthoplex_bound},
              {"orthoplex_applicable", r.orthoplex_applicable},
              {"max_frame_size_bound", r.max_frame_size_bound},
              {"within_size_cap", r.within_size_cap},
              {"tightness_residual", r.tightness_residual},
              {"tight_bound", r.tight_bound},
              {"is_tight", r.is_tight},
              {"is_equiangular", r.is_equiangular},
              {"equiangular_value", r.equiangular_value},
              {"is_ogf", r.is_ogf},
              {"tolerances",
               {{"tight", r.tau_tight}, {"angle", r.tau_angle}, {"norm", r.tau_norm}}}};
}

json design_certificate_to_json(const DesignCertificate& c) {
  return json{{"t", c.t},          {"target", c.target},       {"achieved", c.achieved},
              {"defect", c.defect}, {"tolerance", c.tolerance}, {"verdict", c.verdict}};
}

std::string frame_to_csv(const Frame& f) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (std::int64_t i = 0; i < f.dim(); ++i) {
    if (i > 0) out << ',';
    out << "re_" << i + 1 << ",im_" << i + 1;
  }
  out << '\n';
  for (std::int64_t j = 0; j < f.size(); ++j) {
    for (std::int64_t i = 0; i < f.dim(); ++i) {
      if (i > 0) out << ',';
      out << f.vectors(i, j).real() << ',' << f.vectors(i, j).imag();
    }
    out << '\n';
  }
  return out.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

}  // namespace framekit
