#include "curvegen/report.hpp"

#include <sstream>

#include <json.hpp>

#include "curvegen/error.hpp"

namespace curvegen {

namespace {

using Json = nlohmann::ordered_json;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

Json classification_json(const Classification& c) {
  Json j;
  j["support"] = to_string(c.support);
  j["semistable"] = c.is_semistable();
  j["semistable_slope"] = c.semistable_slope ? Json(c.semistable_slope->to_string()) : Json(nullptr);
  return j;
}

Json invariants_json(const Invariants& inv) {
  Json j;
  j["total_rank"] = inv.total_rank;
  j["total_degree"] = inv.total_degree;
  j["torsion_length"] = inv.torsion_length;
  j["mu_max"] = inv.mu_max.to_string();
  j["mu_min"] = inv.mu_min.to_string();
  j["classification"] = classification_json(inv.classification);
  return j;
}

Json verdict_json(const Verdict& v) {
  Json j;
  j["decision"] = to_string(v.decision);
  j["rule"] = rule_number(v.rule);
  j["rule_id"] = rule_id(v.rule);
  j["citation"] = v.citation;
  Json used = Json::array();
  for (const auto& a : v.assumptions_used) {
    used.push_back(Json{{"source", a.source}, {"target", a.target}, {"kind", "hom_vanishes"}});
  }
  j["assumptions_used"] = std::move(used);
  j["reason"] = v.reason;
  return j;
}

Json gentime_json(const GenTimeBound& b) {
  Json j;
  j["status"] = to_string(b.status);
  j["value"] = b.value ? Json(*b.value) : Json(nullptr);
  j["note"] = b.note;
  Json steps = Json::array();
  for (const auto& s : b.derivation) steps.push_back(Json{{"rule", s.rule}, {"citation", s.citation}, {"value", s.value}});
  j["derivation"] = std::move(steps);
  return j;
}

Json outcome_json(const QueryOutcome& outcome) {
  return std::visit(
      Overloaded{
          [](const std::monostate&) { return Json(nullptr); },
          [](const AnalyzeResult& r) {
            Json j;
            j["invariants"] = invariants_json(r.invariants);
            j["is_generator"] = r.is_generator;
            j["classical"] = verdict_json(r.classical);
            j["gentime"] = gentime_json(r.gentime);
            return j;
          },
          [](const PairingResult& r) { return Json{{"euler_characteristic", r.euler_characteristic}}; },
          [](const SemiorthogonalityResult& r) {
            Json j;
            j["possible"] = r.possible;
            j["witness"] = r.witness ? Json(to_string(*r.witness)) : Json(nullptr);
            j["side"] = r.side ? Json(*r.side == Side::Left ? "left" : "right") : Json(nullptr);
            j["euler_characteristic"] = r.euler_characteristic;
            return j;
          },
          [](const FaltingsResult& r) {
            const auto& o = r.orthogonal;
            Json j;
            j["skyscraper_off_support"] = o.skyscraper_off_support;
            j["target_slope"] = o.target_slope ? Json(o.target_slope->to_string()) : Json(nullptr);
            j["minimal_class"] = o.minimal_class
                                     ? Json{{"rank", o.minimal_class->rank()}, {"degree", o.minimal_class->degree()}}
                                     : Json(nullptr);
            j["description"] = o.description;
            return j;
          },
      },
      outcome);
}

QueryOutcome evaluate(const dsl::AnalysisRequest& req, const dsl::Query& q) {
  const Curve& curve = req.curve;
  const dsl::ObjectDecl& left = *req.find(q.left);
  const FormalObject e = left.build(curve);
  switch (q.kind) {
    case dsl::QueryKind::Analyze: {
      AnalyzeResult r;
      r.invariants = invariants(e);
      r.is_generator = is_generator(e, curve);
      r.classical = classical_status(e, curve, req.assumptions_for(left));
      r.gentime = gentime_upper_bound(e, curve, r.classical);
      return r;
    }
    case dsl::QueryKind::Pairing:
      return PairingResult{euler_pairing(e, req.find(q.right)->build(curve), curve)};
    case dsl::QueryKind::Semiorth:
      return semiorthogonality_check(e, req.find(q.right)->build(curve), curve);
    case dsl::QueryKind::Faltings:
      return FaltingsResult{faltings_orthogonal_class(e, curve)};
  }
  return std::monostate{};
}

}  // namespace

Invariants invariants(const FormalObject& object) {
  Invariants inv;
  for (const auto& ref : object.pieces()) {
    const ChernPair total = ref.piece->total();
    inv.total_rank = checked::add(inv.total_rank, total.rank());
    inv.total_degree = checked::add(inv.total_degree, total.degree());
    inv.torsion_length = checked::add(inv.torsion_length, total.length());
  }
  std::tie(inv.mu_max, inv.mu_min) = mu_extremes(object);
  inv.classification = classify(object);
  return inv;
}

bool Report::has_errors() const {
  for (const auto& q : queries) {
    if (q.error) return true;
  }
  return false;
}

Report run(const dsl::AnalysisRequest& request) {
  Report report;
  report.curve = request.curve;
  for (const auto& q : request.queries) {
    QueryResult r{q, std::monostate{}, std::nullopt, std::nullopt};
    try {
      r.outcome = evaluate(request, q);
    } catch (const Error& e) {
      r.error = e.what();
      r.error_code = e.code();
    } catch (const std::overflow_error& e) {
      r.error = e.what();
    }
    report.queries.push_back(std::move(r));
  }
  return report;
}

std::string render_json(const Report& report) {
  Json doc;
  doc["curve"] = Json{{"genus", report.curve.genus()}};
  Json queries = Json::array();
  for (const auto& q : report.queries) {
    Json j;
    j["kind"] = dsl::to_string(q.query.kind);
    j["object"] = q.query.left;
    j["other"] = q.query.right.empty() ? Json(nullptr) : Json(q.query.right);
    j["result"] = outcome_json(q.outcome);
    if (q.error) {
      j["error"] = Json{{"code", q.error_code ? Json(to_string(*q.error_code)) : Json("Overflow")},
                        {"message", *q.error}};
    } else {
      j["error"] = nullptr;
    }
    queries.push_back(std::move(j));
  }
  doc["queries"] = std::move(queries);
  return doc.dump(2) + "\n";
}

namespace {

void text_analyze(std::ostream& os, const AnalyzeResult& r) {
  const auto& inv = r.invariants;
  os << "  rank " << inv.total_rank << ", degree " << inv.total_degree;
  if (inv.torsion_length) os << " (torsion length " << inv.torsion_length << ")";
  os << "\n  mu_max " << inv.mu_max << ", mu_min " << inv.mu_min << "\n";
  os << "  support " << to_string(inv.classification.support) << ", ";
  if (inv.classification.semistable_slope) {
    os << "semistable of slope " << *inv.classification.semistable_slope << "\n";
  } else {
    os << "not semistable\n";
  }
  os << "  generator: " << (r.is_generator ? "yes" : "no") << "\n";
  os << "  classical generator: " << to_string(r.classical.decision) << " (rule " << rule_number(r.classical.rule)
     << ", " << rule_id(r.classical.rule) << ")\n";
  os << "    " << r.classical.citation << "\n";
  if (!r.classical.reason.empty()) os << "    " << r.classical.reason << "\n";
  for (const auto& a : r.classical.assumptions_used) {
    os << "    using hom(" << a.source << ", " << a.target << ") = 0\n";
  }
  os << "  generating time: ";
  if (r.gentime.value) {
    os << "<= " << *r.gentime.value << "\n";
  } else {
    os << to_string(r.gentime.status);
    if (!r.gentime.note.empty()) os << " (" << r.gentime.note << ")";
    os << "\n";
  }
  for (const auto& s : r.gentime.derivation) os << "    " << s.rule << " = " << s.value << ": " << s.citation << "\n";
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "curve of genus " << report.curve.genus() << "\n";
  for (const auto& q : report.queries) {
    os << "\n" << dsl::to_string(q.query.kind) << " " << q.query.left;
    if (!q.query.right.empty()) os << " " << q.query.right;
    os << "\n";
    if (q.error) {
      os << "  error: " << *q.error << "\n";
      continue;
    }
    std::visit(Overloaded{
                   [](const std::monostate&) {},
                   [&](const AnalyzeResult& r) { text_analyze(os, r); },
                   [&](const PairingResult& r) { os << "  chi = " << r.euler_characteristic << "\n"; },
                   [&](const SemiorthogonalityResult& r) {
                     os << "  chi = " << r.euler_characteristic << "\n";
                     if (r.possible) {
                       os << "  Ext-vanishing not ruled out numerically\n";
                     } else {
                       os << "  Ext-vanishing impossible: " << to_string(*r.witness);
                       if (r.side) os << " (" << (*r.side == Side::Left ? "left" : "right") << ")";
                       os << "\n";
                     }
                   },
                   [&](const FaltingsResult& r) { os << "  " << r.orthogonal.description << "\n"; },
               },
               q.outcome);
  }
  return os.str();
}

}  // namespace curvegen
